#pragma once

#include <string>
#include <vector>

#include "braidpos/braid.hpp"

namespace braidpos {

// A positive braid in which every pair of strands crosses at most once,
// identified with its permutation.
struct PermutationBraid {
  Permutation perm;

  int strands() const { return perm.size(); }
  bool is_identity() const { return perm.is_identity(); }
  bool is_delta() const;
  // i is zero-based: sigma_{i+1} is a left (resp. right) divisor.
  bool starts_with(int i) const { return perm.img[i] > perm.img[i + 1]; }
  bool ends_with(int i) const;
  BraidWord word() const;
  bool operator==(const PermutationBraid&) const = default;
};

PermutationBraid delta_braid(int n);

struct NormalForm {
  int strands = 1;
  long delta_power = 0;
  std::vector<PermutationBraid> factors;

  std::string serialize() const;
  BraidWord word() const;
  bool operator==(const NormalForm&) const = default;
};

NormalForm normal_form(const BraidWord& w);
bool equal(const BraidWord& a, const BraidWord& b);
std::vector<PermutationBraid> permutation_factorization(const BraidWord& w);

}  // namespace braidpos

#pragma once

#include <string>

#include "braidpos/braid.hpp"
#include "braidpos/laurent.hpp"

namespace braidpos {

// Skein convention throughout: v^-1 P(L+) - v P(L-) = z P(L0), P(unknot) = 1.
constexpr int kMaxHeckeStrands = 8;

LaurentPoly2 homfly_closed_braid(const BraidWord& w);
// Reference kernel: one thread, no OpenMP regions.
LaurentPoly2 homfly_closed_braid_serial(const BraidWord& w);
// Basis updates and the final trace run as OpenMP loops.
LaurentPoly2 homfly_closed_braid_parallel(const BraidWord& w);

// P of the k-component unlink, ((v^-1 - v) / z)^(k-1).
LaurentPoly2 unlink_poly(int components);

struct CheckResult {
  bool pass = true;
  std::string message;
};

CheckResult mfw_check(const LaurentPoly2& p, int sl, int chi, bool homogeneous);
bool homogeneous_positivity_criterion(const LaurentPoly2& p, int chi);
int mfw_braid_index_lower_bound(const LaurentPoly2& p);

}  // namespace braidpos

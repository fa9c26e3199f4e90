#pragma once

#include <random>
#include <string>

#include "braidpos/braid.hpp"

namespace testsupport {

inline braidpos::BraidWord random_std_word(std::mt19937& rng, int n, int max_len, bool allow_neg = true) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  braidpos::BraidWord w;
  w.strands = n;
  int L = len(rng);
  for (int k = 0; k < L; ++k)
    w.letters.push_back(braidpos::Letter::gen(gen(rng), allow_neg && coin(rng) ? -1 : 1));
  return w;
}

inline braidpos::Letter random_band(std::mt19937& rng, int n, int sign) {
  std::uniform_int_distribution<int> pick(1, n);
  int i, j;
  do {
    i = pick(rng);
    j = pick(rng);
  } while (i == j);
  if (i > j) std::swap(i, j);
  return braidpos::Letter::bandgen(i, j, sign);
}

inline braidpos::BraidWord random_mixed_word(std::mt19937& rng, int n, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> coin(0, 1);
  braidpos::BraidWord w;
  w.strands = n;
  int L = len(rng);
  for (int k = 0; k < L; ++k) {
    int sign = coin(rng) ? 1 : -1;
    if (coin(rng)) w.letters.push_back(random_band(rng, n, sign));
    else w.letters.push_back(braidpos::Letter::gen(std::uniform_int_distribution<int>(1, n - 1)(rng), sign));
  }
  return w;
}

inline std::string data_path(const std::string& f) { return std::string(BRAIDPOS_DATA_DIR) + "/" + f; }
inline std::string fixture_path(const std::string& f) {
  return std::string(BRAIDPOS_TEST_DIR) + "/fixtures/" + f;
}

}  // namespace testsupport

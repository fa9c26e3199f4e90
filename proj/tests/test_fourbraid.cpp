#include <map>
#include <random>

#include "braidpos/homfly.hpp"
#include "braidpos/positivity.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace braidpos;

namespace {

BraidWord W(std::vector<Letter> ls) { return {4, std::move(ls)}; }
Letter B(int i, int j, int s = 1) { return band(i, j, s); }

BraidWord with_neg(const Letter& n, const BraidWord& beta) {
  BraidWord k = beta;
  k.letters.insert(k.letters.begin(), n);
  return k;
}

void check_outcome(const Letter& n, const BraidWord& beta, const FourBraidOutcome& o) {
  INFO(to_string(with_neg(n, beta)), " -> ", to_string(o.kind));
  CHECK(validate(o).pass);
  CHECK(o.cert.input == canonical(with_neg(n, beta)));
  CHECK(homfly_closed_braid(with_neg(n, beta)) == homfly_closed_braid(o.result));
  if (o.kind != FourBraidOutcome::Kind::Quasipositive) {
    CHECK(o.result.strands <= 3);
    CHECK(is_sqp_word(o.result));
  }
}

}  // namespace

TEST_CASE("four-braid flype example") {
  const Letter n = B(1, 2, -1);
  const BraidWord beta = W({B(2, 4), B(1, 3), B(2, 4)});
  FourBraidOutcome o = four_braid_classify(n, beta);
  CHECK(o.kind == FourBraidOutcome::Kind::FlypeThenDestabilize);
  check_outcome(n, beta, o);
}

TEST_CASE("four-braid small cases") {
  FourBraidOutcome o = four_braid_classify(B(1, 2, -1), W({B(1, 3)}));
  check_outcome(B(1, 2, -1), W({B(1, 3)}), o);

  for (int x = 0; x <= 2; ++x)
    for (int y = 0; y <= 2; ++y) {
      BraidWord beta = W({});
      beta.letters.insert(beta.letters.end(), x, B(1, 2));
      beta.letters.insert(beta.letters.end(), y, B(3, 4));
      o = four_braid_classify(B(1, 3, -1), beta);
      CHECK(o.kind == FourBraidOutcome::Kind::NegativelyDestabilizable);
      check_outcome(B(1, 3, -1), beta, o);
    }

  o = four_braid_classify(B(1, 2, -1), W({B(2, 3), B(1, 2), B(3, 4)}));
  CHECK(o.kind == FourBraidOutcome::Kind::Quasipositive);
  CHECK(is_qp(to_grouped(o.qp, 4)));
}

TEST_CASE("four-braid input errors") {
  CHECK_THROWS_AS(four_braid_classify(B(1, 4, -1), W({B(1, 2)})), std::invalid_argument);
  CHECK_THROWS_AS(four_braid_classify(B(1, 2, -1), W({B(1, 2, -1)})), std::invalid_argument);
  CHECK_THROWS_AS(four_braid_classify(B(1, 2, -1), make_word(3, {1})), std::invalid_argument);
}

TEST_CASE("four-braid property run") {
  std::mt19937 rng(404);
  std::map<std::string, int> kinds;
  for (int t = 0; t < 200; ++t) {
    BraidWord beta = W({});
    for (int k = std::uniform_int_distribution<int>(0, 8)(rng); k > 0; --k)
      beta.letters.push_back(canonical(W({testsupport::random_band(rng, 4, 1)})).letters[0]);
    for (const Letter& n : {B(1, 2, -1), B(1, 3, -1)}) {
      FourBraidOutcome o;
      try {
        o = four_braid_classify(n, beta);
      } catch (const std::exception& e) {
        FAIL_CHECK(to_string(with_neg(n, beta)) << ": " << std::string(e.what()));
        continue;
      }
      check_outcome(n, beta, o);
      kinds[to_string(o.kind)]++;
    }
  }
  for (const auto& [k, c] : kinds) MESSAGE(k << ": " << c);
}

namespace {

// Pairwise linking numbers of the closure, indexed by component.
std::map<std::pair<int, int>, int> linking_numbers(const BraidWord& w) {
  const BraidWord s = band_to_std(w);
  const Permutation p = permutation_of(s);
  std::vector<int> comp(static_cast<std::size_t>(s.strands), -1);
  int count = 0;
  for (int k = 0; k < s.strands; ++k) {
    if (comp[static_cast<std::size_t>(k)] >= 0) continue;
    for (int x = k; comp[static_cast<std::size_t>(x)] < 0; x = p.img[static_cast<std::size_t>(x)])
      comp[static_cast<std::size_t>(x)] = count;
    ++count;
  }
  std::vector<int> at(static_cast<std::size_t>(s.strands));
  for (int k = 0; k < s.strands; ++k) at[static_cast<std::size_t>(k)] = comp[static_cast<std::size_t>(k)];
  std::map<std::pair<int, int>, int> twice;
  for (const auto& l : s.letters) {
    auto& a = at[static_cast<std::size_t>(l.i - 1)];
    auto& b = at[static_cast<std::size_t>(l.i)];
    if (a != b) twice[{std::min(a, b), std::max(a, b)}] += l.sign;
    std::swap(a, b);
  }
  for (int a = 0; a < count; ++a)
    for (int b = a + 1; b < count; ++b) twice[{a, b}] += 0;
  for (auto& [k, v] : twice) v /= 2;
  return twice;
}

}  // namespace

TEST_CASE("four-braid families with an empty first R block") {
  // sigma_{1,2}^-1 sigma_{1,3}^{s_1} sigma_{2,4}^{r_2} ... sigma_{1,3}^{s_m} sigma_{2,4}^{r_m}
  std::mt19937 rng(7);
  int unclassified = 0;
  for (int t = 0; t < 60; ++t) {
    const int m = std::uniform_int_distribution<int>(2, 4)(rng);
    BraidWord beta = W({});
    bool ones = true;
    for (int k = 0; k < m; ++k) {
      const int s = std::uniform_int_distribution<int>(1, 2)(rng);
      const int r = std::uniform_int_distribution<int>(1, 2)(rng);
      ones = ones && s == 1 && r == 1;
      beta.letters.insert(beta.letters.end(), s, B(1, 3));
      beta.letters.insert(beta.letters.end(), r, B(2, 4));
    }
    INFO(to_string(beta));
    if (ones) {
      CHECK_THROWS_AS(four_braid_classify(B(1, 2, -1), beta), Unclassified);
      ++unclassified;
      continue;
    }
    check_outcome(B(1, 2, -1), beta, four_braid_classify(B(1, 2, -1), beta));
  }
  CHECK(unclassified > 0);
}

TEST_CASE("sigma_{1,2}^-1 (sigma_{1,3} sigma_{2,4})^2 admits none of the outcomes") {
  const BraidWord beta = W({B(1, 3), B(2, 4), B(1, 3), B(2, 4)});
  const BraidWord k = with_neg(B(1, 2, -1), beta);
  CHECK_THROWS_AS(four_braid_classify(B(1, 2, -1), beta), Unclassified);
  // Three components, pairwise linked: every surface in B^4 they bound is
  // connected, so chi_4 <= -1 < 1 = -sl and the closure is not quasipositive.
  const auto lk = linking_numbers(k);
  REQUIRE(lk.size() == 3);
  for (const auto& [pair, v] : lk) CHECK(v != 0);
  CHECK(self_linking(k) == -1);
  // MFW: sl is already maximal, so no negative destabilization exists.
  CHECK(min_deg_v(homfly_closed_braid(k)) - 1 == self_linking(k));
}

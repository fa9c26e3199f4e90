#include <random>

#include "braidpos/homfly.hpp"
#include "braidpos/pd.hpp"
#include "braidpos/skein.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace braidpos;

TEST_CASE("known values") {
  CHECK(homfly_closed_braid(make_word(2, {1, 1, 1})) == parse_homfly("(2*v^2-v^4)+ v^2*z^2"));
  CHECK(homfly_closed_braid(make_word(3, {1, -2, 1, -2})) == parse_homfly("(v^(-2)-1+v^2)+ (-1)*z^2"));
  CHECK(homfly_closed_braid(make_word(1, {})) == LaurentPoly2(1));
  LaurentPoly2 u2 = homfly_closed_braid(make_word(2, {}));
  CHECK(u2 == LaurentPoly2::monomial(1, -1, -1) - LaurentPoly2::monomial(1, 1, -1));
  CHECK(u2 == unlink_poly(2));
  CHECK(homfly_closed_braid(make_word(4, {})) == unlink_poly(4));
  CHECK(homfly_closed_braid(make_word(2, {-1, -1, -1})) ==
        parse_homfly("(2*v^(-2)-v^(-4))+ v^(-2)*z^2"));
}

TEST_CASE("skein relation on braid closures") {
  std::mt19937 rng(31);
  const LaurentPoly2 vinv = LaurentPoly2::monomial(1, -1, 0);
  const LaurentPoly2 v = LaurentPoly2::monomial(1, 1, 0);
  const LaurentPoly2 z = LaurentPoly2::monomial(1, 0, 1);
  for (int t = 0; t < 60; ++t) {
    int n = 2 + static_cast<int>(rng() % 4);
    BraidWord a = testsupport::random_std_word(rng, n, 6);
    BraidWord b = testsupport::random_std_word(rng, n, 6);
    int i = 1 + static_cast<int>(rng() % (n - 1));
    BraidWord plus = concat(concat(a, make_word(n, {i})), b);
    BraidWord minus = concat(concat(a, make_word(n, {-i})), b);
    BraidWord zero = concat(a, b);
    CHECK(vinv * homfly_closed_braid(plus) - v * homfly_closed_braid(minus) == z * homfly_closed_braid(zero));
  }
}

TEST_CASE("Markov invariance") {
  std::mt19937 rng(32);
  for (int t = 0; t < 60; ++t) {
    int n = 2 + static_cast<int>(rng() % 4);
    BraidWord w = testsupport::random_mixed_word(rng, n, 8);
    BraidWord g = testsupport::random_std_word(rng, n, 3);
    LaurentPoly2 p = homfly_closed_braid(w);
    CHECK(homfly_closed_braid(conjugate(w, g)) == p);
    CHECK(homfly_closed_braid(stabilize(w, 1)) == p);
    CHECK(homfly_closed_braid(stabilize(w, -1)) == p);
  }
}

TEST_CASE("serial and parallel kernels agree") {
  std::mt19937 rng(33);
  for (int t = 0; t < 12; ++t) {
    int n = 2 + static_cast<int>(rng() % 5);
    BraidWord w = testsupport::random_mixed_word(rng, n, 10);
    CHECK(homfly_closed_braid_serial(w) == homfly_closed_braid_parallel(w));
  }
}

TEST_CASE("Hecke trace agrees with the diagram skein oracle") {
  std::mt19937 rng(34);
  for (int t = 0; t < 80; ++t) {
    int n = 1 + static_cast<int>(rng() % 4);
    BraidWord w = n == 1 ? make_word(1, {}) : testsupport::random_std_word(rng, n, 8);
    PDCode d = pd_from_braid(w);
    CHECK(pd_writhe(d) == writhe(w));
    CHECK(homfly_diagram_oracle(d) == homfly_closed_braid(w));
    CHECK(homfly_diagram_oracle(pd_mirror(d)) == homfly_closed_braid(mirror(w)));
  }
}

TEST_CASE("mfw checks") {
  LaurentPoly2 t = homfly_closed_braid(make_word(2, {1, 1, 1}));
  CHECK(mfw_braid_index_lower_bound(t) == 2);
  CHECK(mfw_check(t, 1, -1, true).pass);
  CHECK_FALSE(mfw_check(t, 3, -1, true).pass);
  CHECK(homogeneous_positivity_criterion(t, -1));
  LaurentPoly2 f = homfly_closed_braid(make_word(3, {1, -2, 1, -2}));
  CHECK(mfw_braid_index_lower_bound(f) == 3);
  CHECK_FALSE(homogeneous_positivity_criterion(f, -1));
}

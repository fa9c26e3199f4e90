#include <random>

#include "braidpos/garside.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace braidpos;

namespace {

// Artin's faithful action on the free group: generators x_1..x_n as +-k.
using FreeWord = std::vector<int>;

FreeWord reduce(const FreeWord& w) {
  FreeWord out;
  for (int g : w) {
    if (!out.empty() && out.back() == -g) out.pop_back();
    else out.push_back(g);
  }
  return out;
}

FreeWord inverse_fw(const FreeWord& w) {
  FreeWord r(w.rbegin(), w.rend());
  for (int& g : r) g = -g;
  return r;
}

std::vector<FreeWord> artin_images(const BraidWord& b) {
  const int n = b.strands;
  std::vector<FreeWord> img(n);
  for (int k = 0; k < n; ++k) img[k] = {k + 1};
  BraidWord s = band_to_std(b);
  // Substitute into the current images: the image of x_k after applying the
  // word letter by letter on the right.
  for (const auto& l : s.letters) {
    const int i = l.i;  // x_i, x_{i+1}
    auto subst = [&](int g) -> FreeWord {
      int a = std::abs(g);
      FreeWord r;
      if (l.sign > 0) {
        if (a == i) r = {i, i + 1, -i};
        else if (a == i + 1) r = {i};
        else r = {a};
      } else {
        if (a == i) r = {i + 1};
        else if (a == i + 1) r = {-(i + 1), i, i + 1};
        else r = {a};
      }
      return g > 0 ? r : inverse_fw(r);
    };
    for (auto& w : img) {
      FreeWord nw;
      for (int g : w) {
        FreeWord piece = subst(g);
        nw.insert(nw.end(), piece.begin(), piece.end());
      }
      w = reduce(nw);
    }
  }
  return img;
}

bool artin_equal(const BraidWord& a, const BraidWord& b) { return artin_images(a) == artin_images(b); }

}  // namespace

TEST_CASE("Artin oracle sanity") {
  CHECK(artin_equal(make_word(3, {1, 2, 1}), make_word(3, {2, 1, 2})));
  CHECK_FALSE(artin_equal(make_word(3, {1, 2}), make_word(3, {2, 1})));
  CHECK(artin_equal(make_word(4, {1, 3}), make_word(4, {3, 1})));
  CHECK(artin_equal(make_word(2, {1, -1}), make_word(2, {})));
}

TEST_CASE("braid relations under normal_form") {
  CHECK(equal(make_word(3, {1, 2, 1}), make_word(3, {2, 1, 2})));
  CHECK(equal(make_word(4, {1, 3}), make_word(4, {3, 1})));
  CHECK_FALSE(equal(make_word(3, {1, 2}), make_word(3, {2, 1})));
  CHECK(equal(make_word(3, {1, -1, 2, -2}), make_word(3, {})));
  CHECK_FALSE(equal(make_word(2, {1}), make_word(2, {-1})));
  CHECK_THROWS(equal(make_word(2, {1}), make_word(3, {1})));
  CHECK(normal_form(make_word(3, {})).serialize() == "d:0");
}

TEST_CASE("band relations") {
  BraidWord lhs, rhs;
  lhs.strands = rhs.strands = 4;
  // sigma_{j,k} sigma_{i,j} = sigma_{i,j} sigma_{i,k} = sigma_{i,k} sigma_{j,k}
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j)
      for (int k = j + 1; k <= 4; ++k) {
        lhs.letters = {Letter::bandgen(j, k), Letter::bandgen(i, j)};
        rhs.letters = {Letter::bandgen(i, j), Letter::bandgen(i, k)};
        CHECK(equal(lhs, rhs));
        rhs.letters = {Letter::bandgen(i, k), Letter::bandgen(j, k)};
        CHECK(equal(lhs, rhs));
      }
  // Disjoint and nested bands commute.
  lhs.letters = {Letter::bandgen(1, 2), Letter::bandgen(3, 4)};
  rhs.letters = {Letter::bandgen(3, 4), Letter::bandgen(1, 2)};
  CHECK(equal(lhs, rhs));
  lhs.letters = {Letter::bandgen(1, 4), Letter::bandgen(2, 3)};
  rhs.letters = {Letter::bandgen(2, 3), Letter::bandgen(1, 4)};
  CHECK(equal(lhs, rhs));
  // Linked bands do not.
  lhs.letters = {Letter::bandgen(1, 3), Letter::bandgen(2, 4)};
  rhs.letters = {Letter::bandgen(2, 4), Letter::bandgen(1, 3)};
  CHECK_FALSE(equal(lhs, rhs));
}

TEST_CASE("delta squared is central, delta conjugation flips") {
  for (int n = 2; n <= 6; ++n) {
    BraidWord d = delta_braid(n).word();
    CHECK(static_cast<int>(d.length()) == n * (n - 1) / 2);
    BraidWord d2 = concat(d, d);
    for (int i = 1; i < n; ++i) {
      BraidWord s = make_word(n, {i});
      CHECK(equal(concat(d2, s), concat(s, d2)));
      CHECK(equal(concat(d, s), concat(delta_flip(s), d)));
    }
    CHECK(normal_form(d2).serialize() == "d:2");
  }
}

TEST_CASE("normal_form agrees with the Artin action") {
  std::mt19937 rng(3);
  for (int t = 0; t < 300; ++t) {
    int n = 2 + static_cast<int>(rng() % 4);
    BraidWord a = testsupport::random_mixed_word(rng, n, 10);
    BraidWord b;
    if (t % 3 == 0) {
      b = a;
      // Insert a cancelling pair and a commutation somewhere.
      int i = 1 + static_cast<int>(rng() % (n - 1));
      std::size_t pos = rng() % (b.letters.size() + 1);
      b.letters.insert(b.letters.begin() + static_cast<long>(pos), {Letter::gen(i, 1), Letter::gen(i, -1)});
    } else {
      b = testsupport::random_mixed_word(rng, n, 6);
    }
    CHECK(equal(a, b) == artin_equal(a, b));
    // Normal form word represents the same element.
    CHECK(artin_equal(normal_form(a).word(), a));
    CHECK(normal_form(normal_form(a).word()) == normal_form(a));
  }
}

TEST_CASE("normal form factors are left-weighted simple braids") {
  std::mt19937 rng(8);
  for (int t = 0; t < 200; ++t) {
    int n = 2 + static_cast<int>(rng() % 4);
    NormalForm nf = normal_form(testsupport::random_std_word(rng, n, 14));
    for (const auto& f : nf.factors) {
      CHECK_FALSE(f.is_identity());
      CHECK_FALSE(f.is_delta());
    }
    for (std::size_t k = 0; k + 1 < nf.factors.size(); ++k)
      for (int i = 0; i + 1 < n; ++i)
        if (nf.factors[k + 1].starts_with(i)) CHECK(nf.factors[k].ends_with(i));
  }
}

TEST_CASE("permutation_factorization") {
  auto f = permutation_factorization(make_word(3, {1, 2, 1, 1}));
  REQUIRE(f.size() == 2);
  CHECK(f[0].is_delta());
  CHECK_THROWS(permutation_factorization(make_word(3, {1, -2})));
  std::mt19937 rng(9);
  for (int t = 0; t < 100; ++t) {
    BraidWord w = testsupport::random_std_word(rng, 5, 12, false);
    BraidWord back;
    back.strands = 5;
    for (const auto& p : permutation_factorization(w)) back = concat(back, p.word());
    CHECK(equal(back, w));
  }
}

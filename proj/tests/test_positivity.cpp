#include <random>

#include "braidpos/certificate.hpp"
#include "braidpos/garside.hpp"
#include "braidpos/homfly.hpp"
#include "braidpos/positivity.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace braidpos;

namespace {

Factor group(std::vector<int> body, int exponent = 1) { return {Factor::Kind::Group, std::move(body), exponent, 0, 0, 1}; }

// The defining word sigma_{j-1}...sigma_{i+1} sigma_i sigma_{i+1}^-1...sigma_{j-1}^-1.
std::vector<int> defining_body(int i, int j) {
  std::vector<int> b;
  for (int k = j - 1; k > i; --k) b.push_back(k);
  b.push_back(i);
  for (int k = i + 1; k < j; ++k) b.push_back(-k);
  return b;
}

}  // namespace

TEST_CASE("recognize_band_factor") {
  auto r = recognize_band_factor(group({2, 1, -2}), 3);
  REQUIRE(r);
  CHECK(*r == Letter::bandgen(1, 3, 1));
  r = recognize_band_factor(group({-1, 2, 1}), 3);
  REQUIRE(r);
  CHECK(*r == Letter::bandgen(1, 3, 1));
  r = recognize_band_factor(group({3, 2, 1, -2, -3}), 4);
  REQUIRE(r);
  CHECK(*r == Letter::bandgen(1, 4, 1));
  r = recognize_band_factor(group({2, -1, -2}), 3);
  REQUIRE(r);
  CHECK(*r == Letter::bandgen(1, 3, -1));
  CHECK_FALSE(recognize_band_factor(group({1, 2}), 3));
  CHECK_FALSE(recognize_band_factor(group({1, 2, 2, -1}), 3));
}

TEST_CASE("is_sqp and is_qp examples") {
  const auto d = sqp_decomposition(parse_table_word("1,1,2,(2,1,-2)"));
  CHECK(d.sqp);
  CHECK(d.bands == std::vector<Letter>{band(1, 2), band(1, 2), band(2, 3), band(1, 3)});
  CHECK_FALSE(is_sqp(parse_table_word("1,-1")));
  const auto d2 = sqp_decomposition(parse_table_word("(3,2,-3)^2", 4));
  CHECK(d2.sqp);
  CHECK(d2.bands == std::vector<Letter>{band(2, 4), band(2, 4)});

  CHECK(is_qp(parse_table_word("(2,-4,3,4,-2)")));
  CHECK(is_qp(parse_table_word("(2,1,-2)^3,2")));
  // A conjugate of a positive word is a product of conjugates of generators.
  CHECK(is_qp(parse_table_word("(1,2,2,-1)")));
  CHECK(is_qp(parse_table_word("(-2,-2,3,3,2,2)")));
  CHECK(is_qp(parse_table_word("(-1,3,2,1,-2,-3,1)")));
  CHECK_FALSE(is_qp(parse_table_word("(1,2,-1,-2)")));
  CHECK(is_qp(parse_table_word("(3,-2,1,2,3)")));
  CHECK_FALSE(is_qp(parse_table_word("(3,-2,1,3)")));
  CHECK_FALSE(is_qp(parse_table_word("1,-2")));
  CHECK(is_qp(parse_table_word("1,2,3")));
  CHECK_FALSE(is_qp(parse_table_word("(2,-1,-2)")));
}

TEST_CASE("band factors rewritten by the defining word have conjugate shape") {
  for (int n = 2; n <= 7; ++n)
    for (int i = 1; i < n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        GroupedWord gw;
        gw.strands = n;
        gw.factors.push_back(group(defining_body(i, j)));
        INFO(n, " ", i, " ", j);
        CHECK(is_qp(gw));
        CHECK(is_sqp(gw));
        CHECK(equal(flatten(gw), BraidWord{n, {Letter::bandgen(i, j, 1)}}));
      }
}

TEST_CASE("band relations in B5 by normal form") {
  const int n = 5;
  auto bw = [](std::vector<Letter> ls) { return BraidWord{5, std::move(ls)}; };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        const Letter ij = Letter::bandgen(i, j), ik = Letter::bandgen(i, k), jk = Letter::bandgen(j, k);
        CHECK(equal(bw({jk, ij}), bw({ij, ik})));
        CHECK(equal(bw({ij, ik}), bw({ik, jk})));
        CHECK_FALSE(equal(bw({ij, jk}), bw({ik, ij})));
      }
  // Disjoint and nested bands commute; interleaved ones do not.
  CHECK(equal(bw({band(1, 2), band(3, 5)}), bw({band(3, 5), band(1, 2)})));
  CHECK(equal(bw({band(1, 5), band(2, 4)}), bw({band(2, 4), band(1, 5)})));
  CHECK_FALSE(equal(bw({band(1, 3), band(2, 4)}), bw({band(2, 4), band(1, 3)})));
}

TEST_CASE("three-braid NP words") {
  const auto gw = three_braid_np_to_qp({1, 1, 1});
  CHECK(to_string(gw) == "(-1,2,1),(-1,2,1,-2,1)");
  CHECK(is_qp(gw));
  CHECK(equal(flatten(gw), band_to_std(np3_word({1, 1, 1}))));

  const auto gw2 = three_braid_np_to_qp({2, 1, 1});
  REQUIRE_FALSE(gw2.factors.empty());
  CHECK(gw2.factors.front().body == std::vector<int>{-1, 2, 1});
  CHECK(gw2.factors.front().exponent == 2);
  CHECK(is_qp(gw2));

  CHECK_THROWS_AS(three_braid_np_to_qp({1, 2}), NotApplicable);
  CHECK_THROWS(three_braid_np_to_qp({1, 0, 2}));
  CHECK_THROWS(three_braid_np_to_qp({}));

  std::mt19937 rng(11);
  for (int t = 0; t < 60; ++t) {
    std::vector<int> e(static_cast<std::size_t>(std::uniform_int_distribution<int>(3, 7)(rng)));
    for (auto& x : e) x = std::uniform_int_distribution<int>(1, 3)(rng);
    const BraidWord np = np3_word(e);
    CHECK(np3_exponents(np) == e);
    const auto q = three_braid_np_to_qp(e);
    INFO(to_string(np), " -> ", to_string(q));
    CHECK(is_qp(q));
    const BraidWord flat = flatten(q);
    CHECK(homfly_closed_braid(flat) == homfly_closed_braid(np));
    CHECK(self_linking(flat) == self_linking(np));
  }
}

TEST_CASE("k_delta_family") {
  CHECK(k_delta_family(1) == parse_word("-1,2,b(1,3),1,2,2", 3));
  CHECK(k_delta_family(2) == parse_word("-1,-1,2,2,b(1,3),1,1,2", 3));
  CHECK_THROWS(k_delta_family(0));
  for (int d = 1; d <= 6; ++d) {
    const BraidWord w = k_delta_family(d);
    INFO(d);
    CHECK(self_linking(w) == 1);
    CHECK(euler_char_bennequin(w) == -1 - 2 * d);
    CHECK(delta3_of_word(w, -1 - 2 * d) == d);
  }
}

TEST_CASE("defects") {
  CHECK(delta3_of_word(parse_word("1,1,1"), -1) == 0);
  CHECK(delta3_of_link(-1, -3) == 2);
  CHECK(delta4_of_link(-1, 1) == 0);
  CHECK_THROWS(delta3_of_link(-1, -2));
  CHECK_THROWS(delta4_of_link(0, 1));
}

TEST_CASE("non_right_veering_witness") {
  CHECK(non_right_veering_witness(parse_word("-2,1,1", 3)) == 2);
  CHECK_FALSE(non_right_veering_witness(parse_word("1,1,1")));
  CHECK_FALSE(non_right_veering_witness(parse_word("1,-2,2")));
  CHECK(non_right_veering_witness(parse_word("-3,-1,2,3", 4)) == 1);
}

TEST_CASE("certificate JSON round trip") {
  const auto out = almost_positive_to_sqp(parse_word("-1,2,1,2"));
  const std::string text = to_json(out.cert);
  const Certificate back = certificate_from_json(text);
  CHECK(back.input == out.cert.input);
  CHECK(back.output == out.cert.output);
  CHECK(back.trace.size() == out.cert.trace.size());
  CHECK(validate(back).pass);
  CHECK(to_json(back) == text);

  Certificate bad = back;
  bad.output = parse_word("1,1,1");
  CHECK_FALSE(validate(bad).pass);
  CHECK_THROWS(certificate_from_json("{\"input\":{}}"));
}

TEST_CASE("certificate builder rejects false steps") {
  CertificateBuilder b(parse_word("1,2,1", 3));
  CHECK_THROWS(b.rewrite(0, 2, {Letter::gen(2), Letter::gen(1)}, "not a relation"));
  b.rewrite(0, 3, {Letter::gen(2), Letter::gen(1), Letter::gen(2)}, "braid relation");
  CHECK(b.word() == parse_word("2,1,2", 3));
  CHECK_THROWS(b.conjugate(parse_word("1", 3), parse_word("2,1,2", 3), "wrong result"));
}

TEST_CASE("negative destabilization raises self-linking by two and keeps HOMFLYPT") {
  std::mt19937 rng(5);
  for (int t = 0; t < 60; ++t) {
    BraidWord w = testsupport::random_std_word(rng, 3, 6);
    const BraidWord s = stabilize(w, -1);
    CertificateBuilder b(s);
    const auto d = try_destabilize(s);
    REQUIRE(d);
    CHECK(d->sign == -1);
    b.remove_strand(d->position, s.strands, "");
    const Certificate c = b.take();
    CHECK(validate(c).pass);
    CHECK(self_linking(c.output) == self_linking(s) + 2);
    CHECK(homfly_closed_braid(c.output) == homfly_closed_braid(s));
  }
}

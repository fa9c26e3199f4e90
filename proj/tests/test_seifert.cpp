#include <algorithm>
#include <set>

#include "braidpos/seifert.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace braidpos;

namespace {

const PDCode& diagram(const std::string& name) {
  static const auto all = load_pd_file(testsupport::data_path("diagrams.pd"));
  return find_pd(all, name);
}

// Three concentric circles with one band from the innermost to the outermost,
// passing over the middle one; the middle circle runs the other way.
SeifertStructure band_over_incoherent_circle(bool middle_reversed) {
  SeifertStructure s;
  s.circle_count = 3;
  s.band_sign = {1};
  auto add = [&](int origin, int circle, bool forward, int band) {
    SeifertStructure::Dart d;
    d.origin = origin;
    d.circle = circle;
    d.forward = forward;
    d.band = band;
    s.darts.push_back(d);
    return static_cast<int>(s.darts.size()) - 1;
  };
  // Vertex 0 on the inner circle, 1 on the middle, 2 on the outer.
  int f0 = add(0, 0, true, -1), b0 = add(0, 0, false, -1);
  int f1 = add(1, 1, true, -1), b1 = add(1, 1, false, -1);
  int f2 = add(2, 2, true, -1), b2 = add(2, 2, false, -1);
  int a0 = add(0, -1, false, 0), t1 = add(1, -1, false, 0);
  int a1 = add(1, -1, false, 0), t2 = add(2, -1, false, 0);
  auto link = [&](int x, int y) {
    s.darts[x].twin = y;
    s.darts[y].twin = x;
  };
  link(f0, b0);
  link(f1, b1);
  link(f2, b2);
  link(a0, t1);
  link(a1, t2);
  // Band along the positive x axis; counterclockwise circles head north there.
  s.rotation.resize(3);
  s.rotation[0] = {a0, f0, b0};
  if (middle_reversed) s.rotation[1] = {a1, b1, t1, f1};
  else s.rotation[1] = {a1, f1, t1, b1};
  s.rotation[2] = {f2, t2, b2};
  s.rebuild();
  return s;
}

}  // namespace

TEST_CASE("Seifert circles of standard diagrams") {
  SeifertStructure t = seifert_circles(diagram("3_1"));
  CHECK(t.total_circles() == 2);
  CHECK(std::count(t.band_sign.begin(), t.band_sign.end(), 1) == 3);
  SeifertStructure f = seifert_circles(diagram("4_1"));
  CHECK(f.total_circles() == 3);
  CHECK(std::count(f.band_sign.begin(), f.band_sign.end(), 1) == 2);
  CHECK(std::count(f.band_sign.begin(), f.band_sign.end(), -1) == 2);
  SeifertStructure k = seifert_circles(diagram("kink"));
  CHECK(k.total_circles() == 2);
  CHECK(k.crossings() == 1);
  CHECK(seifert_circles(diagram("unknot")).total_circles() == 1);
}

TEST_CASE("counts, chi and diagram SL") {
  CHECK(canonical_chi(diagram("3_1")) == -1);
  CHECK(canonical_chi(diagram("4_1")) == -1);
  CHECK(canonical_chi(diagram("unknot")) == 1);
  DiagramCounts c = diagram_counts(diagram("4_1"));
  CHECK(c.circles == 3);
  CHECK(c.positive == 2);
  CHECK(c.negative == 2);
  CHECK(diagram_SL(diagram("3_1"), true) == 1);
  CHECK(diagram_SL(diagram("3_1"), true) == self_linking(make_word(2, {1, 1, 1})));
  CHECK(diagram_SL(diagram("4_1"), true) == -3);
  CHECK(diagram_SL(diagram("unknot"), true) == -1);
  CHECK_THROWS(diagram_SL(diagram("3_1"), false));
}

TEST_CASE("Seifert graph blocks and homogeneity") {
  SeifertGraph t = seifert_graph(seifert_circles(diagram("3_1")));
  CHECK(t.vertices == 2);
  auto bt = blocks(t);
  CHECK(std::all_of(bt.begin(), bt.end(), [&](int b) { return b == bt[0]; }));
  CHECK(cut_vertices(t).empty());

  SeifertGraph path;
  path.vertices = 3;
  path.edges = {{0, 1, 1}, {1, 2, -1}};
  auto bp = blocks(path);
  CHECK(bp[0] != bp[1]);
  CHECK(cut_vertices(path) == std::vector<int>{1});
  CHECK(is_homogeneous(path));

  SeifertGraph f = seifert_graph(seifert_circles(diagram("4_1")));
  auto bf = blocks(f);
  CHECK(std::set<int>(bf.begin(), bf.end()).size() == 2);
  CHECK(cut_vertices(f).size() == 1);
  CHECK(is_homogeneous(f));
  CHECK(is_homogeneous(t));
  CHECK(is_homogeneous(seifert_graph(seifert_circles(diagram("chain3")))));
  CHECK_FALSE(is_homogeneous(seifert_graph(seifert_circles(diagram("mixed_twist")))));
  CHECK_FALSE(is_homogeneous(seifert_graph(seifert_circles(diagram("mixed_block")))));
}

TEST_CASE("homogeneous diagrams: alternating and positive ones") {
  auto all = load_pd_file(testsupport::data_path("diagrams.pd"));
  for (const auto& d : all) {
    if (d.crossing_count() == 0) continue;
    CAPTURE(d.name);
    bool positive = pd_writhe(d) == d.crossing_count();
    if (positive || is_alternating(d)) CHECK(is_homogeneous(seifert_graph(seifert_circles(d))));
  }
}

TEST_CASE("reduced and alternating detection") {
  CHECK(is_reduced(diagram("3_1")));
  CHECK(is_reduced(diagram("4_1")));
  CHECK_FALSE(is_reduced(diagram("kink")));
  CHECK(is_alternating(diagram("3_1")));
  CHECK(is_alternating(diagram("4_1")));
  CHECK_FALSE(is_alternating(diagram("8_19")));
  CHECK_FALSE(is_alternating(diagram("10_145")));
}

TEST_CASE("DHL minimal Seifert circle check") {
  CHECK(dhl_minimal_seifert_check(diagram("3_1")));
  CHECK(dhl_minimal_seifert_check(diagram("4_1")));
  CHECK_THROWS(dhl_minimal_seifert_check(diagram("kink")));
  CHECK_THROWS(dhl_minimal_seifert_check(diagram("8_19")));
  // The twist knot diagram joins some pair of circles by a single band.
  CHECK_FALSE(dhl_minimal_seifert_check(diagram("6_1")));
}

TEST_CASE("coherence and nesting") {
  SeifertStructure t = seifert_circles(diagram("3_1"));
  CHECK(coherent(t, 0, 1));
  CHECK(incoherent_pairs(t) == 0);
  CHECK(incoherent_pairs(seifert_circles(diagram("4_1"))) == 0);
  // The twist knot diagram has nested clasp circles running opposite ways.
  CHECK(incoherent_pairs(seifert_circles(diagram("6_1"))) == 3);
  SeifertStructure q = band_over_incoherent_circle(false);
  CHECK(incoherent_pairs(q) == 0);
  CHECK(incoherent_pairs(band_over_incoherent_circle(true)) == 2);
  // Two faces tie for largest; the lower one, between circles 0 and 1, is unbounded.
  CHECK(encloses(q, 1, 2));
  CHECK_FALSE(encloses(q, 2, 1));
  CHECK_FALSE(encloses(q, 0, 2));
  CHECK_FALSE(encloses(q, 2, 0));
}

TEST_CASE("quasi-canonical validation") {
  auto all = load_pd_file(testsupport::data_path("diagrams.pd"));
  for (const auto& d : all) {
    if (d.crossing_count() == 0) continue;
    CAPTURE(d.name);
    CHECK(quasi_canonical_validate(seifert_circles(d)).pass);
  }
  CHECK(quasi_canonical_validate(band_over_incoherent_circle(false)).pass);
  CheckResult bad = quasi_canonical_validate(band_over_incoherent_circle(true));
  CHECK_FALSE(bad.pass);
  CHECK(bad.message.rfind("(iv)", 0) == 0);
}

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "braidpos/homfly.hpp"
#include "braidpos/pd.hpp"
#include "braidpos/positivity.hpp"
#include "braidpos/seifert.hpp"
#include "braidpos/skein.hpp"
#include "braidpos/verify.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace braidpos;
using testsupport::data_path;
using testsupport::fixture_path;

namespace {

const std::map<std::string, KnotRecord>& records() {
  static const auto r = load_knot_records(data_path("knot_records.csv"));
  return r;
}

TableEntry entry(const std::string& row, Section s = Section::SQP) {
  const std::string header = s == Section::SQP        ? "SQP"
                             : s == Section::QPDelta1 ? "QP_DELTA1"
                                                      : "QP_DELTA_GT1";
  auto es = parse_tables("# section: " + header + "\n" + row + "\n");
  REQUIRE(es.size() == 1);
  return es.front();
}

std::uint64_t fnv1a(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : ss.str()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::set<std::string> failing(const Summary& s, const std::string& check) {
  std::set<std::string> out;
  for (const auto& r : s.reports)
    if (const Check* c = r.find(check); c && c->outcome == Outcome::Fail) out.insert(r.knot);
  return out;
}

}  // namespace

TEST_CASE("load_tables rows") {
  const auto t = entry("3_1\t1,1,1\tpositive-braid");
  CHECK(t.knot == "3_1");
  CHECK(t.has("positive-braid"));
  CHECK(to_string(flatten(t.word)) == "1,1,1");

  const auto sqp = load_tables(data_path("sqp_knots.tsv"));
  auto it = std::find_if(sqp.begin(), sqp.end(), [](const TableEntry& e) { return e.knot == "12n148"; });
  REQUIRE(it != sqp.end());
  CHECK(it->has("mirror"));
  CHECK(it->has("sqp-unknown"));
  CHECK(to_string(flatten(it->word)) == "1,2,2,1,-2,3,2,2,1,-2,2,1,-2,2,1,-2,3,3");

  CHECK(parse_tables("").empty());
  CHECK(parse_tables("# section: SQP\n# only comments\n").empty());
}

TEST_CASE("load_tables errors name the line") {
  try {
    parse_tables("# section: SQP\n3_1\t1,1,1\t\n5_1\t1,(1,1\t\n", "t.tsv");
    FAIL("expected a syntax error");
  } catch (const DataError& e) {
    CHECK(std::string(e.what()).find("t.tsv:3") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_tables("3_1\t1,1,1\t\n"), DataError);
  CHECK_THROWS_AS(parse_tables("# section: NOPE\n"), DataError);
  CHECK_THROWS_AS(parse_tables("# section: SQP\n3_1\t1,1,1\tbogus\n"), DataError);
  CHECK_THROWS_AS(parse_tables("# section: QP_DELTA_GT1\n3_1\t1,1,1\t\tx\n"), DataError);
  CHECK_THROWS_AS(load_tables("/nonexistent/file.tsv"), DataError);
}

TEST_CASE("bundled tables are complete and unchanged") {
  const auto sqp = load_tables(data_path("sqp_knots.tsv"));
  const auto qp1 = load_tables(data_path("qp_delta1_knots.tsv"));
  const auto qp2 = load_tables(data_path("qp_delta_gt1_knots.tsv"));
  CHECK(sqp.size() == 260);
  CHECK(qp1.size() == 110);
  CHECK(qp2.size() == 86);
  int unknown = 0;
  for (const auto& e : qp2) {
    if (e.status_unknown) {
      ++unknown;
      CHECK((e.knot == "12n239" || e.knot == "12n512"));
    } else {
      CHECK(e.delta3_claimed.has_value());
    }
  }
  CHECK(unknown == 2);
  CHECK(fnv1a(data_path("sqp_knots.tsv")) == 0xa3cfc97327ced1c9ull);
  CHECK(fnv1a(data_path("qp_delta1_knots.tsv")) == 0xc47d229d4f1f2956ull);
  CHECK(fnv1a(data_path("qp_delta_gt1_knots.tsv")) == 0x776ca6ea4694d202ull);
}

TEST_CASE("knot records") {
  const auto& r = records();
  const KnotRecord& t = r.at("3_1");
  CHECK(t.genus3 == 1);
  CHECK(t.genus4.point());
  CHECK(t.genus4.lo == 1);
  CHECK(t.braid_index == 2);
  CHECK(t.max_self_linking == 1);
  // Cross-checks against the bundled diagram.
  const auto pds = load_pd_file(data_path("diagrams.pd"));
  const PDCode& d = find_pd(pds, "3_1");
  CHECK(homfly_diagram_oracle(d) == t.homfly);
  CHECK(canonical_chi(d) == 1 - 2 * t.genus3);
  CHECK(mfw_braid_index_lower_bound(t.homfly) == t.braid_index);

  const auto extra = load_knot_records(fixture_path("extra_records.csv"));
  const KnotRecord& f = extra.at("4_1");
  CHECK(f.genus3 == 1);
  CHECK(f.max_self_linking == -3);
  CHECK(f.amphichiral);
  CHECK(homfly_diagram_oracle(find_pd(pds, "4_1")) == f.homfly);
  CHECK(self_linking(parse_word(f.braid)) == -3);
  CHECK(min_deg_v(f.homfly) - 1 == -3);

  CHECK(r.at("12n239").genus4.lo == 1);
  CHECK(r.at("12n239").genus4.hi == 2);
}

TEST_CASE("knot record errors") {
  const std::string header =
      "name,crossing_number,braid_index,genus3,genus4,max_self_linking,mirror_max_self_linking,amphichiral,braid,"
      "homfly\n";
  try {
    parse_knot_records(header + "3_1,3,2,1,1,1,-5,N,\"1,1,1\",(2*v^2-v^4+ v^2*z^2\n", "r.csv");
    FAIL("expected a polynomial error");
  } catch (const DataError& e) {
    CHECK(std::string(e.what()).find("column homfly") != std::string::npos);
    CHECK(std::string(e.what()).find("r.csv:2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_knot_records(header + "3_1,3,2,1,2,1,-5,N,\"1,1,1\",(2*v^2-v^4)+ v^2*z^2\n"), DataError);
  CHECK_THROWS_AS(parse_knot_records("name,homfly\n3_1,1\n"), DataError);
  CHECK_THROWS_AS(parse_knot_records(header + "3_1,3,x,1,1,1,-5,N,\"1,1,1\",(2*v^2-v^4)+ v^2*z^2\n"), DataError);
  CHECK(parse_knot_records("").empty());
}

TEST_CASE("verify_entry examples") {
  const auto& r = records();
  Report a = verify_entry(entry("3_1\t1,1,1\tpositive-braid"), r.at("3_1"));
  CHECK_FALSE(a.failed());
  CHECK(a.self_linking == 1);
  CHECK(a.checks.size() == 4);

  const TableEntry e52 = entry("5_2\t1,1,2,(2,1,-2)\t");
  CHECK(sqp_decomposition(e52.word).bands == std::vector<Letter>{band(1, 2), band(1, 2), band(2, 3), band(1, 3)});
  Report b = verify_entry(e52, r.at("5_2"));
  CHECK_FALSE(b.failed());
  CHECK(b.self_linking == 1);

  // The printed 8_21 word is quasipositive with sl = 1 and delta3 = 1, but
  // its closure is the trefoil.
  Report c = verify_entry(entry("8_21\t(2,1,-2)^3,2\tqp-known", Section::QPDelta1), r.at("8_21"));
  CHECK(c.find("class")->outcome == Outcome::Pass);
  CHECK(c.self_linking == 1);
  CHECK(c.find("slice-bennequin")->outcome == Outcome::Pass);
  CHECK(c.find("delta3")->outcome == Outcome::Pass);
  CHECK(c.find("fingerprint")->outcome == Outcome::Fail);
  CHECK(homfly_closed_braid(flatten(parse_table_word("(2,1,-2)^3,2"))) == r.at("3_1").homfly);

  CHECK_THROWS_AS(verify_entry(entry("3_1\t1,1,1\t"), r.at("5_1")), DataError);

  const TableEntry u = entry("12n239\t-\tstatus-unknown\t", Section::QPDeltaGt1);
  CHECK(u.status_unknown);
  Report d = verify_entry(u, r.at("12n239"));
  CHECK(d.checks.empty());
}

TEST_CASE("mirror rows are checked on the negated word") {
  const auto& r = records();
  // sigma_1^-3 closes to the left-handed trefoil; the record is right-handed.
  Report m = verify_entry(entry("3_1\t-1,-1,-1\tmirror"), r.at("3_1"));
  CHECK(m.find("fingerprint")->outcome == Outcome::Pass);
  Report plain = verify_entry(entry("3_1\t-1,-1,-1\t"), r.at("3_1"));
  CHECK(plain.find("fingerprint")->outcome == Outcome::Fail);
  CHECK(plain.find("fingerprint")->detail == "matches only the opposite chirality");
  Report wrong = verify_entry(entry("3_1\t1,1,1\tmirror"), r.at("3_1"));
  CHECK(wrong.find("fingerprint")->outcome == Outcome::Fail);
}

TEST_CASE("fault injection fails only the fingerprint") {
  const auto& r = records();
  std::vector<TableEntry> es = {entry("5_2\t1,1,2,(2,1,-2)\t"), entry("5_2\t1,1,2,2\t")};
  const Summary s = verify_all(es, r, 1);
  REQUIRE(s.reports.size() == 2);
  CHECK_FALSE(s.reports[0].failed());
  for (const auto& c : s.reports[1].checks) CHECK((c.outcome == Outcome::Fail) == (c.name == "fingerprint"));
  CHECK(s.failed == 1);
}

TEST_CASE("verify_all bookkeeping") {
  const auto& r = records();
  const Summary empty = verify_all({}, r, 2);
  CHECK(empty.entries == 0);
  CHECK(empty.reports.empty());
  CHECK(empty.failed == 0);

  const Summary m = verify_all({entry("99_1\t1,1,1\t"), entry("3_1\t1,1,1\t")}, r, 1);
  CHECK(m.missing_records == std::vector<std::string>{"99_1"});
  CHECK(m.reports.size() == 1);
}

TEST_CASE("verify_all is deterministic and matches the serial run") {
  const auto& r = records();
  auto es = load_tables(data_path("qp_delta_gt1_knots.tsv"));
  const Summary one = verify_all(es, r, 1);
  const Summary four = verify_all(es, r, 4);
  CHECK(to_json(one, false) == to_json(four, false));
  CHECK(to_json(one, false) == to_json(verify_all(es, r, 1), false));
  CHECK(one.excluded == 2);
}

TEST_CASE("table rows failing re-certification are exactly the known ones") {
  const auto& r = records();
  const Summary sqp = verify_all(load_tables(data_path("sqp_knots.tsv")), r, 1);
  const Summary qp1 = verify_all(load_tables(data_path("qp_delta1_knots.tsv")), r, 1);
  const Summary qp2 = verify_all(load_tables(data_path("qp_delta_gt1_knots.tsv")), r, 1);
  CHECK(sqp.missing_records.empty());
  CHECK(qp1.missing_records.empty());
  CHECK(qp2.missing_records.empty());

  CHECK(failing(sqp, "class") == std::set<std::string>{"12n329"});
  CHECK(failing(sqp, "bennequin") ==
        std::set<std::string>{"10_55",  "11a243", "11a245", "11a360", "11n171", "12a55",  "12a152",
                              "12a295", "12a320", "12a355", "12a420", "12a490", "12a586", "12a647",
                              "12a648", "12n148", "12n166", "12n276", "12n329"});
  CHECK(failing(sqp, "strands").empty());
  CHECK(failing(qp1, "class").empty());
  CHECK(failing(qp1, "slice-bennequin") ==
        std::set<std::string>{"12n72", "12n168", "12n249", "12n373", "12n513", "12n867"});
  CHECK(failing(qp1, "delta3") ==
        std::set<std::string>{"12n72", "12n168", "12n212", "12n249", "12n373", "12n513", "12n867"});
  CHECK(failing(qp2, "class") == std::set<std::string>{"12n409", "12n685"});
  CHECK(failing(qp2, "delta3") == std::set<std::string>{"11n172", "12n145", "12n190"});
}

TEST_CASE("nonqp_detector") {
  const std::vector<std::string> ten = {"11n37",  "12n120", "12n199", "12n200", "12n260",
                                        "12n312", "12n397", "12n414", "12n523", "12n549"};
  std::vector<std::string> warn;
  auto got = nonqp_detector(records(), &warn);
  std::sort(got.begin(), got.end());
  auto want = ten;
  std::sort(want.begin(), want.end());
  CHECK(got == want);

  std::map<std::string, KnotRecord> small;
  small["3_1"] = records().at("3_1");
  CHECK(nonqp_detector(small).empty());
  KnotRecord bare = records().at("3_1");
  bare.name = "x";
  bare.max_self_linking.reset();
  small["x"] = bare;
  warn.clear();
  CHECK(nonqp_detector(small, &warn).empty());
  CHECK(warn.size() == 1);
}

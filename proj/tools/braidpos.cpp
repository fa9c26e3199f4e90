#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>

#include "braidpos/braiding.hpp"
#include "braidpos/certificate.hpp"
#include "braidpos/homfly.hpp"
#include "braidpos/knotdata.hpp"
#include "braidpos/positivity.hpp"
#include "braidpos/skein.hpp"
#include "braidpos/verify.hpp"

#ifndef BRAIDPOS_DATA_DIR
#define BRAIDPOS_DATA_DIR "data"
#endif

using namespace braidpos;
using nlohmann::json;

namespace {

constexpr int kPass = 0;
constexpr int kChecksFailed = 1;
constexpr int kUsage = 2;

struct Options {
  std::string word;
  std::string word2;
  std::optional<int> strands;
  std::string pd;
  std::string diagrams = std::string(BRAIDPOS_DATA_DIR) + "/diagrams.pd";
  std::vector<std::string> tables;
  std::string records = std::string(BRAIDPOS_DATA_DIR) + "/knot_records.csv";
  std::string knot;
  std::optional<int> genus3;
  std::optional<int> genus4;
  bool json = false;
  bool timing = false;
  std::size_t budget = 100000;
  int jobs = 1;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(const Options& o, const json& j, const std::string& text) {
  if (o.json) std::cout << j.dump(2) << "\n";
  else std::cout << text;
}

GroupedWord grouped(const Options& o) {
  if (o.word.empty()) throw UsageError("--word is required");
  return parse_table_word(o.word, o.strands);
}

BraidWord word(const Options& o) { return flatten(grouped(o)); }

PDCode diagram(const Options& o) {
  if (o.pd.empty()) throw UsageError("--pd is required");
  if (o.pd.find("PD[") != std::string::npos) return parse_pd_line(o.pd);
  static std::vector<PDCode> all;
  if (all.empty()) all = load_pd_file(o.diagrams);
  return find_pd(all, o.pd);
}

std::string poly_text(const BraidWord& w) {
  if (w.strands > kMaxHeckeStrands) return "";
  return homfly_closed_braid(w).pretty();
}

int cmd_parse(const Options& o) {
  const GroupedWord g = grouped(o);
  const BraidWord w = flatten(g);
  json j{{"grouped", to_string(g)}, {"word", to_string(w)}, {"strands", w.strands}, {"length", w.length()},
         {"permutation", to_string(permutation_of(w))}};
  emit(o, j,
       "grouped:     " + to_string(g) + "\nword:        " + to_string(w) + "\nstrands:     " +
           std::to_string(w.strands) + "\nlength:      " + std::to_string(w.length()) +
           "\npermutation: " + to_string(permutation_of(w)) + "\n");
  return kPass;
}

int cmd_invariants(const Options& o) {
  if (!o.pd.empty()) {
    const PDCode d = diagram(o);
    const DiagramCounts c = diagram_counts(d);
    const std::string p = homfly_diagram_oracle(d).pretty();
    json j{{"diagram", d.name},
           {"crossings", d.crossing_count()},
           {"components", pd_components(d)},
           {"writhe", pd_writhe(d)},
           {"seifert_circles", c.circles},
           {"positive", c.positive},
           {"negative", c.negative},
           {"chi", canonical_chi(d)},
           {"homfly", p}};
    emit(o, j,
         "crossings:       " + std::to_string(d.crossing_count()) + "\ncomponents:      " +
             std::to_string(pd_components(d)) + "\nwrithe:          " + std::to_string(pd_writhe(d)) +
             "\nseifert circles: " + std::to_string(c.circles) + "\nchi:             " +
             std::to_string(canonical_chi(d)) + "\nhomfly:          " + p + "\n");
    return kPass;
  }
  const BraidWord w = word(o);
  const std::string p = poly_text(w);
  json j{{"word", to_string(w)},
         {"strands", w.strands},
         {"writhe", writhe(w)},
         {"self_linking", self_linking(w)},
         {"chi", euler_char_bennequin(w)},
         {"negative_bands", negative_band_count(w)}};
  std::string text = "strands:        " + std::to_string(w.strands) + "\nwrithe:         " + std::to_string(writhe(w)) +
                     "\nself-linking:   " + std::to_string(self_linking(w)) +
                     "\nchi (Bennequin): " + std::to_string(euler_char_bennequin(w)) +
                     "\nnegative bands: " + std::to_string(negative_band_count(w)) + "\n";
  if (!p.empty()) {
    const LaurentPoly2 h = homfly_closed_braid(w);
    j["homfly"] = p;
    j["mfw_bound"] = mfw_braid_index_lower_bound(h);
    text += "homfly:         " + p + "\nMFW bound:      " + std::to_string(mfw_braid_index_lower_bound(h)) + "\n";
  }
  if (auto k = non_right_veering_witness(w)) {
    j["non_right_veering_witness"] = *k;
    text += "not right-veering: arc " + std::to_string(*k) + "\n";
  }
  emit(o, j, text);
  return kPass;
}

int cmd_check_sqp(const Options& o) {
  const GroupedWord g = grouped(o);
  const SQPDecomposition d = sqp_decomposition(g);
  json j{{"word", to_string(g)}, {"sqp", d.sqp}};
  std::string text = d.sqp ? "strongly quasipositive\n" : "not recognized as strongly quasipositive\n";
  if (d.sqp) {
    const BraidWord b{g.strands, d.bands};
    j["bands"] = to_string(b);
    text += "bands: " + to_string(b) + "\n";
  }
  emit(o, j, text);
  return d.sqp ? kPass : kChecksFailed;
}

int cmd_check_qp(const Options& o) {
  const GroupedWord g = grouped(o);
  const bool qp = is_qp(g);
  emit(o, json{{"word", to_string(g)}, {"qp", qp}},
       qp ? "quasipositive\n" : "not recognized as quasipositive\n");
  return qp ? kPass : kChecksFailed;
}

int report_certificate(const Options& o, const Certificate& c, json j, std::string text) {
  const CheckResult v = validate(c);
  j["output"] = to_string(c.output);
  j["strands"] = c.output.strands;
  j["certificate_valid"] = v.pass;
  j["certificate"] = json::parse(to_json(c));
  text += "output: " + to_string(c.output) + " (" + std::to_string(c.output.strands) + " strands)\n";
  text += "steps:  " + std::to_string(c.trace.size()) + "\n";
  text += v.pass ? "certificate replays\n" : "certificate invalid: " + v.message + "\n";
  emit(o, j, text);
  return v.pass ? kPass : kChecksFailed;
}

int cmd_rewrite(const Options& o, const std::string& which) {
  if (which == "almost-positive") {
    const RewriteOutcome r = almost_positive_to_sqp(word(o));
    return report_certificate(o, r.cert, json{{"destabilized", r.destabilized}},
                              r.destabilized ? "destabilized\n" : "");
  }
  if (which == "separating") {
    if (o.word2.empty()) throw UsageError("separating needs --word and --word2");
    const BraidWord w = word(o);
    const BraidWord w2 = flatten(parse_table_word(o.word2, w.strands));
    const RewriteOutcome r = separating_form_to_sqp(w, w2);
    return report_certificate(o, r.cert, json{{"input", to_string(separating_word(w, w2))}, {"destabilized", r.destabilized}},
                              r.destabilized ? "destabilized\n" : "");
  }
  if (which == "four-braid") {
    const BraidWord w = word(o);
    if (w.empty()) throw UsageError("four-braid needs a negative band followed by positive bands");
    const BraidWord beta{w.strands, {w.letters.begin() + 1, w.letters.end()}};
    FourBraidOutcome r;
    try {
      r = four_braid_classify(w.letters.front(), beta);
    } catch (const Unclassified& e) {
      emit(o, json{{"word", to_string(w)}, {"kind", "unclassified"}, {"reason", e.what()}},
           std::string("unclassified: ") + e.what() + "\n");
      return kChecksFailed;
    }
    json j{{"kind", to_string(r.kind)}, {"result", to_string(r.result)}};
    std::string text = "outcome: " + to_string(r.kind) + "\n";
    if (r.kind == FourBraidOutcome::Kind::Quasipositive) {
      j["qp"] = to_string(to_grouped(r.qp, r.result.strands));
      text += "qp form: " + j["qp"].get<std::string>() + "\n";
    }
    const CheckResult v = validate(r);
    j["valid"] = v.pass;
    j["certificate"] = json::parse(to_json(r.cert));
    text += "result: " + to_string(r.result) + "\n";
    text += v.pass ? "certificate replays\n" : "outcome invalid: " + v.message + "\n";
    emit(o, j, text);
    return v.pass ? kPass : kChecksFailed;
  }
  if (which == "np3") {
    const BraidWord w = word(o);
    const std::vector<int> e = np3_exponents(w);
    const GroupedWord q = three_braid_np_to_qp(e);
    const bool same = homfly_closed_braid(flatten(q)) == homfly_closed_braid(w);
    const bool qp = is_qp(q);
    emit(o, json{{"exponents", e}, {"qp", to_string(q)}, {"is_qp", qp}, {"fingerprint_matches", same}},
         "qp form: " + to_string(q) + "\n" + (qp ? "" : "output not recognized as quasipositive\n") +
             (same ? "" : "fingerprint differs\n"));
    return qp && same ? kPass : kChecksFailed;
  }
  throw UsageError("unknown rewrite " + which);
}

int cmd_braiding(const Options& o) {
  const PDCode d = diagram(o);
  const BraidingResult r = braid_diagram(d);
  const DiagramCounts c = diagram_counts(d);
  int pos = 0, neg = 0;
  for (const auto& l : r.word.letters) (l.sign > 0 ? pos : neg)++;
  bool ok = r.word.strands == c.circles && pos == c.positive && neg == c.negative && r.non_decreasing_steps == 0;
  json steps = json::array();
  for (const auto& s : r.steps)
    steps.push_back({{"moved", s.moved}, {"target", s.target}, {"face", s.face}, {"incoherent_before", s.incoherent_before},
                     {"incoherent_after", s.incoherent_after}});
  json j{{"word", to_string(r.word)}, {"strands", r.word.strands}, {"seifert_circles", c.circles}, {"steps", steps}};
  std::string text = "word:    " + to_string(r.word) + "\nstrands: " + std::to_string(r.word.strands) +
                     "\nbunching steps: " + std::to_string(r.steps.size()) + "\n";
  if (r.word.strands <= kMaxHeckeStrands && d.crossing_count() <= 14) {
    const bool same = homfly_closed_braid(r.word) == homfly_diagram_oracle(d);
    j["fingerprint_matches"] = same;
    text += same ? "closure matches the diagram\n" : "closure differs from the diagram\n";
    ok = ok && same;
  }
  emit(o, j, text);
  return ok ? kPass : kChecksFailed;
}

int cmd_defect(const Options& o) {
  const BraidWord w = word(o);
  std::optional<int> g3 = o.genus3, g4 = o.genus4;
  if (!o.knot.empty()) {
    const auto records = load_knot_records(o.records);
    auto it = records.find(o.knot);
    if (it == records.end()) throw DataError("no record for " + o.knot);
    if (!g3) g3 = it->second.genus3;
    if (!g4 && it->second.genus4.point()) g4 = it->second.genus4.lo;
  }
  if (!g3 && !g4) throw UsageError("defect needs --genus3, --genus4 or --knot");
  const int sl = self_linking(w);
  json j{{"self_linking", sl}, {"chi_bennequin", euler_char_bennequin(w)}};
  std::string text = "self-linking: " + std::to_string(sl) + "\n";
  if (g3) {
    const int d3 = delta3_of_link(1 - 2 * *g3, sl);
    j["delta3"] = d3;
    text += "delta3: " + std::to_string(d3) + "\n";
  }
  if (g4) {
    const int d4 = delta4_of_link(1 - 2 * *g4, sl);
    j["delta4"] = d4;
    text += "delta4: " + std::to_string(d4) + "\n";
  }
  emit(o, j, text);
  return kPass;
}

int cmd_verify(const Options& o) {
  std::vector<std::string> paths = o.tables;
  if (paths.empty())
    for (const char* f : {"sqp_knots.tsv", "qp_delta1_knots.tsv", "qp_delta_gt1_knots.tsv"})
      paths.push_back(std::string(BRAIDPOS_DATA_DIR) + "/" + f);
  std::vector<TableEntry> entries;
  for (const auto& p : paths) {
    auto e = load_tables(p);
    entries.insert(entries.end(), e.begin(), e.end());
  }
  const auto records = load_knot_records(o.records);
  const Summary s = verify_all(entries, records, o.jobs);
  if (o.json) {
    std::cout << to_json(s, o.timing, 2) << "\n";
  } else {
    for (const auto& r : s.reports) {
      if (!r.failed()) continue;
      std::cout << r.knot << " [" << to_string(r.section) << "]";
      for (const auto& c : r.checks)
        if (c.outcome == Outcome::Fail) std::cout << "  " << c.name << ": " << c.detail << ";";
      std::cout << "\n";
    }
    for (const auto& m : s.missing_records) std::cout << m << ": no record\n";
    std::cout << s.entries << " entries, " << s.reports.size() - static_cast<std::size_t>(s.excluded)
              << " verified, " << s.failed << " failed, " << s.excluded << " excluded, " << s.missing_records.size()
              << " without records\n";
    if (o.timing) std::cout << "wall " << s.wall_seconds << " s, slowest entry " << s.max_entry_seconds << " s\n";
  }
  return s.failed == 0 && s.missing_records.empty() ? kPass : kChecksFailed;
}

int cmd_prove(const Options& o) {
  const BraidWord w = word(o);
  const ProverResult r = move_search_prover(w, o.budget);
  if (!r.cert) {
    emit(o, json{{"found", false}, {"nodes", r.nodes}},
         "no strongly quasipositive word within " + std::to_string(r.nodes) + " nodes\n");
    return kChecksFailed;
  }
  return report_certificate(o, *r.cert, json{{"found", true}, {"nodes", r.nodes}},
                            "found after " + std::to_string(r.nodes) + " nodes\n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Braid positivity toolkit"};
  app.require_subcommand(1);
  Options o;
  auto word_opts = [&](CLI::App* c) {
    c->add_option("--word", o.word, "braid word, e.g. 1,2,(2,1,-2)^2,b(1,3)");
    c->add_option("--strands", o.strands, "strand count (default: from the word)");
  };
  auto json_opt = [&](CLI::App* c) { c->add_flag("--json", o.json, "print JSON"); };

  auto* parse = app.add_subcommand("parse", "parse a word and print its normal shape");
  word_opts(parse);
  json_opt(parse);

  auto* inv = app.add_subcommand("invariants", "invariants of a closed braid or a diagram");
  word_opts(inv);
  inv->add_option("--pd", o.pd, "diagram name in the diagram file, or a PD line");
  inv->add_option("--diagrams", o.diagrams, "diagram file");
  json_opt(inv);

  auto* sqp = app.add_subcommand("check-sqp", "recognize a strongly quasipositive word");
  word_opts(sqp);
  json_opt(sqp);
  auto* qp = app.add_subcommand("check-qp", "recognize a product of conjugates of positive generators");
  word_opts(qp);
  json_opt(qp);

  auto* rw = app.add_subcommand("rewrite", "constructive rewrites with certificates");
  rw->require_subcommand(1);
  std::string which;
  for (const char* name : {"almost-positive", "separating", "four-braid", "np3"}) {
    auto* c = rw->add_subcommand(name);
    word_opts(c);
    json_opt(c);
    if (std::string(name) == "separating") c->add_option("--word2", o.word2, "second block");
    c->callback([&which, name] { which = name; });
  }

  auto* br = app.add_subcommand("braiding", "turn a diagram into a closed braid");
  br->add_option("--pd", o.pd, "diagram name in the diagram file, or a PD line")->required();
  br->add_option("--diagrams", o.diagrams, "diagram file");
  json_opt(br);

  auto* def = app.add_subcommand("defect", "Bennequin defects of a braid");
  word_opts(def);
  def->add_option("--genus3", o.genus3, "Seifert genus");
  def->add_option("--genus4", o.genus4, "smooth 4-genus");
  def->add_option("--knot", o.knot, "take the genera from this record");
  def->add_option("--records", o.records, "knot record CSV");
  json_opt(def);

  auto* ver = app.add_subcommand("verify-tables", "re-certify table rows against knot records");
  ver->add_option("--tables", o.tables, "table file (repeatable; default: the bundled tables)");
  ver->add_option("--records", o.records, "knot record CSV");
  ver->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  ver->add_flag("--timing", o.timing, "include timing");
  json_opt(ver);

  auto* prove = app.add_subcommand("prove", "search for a strongly quasipositive word");
  word_opts(prove);
  prove->add_option("--budget", o.budget, "node budget");
  json_opt(prove);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }

  try {
    if (parse->parsed()) return cmd_parse(o);
    if (inv->parsed()) return cmd_invariants(o);
    if (sqp->parsed()) return cmd_check_sqp(o);
    if (qp->parsed()) return cmd_check_qp(o);
    if (rw->parsed()) return cmd_rewrite(o, which);
    if (br->parsed()) return cmd_braiding(o);
    if (def->parsed()) return cmd_defect(o);
    if (ver->parsed()) return cmd_verify(o);
    if (prove->parsed()) return cmd_prove(o);
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

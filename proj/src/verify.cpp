#include "braidpos/verify.hpp"

#include <chrono>
#include <json.hpp>

#include "braidpos/homfly.hpp"
#include "braidpos/positivity.hpp"

#ifdef BRAIDPOS_HAVE_OPENMP
#include <omp.h>
#endif

namespace braidpos {

namespace {

Check make(const std::string& name, bool ok, const std::string& detail) {
  return {name, ok ? Outcome::Pass : Outcome::Fail, detail};
}

std::string eq(int got, int want) { return std::to_string(got) + (got == want ? " = " : " != ") + std::to_string(want); }

}  // namespace

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Indeterminate: return "indeterminate";
    case Outcome::Skipped: return "skipped";
  }
  return "?";
}

bool Report::failed() const {
  for (const auto& c : checks)
    if (c.outcome == Outcome::Fail) return true;
  return false;
}

const Check* Report::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

Report verify_entry(const TableEntry& e, const KnotRecord& r) {
  if (e.knot != r.name) throw DataError("record " + r.name + " does not belong to " + e.knot);
  const auto t0 = std::chrono::steady_clock::now();
  Report rep;
  rep.knot = e.knot;
  rep.section = e.section;
  rep.status_unknown = e.status_unknown;
  if (e.status_unknown) return rep;

  const BraidWord w = flatten(e.word);
  const int sl = self_linking(w);
  rep.self_linking = sl;
  const bool sqp_section = e.section == Section::SQP;

  if (sqp_section) rep.checks.push_back(make("class", is_sqp(e.word), "strongly quasipositive shape"));
  else rep.checks.push_back(make("class", is_qp(e.word), "quasipositive shape"));

  if (sqp_section) {
    rep.checks.push_back(make("bennequin", sl == 2 * r.genus3 - 1, "sl " + eq(sl, 2 * r.genus3 - 1) + " (2 g3 - 1)"));
  } else {
    if (r.genus4.point())
      rep.checks.push_back(
          make("slice-bennequin", sl == 2 * r.genus4.lo - 1, "sl " + eq(sl, 2 * r.genus4.lo - 1) + " (2 g4 - 1)"));
    else
      rep.checks.push_back({"slice-bennequin", Outcome::Indeterminate, "g4 is not a point value"});
    const int gap = (2 * r.genus3 - 1) - sl;
    std::optional<int> want;
    if (e.section == Section::QPDelta1) want = 1;
    else want = e.delta3_claimed;
    if (gap % 2 != 0)
      rep.checks.push_back({"delta3", Outcome::Fail, "parity: (2 g3 - 1) - sl = " + std::to_string(gap) + " is odd"});
    else if (!want)
      rep.checks.push_back({"delta3", Outcome::Skipped, "no claimed value"});
    else
      rep.checks.push_back(make("delta3", gap / 2 == *want, "delta3 " + eq(gap / 2, *want)));
  }

  if (w.strands > kMaxHeckeStrands) {
    rep.checks.push_back({"fingerprint", Outcome::Skipped, "more strands than the Hecke kernel handles"});
  } else {
    const LaurentPoly2 direct = homfly_closed_braid(w);
    const bool mirrored = e.has("mirror");
    bool ok = (mirrored ? homfly_closed_braid(mirror(w)) : direct) == r.homfly;
    std::string detail = mirrored ? "mirror word matches the record" : "word matches the record";
    if (!ok && r.amphichiral) {
      ok = (mirrored ? direct : homfly_closed_braid(mirror(w))) == r.homfly;
      detail = "amphichiral: other orientation matches";
    }
    if (!ok) {
      const bool other = (mirrored ? direct : homfly_closed_braid(mirror(w))) == r.homfly;
      detail = other ? "matches only the opposite chirality" : "HOMFLYPT differs";
    }
    rep.checks.push_back(make("fingerprint", ok, detail));
  }

  const int bound = mfw_braid_index_lower_bound(r.homfly);
  rep.checks.push_back(make("strands", w.strands >= r.braid_index && w.strands >= bound,
                            std::to_string(w.strands) + " strands, braid index " + std::to_string(r.braid_index) +
                                ", MFW bound " + std::to_string(bound)));
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

Summary verify_all(const std::vector<TableEntry>& entries, const std::map<std::string, KnotRecord>& records,
                   int jobs) {
  const auto t0 = std::chrono::steady_clock::now();
  Summary s;
  s.entries = static_cast<int>(entries.size());
  std::vector<std::optional<Report>> slots(entries.size());
  const long count = static_cast<long>(entries.size());
#ifdef BRAIDPOS_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(jobs < 1 ? 1 : jobs)
#endif
  for (long k = 0; k < count; ++k) {
    const auto& e = entries[static_cast<std::size_t>(k)];
    auto it = records.find(e.knot);
    if (it != records.end()) slots[static_cast<std::size_t>(k)] = verify_entry(e, it->second);
  }
#ifndef BRAIDPOS_HAVE_OPENMP
  (void)jobs;
#endif
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (!slots[k]) {
      s.missing_records.push_back(entries[k].knot);
      continue;
    }
    Report& r = *slots[k];
    if (r.status_unknown) ++s.excluded;
    else if (r.failed()) ++s.failed;
    for (const auto& c : r.checks) ++s.counts[c.name][to_string(c.outcome)];
    s.max_entry_seconds = std::max(s.max_entry_seconds, r.seconds);
    s.reports.push_back(std::move(r));
  }
  s.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return s;
}

std::string to_json(const Summary& s, bool with_timing, int indent) {
  using nlohmann::json;
  json j;
  j["entries"] = s.entries;
  j["verified"] = s.reports.size() - static_cast<std::size_t>(s.excluded);
  j["failed"] = s.failed;
  j["excluded"] = s.excluded;
  j["missing_records"] = s.missing_records;
  j["counts"] = s.counts;
  j["reports"] = json::array();
  for (const auto& r : s.reports) {
    json e{{"knot", r.knot}, {"section", to_string(r.section)}, {"status", r.status_unknown ? "unknown" : (r.failed() ? "fail" : "pass")}};
    if (!r.status_unknown) e["self_linking"] = r.self_linking;
    e["checks"] = json::array();
    for (const auto& c : r.checks)
      e["checks"].push_back({{"name", c.name}, {"outcome", to_string(c.outcome)}, {"detail", c.detail}});
    j["reports"].push_back(e);
  }
  if (with_timing) j["timing"] = {{"wall_seconds", s.wall_seconds}, {"max_entry_seconds", s.max_entry_seconds}};
  return j.dump(indent);
}

std::vector<std::string> nonqp_detector(const std::map<std::string, KnotRecord>& records,
                                        std::vector<std::string>* warnings) {
  std::vector<std::string> out;
  for (const auto& [name, r] : records) {
    if (!r.max_self_linking || !r.mirror_max_self_linking) {
      if (warnings) warnings->push_back(name + ": no maximal self-linking number");
      continue;
    }
    if (!r.genus4.point()) {
      if (warnings) warnings->push_back(name + ": g4 is not a point value");
      continue;
    }
    if (std::max(*r.max_self_linking, *r.mirror_max_self_linking) < 2 * r.genus4.lo - 1) out.push_back(name);
  }
  return out;
}

}  // namespace braidpos

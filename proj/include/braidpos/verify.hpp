#pragma once

#include <map>
#include <string>
#include <vector>

#include "braidpos/knotdata.hpp"

namespace braidpos {

enum class Outcome { Pass, Fail, Indeterminate, Skipped };
std::string to_string(Outcome o);

struct Check {
  std::string name;  // "class", "bennequin", "slice-bennequin", "delta3", "fingerprint", "strands"
  Outcome outcome = Outcome::Skipped;
  std::string detail;
};

struct Report {
  std::string knot;
  Section section = Section::SQP;
  bool status_unknown = false;
  int self_linking = 0;
  std::vector<Check> checks;
  double seconds = 0;

  bool failed() const;
  const Check* find(const std::string& name) const;
};

// Throws DataError when the record belongs to another knot.
Report verify_entry(const TableEntry& e, const KnotRecord& r);

struct Summary {
  std::vector<Report> reports;
  std::vector<std::string> missing_records;
  std::map<std::string, std::map<std::string, int>> counts;  // check -> outcome -> count
  int entries = 0;
  int failed = 0;
  int excluded = 0;
  double wall_seconds = 0;
  double max_entry_seconds = 0;
};

// Entries are verified independently with `jobs` OpenMP threads; the report
// order follows the input order.
Summary verify_all(const std::vector<TableEntry>& entries, const std::map<std::string, KnotRecord>& records,
                   int jobs = 1);
// Deterministic apart from the "timing" object, omitted when with_timing is false.
std::string to_json(const Summary& s, bool with_timing = true, int indent = 2);

// Names whose record has max(SL, SL of the mirror) < 2 g4 - 1 with a point g4.
// Records lacking SL are skipped and named in `warnings`.
std::vector<std::string> nonqp_detector(const std::map<std::string, KnotRecord>& records,
                                        std::vector<std::string>* warnings = nullptr);

}  // namespace braidpos

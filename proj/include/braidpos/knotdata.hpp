#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "braidpos/braid.hpp"
#include "braidpos/laurent.hpp"

namespace braidpos {

class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Section { SQP, QPDelta1, QPDeltaGt1 };
std::string to_string(Section s);

struct TableEntry {
  std::string knot;
  std::string word_text;
  GroupedWord word;  // empty when status_unknown
  Section section = Section::SQP;
  std::set<std::string> comments;
  std::optional<int> delta3_claimed;
  bool status_unknown = false;
  std::size_t line = 0;

  bool has(const std::string& c) const { return comments.count(c) > 0; }
};

// Point values have lo == hi.
struct Genus4 {
  int lo = 0;
  int hi = 0;
  bool point() const { return lo == hi; }
};

struct KnotRecord {
  std::string name;
  int crossing_number = 0;
  int braid_index = 0;
  int genus3 = 0;
  Genus4 genus4;
  std::optional<int> max_self_linking;
  std::optional<int> mirror_max_self_linking;
  bool amphichiral = false;
  std::string braid;
  LaurentPoly2 homfly;
};

// Section header "# section: NAME", then rows knot<TAB>word<TAB>comments[<TAB>delta3].
// Errors carry "path:line".
std::vector<TableEntry> load_tables(const std::string& path);
std::vector<TableEntry> parse_tables(const std::string& text, const std::string& origin = "<text>");

// CSV with header name,crossing_number,braid_index,genus3,genus4,
// max_self_linking,mirror_max_self_linking,amphichiral,braid,homfly.
std::map<std::string, KnotRecord> load_knot_records(const std::string& path);
std::map<std::string, KnotRecord> parse_knot_records(const std::string& text, const std::string& origin = "<text>");

}  // namespace braidpos

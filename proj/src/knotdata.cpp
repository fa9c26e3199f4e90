#include "braidpos/knotdata.hpp"

#include <fstream>
#include <sstream>

#include "braidpos/homfly.hpp"

namespace braidpos {

namespace {

const std::set<std::string> kComments = {"mirror",      "flype",         "almost-positive", "separating",
                                         "sqp-unknown", "qp-known",      "positive-braid",  "status-unknown"};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

int to_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw DataError(what + ": not an integer: '" + s + "'");
  }
  if (used != s.size()) throw DataError(what + ": not an integer: '" + s + "'");
  return v;
}

// Splits one CSV line, honoring double quotes.
std::vector<std::string> csv_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t k = 0; k < line.size(); ++k) {
    const char c = line[k];
    if (quoted) {
      if (c == '"' && k + 1 < line.size() && line[k + 1] == '"') {
        cur += '"';
        ++k;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (quoted) throw DataError("unterminated quote");
  out.push_back(cur);
  return out;
}

Genus4 parse_genus4(const std::string& s) {
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') throw DataError("genus4: bad interval '" + s + "'");
    const auto parts = split(s.substr(1, s.size() - 2), ',');
    if (parts.size() != 2) throw DataError("genus4: bad interval '" + s + "'");
    Genus4 g{to_int(trim(parts[0]), "genus4"), to_int(trim(parts[1]), "genus4")};
    if (g.lo > g.hi) throw DataError("genus4: empty interval '" + s + "'");
    return g;
  }
  const int v = to_int(s, "genus4");
  return {v, v};
}

}  // namespace

std::string to_string(Section s) {
  switch (s) {
    case Section::SQP: return "SQP";
    case Section::QPDelta1: return "QP_DELTA1";
    case Section::QPDeltaGt1: return "QP_DELTA_GT1";
  }
  return "?";
}

std::vector<TableEntry> parse_tables(const std::string& text, const std::string& origin) {
  std::vector<TableEntry> out;
  std::optional<Section> section;
  std::size_t lineno = 0;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string where = origin + ":" + std::to_string(lineno) + ": ";
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    if (line[0] == '#') {
      const std::string body = trim(line.substr(1));
      if (body.rfind("section:", 0) == 0) {
        const std::string name = trim(body.substr(8));
        if (name == "SQP") section = Section::SQP;
        else if (name == "QP_DELTA1") section = Section::QPDelta1;
        else if (name == "QP_DELTA_GT1") section = Section::QPDeltaGt1;
        else throw DataError(where + "unknown section '" + name + "'");
      }
      continue;
    }
    if (!section) throw DataError(where + "row before any section header");
    const auto cols = split(line, '\t');
    const std::size_t want = *section == Section::QPDeltaGt1 ? 4 : 3;
    if (cols.size() != want && !(cols.size() == 2 && want == 3))
      throw DataError(where + "expected " + std::to_string(want) + " tab-separated columns, got " +
                      std::to_string(cols.size()));
    TableEntry e;
    e.line = lineno;
    e.section = *section;
    e.knot = trim(cols[0]);
    if (e.knot.empty()) throw DataError(where + "empty knot name");
    e.word_text = trim(cols[1]);
    if (cols.size() > 2)
      for (const auto& c : split(cols[2], ',')) {
        const std::string t = trim(c);
        if (t.empty()) continue;
        if (!kComments.count(t)) throw DataError(where + "unknown comment '" + t + "'");
        e.comments.insert(t);
      }
    e.status_unknown = e.has("status-unknown");
    if (want == 4) {
      const std::string d = trim(cols[3]);
      if (!d.empty()) {
        try {
          e.delta3_claimed = to_int(d, "delta3");
        } catch (const DataError& err) {
          throw DataError(where + err.what());
        }
      }
    }
    if (e.status_unknown) {
      if (e.word_text != "-") throw DataError(where + "status-unknown rows carry word '-'");
    } else {
      try {
        e.word = parse_table_word(e.word_text);
      } catch (const std::exception& err) {
        throw DataError(where + "word: " + err.what());
      }
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<TableEntry> load_tables(const std::string& path) { return parse_tables(read_file(path), path); }

std::map<std::string, KnotRecord> parse_knot_records(const std::string& text, const std::string& origin) {
  static const std::vector<std::string> kColumns = {"name",
                                                    "crossing_number",
                                                    "braid_index",
                                                    "genus3",
                                                    "genus4",
                                                    "max_self_linking",
                                                    "mirror_max_self_linking",
                                                    "amphichiral",
                                                    "braid",
                                                    "homfly"};
  std::map<std::string, KnotRecord> out;
  std::map<std::string, std::size_t> col;
  std::size_t lineno = 0;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string where = origin + ":" + std::to_string(lineno) + ": ";
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty() || line[0] == '#') continue;
    std::vector<std::string> f;
    try {
      f = csv_fields(line);
    } catch (const DataError& e) {
      throw DataError(where + e.what());
    }
    if (col.empty()) {
      for (std::size_t k = 0; k < f.size(); ++k) col[trim(f[k])] = k;
      for (const auto& c : kColumns)
        if (!col.count(c)) throw DataError(where + "missing column '" + c + "'");
      continue;
    }
    if (f.size() != col.size())
      throw DataError(where + "expected " + std::to_string(col.size()) + " fields, got " + std::to_string(f.size()));
    auto get = [&](const std::string& c) { return trim(f[col.at(c)]); };
    KnotRecord r;
    std::string column;
    try {
      column = "name";
      r.name = get("name");
      column = "crossing_number";
      r.crossing_number = to_int(get(column), column);
      column = "braid_index";
      r.braid_index = to_int(get(column), column);
      column = "genus3";
      r.genus3 = to_int(get(column), column);
      column = "genus4";
      r.genus4 = parse_genus4(get(column));
      column = "max_self_linking";
      if (!get(column).empty()) r.max_self_linking = to_int(get(column), column);
      column = "mirror_max_self_linking";
      if (!get(column).empty()) r.mirror_max_self_linking = to_int(get(column), column);
      column = "amphichiral";
      r.amphichiral = get(column) == "Y";
      column = "braid";
      r.braid = get(column);
      column = "homfly";
      r.homfly = parse_homfly(get(column));
    } catch (const std::exception& e) {
      throw DataError(where + "column " + column + ": " + e.what());
    }
    if (r.name.empty()) throw DataError(where + "empty name");
    if (r.genus4.hi > r.genus3) throw DataError(where + r.name + ": genus4 exceeds genus3");
    if (r.braid_index < mfw_braid_index_lower_bound(r.homfly))
      throw DataError(where + r.name + ": braid index below the MFW bound");
    if (out.count(r.name)) throw DataError(where + "duplicate record " + r.name);
    out.emplace(r.name, std::move(r));
  }
  if (col.empty() && !out.empty()) throw DataError(origin + ": no header");
  return out;
}

std::map<std::string, KnotRecord> load_knot_records(const std::string& path) {
  return parse_knot_records(read_file(path), path);
}

}  // namespace braidpos

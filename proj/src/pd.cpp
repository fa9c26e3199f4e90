#include "braidpos/pd.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <regex>
#include <stdexcept>

namespace braidpos {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

struct Port {
  int crossing;
  int port;
};

// For each arc id, its outgoing and incoming port.
std::map<int, std::pair<Port, Port>> arc_ends(const PDCode& d) {
  std::map<int, std::pair<Port, Port>> ends;
  std::map<int, int> seen_out, seen_in;
  for (int x = 0; x < d.crossing_count(); ++x) {
    const auto& c = d.crossings[x];
    for (int p = 0; p < 4; ++p) {
      int a = c.arcs[p];
      if (c.is_incoming(p)) {
        if (seen_in[a]++) throw std::invalid_argument("arc " + std::to_string(a) + " enters twice");
        ends[a].second = {x, p};
      } else {
        if (seen_out[a]++) throw std::invalid_argument("arc " + std::to_string(a) + " leaves twice");
        ends[a].first = {x, p};
      }
    }
  }
  for (const auto& [a, n] : seen_out)
    if (!seen_in.count(a)) throw std::invalid_argument("arc " + std::to_string(a) + " never enters");
  for (const auto& [a, n] : seen_in)
    if (!seen_out.count(a)) throw std::invalid_argument("arc " + std::to_string(a) + " never leaves");
  return ends;
}

// Darts are (crossing, port); twin follows the arc, rotation is port + 1.
// The face of dart (x, p) is the one in the corner between ports p-1 and p.
std::vector<int> face_labels(const PDCode& d, const std::map<int, std::pair<Port, Port>>& ends) {
  const int n = d.crossing_count();
  auto twin = [&](int dart) {
    int x = dart / 4, p = dart % 4;
    int a = d.crossings[x].arcs[p];
    const auto& e = ends.at(a);
    Port o = (e.first.crossing == x && e.first.port == p) ? e.second : e.first;
    return o.crossing * 4 + o.port;
  };
  std::vector<int> face(4 * n, -1);
  int faces = 0;
  for (int s = 0; s < 4 * n; ++s) {
    if (face[s] >= 0) continue;
    for (int dd = s; face[dd] < 0;) {
      face[dd] = faces;
      int t = twin(dd);
      dd = (t / 4) * 4 + (t % 4 + 1) % 4;
    }
    ++faces;
  }
  return face;
}

}  // namespace

std::vector<int> pd_faces(const PDCode& d) { return face_labels(d, arc_ends(d)); }

PDCode parse_pd_line(const std::string& raw) {
  std::string line = trim(raw);
  PDCode d;
  std::size_t colon = line.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("PD line lacks 'name:'");
  d.name = trim(line.substr(0, colon));
  std::string rest = line.substr(colon + 1);
  std::size_t pd = rest.find("PD[");
  if (pd == std::string::npos) throw std::invalid_argument("PD line lacks PD[...]");
  std::size_t pd_end = rest.find(']', pd);
  if (pd_end == std::string::npos) throw std::invalid_argument("unterminated PD[...]");
  std::string body = rest.substr(pd + 3, pd_end - pd - 3);
  static const std::regex xre(R"(X\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\))");
  for (auto it = std::sregex_iterator(body.begin(), body.end(), xre); it != std::sregex_iterator(); ++it) {
    PDCrossing c;
    for (int k = 0; k < 4; ++k) c.arcs[k] = std::stoi((*it)[k + 1].str());
    d.crossings.push_back(c);
  }
  std::string tail = rest.substr(pd_end + 1);
  std::size_t o = tail.find("O[");
  if (o == std::string::npos) throw std::invalid_argument("PD line lacks orientation block O[...]");
  std::size_t o_end = tail.find(']', o);
  if (o_end == std::string::npos) throw std::invalid_argument("unterminated O[...]");
  std::string ob = tail.substr(o + 2, o_end - o - 2);
  std::vector<std::string> toks;
  std::size_t start = 0;
  while (start <= ob.size()) {
    std::size_t comma = ob.find(',', start);
    std::string t = trim(ob.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    if (!t.empty()) toks.push_back(t);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (toks.size() != d.crossings.size())
    throw std::invalid_argument("orientation block has " + std::to_string(toks.size()) + " entries for " +
                                std::to_string(d.crossings.size()) + " crossings");
  for (std::size_t k = 0; k < toks.size(); ++k) {
    if (toks[k] == "db") d.crossings[k].sign = 1;
    else if (toks[k] == "bd") d.crossings[k].sign = -1;
    else throw std::invalid_argument("orientation token must be db or bd: " + toks[k]);
  }
  std::smatch m;
  static const std::regex lre(R"(loops\s*=\s*(\d+))");
  std::string after = tail.substr(o_end + 1);
  if (std::regex_search(after, m, lre)) d.free_loops = std::stoi(m[1].str());
  validate_pd(d);
  return d;
}

std::vector<PDCode> load_pd_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<PDCode> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    try {
      out.push_back(parse_pd_line(t));
    } catch (const std::exception& e) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

const PDCode& find_pd(const std::vector<PDCode>& all, const std::string& name) {
  for (const auto& d : all)
    if (d.name == name) return d;
  throw std::out_of_range("no diagram named " + name);
}

std::string to_string(const PDCode& d) {
  std::string s = d.name + ": PD[";
  for (std::size_t k = 0; k < d.crossings.size(); ++k) {
    const auto& c = d.crossings[k];
    if (k) s += ",";
    s += "X(" + std::to_string(c.arcs[0]) + "," + std::to_string(c.arcs[1]) + "," +
         std::to_string(c.arcs[2]) + "," + std::to_string(c.arcs[3]) + ")";
  }
  s += "] O[";
  for (std::size_t k = 0; k < d.crossings.size(); ++k) {
    if (k) s += ",";
    s += d.crossings[k].sign > 0 ? "db" : "bd";
  }
  s += "]";
  if (d.free_loops) s += " loops=" + std::to_string(d.free_loops);
  return s;
}

void validate_pd(const PDCode& d) {
  for (const auto& c : d.crossings)
    if (c.sign != 1 && c.sign != -1) throw std::invalid_argument("crossing sign must be +-1");
  auto ends = arc_ends(d);
  const int n = d.crossing_count();
  if (n == 0) return;
  std::vector<int> face = face_labels(d, ends);
  const int faces = *std::max_element(face.begin(), face.end()) + 1;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [a, e] : ends) parent[find(e.first.crossing)] = find(e.second.crossing);
  int comps = 0;
  for (int x = 0; x < n; ++x)
    if (find(x) == x) ++comps;
  const int edges = static_cast<int>(ends.size());
  if (n - edges + faces != 2 * comps) throw std::invalid_argument("PD rotation system is not planar");
}

int pd_writhe(const PDCode& d) {
  int w = 0;
  for (const auto& c : d.crossings) w += c.sign;
  return w;
}

int pd_components(const PDCode& d) {
  auto ends = arc_ends(d);
  std::map<int, char> seen;
  int comps = d.free_loops;
  for (const auto& [a0, e0] : ends) {
    if (seen[a0]) continue;
    ++comps;
    int a = a0;
    while (!seen[a]) {
      seen[a] = 1;
      Port in = ends.at(a).second;
      const auto& c = d.crossings[in.crossing];
      a = c.arcs[c.through(in.port)];
    }
  }
  return comps;
}

PDCode pd_mirror(const PDCode& d) {
  PDCode m = d;
  m.name = d.name + "*";
  for (auto& c : m.crossings) {
    const auto& a = c.arcs;
    if (c.sign > 0) c.arcs = {a[3], a[0], a[1], a[2]};
    else c.arcs = {a[1], a[2], a[3], a[0]};
    c.sign = -c.sign;
  }
  return m;
}

PDCode pd_from_braid(const BraidWord& input) {
  validate(input);
  BraidWord w = band_to_std(input);
  const int n = w.strands;
  PDCode d;
  std::vector<int> label(n);
  std::iota(label.begin(), label.end(), 0);
  int next = n;
  std::vector<char> used(n, 0);
  for (const auto& l : w.letters) {
    int i = l.i - 1;
    int left_in = label[i], right_in = label[i + 1];
    int nw = next++, ne = next++;
    PDCrossing c;
    if (l.sign > 0) {
      c.arcs = {right_in, ne, nw, left_in};
      c.sign = 1;
    } else {
      c.arcs = {left_in, right_in, ne, nw};
      c.sign = -1;
    }
    d.crossings.push_back(c);
    label[i] = nw;
    label[i + 1] = ne;
    used[i] = used[i + 1] = 1;
  }
  // Closing a strand identifies its final arc with its initial arc.
  std::map<int, int> alias;
  for (int k = 0; k < n; ++k) {
    if (!used[k]) ++d.free_loops;
    else alias[label[k]] = k;
  }
  std::map<int, int> compact;
  for (auto& c : d.crossings) {
    for (auto& a : c.arcs) {
      auto it = alias.find(a);
      if (it != alias.end()) a = it->second;
      auto [pos, fresh] = compact.try_emplace(a, static_cast<int>(compact.size()) + 1);
      a = pos->second;
    }
  }
  return d;
}

}  // namespace braidpos

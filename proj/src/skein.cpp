#include "braidpos/skein.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "braidpos/homfly.hpp"

namespace braidpos {

namespace {

void relabel(PDCode& d, int from, int to) {
  for (auto& c : d.crossings)
    for (auto& a : c.arcs)
      if (a == from) a = to;
}

PDCode switched(const PDCode& d, std::size_t x) {
  PDCode r = d;
  PDCrossing& c = r.crossings[x];
  const auto a = c.arcs;
  if (c.sign > 0) c.arcs = {a[3], a[0], a[1], a[2]};
  else c.arcs = {a[1], a[2], a[3], a[0]};
  c.sign = -c.sign;
  return r;
}

PDCode smoothed(const PDCode& d, std::size_t x) {
  PDCode r = d;
  const PDCrossing c = r.crossings[x];
  r.crossings.erase(r.crossings.begin() + static_cast<long>(x));
  std::array<std::pair<int, int>, 2> pairs =
      c.sign > 0 ? std::array<std::pair<int, int>, 2>{{{0, 1}, {3, 2}}}
                 : std::array<std::pair<int, int>, 2>{{{0, 3}, {1, 2}}};
  std::array<int, 4> arcs = c.arcs;
  for (auto [in, out] : pairs) {
    int a = arcs[in], b = arcs[out];
    if (a == b) {
      ++r.free_loops;
      continue;
    }
    relabel(r, b, a);
    for (auto& t : arcs)
      if (t == b) t = a;
  }
  return r;
}

struct Ends {
  std::map<int, std::pair<int, int>> in;  // arc -> (crossing, port) where it ends
};

Ends ends_of(const PDCode& d) {
  Ends e;
  for (int x = 0; x < d.crossing_count(); ++x)
    for (int p = 0; p < 4; ++p)
      if (d.crossings[x].is_incoming(p)) e.in[d.crossings[x].arcs[p]] = {x, p};
  return e;
}

LaurentPoly2 resolve(const PDCode& d) {
  Ends e = ends_of(d);
  std::set<int> visited_arcs;
  std::vector<char> met(d.crossings.size(), 0);
  int comps = d.free_loops;
  for (const auto& [start, where] : e.in) {
    if (visited_arcs.count(start)) continue;
    ++comps;
    int a = start;
    while (!visited_arcs.count(a)) {
      visited_arcs.insert(a);
      auto [x, p] = e.in.at(a);
      if (!met[x]) {
        met[x] = 1;
        if (p == 0) {
          const int s = d.crossings[x].sign;
          LaurentPoly2 sw = resolve(switched(d, static_cast<std::size_t>(x)));
          LaurentPoly2 sm = resolve(smoothed(d, static_cast<std::size_t>(x)));
          LaurentPoly2 r = sw.shifted(1, 2 * s, 0);
          r.add_shifted(sm, s, s, 1);
          return r;
        }
      }
      a = d.crossings[x].arcs[d.crossings[x].through(p)];
    }
  }
  return unlink_poly(comps);
}

}  // namespace

LaurentPoly2 homfly_diagram_oracle(const PDCode& d, int max_crossings) {
  if (d.crossing_count() > max_crossings)
    throw std::runtime_error("skein oracle budget exceeded: " + std::to_string(d.crossing_count()) +
                             " crossings > " + std::to_string(max_crossings));
  validate_pd(d);
  return resolve(d);
}

}  // namespace braidpos

#include "braidpos/seifert.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace braidpos {

namespace {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

int port_angle(int port) { return (270 + 90 * port) % 360; }

}  // namespace

int SeifertStructure::ccw_next(int dart) const {
  const auto& rot = rotation[darts[dart].origin];
  auto it = std::find(rot.begin(), rot.end(), dart);
  ++it;
  return it == rot.end() ? rot.front() : *it;
}

int SeifertStructure::circle_of_vertex(int v) const {
  for (int d : rotation[v])
    if (darts[d].circle >= 0) return darts[d].circle;
  return -1;
}

std::vector<int> SeifertStructure::side_darts(int v, bool left) const {
  const auto& rot = rotation[v];
  const int k = static_cast<int>(rot.size());
  int out = -1, in = -1;
  for (int i = 0; i < k; ++i) {
    const auto& d = darts[rot[i]];
    if (d.circle < 0) continue;
    if (d.forward) out = i;
    else in = i;
  }
  // Counterclockwise from the outgoing direction sweeps the left side.
  std::vector<int> res;
  int from = left ? out : in, to = left ? in : out;
  for (int i = (from + 1) % k; i != to; i = (i + 1) % k) res.push_back(rot[i]);
  return res;
}

void SeifertStructure::rebuild() {
  const int nd = static_cast<int>(darts.size());
  face_of.assign(nd, -1);
  face_count = 0;
  for (int s = 0; s < nd; ++s) {
    if (face_of[s] >= 0) continue;
    for (int d = s; face_of[d] < 0; d = face_next(d)) face_of[d] = face_count;
    ++face_count;
  }
  UnionFind uf(face_count);
  for (int d = 0; d < nd; ++d)
    if (darts[d].band >= 0) uf.unite(face_of[d], face_of[darts[d].twin]);
  std::map<int, int> rid;
  region_of_face.assign(face_count, 0);
  for (int f = 0; f < face_count; ++f) {
    auto [it, fresh] = rid.try_emplace(uf.find(f), static_cast<int>(rid.size()));
    region_of_face[f] = it->second;
  }
  region_count = static_cast<int>(rid.size());

  left_region.assign(circle_count, -1);
  right_region.assign(circle_count, -1);
  circle_vertices.assign(circle_count, {});
  std::vector<int> first(circle_count, -1);
  std::vector<int> out_of(rotation.size(), -1);
  for (int d = 0; d < nd; ++d) {
    const auto& dd = darts[d];
    if (dd.circle < 0 || !dd.forward) continue;
    out_of[dd.origin] = d;
    if (first[dd.circle] < 0) first[dd.circle] = d;
  }
  for (int c = 0; c < circle_count; ++c) {
    int d0 = first[c];
    if (d0 < 0) throw std::logic_error("circle without vertices");
    right_region[c] = region_of_face[face_of[d0]];
    left_region[c] = region_of_face[face_of[darts[d0].twin]];
    if (left_region[c] == right_region[c]) throw std::logic_error("circle does not separate");
    int d = d0;
    do {
      circle_vertices[c].push_back(darts[d].origin);
      d = out_of[darts[darts[d].twin].origin];
    } while (d != d0);
  }
}

SeifertStructure seifert_circles(const PDCode& d) {
  validate_pd(d);
  SeifertStructure s;
  s.free_loops = d.free_loops;
  const int n = d.crossing_count();
  s.rotation.assign(2 * n, {});
  s.band_sign.resize(n);
  struct Corner {
    int in_port, out_port;
  };
  std::vector<Corner> corners(2 * n);
  for (int k = 0; k < n; ++k) {
    const auto& c = d.crossings[k];
    s.band_sign[k] = c.sign;
    if (c.sign > 0) {
      corners[2 * k] = {0, 1};
      corners[2 * k + 1] = {3, 2};
    } else {
      corners[2 * k] = {0, 3};
      corners[2 * k + 1] = {1, 2};
    }
  }
  auto vertex_with = [&](int x, int port, bool incoming) {
    for (int v : {2 * x, 2 * x + 1})
      if ((incoming ? corners[v].in_port : corners[v].out_port) == port) return v;
    throw std::logic_error("no smoothing corner for port");
  };
  auto add_pair = [&](int a, int b) {
    int da = static_cast<int>(s.darts.size());
    s.darts.push_back({});
    s.darts.push_back({});
    s.darts[da].origin = a;
    s.darts[da + 1].origin = b;
    s.darts[da].twin = da + 1;
    s.darts[da + 1].twin = da;
    return da;
  };
  std::vector<int> band_dart(2 * n), out_dart(2 * n), in_dart(2 * n);
  for (int k = 0; k < n; ++k) {
    int b = add_pair(2 * k, 2 * k + 1);
    s.darts[b].band = s.darts[b + 1].band = k;
    band_dart[2 * k] = b;
    band_dart[2 * k + 1] = b + 1;
  }
  // Each arc runs from a smoothing corner at its tail to one at its head.
  std::map<int, std::pair<int, int>> arc_vertices;
  for (int x = 0; x < n; ++x) {
    const auto& c = d.crossings[x];
    for (int p = 0; p < 4; ++p) {
      if (c.is_incoming(p)) arc_vertices[c.arcs[p]].second = vertex_with(x, p, true);
      else arc_vertices[c.arcs[p]].first = vertex_with(x, p, false);
    }
  }
  for (const auto& [arc, ends] : arc_vertices) {
    int f = add_pair(ends.first, ends.second);
    s.darts[f].forward = true;
    out_dart[ends.first] = f;
    in_dart[ends.second] = f + 1;
  }
  for (int v = 0; v < 2 * n; ++v) {
    int a = port_angle(corners[v].in_port), b = port_angle(corners[v].out_port);
    if ((a + 90) % 360 == b) s.rotation[v] = {out_dart[v], band_dart[v], in_dart[v]};
    else s.rotation[v] = {in_dart[v], band_dart[v], out_dart[v]};
  }
  // Circles are the orbits of forward darts.
  for (int v = 0; v < 2 * n; ++v) {
    int d0 = out_dart[v];
    if (s.darts[d0].circle >= 0) continue;
    int c = s.circle_count++;
    for (int dd = d0; s.darts[dd].circle < 0; dd = out_dart[s.darts[s.darts[dd].twin].origin]) {
      s.darts[dd].circle = c;
      s.darts[s.darts[dd].twin].circle = c;
    }
  }
  if (n > 0) s.rebuild();
  return s;
}

DiagramCounts diagram_counts(const PDCode& d) {
  SeifertStructure s = seifert_circles(d);
  DiagramCounts c;
  c.circles = s.total_circles();
  for (int sign : s.band_sign) (sign > 0 ? c.positive : c.negative)++;
  return c;
}

int canonical_chi(const PDCode& d) { return diagram_counts(d).circles - d.crossing_count(); }

int diagram_SL(const PDCode& d, bool minimal_seifert_asserted) {
  if (!minimal_seifert_asserted)
    throw std::invalid_argument("diagram_SL needs a diagram with the minimal number of Seifert circles");
  return pd_writhe(d) - diagram_counts(d).circles;
}

namespace {

// Regions reachable from `start` without crossing circle `skip`.
std::vector<char> reach(const SeifertStructure& s, int start, int skip) {
  std::vector<std::vector<std::pair<int, int>>> adj(s.region_count);
  for (int c = 0; c < s.circle_count; ++c) {
    adj[s.left_region[c]].push_back({s.right_region[c], c});
    adj[s.right_region[c]].push_back({s.left_region[c], c});
  }
  std::vector<char> seen(s.region_count, 0);
  std::queue<int> q;
  q.push(start);
  seen[start] = 1;
  while (!q.empty()) {
    int r = q.front();
    q.pop();
    for (auto [t, c] : adj[r])
      if (c != skip && !seen[t]) {
        seen[t] = 1;
        q.push(t);
      }
  }
  return seen;
}

}  // namespace

bool on_left_of(const SeifertStructure& s, int circle, int other) {
  return reach(s, s.left_region[circle], circle)[s.left_region[other]] != 0;
}

bool coherent(const SeifertStructure& s, int a, int b) { return on_left_of(s, a, b) != on_left_of(s, b, a); }

int incoherent_pairs(const SeifertStructure& s) {
  int n = 0;
  for (int a = 0; a < s.circle_count; ++a)
    for (int b = a + 1; b < s.circle_count; ++b)
      if (!coherent(s, a, b)) ++n;
  return n;
}

std::vector<int> far_side(const SeifertStructure& s, int circle, int from) {
  auto seen = reach(s, from, circle);
  std::vector<int> out;
  for (int c = 0; c < s.circle_count; ++c)
    if (c != circle && !seen[s.left_region[c]]) out.push_back(c);
  return out;
}

bool encloses(const SeifertStructure& s, int outer, int inner) {
  std::vector<int> size(s.face_count, 0);
  for (int f : s.face_of) ++size[f];
  int big = static_cast<int>(std::max_element(size.begin(), size.end()) - size.begin());
  int infinity = s.region_of_face[big];
  auto seen = reach(s, infinity, outer);
  return outer != inner && !seen[s.left_region[inner]];
}

namespace {

// Vertices of a band from one attach vertex to the other.
std::vector<int> band_path(const SeifertStructure& s, int band) {
  int start = -1;
  for (int v = 0; v < static_cast<int>(s.rotation.size()) && start < 0; ++v)
    if (s.is_attach(v))
      for (int d : s.rotation[v])
        if (s.darts[d].band == band) start = v;
  if (start < 0) throw std::logic_error("band without attach vertex");
  std::vector<int> path{start};
  int d = -1;
  for (int x : s.rotation[start])
    if (s.darts[x].band == band) d = x;
  while (true) {
    int v = s.darts[s.darts[d].twin].origin;
    path.push_back(v);
    if (s.is_attach(v)) break;
    int back = s.darts[d].twin, next = -1;
    for (int x : s.rotation[v])
      if (s.darts[x].band == band && x != back) next = x;
    d = next;
  }
  return path;
}

}  // namespace

CheckResult quasi_canonical_validate(const SeifertStructure& s) {
  CheckResult r;
  auto fail = [&](const std::string& m) {
    r.pass = false;
    r.message = m;
    return r;
  };
  for (int v = 0; v < static_cast<int>(s.rotation.size()); ++v) {
    int fwd = 0, bwd = 0, c = -1, bands = 0;
    for (int d : s.rotation[v]) {
      const auto& dd = s.darts[d];
      if (dd.circle < 0) {
        ++bands;
        continue;
      }
      if (c >= 0 && dd.circle != c) return fail("(i) vertex " + std::to_string(v) + " lies on two circles");
      c = dd.circle;
      (dd.forward ? fwd : bwd)++;
    }
    if (fwd != 1 || bwd != 1 || (bands != 1 && bands != 2))
      return fail("(i) vertex " + std::to_string(v) + " is not a simple circle point");
  }
  for (int b = 0; b < s.crossings(); ++b) {
    auto path = band_path(s, b);
    int c0 = s.circle_of_vertex(path.front()), c1 = s.circle_of_vertex(path.back());
    std::string tag = "band " + std::to_string(b);
    if (c0 == c1) return fail("(ii) " + tag + " joins a circle to itself");
    if (!coherent(s, c0, c1)) return fail("(ii) " + tag + " joins incoherent circles");
    std::vector<int> crossed;
    for (std::size_t k = 1; k + 1 < path.size(); ++k) crossed.push_back(s.circle_of_vertex(path[k]));
    std::sort(crossed.begin(), crossed.end());
    if (std::adjacent_find(crossed.begin(), crossed.end()) != crossed.end())
      return fail("(iii) " + tag + " meets a circle twice");
    for (int c : crossed) {
      if (c == c0 || c == c1) return fail("(iii) " + tag + " crosses its own end circle");
      if (!coherent(s, c, c0) || !coherent(s, c, c1))
        return fail("(iv) " + tag + " crosses circle " + std::to_string(c) + " incoherent to its ends");
    }
  }
  r.message = "quasi-canonical";
  return r;
}

SeifertGraph seifert_graph(const SeifertStructure& s) {
  SeifertGraph g;
  g.vertices = s.total_circles();
  for (int b = 0; b < s.crossings(); ++b) {
    auto path = band_path(s, b);
    g.edges.push_back({s.circle_of_vertex(path.front()), s.circle_of_vertex(path.back()), s.band_sign[b]});
  }
  return g;
}

namespace {

struct BlockSearch {
  const SeifertGraph& g;
  std::vector<std::vector<std::pair<int, int>>> adj;
  std::vector<int> disc, low, block;
  std::vector<char> cut;
  std::vector<int> stack;
  int timer = 0, blocks = 0;

  explicit BlockSearch(const SeifertGraph& graph)
      : g(graph), adj(graph.vertices), disc(graph.vertices, -1), low(graph.vertices, 0),
        block(graph.edges.size(), -1), cut(graph.vertices, 0) {
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
      adj[g.edges[e].a].push_back({g.edges[e].b, e});
      adj[g.edges[e].b].push_back({g.edges[e].a, e});
    }
    for (int v = 0; v < g.vertices; ++v)
      if (disc[v] < 0) dfs(v, -1);
  }

  void dfs(int v, int via) {
    disc[v] = low[v] = timer++;
    int children = 0;
    for (auto [w, e] : adj[v]) {
      if (e == via) continue;
      if (disc[w] < 0) {
        stack.push_back(e);
        ++children;
        dfs(w, e);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          if (via >= 0 || children > 1) cut[v] = 1;
          int top;
          do {
            top = stack.back();
            stack.pop_back();
            block[top] = blocks;
          } while (top != e);
          ++blocks;
        }
      } else if (disc[w] < disc[v]) {
        stack.push_back(e);
        low[v] = std::min(low[v], disc[w]);
      }
    }
    if (via < 0 && children > 1) cut[v] = 1;
  }
};

}  // namespace

std::vector<int> blocks(const SeifertGraph& g) { return BlockSearch(g).block; }

std::vector<int> cut_vertices(const SeifertGraph& g) {
  BlockSearch b(g);
  std::vector<int> out;
  for (int v = 0; v < g.vertices; ++v)
    if (b.cut[v]) out.push_back(v);
  return out;
}

bool is_homogeneous(const SeifertGraph& g) {
  auto blk = blocks(g);
  std::map<int, int> sign;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    auto [it, fresh] = sign.try_emplace(blk[e], g.edges[e].sign);
    if (it->second != g.edges[e].sign) return false;
  }
  return true;
}

bool is_reduced(const PDCode& d) {
  auto face = pd_faces(d);
  for (int x = 0; x < d.crossing_count(); ++x)
    for (int p = 0; p < 4; ++p)
      for (int q = p + 1; q < 4; ++q)
        if (face[4 * x + p] == face[4 * x + q]) return false;
  return true;
}

bool is_alternating(const PDCode& d) {
  // Along every arc an over-passage must be followed by an under-passage.
  std::map<int, std::pair<bool, bool>> over_at;  // tail over, head over
  for (const auto& c : d.crossings)
    for (int p = 0; p < 4; ++p) {
      bool over = p % 2 == 1;
      if (c.is_incoming(p)) over_at[c.arcs[p]].second = over;
      else over_at[c.arcs[p]].first = over;
    }
  for (const auto& [arc, o] : over_at)
    if (o.first == o.second) return false;
  return true;
}

bool dhl_minimal_seifert_check(const PDCode& d) {
  if (!is_reduced(d)) throw std::invalid_argument("diagram has a nugatory crossing");
  if (!is_alternating(d)) throw std::invalid_argument("diagram is not alternating");
  SeifertGraph g = seifert_graph(seifert_circles(d));
  std::map<std::pair<int, int>, int> mult;
  for (const auto& e : g.edges) ++mult[{std::min(e.a, e.b), std::max(e.a, e.b)}];
  for (const auto& [pair, m] : mult)
    if (m < 2) return false;
  return true;
}

}  // namespace braidpos

#include "braidpos/braiding.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace braidpos {

namespace {

int new_dart(SeifertStructure& s, int origin) {
  SeifertStructure::Dart d;
  d.origin = origin;
  s.darts.push_back(d);
  return static_cast<int>(s.darts.size()) - 1;
}

void link(SeifertStructure& s, int a, int b) {
  s.darts[a].twin = b;
  s.darts[b].twin = a;
}

int circle_dart_on_face(const SeifertStructure& s, int circle, int face) {
  for (int d = 0; d < static_cast<int>(s.darts.size()); ++d)
    if (s.darts[d].circle == circle && s.face_of[d] == face) return s.darts[d].forward ? d : s.darts[d].twin;
  return -1;
}

bool connected(const SeifertStructure& s) {
  const int n = static_cast<int>(s.rotation.size());
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int d : s.rotation[v]) {
      int w = s.darts[s.darts[d].twin].origin;
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

}  // namespace

void disk_bunch(SeifertStructure& s, int moved, int target, int face) {
  const int region = s.region_of_face[face];
  const int e = circle_dart_on_face(s, moved, face);
  const int et = circle_dart_on_face(s, target, face);
  if (e < 0 || et < 0) throw std::invalid_argument("both circles must bound the face");
  const bool left = region == s.left_region[target];
  if (left != (region == s.left_region[moved]))
    throw std::invalid_argument("bunching needs an incoherent pair");

  // Vertices of the target in its direction, starting after the face.
  const int head = s.darts[s.darts[et].twin].origin;
  std::vector<int> seq = s.circle_vertices[target];
  std::rotate(seq.begin(), std::find(seq.begin(), seq.end(), head), seq.end());
  std::vector<int> crossed;
  for (int v : seq)
    for (int d : s.side_darts(v, left)) crossed.push_back(d);
  if (crossed.empty()) throw std::logic_error("target circle has no band on the bunching side");

  const int back = s.darts[e].twin;
  std::vector<int> prev(crossed.size()), next(crossed.size());
  for (std::size_t k = 0; k < crossed.size(); ++k) {
    const int d = crossed[k];
    const int far = s.darts[d].twin;
    const int band = s.darts[d].band;
    const int x = static_cast<int>(s.rotation.size());
    s.rotation.emplace_back();
    int toward = new_dart(s, x), away = new_dart(s, x);
    s.darts[toward].band = s.darts[away].band = band;
    link(s, d, toward);
    link(s, away, far);
    prev[k] = new_dart(s, x);
    next[k] = new_dart(s, x);
    s.darts[prev[k]].circle = s.darts[next[k]].circle = moved;
    s.darts[next[k]].forward = true;
    if (left) s.rotation[x] = {next[k], away, prev[k], toward};
    else s.rotation[x] = {next[k], toward, prev[k], away};
  }
  link(s, e, prev.front());
  for (std::size_t k = 0; k + 1 < crossed.size(); ++k) link(s, next[k], prev[k + 1]);
  link(s, next.back(), back);
  s.rebuild();
}

BraidWord read_braid(const SeifertStructure& s) {
  const int n = s.circle_count;
  BraidWord w;
  w.strands = n;
  if (n == 0) throw std::invalid_argument("no circles");
  // Regions form a path; strand 1 borders the end region on its right.
  std::vector<std::vector<int>> at(s.region_count);
  for (int c = 0; c < n; ++c) {
    at[s.left_region[c]].push_back(c);
    at[s.right_region[c]].push_back(c);
  }
  for (const auto& a : at)
    if (a.size() > 2) throw std::logic_error("circles are not pairwise coherent");
  int first = -1;
  for (int c = 0; c < n && first < 0; ++c)
    if (at[s.right_region[c]].size() == 1) first = c;
  if (first < 0) throw std::logic_error("no end region");
  std::vector<int> order{first}, strand_of(n, -1);
  strand_of[first] = 0;
  for (int k = 1; k < n; ++k) {
    int r = s.left_region[order.back()];
    int c = at[r][0] == order.back() ? at[r][1] : at[r][0];
    if (s.right_region[c] != r) throw std::logic_error("circles are not coherently oriented");
    strand_of[c] = k;
    order.push_back(c);
  }

  // A cut from pole to pole through faces, crossing no band arc.
  std::vector<int> cut(n);
  std::vector<int> out_of(s.rotation.size(), -1);
  for (int d = 0; d < static_cast<int>(s.darts.size()); ++d)
    if (s.darts[d].circle >= 0 && s.darts[d].forward) out_of[s.darts[d].origin] = d;
  cut[0] = out_of[s.circle_vertices[order[0]][0]];
  for (int k = 1; k < n; ++k) {
    int f = s.face_of[s.darts[cut[k - 1]].twin];
    cut[k] = circle_dart_on_face(s, order[k], f);
    if (cut[k] < 0 || s.face_of[cut[k]] != f) throw std::logic_error("no cut through the annulus");
  }

  const int bands = s.crossings();
  std::vector<std::vector<int>> touched(bands);  // strands met, attach or crossing
  std::vector<std::vector<int>> ends(bands);
  std::vector<std::set<int>> after(bands);
  std::vector<int> indeg(bands, 0);
  for (int k = 0; k < n; ++k) {
    int c = order[k];
    int head = s.darts[s.darts[cut[k]].twin].origin;
    std::vector<int> seq = s.circle_vertices[c];
    std::rotate(seq.begin(), std::find(seq.begin(), seq.end(), head), seq.end());
    int last = -1;
    for (int v : seq) {
      int b = -1;
      for (int d : s.rotation[v])
        if (s.darts[d].band >= 0) b = s.darts[d].band;
      touched[b].push_back(k);
      if (s.is_attach(v)) ends[b].push_back(k);
      if (last >= 0 && after[last].insert(b).second) ++indeg[b];
      last = b;
    }
  }
  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  for (int b = 0; b < bands; ++b)
    if (indeg[b] == 0) ready.push(b);
  while (!ready.empty()) {
    int b = ready.top();
    ready.pop();
    auto t = touched[b];
    std::sort(t.begin(), t.end());
    if (ends[b].size() != 2) throw std::logic_error("band without two ends");
    int i = std::min(ends[b][0], ends[b][1]), j = std::max(ends[b][0], ends[b][1]);
    for (int k = 0; k < static_cast<int>(t.size()); ++k)
      if (t[k] != i + k) throw std::logic_error("band does not cross exactly the strands between its ends");
    if (t.back() != j) throw std::logic_error("band does not cross exactly the strands between its ends");
    w.letters.push_back(j == i + 1 ? Letter::gen(i + 1, s.band_sign[b]) : Letter::bandgen(i + 1, j + 1, s.band_sign[b]));
    for (int c : after[b])
      if (--indeg[c] == 0) ready.push(c);
  }
  if (static_cast<int>(w.letters.size()) != bands) throw std::logic_error("band order is cyclic");
  return w;
}

BraidingResult braid_diagram(const PDCode& d) {
  BraidingResult res;
  if (d.crossing_count() == 0) {
    if (d.free_loops < 1) throw std::invalid_argument("empty diagram");
    // Crossingless loops close up the trivial braid.
    res.word.strands = d.free_loops;
    return res;
  }
  if (d.free_loops > 0) throw std::invalid_argument("diagram is disconnected");
  SeifertStructure s = seifert_circles(d);
  if (!connected(s)) throw std::invalid_argument("diagram is disconnected");

  int current = incoherent_pairs(s);
  const int cap = 4 * s.circle_count * s.circle_count + 8;
  while (current > 0) {
    if (static_cast<int>(res.steps.size()) >= cap) throw std::runtime_error("bunching did not terminate");
    const int n = s.circle_count;
    std::vector<std::vector<char>> coh(n, std::vector<char>(n, 1));
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) coh[a][b] = coh[b][a] = coherent(s, a, b);
    std::vector<std::set<int>> on_face(s.face_count);
    for (int x = 0; x < static_cast<int>(s.darts.size()); ++x)
      if (s.darts[x].circle >= 0) on_face[s.face_of[x]].insert(s.darts[x].circle);
    BunchingStep best;
    best.incoherent_after = -1;
    for (int f = 0; f < s.face_count; ++f) {
      for (int a : on_face[f])
        for (int b : on_face[f]) {
          if (a == b || coh[a][b]) continue;
          // Moving a past b flips its coherence with b and everything beyond b.
          auto beyond = far_side(s, b, s.region_of_face[f]);
          beyond.push_back(b);
          int after = current;
          for (int c : beyond) after += coh[a][c] ? 1 : -1;
          bool better = best.incoherent_after < 0 || after < best.incoherent_after ||
                        (after == best.incoherent_after && std::tie(a, b, f) < std::tie(best.moved, best.target, best.face));
          if (better) best = {a, b, f, current, after};
        }
    }
    if (best.incoherent_after < 0) throw std::runtime_error("no incoherent pair shares a face");
    if (best.incoherent_after >= current) ++res.non_decreasing_steps;
    disk_bunch(s, best.moved, best.target, best.face);
    int actual = incoherent_pairs(s);
    if (actual != best.incoherent_after) throw std::logic_error("bunching changed coherence unexpectedly");
    res.steps.push_back(best);
    current = actual;
  }
  res.word = read_braid(s);
  res.surface = std::move(s);
  return res;
}

BraidWord braid_from_diagram(const PDCode& d) { return braid_diagram(d).word; }

}  // namespace braidpos

#include <deque>
#include <unordered_map>

#include "braidpos/positivity.hpp"

namespace braidpos {

namespace {

struct Move {
  enum class Kind { Cycle, Conjugate, Flype, Remove, Merge, Rewrite, Transport };
  Move() = default;
  explicit Move(Kind k) : kind(k) {}
  Kind kind = Kind::Cycle;
  long shift = 0;
  Letter g;
  FlypeSite site;
  std::size_t pos = 0;
  int strand = 0;
  std::vector<Letter> replacement;
};

struct Node {
  BraidWord word;
  long parent = -1;
  Move move{};
};

void add_negative_rewrites(const BraidWord& w, std::vector<std::pair<Move, BraidWord>>& out) {
  // One transport step for each negative letter followed by a positive band.
  for (std::size_t p = 0; p + 1 < w.letters.size(); ++p) {
    const Letter& n = w.letters[p];
    const Letter& l = w.letters[p + 1];
    if (n.sign > 0 || l.sign < 0) continue;
    const int x = n.i, y = n.j, a = l.i, b = l.j;
    std::optional<std::pair<Letter, Letter>> r;
    if (b < x || a > y || (a < x && b > y) || (a > x && b < y)) {
      r = {{l, n}};
    } else if (a == x && b < y) {
      r = {{band(b, y), n}};
    } else if (a == x && b > y) {
      r = {{l, band(y, b, -1)}};
    } else if (a == y) {
      r = {{band(x, b), n}};
    } else if (b == y && a > x) {
      r = {{l, band(x, a, -1)}};
    } else if (b == y && a < x) {
      r = {{band(a, x), n}};
    } else if (b == x) {
      r = {{l, band(a, y, -1)}};
    }
    if (!r) continue;
    Move m{Move::Kind::Rewrite};
    m.pos = p;
    m.replacement = {r->first, r->second};
    BraidWord v = w;
    v.letters[p] = r->first;
    v.letters[p + 1] = r->second;
    out.push_back({m, v});
  }
}

std::vector<std::pair<Move, BraidWord>> successors(const BraidWord& w) {
  std::vector<std::pair<Move, BraidWord>> out;
  if (w.letters.size() > 1)
    for (long s : {1L, -1L}) {
      Move m{Move::Kind::Cycle};
      m.shift = s;
      out.push_back({m, cycle(w, s)});
    }
  for (int k = 1; k < w.strands; ++k)
    for (int s : {1, -1}) {
      Move m{Move::Kind::Conjugate};
      m.g = Letter::gen(k, s);
      BraidWord g{w.strands, {m.g}};
      out.push_back({m, free_reduce(conjugate(w, g))});
    }
  for (bool top : {false, true})
    for (const auto& site : find_flypes(w, top)) {
      Move m{Move::Kind::Flype};
      m.site = site;
      out.push_back({m, apply_flype(w, site)});
    }
  for (std::size_t p = 0; p < w.letters.size(); ++p) {
    if (auto s = lone_strand(w, p)) {
      Move m{Move::Kind::Remove};
      m.pos = p;
      m.strand = *s;
      out.push_back({m, remove_strand(w, p, *s)});
    } else if (can_merge(w, p)) {
      Move m{Move::Kind::Merge};
      m.pos = p;
      out.push_back({m, merge_strands(w, p)});
    }
  }
  add_negative_rewrites(w, out);
  return out;
}

void replay_move(CertificateBuilder& b, const Move& m) {
  switch (m.kind) {
    case Move::Kind::Cycle:
      b.cycle(m.shift, "cyclic permutation");
      break;
    case Move::Kind::Conjugate: {
      BraidWord g{b.word().strands, {m.g}};
      b.conjugate(g, free_reduce(conjugate(b.word(), g)), "conjugate by a generator and cancel");
      break;
    }
    case Move::Kind::Flype:
      b.flype(m.site, "flype");
      break;
    case Move::Kind::Remove:
      b.remove_strand(m.pos, m.strand, "destabilize");
      break;
    case Move::Kind::Merge:
      b.merge_strands(m.pos, "destabilize");
      break;
    case Move::Kind::Rewrite:
      b.rewrite(m.pos, 2, m.replacement, "band relation");
      break;
    case Move::Kind::Transport:
      break;
  }
}

}  // namespace

ProverResult move_search_prover(const BraidWord& input, std::size_t budget) {
  validate(input);
  ProverResult res;
  const std::size_t max_len = input.letters.size() + 8;
  std::vector<Node> nodes;
  std::unordered_map<std::string, std::size_t> seen;
  std::deque<std::size_t> queue;
  auto key = [](const BraidWord& w) { return std::to_string(w.strands) + ":" + to_string(canonical(w)); };

  auto finish = [&](std::size_t at, std::optional<Certificate> tail) {
    std::vector<const Move*> path;
    for (long k = static_cast<long>(at); nodes[static_cast<std::size_t>(k)].parent >= 0;
         k = nodes[static_cast<std::size_t>(k)].parent)
      path.push_back(&nodes[static_cast<std::size_t>(k)].move);
    CertificateBuilder b(input);
    for (auto it = path.rbegin(); it != path.rend(); ++it) replay_move(b, **it);
    if (tail) b.append(*tail);
    Certificate c = b.take();
    if (validate(c).pass && is_sqp_word(c.output)) res.cert = std::move(c);
  };

  nodes.push_back({input, -1, {}});
  seen.emplace(key(input), 0);
  queue.push_back(0);
  while (!queue.empty() && !res.cert) {
    const std::size_t at = queue.front();
    queue.pop_front();
    ++res.nodes;
    const BraidWord w = nodes[at].word;
    const int negs = negative_band_count(w);
    if (negs == 0) {
      finish(at, std::nullopt);
      break;
    }
    if (negs == 1) {
      if (auto t = transport_negative_band(w)) {
        finish(at, t);
        if (res.cert) break;
      }
    }
    if (res.nodes >= budget) break;
    for (auto& [m, v] : successors(w)) {
      if (v.letters.size() > max_len) continue;
      auto [it, fresh] = seen.emplace(key(v), nodes.size());
      if (!fresh) continue;
      nodes.push_back({std::move(v), static_cast<long>(at), std::move(m)});
      queue.push_back(nodes.size() - 1);
    }
  }
  return res;
}

}  // namespace braidpos

#include <set>
#include <stdexcept>

#include "braidpos/positivity.hpp"

namespace braidpos {

namespace {

using Terms = std::vector<QPTerm>;
using Kind = FourBraidOutcome::Kind;

constexpr int kStrands = 4;
constexpr int kIterationCap = 400;

Letter B(int i, int j, int s = 1) { return band(i, j, s); }

bool is(const Letter& l, int i, int j) { return l.i == i && l.j == j && l.sign > 0; }

BraidWord word_of(std::vector<Letter> ls) {
  BraidWord w;
  w.strands = kStrands;
  w.letters = std::move(ls);
  return w;
}

Terms plain(const BraidWord& w, std::size_t from, std::size_t to) {
  Terms t;
  for (std::size_t k = from; k < to && k < w.letters.size(); ++k) t.push_back({word_of({}), w.letters[k]});
  return t;
}

Terms one(const Letter& l) { return {{word_of({}), l}}; }

Terms repeat(const Letter& l, int times) {
  Terms t;
  for (int k = 0; k < times; ++k) t.push_back({word_of({}), l});
  return t;
}

// g * (terms) * g^-1
Terms conj(std::vector<Letter> g, const Terms& in) {
  Terms out;
  for (const auto& t : in) {
    QPTerm q = t;
    std::vector<Letter> c = g;
    c.insert(c.end(), t.conjugator.letters.begin(), t.conjugator.letters.end());
    q.conjugator = word_of(c);
    out.push_back(q);
  }
  return out;
}

Terms operator+(Terms a, const Terms& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Earliest positions (from `from` on) matching the pairs in order.
std::optional<std::vector<std::size_t>> find_seq(const BraidWord& w, std::size_t from,
                                                 const std::vector<std::pair<int, int>>& pairs) {
  std::vector<std::size_t> pos;
  std::size_t k = from;
  for (const auto& [i, j] : pairs) {
    while (k < w.letters.size() && !is(w.letters[k], i, j)) ++k;
    if (k >= w.letters.size()) return std::nullopt;
    pos.push_back(k++);
  }
  return pos;
}

std::optional<std::size_t> find_first(const BraidWord& w, std::size_t from, std::size_t to, int i, int j) {
  for (std::size_t k = from; k < to && k < w.letters.size(); ++k)
    if (is(w.letters[k], i, j)) return k;
  return std::nullopt;
}

struct Block {
  bool s = false;
  std::size_t begin = 0, end = 0;
  std::size_t size() const { return end - begin; }
};

// Maximal runs of positions [1, len) by membership in the S alphabet.
std::vector<Block> blocks(const BraidWord& w, const std::set<std::pair<int, int>>& s_alphabet) {
  std::vector<Block> out;
  for (std::size_t k = 1; k < w.letters.size(); ++k) {
    bool s = s_alphabet.count({w.letters[k].i, w.letters[k].j}) > 0;
    if (out.empty() || out.back().s != s) out.push_back({s, k, k + 1});
    else out.back().end = k + 1;
  }
  return out;
}

// Conjugation by (sigma_3 sigma_2 sigma_1)^-k renumbers strand s as s - k
// mod 4 and maps band generators to band generators.
void rotate(CertificateBuilder& b, int k, const std::string& note) {
  BraidWord rot = b.word();
  auto down = [&](int s) { return ((s - 1 - k) % kStrands + kStrands) % kStrands + 1; };
  for (auto& l : rot.letters) {
    int i = down(l.i), j = down(l.j);
    if (i > j) std::swap(i, j);
    l = B(i, j, l.sign);
  }
  std::vector<int> g;
  for (int t = 0; t < k; ++t) g.insert(g.end(), {-1, -2, -3});
  b.conjugate(make_word(kStrands, g), rot, note);
}

FourBraidOutcome finish_qp(CertificateBuilder& b, const Terms& terms, const std::string& note) {
  FourBraidOutcome o;
  o.kind = Kind::Quasipositive;
  o.qp = terms;
  b.rewrite_all(expand(terms, kStrands).letters, note);
  o.result = b.word();
  o.cert = b.take();
  return o;
}

FourBraidOutcome finish_destab(CertificateBuilder& b, std::size_t pos, int strand, Kind kind,
                               const std::string& note) {
  FourBraidOutcome o;
  o.kind = kind;
  b.remove_strand(pos, strand, note);
  o.result = b.word();
  o.cert = b.take();
  return o;
}

std::size_t negative_position(const BraidWord& w) {
  for (std::size_t k = 0; k < w.letters.size(); ++k)
    if (w.letters[k].sign < 0) return k;
  throw std::logic_error("no negative band");
}

// Moves a trailing sigma_{3,4} to the front, where it commutes with the
// negative band and joins R_1.
void trailing_34_to_front(CertificateBuilder& b, const Letter& neg) {
  b.cycle(-1, "bring the trailing sigma_{3,4} to the front");
  b.rewrite(0, 2, {neg, B(3, 4)}, "sigma_{3,4} commutes with the negative band");
}

FourBraidOutcome case1(CertificateBuilder& b) {
  const Letter neg = B(1, 2, -1);
  const std::set<std::pair<int, int>> s_alpha{{1, 3}, {1, 4}};
  std::set<std::string> rotated;
  for (int iter = 0; iter < kIterationCap; ++iter) {
    const BraidWord w = b.word();
    const std::size_t len = w.letters.size();
    if (!same_letter(w.letters.at(0), neg)) throw std::logic_error("case 1 expects sigma_{1,2}^-1 in front");

    if (auto p = find_first(w, 1, len, 1, 2))
      return finish_qp(b, conj({neg}, plain(w, 1, *p)) + plain(w, *p + 1, len), "beta contains sigma_{1,2}");

    auto bl = blocks(w, s_alpha);
    int s_count = 0;
    for (const auto& x : bl) s_count += x.s;
    if (s_count == 0)
      return finish_destab(b, 0, 1, Kind::NegativelyDestabilizable, "strand 1 meets only the negative band");

    if (auto p = find_seq(w, 1, {{1, 3}, {2, 3}}))
      return finish_qp(b,
                       conj({neg}, plain(w, 1, (*p)[0]) + one(B(2, 3))) +
                           conj({B(2, 3, -1)}, plain(w, (*p)[0] + 1, (*p)[1])) + plain(w, (*p)[1] + 1, len),
                       "sigma_{1,3} = sigma_{2,3} sigma_{1,2} sigma_{2,3}^-1 absorbs the negative band");
    if (auto p = find_seq(w, 1, {{1, 4}, {2, 4}}))
      return finish_qp(b,
                       conj({neg}, plain(w, 1, (*p)[0]) + one(B(2, 4))) +
                           conj({B(2, 4, -1)}, plain(w, (*p)[0] + 1, (*p)[1])) + plain(w, (*p)[1] + 1, len),
                       "sigma_{1,4} = sigma_{2,4} sigma_{1,2} sigma_{2,4}^-1 absorbs the negative band");

    if (bl.back().s) {
      const Block s = bl.back();
      b.cycle(-static_cast<long>(s.size()), "bring S_last to the front");
      std::vector<Letter> r{neg};
      for (std::size_t k = s.begin; k < s.end; ++k) r.push_back(B(2, w.letters[k].j));
      b.rewrite(0, s.size() + 1, r, "sigma_{1,2} sigma_{1,d} sigma_{1,2}^-1 = sigma_{2,d}");
      continue;
    }

    const Block rn = bl.back();
    const Block slast = bl[bl.size() - 2];
    bool any14 = false;
    for (const auto& x : bl)
      if (x.s)
        for (std::size_t k = x.begin; k < x.end; ++k) any14 |= is(w.letters[k], 1, 4);

    if (any14) {
      // R_n lies in {sigma_{2,3}, sigma_{3,4}} here.
      if (is(w.letters[rn.begin], 2, 3)) {
        std::vector<Letter> r{B(2, 3)};
        for (std::size_t k = slast.begin; k < slast.end; ++k) r.push_back(w.letters[k]);
        b.rewrite(slast.begin, slast.size() + 1, r, "sigma_{2,3} commutes with sigma_{1,4}");
        continue;
      }
      if (auto q = find_first(w, rn.begin, rn.end, 2, 3)) {
        b.rewrite(*q - 1, 2, {B(2, 3), B(2, 4)}, "sigma_{3,4} sigma_{2,3} = sigma_{2,3} sigma_{2,4}");
        continue;
      }
      trailing_34_to_front(b, neg);
      continue;
    }

    // Every S_i is a power of sigma_{1,3}; R_i for i > 1 has no sigma_{2,3}.
    if (!find_first(w, rn.begin, rn.end, 2, 4)) {
      trailing_34_to_front(b, neg);
      continue;
    }
    if (auto p = find_seq(w, 1, {{3, 4}, {1, 3}, {2, 4}})) {
      const auto& q = *p;
      return finish_qp(b,
                       conj({neg}, plain(w, 1, q[0]) + conj({B(3, 4)}, plain(w, q[0] + 1, q[1])) + one(B(1, 3))) +
                           one(B(1, 4)) + conj({B(2, 4, -1)}, plain(w, q[1] + 1, q[2])) + plain(w, q[2] + 1, len),
                       "sigma_{3,4} sigma_{1,3} sigma_{2,4} = sigma_{1,3} sigma_{1,2} sigma_{1,4}");
    }
    if (!bl.front().s) {
      const Block r1 = bl.front();
      bool rewrote = false;
      for (std::size_t k = r1.begin; k + 1 < r1.end && !rewrote; ++k)
        if (is(w.letters[k], 2, 3) && is(w.letters[k + 1], 2, 4)) {
          b.rewrite(k, 2, {B(2, 4), B(3, 4)}, "sigma_{2,3} sigma_{2,4} = sigma_{2,4} sigma_{3,4}");
          rewrote = true;
        }
      if (rewrote) continue;
    }

    if (s_count >= 2) {
      if (auto p = find_seq(w, 1, {{1, 3}, {2, 4}, {3, 4}})) {
        const auto& q = *p;
        return finish_qp(b,
                         conj({neg}, plain(w, 1, q[0]) + one(B(2, 3))) +
                             conj({B(2, 3, -1)}, plain(w, q[0] + 1, q[1]) + one(B(3, 4))) +
                             conj({B(3, 4, -1)}, plain(w, q[1] + 1, q[2])) + plain(w, q[2] + 1, len),
                         "sigma_{1,3} and sigma_{2,4} conjugate the negative band away");
      }
      if (auto p = find_seq(w, 1, {{2, 3}, {2, 4}, {1, 3}, {2, 4}})) {
        const auto& q = *p;
        Terms inner = conj({B(3, 4, -1)}, plain(w, 1, q[0]) + conj({B(2, 3)}, plain(w, q[0] + 1, q[1])));
        Terms mid = conj({neg}, inner + one(B(2, 3)) + plain(w, q[1] + 1, q[2]) + one(B(2, 3)));
        Terms tail = conj({B(2, 3, -1)}, plain(w, q[2] + 1, q[3]) + one(B(3, 4)));
        return finish_qp(b, conj({B(3, 4)}, mid + tail) + plain(w, q[3] + 1, len),
                         "sigma_{2,3} in R_1 with n > 2");
      }
      // R_i = sigma_{2,4}^{r_i}, S_i = sigma_{1,3}^{s_i}.
      const std::size_t r1 = bl.front().s ? 0 : bl.front().size();
      if (r1 == 0) {
        // No sigma_{2,4} precedes the first S block: rotate the strands
        // (conjugation by sigma_3 sigma_2 sigma_1) to reach a standard
        // representative whose R_1 is nonempty.
        if (!rotated.insert(to_string(w)).second)
          throw Unclassified("rotation orbit without a nonempty R_1: " + to_string(w));
        b.rewrite(0, 2, {B(1, 3), B(2, 3, -1)}, "sigma_{1,2}^-1 sigma_{1,3} = sigma_{1,3} sigma_{2,3}^-1");
        b.cycle(1, "move sigma_{1,3} to the end");
        rotate(b, 1, "rotate the strands down by one");
        continue;
      }
      const Block s1 = bl[r1 == 0 ? 0 : 1];
      const Block r2 = bl[r1 == 0 ? 1 : 2];
      const Block s2 = bl[r1 == 0 ? 2 : 3];
      Terms inner = one(B(1, 3)) + repeat(B(1, 2), static_cast<int>(s1.size()) - 1) + one(B(2, 4)) +
                    repeat(B(2, 3), static_cast<int>(r2.size()) - 1) + one(B(1, 3));
      return finish_qp(b,
                       repeat(B(1, 4), static_cast<int>(r1) - 1) + conj({B(1, 4)}, inner) +
                           plain(w, s2.begin + 1, len),
                       "R_i = sigma_{2,4}^{r_i}, S_i = sigma_{1,3}^{s_i}, n > 2");
    }

    // n = 2: K = sigma_{1,2}^-1 R_1 sigma_{1,3}^x R_2.
    bool rewrote = false;
    for (std::size_t k = rn.begin; k + 1 < rn.end && !rewrote; ++k)
      if (is(w.letters[k], 2, 4) && is(w.letters[k + 1], 3, 4)) {
        b.rewrite(k, 2, {B(3, 4), B(2, 3)}, "sigma_{2,4} sigma_{3,4} = sigma_{3,4} sigma_{2,3}");
        rewrote = true;
      }
    if (rewrote) continue;

    const std::size_t r1len = bl.front().s ? 0 : bl.front().size();
    const Block sx = bl[r1len == 0 ? 0 : 1];
    int v = 0, ww = 0, x = static_cast<int>(sx.size()), y = 0, z = 0;
    for (std::size_t k = 1; k < 1 + r1len; ++k) (is(w.letters[k], 2, 4) ? v : ww)++;
    for (std::size_t k = rn.begin; k < rn.end; ++k) (is(w.letters[k], 3, 4) ? y : z)++;
    auto run = [](std::vector<Letter>& out, const Letter& l, int times) { out.insert(out.end(), times, l); };

    b.cycle(1, "move the negative band to the end");
    std::vector<Letter> s1;
    run(s1, B(2, 4), v);
    run(s1, B(2, 3), ww);
    run(s1, B(1, 3), x);
    run(s1, B(3, 4), y + 1);
    run(s1, B(2, 3), z - 1);
    s1.push_back(B(1, 3, -1));
    s1.push_back(B(2, 3));
    s1.push_back(B(3, 4, -1));
    b.rewrite_all(s1, "sigma_{2,4} sigma_{1,2}^-1 = sigma_{1,4}^-1 sigma_{2,4}, then expand sigma_{1,4}^-1");
    b.cycle(-1, "bring sigma_{3,4}^-1 to the front");
    std::vector<Letter> s2;
    run(s2, B(2, 3), v);
    s2.push_back(B(3, 4, -1));
    b.rewrite(0, static_cast<std::size_t>(v) + 1, s2, "sigma_{3,4}^-1 sigma_{2,4}^v = sigma_{2,3}^v sigma_{3,4}^-1");
    FlypeSite site{static_cast<std::size_t>(v), true, -1, y + 1, static_cast<std::size_t>(ww + x), true};
    b.flype(site, "negative flype on strand 4");
    std::vector<Letter> s3;
    run(s3, B(2, 3), v);
    run(s3, B(3, 4), y);
    run(s3, B(2, 4), ww);
    run(s3, B(2, 3), z - 1);
    s3.push_back(B(1, 3, -1));
    run(s3, B(3, 4), x);
    s3.push_back(B(2, 3));
    b.rewrite_all(s3, "after the flype");
    return finish_destab(b, negative_position(b.word()), 1, Kind::FlypeThenDestabilize,
                         "strand 1 meets only the negative band");
  }
  throw std::logic_error("case 1 did not terminate");
}

FourBraidOutcome case2(CertificateBuilder& b) {
  const Letter neg = B(1, 3, -1);
  const std::set<std::pair<int, int>> s_alpha{{1, 2}, {1, 4}};
  for (int iter = 0; iter < kIterationCap; ++iter) {
    const BraidWord w = b.word();
    const std::size_t len = w.letters.size();
    if (!same_letter(w.letters.at(0), neg)) throw std::logic_error("case 2 expects sigma_{1,3}^-1 in front");

    if (auto p = find_first(w, 1, len, 1, 3))
      return finish_qp(b, conj({neg}, plain(w, 1, *p)) + plain(w, *p + 1, len), "beta contains sigma_{1,3}");

    bool only_12_34 = true;
    for (std::size_t k = 1; k < len; ++k) only_12_34 &= is(w.letters[k], 1, 2) || is(w.letters[k], 3, 4);
    if (only_12_34) {
      std::vector<Letter> r;
      int x = 0, y = 0;
      for (std::size_t k = 1; k < len; ++k) (is(w.letters[k], 1, 2) ? x : y)++;
      r.insert(r.end(), x, B(2, 3));
      r.push_back(neg);
      r.insert(r.end(), y, B(3, 4));
      b.rewrite_all(r, "sigma_{1,3}^-1 sigma_{1,2}^x sigma_{3,4}^y = sigma_{2,3}^x sigma_{1,3}^-1 sigma_{3,4}^y");
      return finish_destab(b, static_cast<std::size_t>(x), 1, Kind::NegativelyDestabilizable,
                           "strand 1 meets only the negative band");
    }

    const Letter first = w.letters.at(1);
    if (is(first, 1, 2) || is(first, 3, 4)) {
      Letter moved = is(first, 1, 2) ? B(2, 3) : B(1, 4);
      b.rewrite(0, 2, {moved, neg}, "slide the leading letter left of the negative band");
      b.cycle(1, "and around to the end");
      continue;
    }
    if (is(first, 2, 3)) {
      b.rewrite(0, 2, {B(2, 3), B(1, 2, -1)}, "sigma_{1,3}^-1 sigma_{2,3} = sigma_{2,3} sigma_{1,2}^-1");
      b.cycle(1, "reduce to a negative sigma_{1,2}");
      return case1(b);
    }
    if (is(first, 1, 4)) {
      b.rewrite(0, 2, {B(1, 4), B(3, 4, -1)}, "sigma_{1,3}^-1 sigma_{1,4} = sigma_{1,4} sigma_{3,4}^-1");
      b.cycle(1, "reduce to a negative sigma_{3,4}");
      rotate(b, 2, "rotate the strands by two");
      return case1(b);
    }

    // K = sigma_{1,3}^-1 sigma_{2,4} R_1 S_1 ... R_n.
    auto bl = blocks(w, s_alpha);
    bool any_s = false;
    for (const auto& x : bl) any_s |= x.s;
    if (!any_s)
      return finish_destab(b, 0, 1, Kind::NegativelyDestabilizable, "strand 1 meets only the negative band");

    if (auto p = find_seq(w, 2, {{1, 2}, {3, 4}})) {
      const auto& q = *p;
      Terms inner = conj({B(3, 4), B(2, 3, -1)}, one(B(3, 4)));
      Terms t = one(B(2, 3)) +
                conj({B(3, 4, -1)}, conj({B(1, 2, -1)}, inner + plain(w, 2, q[0])) + plain(w, q[0] + 1, q[1])) +
                plain(w, q[1] + 1, len);
      return finish_qp(b, t, "sigma_{1,2} before sigma_{3,4}");
    }
    if (auto p = find_seq(w, 2, {{1, 4}, {3, 4}})) {
      const auto& q = *p;
      Terms t = conj({neg}, one(B(2, 4)) + plain(w, 2, q[0]) + one(B(3, 4))) +
                conj({B(3, 4, -1)}, plain(w, q[0] + 1, q[1])) + plain(w, q[1] + 1, len);
      return finish_qp(b, t, "sigma_{1,4} = sigma_{3,4} sigma_{1,3} sigma_{3,4}^-1 absorbs the negative band");
    }
    if (auto p = find_seq(w, 2, {{3, 4}, {1, 2}})) {
      const auto& q = *p;
      Terms t = one(B(2, 3)) +
                conj({B(1, 2, -1)}, conj({B(2, 3, -1)}, one(B(3, 4))) + conj({B(3, 4, -1)}, plain(w, 2, q[0])) +
                                        plain(w, q[0] + 1, q[1])) +
                plain(w, q[1] + 1, len);
      return finish_qp(b, t, "sigma_{3,4} in R_1 before a sigma_{1,2}");
    }

    std::optional<std::size_t> last12;
    for (std::size_t k = 2; k < len; ++k)
      if (is(w.letters[k], 1, 2)) last12 = k;
    if (last12) {
      // No sigma_{3,4} anywhere. Split at the last sigma_{1,2}.
      const std::size_t c = *last12;
      if (auto q = find_first(w, 2, c, 2, 3)) {
        Terms t = one(B(2, 3)) +
                  conj({B(1, 2, -1)}, conj({B(2, 3, -1)}, one(B(2, 4)) + plain(w, 2, *q)) + plain(w, *q + 1, c)) +
                  plain(w, c + 1, len);
        return finish_qp(b, t, "sigma_{2,3} before the last sigma_{1,2}");
      }
      auto f = find_first(w, c + 1, len, 2, 3);
      if (!f) return finish_destab(b, 0, 3, Kind::NegativelyDestabilizable, "strand 3 meets only the negative band");
      // beta_1 = beta' sigma_{2,3} beta''.
      if (*f + 1 == len) {
        b.cycle(-1, "bring the final sigma_{2,3} to the front");
        b.rewrite(0, 2, {neg, B(1, 2)}, "sigma_{2,3} sigma_{1,3}^-1 = sigma_{1,3}^-1 sigma_{1,2}");
        return finish_destab(b, 0, 3, Kind::NegativelyDestabilizable, "strand 3 meets only the negative band");
      }
      if (!find_first(w, *f + 1, len, 2, 4)) {
        // beta'' lies in {sigma_{2,3}, sigma_{1,4}}: sort the sigma_{1,4} left.
        std::vector<Letter> r;
        int z = 0;
        for (std::size_t k = *f; k < len; ++k) {
          if (is(w.letters[k], 2, 3)) ++z;
          else r.push_back(w.letters[k]);
        }
        r.insert(r.end(), z, B(2, 3));
        b.rewrite(*f, len - *f, r, "sigma_{1,4} commutes with sigma_{2,3}");
        b.cycle(-z, "bring sigma_{2,3}^z to the front");
        std::vector<Letter> s{neg};
        s.insert(s.end(), z, B(1, 2));
        b.rewrite(0, static_cast<std::size_t>(z) + 1, s, "sigma_{2,3}^z sigma_{1,3}^-1 = sigma_{1,3}^-1 sigma_{1,2}^z");
        return finish_destab(b, 0, 3, Kind::NegativelyDestabilizable, "strand 3 meets only the negative band");
      }
      std::size_t k = *f;
      while (is(w.letters[k + 1], 2, 3)) ++k;
      if (is(w.letters[k + 1], 1, 4)) {
        b.rewrite(k, 2, {B(1, 4), B(2, 3)}, "sigma_{2,3} sigma_{1,4} = sigma_{1,4} sigma_{2,3}");
      } else {
        b.rewrite(k, 2, {B(2, 4), B(3, 4)}, "sigma_{2,3} sigma_{2,4} = sigma_{2,4} sigma_{3,4}");
      }
      continue;
    }

    // S_i = sigma_{1,4}^{s_i}.
    std::size_t s1 = 0;
    for (const auto& x : bl)
      if (x.s) {
        s1 = x.begin;
        break;
      }
    std::size_t s1end = s1;
    while (s1end < len && is(w.letters[s1end], 1, 4)) ++s1end;
    if (s1end < len) {
      const Letter next = w.letters[s1end];
      if (is(next, 2, 4)) {
        std::vector<Letter> r{B(2, 4)};
        r.insert(r.end(), s1end - s1, B(1, 2));
        b.rewrite(s1, s1end - s1 + 1, r, "sigma_{1,4}^s sigma_{2,4} = sigma_{2,4} sigma_{1,2}^s");
      } else if (is(next, 2, 3)) {
        std::vector<Letter> r{B(2, 3)};
        r.insert(r.end(), s1end - s1, B(1, 4));
        b.rewrite(s1, s1end - s1 + 1, r, "sigma_{1,4} commutes with sigma_{2,3}");
      } else {
        throw std::logic_error("unexpected letter after S_1: " + to_string(w));
      }
      continue;
    }
    const std::size_t s = s1end - s1;
    b.cycle(1, "move the negative band to the end");
    std::vector<Letter> r{neg};
    r.insert(r.end(), s, B(3, 4));
    b.rewrite(len - 1 - s, s + 1, r, "sigma_{1,4}^s sigma_{1,3}^-1 = sigma_{1,3}^-1 sigma_{3,4}^s");
    return finish_destab(b, len - 1 - s, 1, Kind::NegativelyDestabilizable, "strand 1 meets only the negative band");
  }
  throw std::logic_error("case 2 did not terminate");
}

}  // namespace

std::string to_string(FourBraidOutcome::Kind k) {
  switch (k) {
    case Kind::Quasipositive: return "quasipositive";
    case Kind::NegativelyDestabilizable: return "negatively-destabilizable";
    case Kind::FlypeThenDestabilize: return "flype-then-destabilize";
  }
  return "?";
}

FourBraidOutcome four_braid_classify(const Letter& negband, const BraidWord& beta) {
  if (beta.strands != kStrands) throw std::invalid_argument("beta must be a 4-braid");
  validate(beta);
  if (!is_sqp_word(beta)) throw std::invalid_argument("beta is not a positive band word");
  const bool c1 = negband.i == 1 && negband.j == 2 && negband.sign < 0;
  const bool c2 = negband.i == 1 && negband.j == 3 && negband.sign < 0;
  if (!c1 && !c2) throw std::invalid_argument("negative band must be sigma_{1,2}^-1 or sigma_{1,3}^-1");
  BraidWord k;
  k.strands = kStrands;
  k.letters.push_back(B(negband.i, negband.j, -1));
  for (const auto& l : beta.letters) k.letters.push_back(B(l.i, l.j, l.sign));
  CertificateBuilder b(k);
  return c1 ? case1(b) : case2(b);
}

CheckResult validate(const FourBraidOutcome& o) {
  CheckResult c = validate(o.cert);
  if (!c.pass) return c;
  if (!(o.cert.output == o.result)) return {false, "result differs from the certificate output"};
  if (o.kind == Kind::Quasipositive) {
    if (!(expand(o.qp, o.result.strands) == o.result)) return {false, "QP terms do not expand to the result"};
    if (!is_qp(to_grouped(o.qp, o.result.strands))) return {false, "QP terms fail the conjugate shape"};
    return {true, "quasipositive"};
  }
  if (o.result.strands > 3 || !is_sqp_word(o.result)) return {false, "destabilized word is not SQP on <= 3 strands"};
  if (o.kind == Kind::FlypeThenDestabilize) {
    bool flype = false;
    for (const auto& s : o.cert.trace) flype |= s.kind == Step::Kind::Flype && s.site.eps < 0;
    if (!flype) return {false, "no negative flype in the trace"};
  }
  return {true, to_string(o.kind)};
}

}  // namespace braidpos

#include <algorithm>

#include "braidpos/positivity.hpp"

namespace braidpos {

namespace {

bool in_x0(const Letter& l, int i) { return l.sign > 0 && l.j <= i - 1; }
bool in_xk(const Letter& l, int k) { return l.sign > 0 && l.i >= k; }

void append(std::vector<Letter>& out, const std::vector<Letter>& in) { out.insert(out.end(), in.begin(), in.end()); }

std::size_t negative_position(const BraidWord& w) {
  for (std::size_t k = 0; k < w.letters.size(); ++k)
    if (w.letters[k].sign < 0) return k;
  throw std::invalid_argument("no negative letter");
}

// sigma_{x,y}^-1 L = L' n' for a positive band L; absent when the bands
// interleave. An empty result means the pair cancels.
struct Transport {
  bool cancel = false;
  Letter left, neg;
};

std::optional<Transport> transport_rule(const Letter& n, const Letter& l) {
  const int x = n.i, y = n.j, a = l.i, b = l.j;
  if (a == x && b == y) return Transport{true, {}, {}};
  Transport t{false, l, n};
  if (b < x || a > y || (a < x && b > y) || (a > x && b < y)) return t;
  if (a == x && b < y) t.left = band(b, y);
  else if (a == x && b > y) t.neg = band(y, b, -1);
  else if (a == y) t.left = band(x, b);
  else if (b == y && a > x) t.neg = band(x, a, -1);
  else if (b == y && a < x) t.left = band(a, x);
  else if (b == x) t.neg = band(a, y, -1);
  else return std::nullopt;
  return t;
}

void apply_lemma(CertificateBuilder& b, const LemmaParts& p, const std::string& note) {
  check_lemma_parts(p);
  if (!(lemma_word(p) == b.word())) throw std::logic_error("lemma word mismatch");
  b.rewrite_all(lemma_output(p).letters, note);
}

// Current word sigma_{1,2}^-1 X_2 sigma_{1,2} X_1 up to cycling.
void lemma_i2(CertificateBuilder& b) {
  b.cycle_to(negative_position(b.word()), "bring sigma_1^-1 to the front");
  const BraidWord w = b.word();
  if (!same_letter(w.letters[0], band(1, 2, -1))) throw std::logic_error("expected sigma_1^-1 in front");
  LemmaParts p;
  p.strands = w.strands;
  p.i = 2;
  p.x0.strands = p.strands;
  p.x.assign(3, BraidWord{p.strands, {}});
  std::size_t k = 1;
  while (k < w.letters.size() && !same_letter(w.letters[k], band(1, 2))) p.x[2].letters.push_back(w.letters[k++]);
  if (k == w.letters.size()) throw std::logic_error("no positive sigma_1");
  p.x[1].letters.assign(w.letters.begin() + static_cast<long>(k) + 1, w.letters.end());
  apply_lemma(b, p, "lemma with i = 2");
}

// Current word Y sigma_{m-1} Z sigma_{m-1}^-1 up to cycling, Z off strand m:
// sigma_{m-1} Z sigma_{m-1}^-1 = Z with sigma_{a,m-1} -> sigma_{a,m}.
void lemma_i2_top(CertificateBuilder& b) {
  const int m = b.word().strands;
  b.cycle(static_cast<long>(negative_position(b.word())) + 1, "bring sigma_{m-1}^-1 to the end");
  const BraidWord w = b.word();
  const std::size_t len = w.letters.size();
  if (!same_letter(w.letters[len - 1], band(m - 1, m, -1))) throw std::logic_error("expected sigma_{m-1}^-1 last");
  std::size_t p = len - 1;
  while (p-- > 0)
    if (same_letter(w.letters[p], band(m - 1, m))) break;
  if (p >= len) throw std::logic_error("no positive sigma_{m-1}");
  std::vector<Letter> r;
  for (std::size_t k = p + 1; k + 1 < len; ++k) {
    const Letter& l = w.letters[k];
    r.push_back(l.j == m - 1 ? band(l.i, m) : l);
  }
  b.rewrite(p, len - p, r, "sigma_{m-1} Z sigma_{m-1}^-1 with Z off strand m");
}

// Parses sigma_{1,I}^-1 X_0 X_I sigma_{I-1,I} X_{I-1} ... sigma_{1,2} X_1,
// reordering commuting X_0 / X_I letters in the prefix.
std::optional<LemmaParts> parse_lemma(CertificateBuilder& b, int I) {
  const BraidWord w = b.word();
  const int n = w.strands;
  LemmaParts p;
  p.strands = n;
  p.i = I;
  p.x0.strands = n;
  p.x.assign(static_cast<std::size_t>(I) + 1, BraidWord{n, {}});
  if (!same_letter(w.letters.at(0), band(1, I, -1))) return std::nullopt;
  std::size_t k = 1;
  bool interleaved = false;
  for (; k < w.letters.size() && !same_letter(w.letters[k], band(I - 1, I)); ++k) {
    const Letter& l = w.letters[k];
    if (in_x0(l, I)) {
      interleaved |= !p.x[static_cast<std::size_t>(I)].letters.empty();
      p.x0.letters.push_back(l);
    } else if (in_xk(l, I)) {
      p.x[static_cast<std::size_t>(I)].letters.push_back(l);
    } else {
      return std::nullopt;
    }
  }
  if (k == w.letters.size()) return std::nullopt;
  const std::size_t prefix = k - 1;
  int level = I - 1;
  for (++k; k < w.letters.size(); ++k) {
    const Letter& l = w.letters[k];
    if (level > 1 && same_letter(l, band(level - 1, level))) {
      --level;
    } else if (in_xk(l, level)) {
      p.x[static_cast<std::size_t>(level)].letters.push_back(l);
    } else {
      return std::nullopt;
    }
  }
  if (level != 1) return std::nullopt;
  if (interleaved) {
    std::vector<Letter> r = p.x0.letters;
    append(r, p.x[static_cast<std::size_t>(I)].letters);
    b.rewrite(1, prefix, r, "bands on disjoint strands commute");
  }
  return p;
}

BraidWord substitute(const BraidWord& w, int a_from, int a_to) {
  BraidWord r = w;
  for (auto& l : r.letters)
    if (l.i == a_from) l = band(a_to, l.j, l.sign);
  return r;
}

}  // namespace

BraidWord lemma_word(const LemmaParts& p) {
  BraidWord w;
  w.strands = p.strands;
  w.letters.push_back(band(1, p.i, -1));
  append(w.letters, p.x0.letters);
  append(w.letters, p.x.at(static_cast<std::size_t>(p.i)).letters);
  for (int k = p.i - 1; k >= 1; --k) {
    w.letters.push_back(band(k, k + 1));
    append(w.letters, p.x.at(static_cast<std::size_t>(k)).letters);
  }
  validate(w);
  return w;
}

BraidWord lemma_output(const LemmaParts& p) {
  BraidWord w;
  w.strands = p.strands;
  for (int k = p.i - 1; k >= 2; --k) w.letters.push_back(band(k, k + 1));
  for (const auto& l : p.x0.letters) w.letters.push_back(band(l.i + 1, l.j + 1, l.sign));
  for (int k = p.i; k >= 1; --k) append(w.letters, substitute(p.x.at(static_cast<std::size_t>(k)), k, 1).letters);
  validate(w);
  return w;
}

void check_lemma_parts(const LemmaParts& p) {
  if (p.i < 2 || p.i > p.strands) throw std::invalid_argument("lemma index i must lie in [2, n]");
  if (p.x.size() != static_cast<std::size_t>(p.i) + 1) throw std::invalid_argument("lemma needs X_1 .. X_i");
  for (const auto& l : p.x0.letters)
    if (!in_x0(l, p.i)) throw std::invalid_argument("X_0 letter " + to_string(l) + " is not in sigma_{a,b}, b <= i-1");
  for (int k = 1; k <= p.i; ++k)
    for (const auto& l : p.x[static_cast<std::size_t>(k)].letters)
      if (!in_xk(l, k) || l.j > p.strands)
        throw std::invalid_argument("X_" + std::to_string(k) + " letter " + to_string(l) + " is not in sigma_{a,b}, a >= " +
                                    std::to_string(k));
}

Certificate lemma_sqp1_rewrite(const LemmaParts& p) {
  check_lemma_parts(p);
  CertificateBuilder b(lemma_word(p));
  b.rewrite_all(lemma_output(p).letters, "slide X_k across the chain and tighten over X_0");
  return b.take();
}

std::optional<Certificate> transport_negative_band(const BraidWord& w, std::size_t step_cap) {
  if (negative_band_count(w) != 1) throw std::invalid_argument("transport needs exactly one negative band");
  CertificateBuilder b(w);
  b.cycle_to(negative_position(w), "bring the negative band to the front");
  if (step_cap == 0) step_cap = 16 * (w.letters.size() + 1) * (w.letters.size() + 1) * static_cast<std::size_t>(w.strands);
  std::size_t p = 0;
  for (std::size_t steps = 0; steps < step_cap; ++steps) {
    const std::size_t len = b.word().letters.size();
    if (len < 2) return std::nullopt;
    if (p + 1 == len) {
      b.cycle(static_cast<long>(p), "wrap the negative band around");
      p = 0;
    }
    const Letter n = b.word().letters[p];
    const Letter l = b.word().letters[p + 1];
    auto t = transport_rule(n, l);
    if (!t) return std::nullopt;
    if (t->cancel) {
      b.rewrite(p, 2, {}, "cancel the negative band");
      return b.take();
    }
    b.rewrite(p, 2, {t->left, t->neg}, "move the negative band right");
    ++p;
  }
  return std::nullopt;
}

RewriteOutcome almost_positive_to_sqp(const BraidWord& input) {
  validate(input);
  if (!is_standard(input)) throw std::invalid_argument("almost positive input must use standard letters");
  if (negative_band_count(input) != 1) throw std::invalid_argument("almost positive input needs exactly one negative letter");
  const BraidWord w = canonical(input);
  CertificateBuilder b(input);
  if (!(w == input)) b.rewrite_all(w.letters, "canonical letters");
  int i = w.letters[negative_position(w)].i;
  const int n = w.strands;

  const bool has_pos = std::any_of(w.letters.begin(), w.letters.end(),
                                   [&](const Letter& l) { return l.sign > 0 && l.i == i && l.j == i + 1; });
  if (!has_pos) {
    b.merge_strands(negative_position(w), "no sigma_i: the closure splits along the negative crossing");
    return {true, b.take()};
  }
  b.cycle_to(negative_position(w), "bring sigma_i^-1 to the front");

  auto fallback = [&](const std::string& why) {
    auto t = transport_negative_band(b.word());
    if (!t) throw std::logic_error("transport failed after " + why);
    if (!t->trace.empty()) t->trace.front().note += " (" + why + ")";
    b.append(*t);
    return RewriteOutcome{false, b.take()};
  };

  if (i == 1) {
    const BraidWord cur = b.word();
    std::size_t p = 1;
    while (!same_letter(cur.letters[p], band(1, 2))) ++p;
    std::vector<Letter> r;
    for (std::size_t k = 1; k < p; ++k) r.push_back(cur.letters[k].i == 2 ? band(1, 3) : cur.letters[k]);
    b.rewrite(0, p + 1, r, "sigma_1^-1 P sigma_1 with P in sigma_2..sigma_{n-1}");
    return {false, b.take()};
  }

  {
    const BraidWord cur = b.word();
    std::size_t p = 1;
    while (std::abs(cur.letters[p].i - i) > 1) ++p;
    if (p > 1) {
      std::vector<Letter> r(cur.letters.begin() + 1, cur.letters.begin() + static_cast<long>(p));
      r.push_back(cur.letters[0]);
      b.rewrite(0, p, r, "sigma_i^-1 commutes with distant letters");
      b.cycle(static_cast<long>(p) - 1);
    }
    const Letter second = b.word().letters[1];
    if (second.i == i) {
      b.rewrite(0, 2, {}, "cancel sigma_i^-1 sigma_i");
      return {false, b.take()};
    }
    if (second.i == i + 1) {
      b.delta_conjugate("conjugate by the half twist");
      i = n - i;
    }
  }

  // sigma_i^-1 sigma_{i-1} X_{i-1} sigma_{i-2} X_{i-2} ... sigma_1 X_1.
  int c = i - 1;
  std::size_t pos = 2;
  std::vector<std::size_t> chain{1};
  const std::size_t cap = 8 * b.word().letters.size() * b.word().letters.size() + 64;
  for (std::size_t iter = 0; pos < b.word().letters.size(); ++iter) {
    if (iter > cap) return fallback("chain did not close");
    const BraidWord cur = b.word();
    const int k = cur.letters[pos].i;
    if (k >= c) {
      ++pos;
    } else if (k == c - 1) {
      --c;
      chain.push_back(pos);
      ++pos;
    } else {
      std::vector<Letter> r{cur.letters[pos]};
      r.insert(r.end(), cur.letters.begin(), cur.letters.begin() + static_cast<long>(pos));
      b.rewrite(0, pos + 1, r, "move a distant letter to the front");
      b.cycle(1, "and around to the end");
    }
  }
  if (c != 1) return fallback("chain did not reach sigma_1");

  {
    const BraidWord cur = b.word();
    std::vector<Letter> r;
    for (int k = i - 1; k >= 1; --k) r.push_back(band(k, k + 1));
    r.push_back(band(1, i + 1, -1));
    for (std::size_t t = 0; t < chain.size(); ++t) {
      const int j = i - 1 - static_cast<int>(t);
      const std::size_t from = chain[t] + 1;
      const std::size_t to = t + 1 < chain.size() ? chain[t + 1] : cur.letters.size();
      for (std::size_t q = from; q < to; ++q)
        r.push_back(cur.letters[q].i == j ? band(1, j + 1) : cur.letters[q]);
    }
    b.rewrite_all(r, "slide X_j past the chain: sigma_j becomes sigma_{1,j+1}");
    b.cycle(i - 1, "conjugate the chain to the end");
  }
  auto parts = parse_lemma(b, i + 1);
  if (!parts) return fallback("word is not in lemma shape");
  apply_lemma(b, *parts, "lemma with i + 1");
  return {false, b.take()};
}

BraidWord separating_word(const BraidWord& w, const BraidWord& w2) {
  const int n = w.strands;
  if (n < 4 || w2.strands != n) throw std::invalid_argument("separating form needs n >= 4 on both words");
  for (const BraidWord* x : {&w, &w2}) {
    validate(*x);
    for (const auto& l : x->letters) {
      const bool ok = l.sign > 0 && ((l.i == 1 && l.j == 2) || (l.i == n - 1 && l.j == n) || (l.i >= 2 && l.j <= n - 1));
      if (!ok) throw std::invalid_argument("letter " + to_string(l) + " not allowed in the separating form");
    }
  }
  BraidWord k = canonical(w);
  k.letters.push_back(band(1, 2, -1));
  append(k.letters, canonical(w2).letters);
  k.letters.push_back(band(n - 1, n, -1));
  return k;
}

RewriteOutcome separating_form_to_sqp(const BraidWord& w, const BraidWord& w2) {
  const BraidWord k = separating_word(w, w2);
  const int n = k.strands;
  auto has = [&](int a) {
    return std::any_of(k.letters.begin(), k.letters.end(),
                       [&](const Letter& l) { return l.sign > 0 && l.i == a && l.j == a + 1; });
  };
  const bool h1 = has(1), hn = has(n - 1);
  CertificateBuilder b(k);
  auto neg_at = [&](int a) {
    const auto& ls = b.word().letters;
    for (std::size_t t = 0; t < ls.size(); ++t)
      if (ls[t].sign < 0 && ls[t].i == a) return t;
    throw std::logic_error("negative letter missing");
  };
  if (!h1 && !hn) {
    b.remove_strand(neg_at(n - 1), n, "strand n meets only sigma_{n-1}^-1");
    b.remove_strand(neg_at(1), 1, "strand 1 meets only sigma_1^-1");
    return {true, b.take()};
  }
  if (h1 && !hn) {
    b.remove_strand(neg_at(n - 1), n, "strand n meets only sigma_{n-1}^-1");
    lemma_i2(b);
    return {true, b.take()};
  }
  if (!h1 && hn) {
    b.remove_strand(neg_at(1), 1, "strand 1 meets only sigma_1^-1");
    lemma_i2_top(b);
    return {true, b.take()};
  }
  {
    const auto& ls = b.word().letters;
    std::size_t f = 0;
    while (!(ls[f].sign > 0 && ls[f].i == n - 1)) ++f;
    b.cycle_to(f, "bring a positive sigma_{n-1} to the front");
  }
  const BraidWord cur = b.word();
  const std::size_t q = neg_at(n - 1);
  std::optional<std::size_t> p;
  for (std::size_t t = 1; t < q; ++t)
    if (cur.letters[t].sign < 0) p = t;
  std::vector<Letter> r;
  for (std::size_t t = 1; t < q; ++t) {
    const Letter& l = cur.letters[t];
    r.push_back(l.sign > 0 && l.j == n - 1 ? band(l.i, n) : l);
  }
  b.rewrite(0, q + 1, r,
            p ? "sigma_{n-1} P sigma_1^-1 Q sigma_{n-1}^-1 = P' sigma_1^-1 Q'" : "sigma_{n-1} X sigma_{n-1}^-1 = X'");
  lemma_i2(b);
  return {false, b.take()};
}

}  // namespace braidpos

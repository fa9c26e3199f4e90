#include "braidpos/positivity.hpp"

#include <cstdlib>

#include "braidpos/garside.hpp"

namespace braidpos {

namespace {

BraidWord factor_word(const Factor& f, int strands) {
  GroupedWord g;
  g.strands = strands;
  Factor one = f;
  one.exponent = 1;
  g.factors.push_back(one);
  BraidWord w = flatten(g);
  validate(w);
  return w;
}

// sigma_{b-1} ... sigma_{a+1}: conjugates sigma_a to sigma_{a,b}.
std::vector<int> band_prefix(const Letter& l) {
  std::vector<int> g;
  for (int k = l.j - 1; k > l.i; --k) g.push_back(k);
  return g;
}

std::vector<int> std_indices(const BraidWord& w) {
  std::vector<int> r;
  for (const auto& l : band_to_std(w).letters) r.push_back(l.sign * l.i);
  return r;
}

}  // namespace

BraidWord expand(const std::vector<QPTerm>& terms, int strands) {
  BraidWord w;
  w.strands = strands;
  for (const auto& t : terms) {
    w.letters.insert(w.letters.end(), t.conjugator.letters.begin(), t.conjugator.letters.end());
    w.letters.push_back(t.letter);
    const BraidWord inv = inverse(t.conjugator);
    w.letters.insert(w.letters.end(), inv.letters.begin(), inv.letters.end());
  }
  validate(w);
  return w;
}

GroupedWord to_grouped(const std::vector<QPTerm>& terms, int strands) {
  GroupedWord gw;
  gw.strands = strands;
  for (std::size_t k = 0; k < terms.size();) {
    std::size_t e = k + 1;
    while (e < terms.size() && terms[e].conjugator == terms[k].conjugator && terms[e].letter == terms[k].letter) ++e;
    std::vector<int> body = std_indices(terms[k].conjugator);
    for (int g : band_prefix(terms[k].letter)) body.push_back(g);
    const std::size_t half = body.size();
    body.push_back(terms[k].letter.sign * terms[k].letter.i);
    for (std::size_t t = half; t-- > 0;) body.push_back(-body[t]);
    if (body.size() == 1) {
      for (std::size_t r = k; r < e; ++r) gw.factors.push_back({Factor::Kind::Plain, body, 1, 0, 0, 1});
    } else {
      gw.factors.push_back({Factor::Kind::Group, body, static_cast<int>(e - k), 0, 0, 1});
    }
    k = e;
  }
  return gw;
}

std::optional<Letter> recognize_band_factor(const Factor& f, int strands) {
  if (f.kind == Factor::Kind::Band) return band(f.band_i, f.band_j, f.band_sign);
  const BraidWord w = factor_word(f, strands);
  const int wr = writhe(w);
  if (wr != 1 && wr != -1) return std::nullopt;
  const Permutation p = permutation_of(w);
  int i = 0, j = 0, moved = 0;
  for (int k = 0; k < p.size(); ++k)
    if (p.img[k] != k) {
      ++moved;
      (i ? j : i) = k + 1;
    }
  if (moved != 2 || p.img[i - 1] != j - 1) return std::nullopt;
  const Letter cand = band(i, j, wr);
  BraidWord c;
  c.strands = strands;
  c.letters.push_back(cand);
  if (!equal(w, c)) return std::nullopt;
  return cand;
}

SQPDecomposition sqp_decomposition(const GroupedWord& gw) {
  SQPDecomposition d;
  for (const auto& f : gw.factors) {
    switch (f.kind) {
      case Factor::Kind::Plain:
        if (f.body.at(0) <= 0) return {};
        d.bands.push_back(band(f.body[0], f.body[0] + 1));
        break;
      case Factor::Kind::Band:
        if (f.band_sign < 0) return {};
        d.bands.push_back(band(f.band_i, f.band_j));
        break;
      case Factor::Kind::Group: {
        if (f.exponent < 1) return {};
        auto b = recognize_band_factor(f, gw.strands);
        if (!b || b->sign < 0) return {};
        for (int e = 0; e < f.exponent; ++e) d.bands.push_back(*b);
        break;
      }
    }
  }
  d.sqp = true;
  return d;
}

bool is_sqp(const GroupedWord& gw) { return sqp_decomposition(gw).sqp; }

bool is_qp_body(const std::vector<int>& body) {
  // q[a][b]: body[a, b) is a product of positive letters and x Q x^-1 nests.
  const std::size_t n = body.size();
  std::vector<std::vector<char>> q(n + 1, std::vector<char>(n + 1, 0));
  for (std::size_t a = 0; a <= n; ++a) q[a][a] = 1;
  for (std::size_t len = 1; len <= n; ++len)
    for (std::size_t a = 0; a + len <= n; ++a) {
      const std::size_t b = a + len;
      bool ok = body[a] > 0 && q[a + 1][b];
      for (std::size_t k = a + 2; !ok && k <= b; ++k)
        ok = body[k - 1] == -body[a] && q[a + 1][k - 1] && q[k][b];
      q[a][b] = ok;
    }
  return q[0][n];
}

bool is_qp(const GroupedWord& gw) {
  for (const auto& f : gw.factors) {
    switch (f.kind) {
      case Factor::Kind::Plain:
        if (f.body.at(0) <= 0) return false;
        break;
      case Factor::Kind::Band:
        if (f.band_sign < 0) return false;
        break;
      case Factor::Kind::Group:
        if (f.exponent < 1 || !is_qp_body(f.body)) return false;
        break;
    }
  }
  return true;
}

bool is_sqp_word(const BraidWord& w) {
  for (const auto& l : w.letters)
    if (l.sign < 0) return false;
  return true;
}

BraidWord np3_word(const std::vector<int>& exponents) {
  if (exponents.size() < 2) throw std::invalid_argument("NP form needs at least two exponents");
  static const Letter cyc[3] = {band(2, 3), band(1, 3), band(1, 2)};
  BraidWord w;
  w.strands = 3;
  w.letters.push_back(band(1, 2, -1));
  for (std::size_t k = 0; k < exponents.size(); ++k) {
    if (exponents[k] < 1) throw std::invalid_argument("NP exponents must be positive");
    w.letters.insert(w.letters.end(), exponents[k], cyc[k % 3]);
  }
  return w;
}

std::vector<int> np3_exponents(const BraidWord& w) {
  if (w.strands != 3) throw std::invalid_argument("NP form lives in B_3");
  const BraidWord c = canonical(w);
  if (c.letters.empty() || !same_letter(c.letters[0], band(1, 2, -1)))
    throw std::invalid_argument("NP form starts with sigma_1^-1");
  static const Letter cyc[3] = {band(2, 3), band(1, 3), band(1, 2)};
  std::vector<int> e;
  std::size_t k = 1;
  while (k < c.letters.size()) {
    const Letter& want = cyc[e.size() % 3];
    int run = 0;
    while (k < c.letters.size() && same_letter(c.letters[k], want)) ++run, ++k;
    if (run == 0) throw std::invalid_argument("letter out of NP order at position " + std::to_string(k));
    e.push_back(run);
  }
  if (e.size() < 2) throw std::invalid_argument("NP form needs at least two exponents");
  return e;
}

GroupedWord three_braid_np_to_qp(const std::vector<int>& exponents) {
  np3_word(exponents);
  if (exponents.size() == 2) throw NotApplicable("k = 2: the braid destabilizes to a 2-braid");
  GroupedWord gw;
  gw.strands = 3;
  gw.factors.push_back({Factor::Kind::Group, {-1, 2, 1}, exponents[0], 0, 0, 1});
  gw.factors.push_back({Factor::Kind::Group, {-1, 2, 1, -2, 1}, exponents[1], 0, 0, 1});
  for (int e = 0; e < exponents[2] - 1; ++e) gw.factors.push_back({Factor::Kind::Plain, {1}, 1, 0, 0, 1});
  for (std::size_t k = 3; k < exponents.size(); ++k) {
    switch (k % 3) {
      case 0:
        for (int e = 0; e < exponents[k]; ++e) gw.factors.push_back({Factor::Kind::Plain, {2}, 1, 0, 0, 1});
        break;
      case 1:
        gw.factors.push_back({Factor::Kind::Group, {2, 1, -2}, exponents[k], 0, 0, 1});
        break;
      default:
        for (int e = 0; e < exponents[k]; ++e) gw.factors.push_back({Factor::Kind::Plain, {1}, 1, 0, 0, 1});
    }
  }
  return gw;
}

BraidWord k_delta_family(int delta) {
  if (delta < 1) throw std::invalid_argument("delta must be at least 1");
  BraidWord w;
  w.strands = 3;
  const int a = delta % 2 == 0 ? 2 : 1;
  w.letters.insert(w.letters.end(), delta, band(1, 2, -1));
  w.letters.insert(w.letters.end(), a, band(2, 3));
  w.letters.push_back(band(1, 3));
  w.letters.insert(w.letters.end(), delta, band(1, 2));
  w.letters.insert(w.letters.end(), 3 - a, band(2, 3));
  return w;
}

int delta3_of_link(int chi, int sl) {
  const int d = -chi - sl;
  if (d % 2 != 0) throw std::invalid_argument("-chi - sl must be even");
  return d / 2;
}

int delta3_of_word(const BraidWord& w, int chi) { return delta3_of_link(chi, self_linking(w)); }

int delta4_of_link(int chi4, int sl) { return delta3_of_link(chi4, sl); }

std::optional<int> non_right_veering_witness(const BraidWord& w) {
  if (!is_standard(w)) throw std::invalid_argument("witness needs standard letters");
  std::vector<int> pos(static_cast<std::size_t>(w.strands) + 1), neg(pos.size());
  for (const auto& l : w.letters) (l.sign > 0 ? pos : neg)[static_cast<std::size_t>(l.i)]++;
  for (std::size_t m = 1; m < pos.size(); ++m)
    if (neg[m] && !pos[m]) return static_cast<int>(m);
  return std::nullopt;
}

}  // namespace braidpos

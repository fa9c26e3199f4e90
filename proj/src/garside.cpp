#include "braidpos/garside.hpp"

#include <stdexcept>

namespace braidpos {

namespace {

Permutation swap_values(const Permutation& p, int i) {
  Permutation r = p;
  for (auto& v : r.img) {
    if (v == i) v = i + 1;
    else if (v == i + 1) v = i;
  }
  return r;
}

Permutation swap_positions(const Permutation& p, int i) {
  Permutation r = p;
  std::swap(r.img[i], r.img[i + 1]);
  return r;
}

Permutation flip(const Permutation& p) {
  const int n = p.size();
  Permutation r;
  r.img.resize(n);
  for (int k = 0; k < n; ++k) r.img[k] = n - 1 - p.img[n - 1 - k];
  return r;
}

Permutation delta_perm(int n) {
  Permutation d;
  d.img.resize(n);
  for (int k = 0; k < n; ++k) d.img[k] = n - 1 - k;
  return d;
}

// Moves left divisors of b into a until the pair is left-weighted.
bool make_left_weighted(PermutationBraid& a, PermutationBraid& b) {
  const int n = a.strands();
  bool changed = false;
  for (bool again = true; again;) {
    again = false;
    for (int i = 0; i + 1 < n; ++i) {
      if (b.starts_with(i) && !a.ends_with(i)) {
        a.perm = swap_values(a.perm, i);
        b.perm = swap_positions(b.perm, i);
        again = changed = true;
      }
    }
  }
  return changed;
}

void normalize(NormalForm& nf) {
  auto& f = nf.factors;
  for (bool again = true; again;) {
    again = false;
    for (std::size_t j = f.size(); j-- > 1;)
      if (make_left_weighted(f[j - 1], f[j])) again = true;
    std::size_t lead = 0;
    while (lead < f.size() && f[lead].is_delta()) ++lead;
    if (lead) {
      nf.delta_power += static_cast<long>(lead);
      f.erase(f.begin(), f.begin() + static_cast<long>(lead));
      again = true;
    }
    std::vector<PermutationBraid> kept;
    for (auto& x : f)
      if (!x.is_identity()) kept.push_back(x);
    if (kept.size() != f.size()) {
      f = std::move(kept);
      again = true;
    }
  }
}

}  // namespace

bool PermutationBraid::is_delta() const {
  const int n = strands();
  for (int k = 0; k < n; ++k)
    if (perm.img[k] != n - 1 - k) return false;
  return true;
}

bool PermutationBraid::ends_with(int i) const {
  int a = -1, b = -1;
  for (int k = 0; k < strands(); ++k) {
    if (perm.img[k] == i) a = k;
    if (perm.img[k] == i + 1) b = k;
  }
  return a > b;
}

BraidWord PermutationBraid::word() const {
  BraidWord w;
  w.strands = strands();
  Permutation p = perm;
  for (bool again = true; again;) {
    again = false;
    for (int i = 0; i + 1 < w.strands; ++i) {
      if (p.img[i] > p.img[i + 1]) {
        w.letters.push_back(Letter::gen(i + 1, 1));
        p = swap_positions(p, i);
        again = true;
        break;
      }
    }
  }
  return w;
}

PermutationBraid delta_braid(int n) { return {delta_perm(n)}; }

std::string NormalForm::serialize() const {
  std::string s = "d:" + std::to_string(delta_power);
  for (const auto& f : factors) {
    s += "|";
    for (int k = 0; k < f.strands(); ++k) {
      if (k) s += ",";
      s += std::to_string(f.perm.img[k] + 1);
    }
  }
  return s;
}

BraidWord NormalForm::word() const {
  BraidWord w;
  w.strands = strands;
  BraidWord d = delta_braid(strands).word();
  BraidWord dinv = inverse(d);
  for (long k = 0; k < (delta_power < 0 ? -delta_power : delta_power); ++k) {
    const BraidWord& piece = delta_power < 0 ? dinv : d;
    w.letters.insert(w.letters.end(), piece.letters.begin(), piece.letters.end());
  }
  for (const auto& f : factors) {
    BraidWord fw = f.word();
    w.letters.insert(w.letters.end(), fw.letters.begin(), fw.letters.end());
  }
  return w;
}

NormalForm normal_form(const BraidWord& input) {
  validate(input);
  BraidWord w = band_to_std(input);
  const int n = w.strands;
  NormalForm nf;
  nf.strands = n;
  const std::size_t len = w.letters.size();
  std::vector<int> negatives_after(len + 1, 0);
  for (std::size_t k = len; k-- > 0;)
    negatives_after[k] = negatives_after[k + 1] + (w.letters[k].sign < 0 ? 1 : 0);
  nf.delta_power = -negatives_after[0];
  const Permutation delta = delta_perm(n);
  for (std::size_t k = 0; k < len; ++k) {
    const Letter& l = w.letters[k];
    int i = l.i - 1;
    Permutation s = l.sign > 0 ? swap_positions(Permutation::identity(n), i) : swap_values(delta, i);
    if (negatives_after[k + 1] % 2) s = flip(s);
    nf.factors.push_back({s});
    normalize(nf);
  }
  return nf;
}

bool equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands) throw std::invalid_argument("strand count mismatch");
  return normal_form(a) == normal_form(b);
}

std::vector<PermutationBraid> permutation_factorization(const BraidWord& w) {
  validate(w);
  std::vector<PermutationBraid> out;
  PermutationBraid cur{Permutation::identity(w.strands)};
  for (const auto& l : w.letters) {
    if (l.sign < 0 || (l.band && l.j != l.i + 1))
      throw std::invalid_argument("permutation_factorization needs positive standard letters");
    int i = l.i - 1;
    if (cur.ends_with(i)) {
      out.push_back(cur);
      cur = {Permutation::identity(w.strands)};
    }
    cur.perm = swap_values(cur.perm, i);
  }
  if (!cur.is_identity()) out.push_back(cur);
  return out;
}

}  // namespace braidpos

#include <algorithm>
#include <array>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "braidpos/homfly.hpp"

namespace braidpos {

namespace {

// Permutations of {0..n-1} in the convention of Permutation (img[k] is where
// the strand starting at k ends), indexed by their rank in lexicographic order.
struct HeckeBasis {
  int n = 0;
  std::size_t size = 0;
  std::vector<std::vector<int>> perms;
  // right[i][r]: rank of pi * sigma_i; descent[i][r]: pi ends with sigma_i.
  std::vector<std::vector<std::uint32_t>> right;
  std::vector<std::vector<char>> descent;
  std::vector<LaurentPoly2> trace;  // P-normalized trace of each T_pi before the writhe factor

  std::size_t rank(const std::vector<int>& p) const {
    std::size_t r = 0;
    for (int k = 0; k < n; ++k) {
      int smaller = 0;
      for (int t = k + 1; t < n; ++t)
        if (p[t] < p[k]) ++smaller;
      r = r * static_cast<std::size_t>(n - k) + static_cast<std::size_t>(smaller);
    }
    return r;
  }
};

const HeckeBasis& basis(int n);

void build_tables(HeckeBasis& b) {
  const int n = b.n;
  std::vector<int> p(n);
  for (int k = 0; k < n; ++k) p[k] = k;
  do {
    b.perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  b.size = b.perms.size();
  b.right.assign(n > 1 ? n - 1 : 0, std::vector<std::uint32_t>(b.size));
  b.descent.assign(n > 1 ? n - 1 : 0, std::vector<char>(b.size));
  for (std::size_t r = 0; r < b.size; ++r) {
    const auto& q = b.perms[r];
    std::vector<int> pos(n);
    for (int k = 0; k < n; ++k) pos[q[k]] = k;
    for (int i = 0; i + 1 < n; ++i) {
      std::vector<int> s = q;
      for (auto& x : s) {
        if (x == i) x = i + 1;
        else if (x == i + 1) x = i;
      }
      b.right[i][r] = static_cast<std::uint32_t>(b.rank(s));
      b.descent[i][r] = pos[i] > pos[i + 1];
    }
  }
}

void mul_generator(const HeckeBasis& b, int i, int sign, const std::vector<LaurentPoly2>& in,
                   std::vector<LaurentPoly2>& out) {
  const auto& right = b.right[i];
  const auto& desc = b.descent[i];
  for (std::size_t r = 0; r < b.size; ++r) {
    LaurentPoly2 x = in[right[r]];
    if (sign > 0 && desc[r]) x.add_shifted(in[r], 1, 0, 1);
    if (sign < 0 && !desc[r]) x.add_shifted(in[r], -1, 0, 1);
    out[r] = std::move(x);
  }
}

void build_trace(HeckeBasis& b) {
  const int m = b.n;
  b.trace.assign(b.size, LaurentPoly2());
  if (m == 1) {
    b.trace[0] = LaurentPoly2(1);
    return;
  }
  const HeckeBasis& sub = basis(m - 1);
  const LaurentPoly2 delta = unlink_poly(2);
  for (std::size_t r = 0; r < b.size; ++r) {
    const auto& pi = b.perms[r];
    const int k = pi[m - 1];
    std::vector<int> head(m - 1);
    for (int j = 0; j < m - 1; ++j) {
      int y = pi[j];
      head[j] = (y > k && y <= m - 1) ? y - 1 : y;
    }
    if (k == m - 1) {
      b.trace[r] = delta * sub.trace[sub.rank(head)];
      continue;
    }
    // T_pi = T_head T_{m-2} T_{m-3} ... T_k; the trace absorbs T_{m-2} as v^-1.
    std::vector<LaurentPoly2> cur(sub.size), nxt(sub.size);
    cur[sub.rank(head)] = LaurentPoly2(1);
    for (int i = m - 3; i >= k; --i) {
      mul_generator(sub, i, 1, cur, nxt);
      std::swap(cur, nxt);
    }
    LaurentPoly2 t;
    for (std::size_t s = 0; s < sub.size; ++s)
      if (!cur[s].is_zero()) t += cur[s] * sub.trace[s];
    b.trace[r] = t.shifted(1, -1, 0);
  }
}

const HeckeBasis& basis(int n) {
  if (n < 1 || n > kMaxHeckeStrands)
    throw std::invalid_argument("Hecke evaluation supports 1.." + std::to_string(kMaxHeckeStrands) +
                                " strands");
  static std::array<std::unique_ptr<HeckeBasis>, kMaxHeckeStrands + 1> cache;
  static std::array<std::once_flag, kMaxHeckeStrands + 1> once;
  std::call_once(once[n], [n] {
    auto b = std::make_unique<HeckeBasis>();
    b->n = n;
    build_tables(*b);
    build_trace(*b);
    cache[n] = std::move(b);
  });
  return *cache[n];
}

struct Prepared {
  const HeckeBasis* b;
  std::vector<std::pair<int, int>> gens;  // zero-based index, sign
  int writhe;
};

Prepared prepare(const BraidWord& w) {
  validate(w);
  BraidWord s = band_to_std(w);
  Prepared p{&basis(s.strands), {}, braidpos::writhe(s)};
  for (const auto& l : s.letters) p.gens.push_back({l.i - 1, l.sign});
  return p;
}

}  // namespace

LaurentPoly2 unlink_poly(int components) {
  LaurentPoly2 d = LaurentPoly2::monomial(1, -1, -1) - LaurentPoly2::monomial(1, 1, -1);
  LaurentPoly2 r(1);
  for (int k = 1; k < components; ++k) r *= d;
  return r;
}

LaurentPoly2 homfly_closed_braid_serial(const BraidWord& w) {
  Prepared p = prepare(w);
  const HeckeBasis& b = *p.b;
  std::vector<LaurentPoly2> cur(b.size), nxt(b.size);
  cur[0] = LaurentPoly2(1);
  for (auto [i, sign] : p.gens) {
    mul_generator(b, i, sign, cur, nxt);
    std::swap(cur, nxt);
  }
  LaurentPoly2 q;
  for (std::size_t r = 0; r < b.size; ++r)
    if (!cur[r].is_zero()) q += cur[r] * b.trace[r];
  return q.shifted(1, p.writhe, 0);
}

LaurentPoly2 homfly_closed_braid_parallel(const BraidWord& w) {
  Prepared p = prepare(w);
  const HeckeBasis& b = *p.b;
  const long size = static_cast<long>(b.size);
  std::vector<LaurentPoly2> cur(b.size), nxt(b.size);
  cur[0] = LaurentPoly2(1);
  for (auto [i, sign] : p.gens) {
    const auto& right = b.right[i];
    const auto& desc = b.descent[i];
#pragma omp parallel for schedule(static)
    for (long r = 0; r < size; ++r) {
      LaurentPoly2 x = cur[right[r]];
      if (sign > 0 && desc[r]) x.add_shifted(cur[r], 1, 0, 1);
      if (sign < 0 && !desc[r]) x.add_shifted(cur[r], -1, 0, 1);
      nxt[r] = std::move(x);
    }
    std::swap(cur, nxt);
  }
  LaurentPoly2 q;
#pragma omp parallel
  {
    LaurentPoly2 local;
#pragma omp for schedule(static) nowait
    for (long r = 0; r < size; ++r)
      if (!cur[r].is_zero()) local += cur[r] * b.trace[r];
#pragma omp critical
    q += local;
  }
  return q.shifted(1, p.writhe, 0);
}

LaurentPoly2 homfly_closed_braid(const BraidWord& w) {
  // Below 5 strands the basis has at most 24 elements; threading only adds overhead.
  if (w.strands >= 5) return homfly_closed_braid_parallel(w);
  return homfly_closed_braid_serial(w);
}

}  // namespace braidpos

#include "braidpos/braid.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

namespace braidpos {

Permutation Permutation::identity(int n) {
  Permutation p;
  p.img.resize(n);
  for (int k = 0; k < n; ++k) p.img[k] = k;
  return p;
}

bool Permutation::is_identity() const {
  for (int k = 0; k < size(); ++k)
    if (img[k] != k) return false;
  return true;
}

Permutation Permutation::then(const Permutation& other) const {
  Permutation r;
  r.img.resize(img.size());
  for (std::size_t k = 0; k < img.size(); ++k) r.img[k] = other.img[img[k]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.img.resize(img.size());
  for (std::size_t k = 0; k < img.size(); ++k) r.img[img[k]] = static_cast<int>(k);
  return r;
}

namespace {

class Scanner {
 public:
  explicit Scanner(const std::string& s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  long integer(bool allow_sign) {
    skip_ws();
    std::size_t start = pos_;
    bool neg = false;
    if (allow_sign && pos_ < s_.size() && s_[pos_] == '-') {
      neg = true;
      ++pos_;
      skip_ws();
    }
    std::size_t digits = pos_;
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1000000) throw ParseError("integer too large", start);
      ++pos_;
    }
    if (pos_ == digits) throw ParseError("expected integer", start);
    return neg ? -v : v;
  }
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }
  std::size_t pos() const { return pos_; }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;
};

int nonzero_index(Scanner& sc) {
  std::size_t at = sc.pos();
  long v = sc.integer(true);
  if (v == 0) throw ParseError("zero generator index", at);
  return static_cast<int>(v);
}

int required_strands(const GroupedWord& gw) {
  int n = 1;
  for (const auto& f : gw.factors) {
    if (f.kind == Factor::Kind::Band) {
      n = std::max(n, f.band_j);
    } else {
      for (int k : f.body) n = std::max(n, std::abs(k) + 1);
    }
  }
  return n;
}

}  // namespace

GroupedWord parse_table_word(const std::string& text, std::optional<int> strands) {
  Scanner sc(text);
  GroupedWord gw;
  if (!sc.at_end()) {
    do {
      Factor f;
      char c = sc.peek();
      if (c == '(') {
        sc.expect('(');
        f.kind = Factor::Kind::Group;
        f.body.push_back(nonzero_index(sc));
        while (sc.accept(',')) f.body.push_back(nonzero_index(sc));
        sc.expect(')');
        if (sc.accept('^')) {
          std::size_t at = sc.pos();
          long e = sc.integer(false);
          if (e < 1) throw ParseError("exponent must be at least 1", at);
          f.exponent = static_cast<int>(e);
        }
      } else if (c == 'b') {
        sc.expect('b');
        sc.expect('(');
        std::size_t at = sc.pos();
        long i = sc.integer(false);
        sc.expect(',');
        long j = sc.integer(false);
        sc.expect(')');
        if (i < 1 || j <= i) throw ParseError("band needs 1 <= i < j", at);
        f.kind = Factor::Kind::Band;
        f.band_i = static_cast<int>(i);
        f.band_j = static_cast<int>(j);
        if (sc.accept('^')) {
          std::size_t eat = sc.pos();
          if (sc.integer(true) != -1) throw ParseError("band exponent must be -1", eat);
          f.band_sign = -1;
        }
      } else {
        f.kind = Factor::Kind::Plain;
        f.body.push_back(nonzero_index(sc));
      }
      gw.factors.push_back(std::move(f));
    } while (sc.accept(','));
    if (!sc.at_end()) sc.fail("unexpected character");
  }
  int need = required_strands(gw);
  if (strands) {
    if (*strands < need) throw ParseError("strand count too small for word", 0);
    gw.strands = *strands;
  } else {
    gw.strands = need;
  }
  return gw;
}

BraidWord flatten(const GroupedWord& gw) {
  BraidWord w;
  w.strands = gw.strands;
  for (const auto& f : gw.factors) {
    switch (f.kind) {
      case Factor::Kind::Plain:
        w.letters.push_back(Letter::gen(std::abs(f.body[0]), f.body[0] > 0 ? 1 : -1));
        break;
      case Factor::Kind::Group:
        for (int e = 0; e < f.exponent; ++e)
          for (int k : f.body) w.letters.push_back(Letter::gen(std::abs(k), k > 0 ? 1 : -1));
        break;
      case Factor::Kind::Band:
        w.letters.push_back(Letter::bandgen(f.band_i, f.band_j, f.band_sign));
        break;
    }
  }
  return w;
}

BraidWord parse_word(const std::string& text, std::optional<int> strands) {
  return flatten(parse_table_word(text, strands));
}

std::string to_string(const Letter& l) {
  if (l.band) {
    std::string s = "b(" + std::to_string(l.i) + "," + std::to_string(l.j) + ")";
    return l.sign < 0 ? s + "^-1" : s;
  }
  return std::to_string(l.sign * l.i);
}

std::string to_string(const BraidWord& w) {
  std::string s;
  for (std::size_t k = 0; k < w.letters.size(); ++k) {
    if (k) s += ",";
    s += to_string(w.letters[k]);
  }
  return s;
}

std::string to_string(const GroupedWord& gw) {
  std::string s;
  for (std::size_t k = 0; k < gw.factors.size(); ++k) {
    const Factor& f = gw.factors[k];
    if (k) s += ",";
    switch (f.kind) {
      case Factor::Kind::Plain:
        s += std::to_string(f.body[0]);
        break;
      case Factor::Kind::Group:
        s += "(";
        for (std::size_t t = 0; t < f.body.size(); ++t) {
          if (t) s += ",";
          s += std::to_string(f.body[t]);
        }
        s += ")";
        if (f.exponent != 1) s += "^" + std::to_string(f.exponent);
        break;
      case Factor::Kind::Band:
        s += to_string(Letter::bandgen(f.band_i, f.band_j, f.band_sign));
        break;
    }
  }
  return s;
}

std::string to_string(const Permutation& p) {
  std::string s = "[";
  for (int k = 0; k < p.size(); ++k) {
    if (k) s += " ";
    s += std::to_string(p.img[k] + 1);
  }
  return s + "]";
}

void validate(const BraidWord& w) {
  if (w.strands < 1) throw std::invalid_argument("strand count must be positive");
  for (const auto& l : w.letters) {
    if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("letter sign must be +-1");
    if (l.band) {
      if (l.i < 1 || l.j <= l.i || l.j > w.strands)
        throw std::invalid_argument("band letter out of range: " + to_string(l));
    } else {
      if (l.i < 1 || l.i > w.strands - 1 || l.j != l.i + 1)
        throw std::invalid_argument("generator out of range: " + to_string(l));
    }
  }
}

BraidWord make_word(int strands, const std::vector<int>& indices) {
  BraidWord w;
  w.strands = strands;
  for (int k : indices) w.letters.push_back(Letter::gen(std::abs(k), k > 0 ? 1 : -1));
  validate(w);
  return w;
}

BraidWord band_to_std(const BraidWord& w) {
  BraidWord r;
  r.strands = w.strands;
  for (const auto& l : w.letters) {
    if (!l.band || l.j == l.i + 1) {
      r.letters.push_back(Letter::gen(l.i, l.sign));
      continue;
    }
    for (int k = l.j - 1; k > l.i; --k) r.letters.push_back(Letter::gen(k, 1));
    r.letters.push_back(Letter::gen(l.i, l.sign));
    for (int k = l.i + 1; k < l.j; ++k) r.letters.push_back(Letter::gen(k, -1));
  }
  return r;
}

BraidWord inverse(const BraidWord& w) {
  BraidWord r;
  r.strands = w.strands;
  r.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r.letters.push_back(it->inverse());
  return r;
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands) throw std::invalid_argument("strand count mismatch");
  BraidWord r = a;
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

int writhe(const BraidWord& w) {
  int s = 0;
  for (const auto& l : w.letters) s += l.sign;
  return s;
}

int self_linking(const BraidWord& w) { return -w.strands + writhe(w); }

int euler_char_bennequin(const BraidWord& w) {
  return w.strands - static_cast<int>(w.letters.size());
}

int negative_band_count(const BraidWord& w) {
  return static_cast<int>(std::count_if(w.letters.begin(), w.letters.end(),
                                        [](const Letter& l) { return l.sign < 0; }));
}

Permutation permutation_of(const BraidWord& w) {
  Permutation p = Permutation::identity(w.strands);
  for (const auto& l : w.letters) {
    Permutation t = Permutation::identity(w.strands);
    std::swap(t.img[l.i - 1], t.img[l.j - 1]);
    p = p.then(t);
  }
  return p;
}

bool all_positive(const BraidWord& w) {
  return std::all_of(w.letters.begin(), w.letters.end(), [](const Letter& l) { return l.sign > 0; });
}

bool is_standard(const BraidWord& w) {
  return std::all_of(w.letters.begin(), w.letters.end(),
                     [](const Letter& l) { return !l.band || l.j == l.i + 1; });
}

BraidWord conjugate(const BraidWord& w, const BraidWord& g) {
  if (w.strands != g.strands) throw std::invalid_argument("strand count mismatch");
  return concat(concat(inverse(g), w), g);
}

BraidWord cycle(const BraidWord& w, long k) {
  BraidWord r = w;
  if (w.letters.empty()) return r;
  long len = static_cast<long>(w.letters.size());
  long s = ((k % len) + len) % len;
  std::rotate(r.letters.begin(), r.letters.begin() + s, r.letters.end());
  return r;
}

BraidWord mirror(const BraidWord& w) {
  BraidWord r = w;
  for (auto& l : r.letters) l.sign = -l.sign;
  return r;
}

BraidWord delta_flip(const BraidWord& w) {
  BraidWord r = w;
  int n = w.strands;
  for (auto& l : r.letters) {
    int i = n + 1 - l.j;
    int j = n + 1 - l.i;
    l.i = i;
    l.j = j;
  }
  return r;
}

BraidWord with_strands(const BraidWord& w, int strands) {
  BraidWord r = w;
  r.strands = strands;
  validate(r);
  return r;
}

bool is_sigma1(const Letter& l) { return l.i == 1 && l.j == 2; }

namespace {

std::vector<FlypeSite> find_bottom_flypes(const BraidWord& w) {
  std::vector<FlypeSite> sites;
  const std::size_t len = w.letters.size();
  std::vector<std::size_t> touching;
  for (std::size_t k = 0; k < len; ++k)
    if (w.letters[k].touches(1)) touching.push_back(k);
  if (touching.size() < 2) return sites;
  for (std::size_t k : touching)
    if (!is_sigma1(w.letters[k])) return sites;

  // In cyclic order the touching letters are one isolated eps letter and one
  // contiguous run of equal letters.
  const std::size_t t = touching.size();
  for (std::size_t a = 0; a < t; ++a) {
    std::size_t p = touching[a];
    int eps = w.letters[p].sign;
    std::size_t first = touching[(a + 1) % t];
    std::size_t last = touching[(a + t - 1) % t];
    int run_sign = w.letters[first].sign;
    bool same = true;
    for (std::size_t b = 1; b < t; ++b) {
      std::size_t q = touching[(a + b) % t];
      if (w.letters[q].sign != run_sign) same = false;
      if (b + 1 < t) {
        std::size_t nq = touching[(a + b + 1) % t];
        if ((q + 1) % len != nq) same = false;
      }
    }
    if (!same) continue;
    int m = run_sign * static_cast<int>(t - 1);
    std::size_t gap_after = (first + len - p - 1) % len;  // letters between eps and run
    std::size_t gap_before = (p + len - last - 1) % len;  // letters between run and eps
    if (gap_after > 0 && gap_before > 0) {
      sites.push_back({p, true, eps, m, gap_after, false});
      sites.push_back({first, false, eps, m, gap_before, false});
    }
  }
  return sites;
}

BraidWord flype_bottom(const BraidWord& w, const FlypeSite& s) {
  const std::size_t len = w.letters.size();
  const std::size_t runlen = static_cast<std::size_t>(std::abs(s.m));
  const std::size_t span = 1 + s.v_len + runlen;
  if (s.m == 0 || span >= len || s.start >= len || (s.eps != 1 && s.eps != -1))
    throw std::invalid_argument("invalid flype site");
  auto at = [&](std::size_t off) -> const Letter& { return w.letters[(s.start + off) % len]; };
  const int rs = s.m > 0 ? 1 : -1;
  std::size_t eps_off = s.eps_first ? 0 : runlen + s.v_len;
  std::size_t run_off = s.eps_first ? 1 + s.v_len : 0;
  std::size_t v_off = s.eps_first ? 1 : runlen;
  if (!is_sigma1(at(eps_off)) || at(eps_off).sign != s.eps)
    throw std::invalid_argument("flype site: eps letter mismatch");
  for (std::size_t k = 0; k < runlen; ++k)
    if (!is_sigma1(at(run_off + k)) || at(run_off + k).sign != rs)
      throw std::invalid_argument("flype site: run mismatch");
  for (std::size_t k = 0; k < s.v_len; ++k)
    if (at(v_off + k).touches(1)) throw std::invalid_argument("flype site: v touches strand 1");
  for (std::size_t k = span; k < len; ++k)
    if (at(k).touches(1)) throw std::invalid_argument("flype site: w touches strand 1");

  Letter eps_letter = at(eps_off);
  Letter run_letter = at(run_off);
  std::vector<Letter> v;
  for (std::size_t k = 0; k < s.v_len; ++k) v.push_back(at(v_off + k));
  std::vector<Letter> seg;
  if (s.eps_first) {
    seg.assign(runlen, run_letter);
    seg.insert(seg.end(), v.begin(), v.end());
    seg.push_back(eps_letter);
  } else {
    seg.push_back(eps_letter);
    seg.insert(seg.end(), v.begin(), v.end());
    seg.insert(seg.end(), runlen, run_letter);
  }
  BraidWord r = w;
  for (std::size_t k = 0; k < span; ++k) r.letters[(s.start + k) % len] = seg[k];
  return r;
}

}  // namespace

std::vector<FlypeSite> find_flypes(const BraidWord& w, bool top) {
  if (!top) return find_bottom_flypes(w);
  auto sites = find_bottom_flypes(delta_flip(w));
  for (auto& s : sites) s.top = true;
  return sites;
}

BraidWord apply_flype(const BraidWord& w, const FlypeSite& site) {
  if (!site.top) return flype_bottom(w, site);
  FlypeSite s = site;
  s.top = false;
  return delta_flip(flype_bottom(delta_flip(w), s));
}

std::optional<Destabilization> try_destabilize(const BraidWord& w) {
  const int n = w.strands;
  if (n < 2) return std::nullopt;
  std::optional<std::size_t> pos;
  for (std::size_t k = 0; k < w.letters.size(); ++k) {
    if (w.letters[k].touches(n)) {
      if (pos) return std::nullopt;
      pos = k;
    }
  }
  if (!pos) return std::nullopt;
  Destabilization d;
  d.sign = w.letters[*pos].sign;
  d.position = *pos;
  d.word.strands = n - 1;
  for (std::size_t k = 0; k < w.letters.size(); ++k)
    if (k != *pos) d.word.letters.push_back(w.letters[k]);
  return d;
}

BraidWord stabilize(const BraidWord& w, int sign) {
  BraidWord r = w;
  r.strands = w.strands + 1;
  r.letters.push_back(Letter::gen(w.strands, sign));
  return r;
}

bool same_letter(const Letter& a, const Letter& b) { return a.i == b.i && a.j == b.j && a.sign == b.sign; }

Letter band(int i, int j, int sign) { return j == i + 1 ? Letter::gen(i, sign) : Letter::bandgen(i, j, sign); }

BraidWord canonical(const BraidWord& w) {
  BraidWord r = w;
  for (auto& l : r.letters) l = band(l.i, l.j, l.sign);
  return r;
}

BraidWord free_reduce(const BraidWord& w) {
  BraidWord r;
  r.strands = w.strands;
  for (const auto& l : canonical(w).letters) {
    if (!r.letters.empty() && r.letters.back() == l.inverse()) r.letters.pop_back();
    else r.letters.push_back(l);
  }
  return r;
}

std::optional<int> lone_strand(const BraidWord& w, std::size_t pos) {
  if (pos >= w.letters.size()) return std::nullopt;
  const Letter& l = w.letters[pos];
  for (int s : {l.j, l.i}) {
    bool alone = true;
    for (std::size_t k = 0; k < w.letters.size() && alone; ++k)
      if (k != pos && w.letters[k].touches(s)) alone = false;
    if (alone) return s;
  }
  return std::nullopt;
}

BraidWord remove_strand(const BraidWord& w, std::size_t pos, int strand) {
  if (pos >= w.letters.size() || !w.letters[pos].touches(strand))
    throw std::invalid_argument("remove_strand: letter does not touch the strand");
  for (std::size_t k = 0; k < w.letters.size(); ++k)
    if (k != pos && w.letters[k].touches(strand))
      throw std::invalid_argument("remove_strand: strand touched by another letter");
  BraidWord r;
  r.strands = w.strands - 1;
  auto down = [&](int s) { return s > strand ? s - 1 : s; };
  for (std::size_t k = 0; k < w.letters.size(); ++k) {
    if (k == pos) continue;
    const Letter& l = w.letters[k];
    r.letters.push_back(band(down(l.i), down(l.j), l.sign));
  }
  return r;
}

bool can_merge(const BraidWord& w, std::size_t pos) {
  if (pos >= w.letters.size()) return false;
  const Letter& m = w.letters[pos];
  if (m.j != m.i + 1) return false;
  for (std::size_t k = 0; k < w.letters.size(); ++k) {
    const Letter& l = w.letters[k];
    if (k != pos && l.i <= m.i && l.j >= m.j) return false;
  }
  return true;
}

BraidWord merge_strands(const BraidWord& w, std::size_t pos) {
  if (!can_merge(w, pos)) throw std::invalid_argument("merge_strands: letter does not split the braid");
  const int i = w.letters[pos].i;
  BraidWord r;
  r.strands = w.strands - 1;
  auto down = [&](int s) { return s > i ? s - 1 : s; };
  for (std::size_t k = 0; k < w.letters.size(); ++k) {
    if (k == pos) continue;
    const Letter& l = w.letters[k];
    r.letters.push_back(band(down(l.i), down(l.j), l.sign));
  }
  return r;
}

}  // namespace braidpos

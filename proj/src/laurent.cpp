#include "braidpos/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>
#include <utility>

namespace braidpos {

namespace {

bool term_less(const LaurentPoly2::Term& a, const LaurentPoly2::Term& b) {
  return a.v != b.v ? a.v < b.v : a.z < b.z;
}

}  // namespace

LaurentPoly2::LaurentPoly2(std::int64_t c) {
  if (c) terms_.push_back({0, 0, c});
}

LaurentPoly2 LaurentPoly2::monomial(std::int64_t c, int v, int z) {
  LaurentPoly2 p;
  if (c) p.terms_.push_back({v, z, c});
  return p;
}

std::int64_t LaurentPoly2::coeff(int v, int z) const {
  Term key{v, z, 0};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key, term_less);
  if (it != terms_.end() && it->v == v && it->z == z) return it->c;
  return 0;
}

void LaurentPoly2::add_shifted(const LaurentPoly2& o, std::int64_t c, int dv, int dz) {
  if (o.terms_.empty() || c == 0) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end()) {
      out.push_back(*a++);
      continue;
    }
    Term tb{b->v + dv, b->z + dz, b->c * c};
    if (a == terms_.end() || term_less(tb, *a)) {
      out.push_back(tb);
      ++b;
    } else if (term_less(*a, tb)) {
      out.push_back(*a++);
    } else {
      std::int64_t s = a->c + tb.c;
      if (s) out.push_back({a->v, a->z, s});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& o) {
  add_shifted(o, 1, 0, 0);
  return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& o) {
  add_shifted(o, -1, 0, 0);
  return *this;
}

LaurentPoly2 LaurentPoly2::operator+(const LaurentPoly2& o) const {
  LaurentPoly2 r = *this;
  r += o;
  return r;
}

LaurentPoly2 LaurentPoly2::operator-(const LaurentPoly2& o) const {
  LaurentPoly2 r = *this;
  r -= o;
  return r;
}

LaurentPoly2 LaurentPoly2::operator-() const { return shifted(-1, 0, 0); }

LaurentPoly2 LaurentPoly2::shifted(std::int64_t c, int dv, int dz) const {
  LaurentPoly2 r;
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.v + dv, t.z + dz, t.c * c});
  return r;
}

LaurentPoly2 LaurentPoly2::operator*(const LaurentPoly2& o) const {
  LaurentPoly2 r;
  for (const auto& t : terms_) r.add_shifted(o, t.c, t.v, t.z);
  return r;
}

LaurentPoly2& LaurentPoly2::operator*=(const LaurentPoly2& o) {
  *this = *this * o;
  return *this;
}

std::string LaurentPoly2::serialize() const {
  std::string s;
  for (const auto& t : terms_)
    s += "v^" + std::to_string(t.v) + " z^" + std::to_string(t.z) + ": " + std::to_string(t.c) + ";";
  return s;
}

LaurentPoly2 LaurentPoly2::deserialize(const std::string& s) {
  LaurentPoly2 p;
  std::size_t pos = 0;
  while (pos < s.size()) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos >= s.size()) break;
    int v = 0, z = 0;
    long long c = 0;
    int used = 0;
    if (std::sscanf(s.c_str() + pos, "v^%d z^%d: %lld;%n", &v, &z, &c, &used) != 3 || used == 0)
      throw std::invalid_argument("malformed polynomial term at offset " + std::to_string(pos));
    p.add_shifted(LaurentPoly2(c), 1, v, z);
    pos += static_cast<std::size_t>(used);
  }
  return p;
}

std::string LaurentPoly2::pretty() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& t : terms_) {
    std::int64_t c = t.c;
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    std::int64_t a = c < 0 ? -c : c;
    std::string mono;
    if (t.v) mono += t.v == 1 ? "v" : "v^" + std::to_string(t.v);
    if (t.z) mono += std::string(mono.empty() ? "" : "*") + (t.z == 1 ? "z" : "z^" + std::to_string(t.z));
    if (mono.empty()) s += std::to_string(a);
    else if (a == 1) s += mono;
    else s += std::to_string(a) + "*" + mono;
  }
  return s;
}

int min_deg_v(const LaurentPoly2& p) {
  if (p.is_zero()) throw std::invalid_argument("degree of zero polynomial");
  return p.terms().front().v;
}

int max_deg_v(const LaurentPoly2& p) {
  if (p.is_zero()) throw std::invalid_argument("degree of zero polynomial");
  return p.terms().back().v;
}

namespace {

class HomflyParser {
 public:
  explicit HomflyParser(const std::string& s) : s_(s) {}

  LaurentPoly2 parse() {
    LaurentPoly2 p = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return p;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  [[noreturn]] void fail(const std::string& m) {
    throw std::invalid_argument("homfly parse error: " + m + " at offset " + std::to_string(pos_));
  }
  long number() {
    skip();
    std::size_t start = pos_;
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) fail("expected number");
    return v;
  }
  int exponent() {
    if (peek() == '(') {
      ++pos_;
      bool neg = false;
      if (peek() == '-') {
        neg = true;
        ++pos_;
      }
      long e = number();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return static_cast<int>(neg ? -e : e);
    }
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    long e = number();
    return static_cast<int>(neg ? -e : e);
  }
  LaurentPoly2 expr() {
    LaurentPoly2 acc;
    bool first = true;
    for (;;) {
      char c = peek();
      int sign = 1;
      if (c == '+' || c == '-') {
        sign = c == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      LaurentPoly2 t = term();
      acc.add_shifted(t, sign, 0, 0);
      first = false;
      c = peek();
      if (c != '+' && c != '-') break;
    }
    return acc;
  }
  LaurentPoly2 term() {
    LaurentPoly2 acc = factor();
    while (peek() == '*') {
      ++pos_;
      acc *= factor();
    }
    return acc;
  }
  LaurentPoly2 factor() {
    char c = peek();
    LaurentPoly2 base;
    if (c == '(') {
      ++pos_;
      base = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      if (peek() == '^') {
        ++pos_;
        int e = exponent();
        if (e < 0) fail("negative power of a sum");
        LaurentPoly2 r(1);
        for (int k = 0; k < e; ++k) r *= base;
        return r;
      }
      return base;
    }
    if (c == 'v' || c == 'z') {
      ++pos_;
      int e = 1;
      if (peek() == '^') {
        ++pos_;
        e = exponent();
      }
      return c == 'v' ? LaurentPoly2::monomial(1, e, 0) : LaurentPoly2::monomial(1, 0, e);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return LaurentPoly2(number());
    fail("unexpected character");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly2 parse_homfly(const std::string& text) { return HomflyParser(text).parse(); }

}  // namespace braidpos

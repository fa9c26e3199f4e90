#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace braidpos {

// Integer Laurent polynomial in v and z, kept as a sorted list of nonzero terms.
class LaurentPoly2 {
 public:
  struct Term {
    int v = 0;
    int z = 0;
    std::int64_t c = 0;
    bool operator==(const Term&) const = default;
  };

  LaurentPoly2() = default;
  explicit LaurentPoly2(std::int64_t c);
  static LaurentPoly2 monomial(std::int64_t c, int v, int z);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t coeff(int v, int z) const;

  LaurentPoly2& operator+=(const LaurentPoly2& o);
  LaurentPoly2& operator-=(const LaurentPoly2& o);
  LaurentPoly2 operator+(const LaurentPoly2& o) const;
  LaurentPoly2 operator-(const LaurentPoly2& o) const;
  LaurentPoly2 operator-() const;
  LaurentPoly2 operator*(const LaurentPoly2& o) const;
  LaurentPoly2& operator*=(const LaurentPoly2& o);
  // Multiplication by c * v^dv * z^dz.
  LaurentPoly2 shifted(std::int64_t c, int dv, int dz) const;
  void add_shifted(const LaurentPoly2& o, std::int64_t c, int dv, int dz);

  bool operator==(const LaurentPoly2&) const = default;

  // "v^a z^b: c;" for every term in (v, z) order.
  std::string serialize() const;
  static LaurentPoly2 deserialize(const std::string& s);
  std::string pretty() const;

 private:
  std::vector<Term> terms_;
};

int min_deg_v(const LaurentPoly2& p);
int max_deg_v(const LaurentPoly2& p);

// Accepts the KnotInfo HOMFLY notation, e.g. "(2*v^2-v^4)+ v^2*z^2" or
// "(-v^(-2))*z^6".
LaurentPoly2 parse_homfly(const std::string& text);

}  // namespace braidpos

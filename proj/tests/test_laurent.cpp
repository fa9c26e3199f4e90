#include "braidpos/laurent.hpp"
#include "doctest.h"

using namespace braidpos;

TEST_CASE("arithmetic") {
  LaurentPoly2 v = LaurentPoly2::monomial(1, 1, 0);
  LaurentPoly2 z = LaurentPoly2::monomial(1, 0, 1);
  LaurentPoly2 one(1);
  LaurentPoly2 p = (v + z) * (v - z);
  CHECK(p.coeff(2, 0) == 1);
  CHECK(p.coeff(0, 2) == -1);
  CHECK(p.coeff(1, 1) == 0);
  CHECK((p - p).is_zero());
  CHECK(p.shifted(-2, -3, 1).coeff(-1, 1) == -2);
  LaurentPoly2 q = one;
  q.add_shifted(p, 3, 0, 0);
  CHECK(q == one + p + p + p);
  CHECK(min_deg_v(p) == 0);
  CHECK(max_deg_v(p) == 2);
  CHECK_THROWS(min_deg_v(LaurentPoly2()));
}

TEST_CASE("serialize round trip") {
  LaurentPoly2 p = LaurentPoly2::monomial(2, 2, 0) - LaurentPoly2::monomial(1, 4, 0) +
                   LaurentPoly2::monomial(1, 2, 2) + LaurentPoly2::monomial(-7, -3, -1);
  CHECK(LaurentPoly2::deserialize(p.serialize()) == p);
  CHECK(LaurentPoly2::deserialize(LaurentPoly2().serialize()).is_zero());
}

TEST_CASE("parse_homfly") {
  LaurentPoly2 t = parse_homfly("(2*v^2-v^4)+ v^2*z^2");
  CHECK(t.coeff(2, 0) == 2);
  CHECK(t.coeff(4, 0) == -1);
  CHECK(t.coeff(2, 2) == 1);
  CHECK(t.terms().size() == 3);
  LaurentPoly2 f = parse_homfly("(v^(-2)-1+v^2)+ (-1)*z^2");
  CHECK(f.coeff(-2, 0) == 1);
  CHECK(f.coeff(0, 0) == -1);
  CHECK(f.coeff(0, 2) == -1);
  CHECK(parse_homfly("(-v^(-2))*z^6").coeff(-2, 6) == -1);
  CHECK(parse_homfly("1") == LaurentPoly2(1));
  CHECK(parse_homfly("(3*v^4-2*v^6)+(v^2+ 2*v^4)*z^2") ==
        parse_homfly("3*v^4-2*v^6+v^2*z^2+2*v^4*z^2"));
  CHECK_THROWS(parse_homfly("v^"));
  CHECK_THROWS(parse_homfly("(v+1"));
}

#include "doctest.h"
#include "quadra/params.hpp"

using namespace quadra;

TEST_CASE("rational parse and canonical form") {
  CHECK(Rational::parse("6/4") == Rational(3, 2));
  CHECK(Rational::parse("-2").str() == "-2");
  CHECK(Rational(2, -4).str() == "-1/2");
  CHECK_THROWS_AS(Rational::parse("1/0"), ContractViolation);
  CHECK_THROWS_AS(Rational::parse("abc"), ContractViolation);
  CHECK(pow(Rational(-2, 3), 3) == Rational(-8, 27));
}

TEST_CASE("qt_number") {
  const Poly q = Poly::q(), t = Poly::t();
  CHECK(qt_number(1, q, t) == Poly(1));
  CHECK(qt_number(3, q, t) == t * t + q * t + q * q);
  CHECK(qt_number(3, q, t).str() == "q^2 + qt + t^2");
  for (int n = 1; n <= 6; ++n) CHECK(qt_number(n, Rational(1), Rational(1)) == Rational(n));
  CHECK(qt_number(0, q, t).is_zero());
  // 0^0 = 1: [n]_{0,t} = t^{n-1}
  CHECK(qt_number(4, Rational(0), Rational(1, 2)) == Rational(1, 8));
}

TEST_CASE("poly_eval") {
  auto p = DeformationParams::admissible(Rational(1, 2), Rational(1), Rational(0), Rational(1));
  CHECK(poly_eval(Poly::q() * Poly::w(), p) == Rational(1, 2));
  CHECK(poly_eval(Poly(0), p) == Rational(0));
  auto ones = DeformationParams::relaxed(Rational(1), Rational(1), Rational(1), Rational(1));
  Poly two = qt_number(2, Poly::q(), Poly::t()) * qt_number(2, Poly::v(), Poly::w());
  CHECK(poly_eval(two, ones) == Rational(4));
  // symbolic parameters are left alone
  auto partial = DeformationParams::relaxed(Rational(2), std::nullopt, std::nullopt, std::nullopt);
  CHECK(poly_substitute(Poly::q() * Poly::t(), partial) == Poly::t().scale(Rational(2)));
  CHECK(poly_substitute(Poly::q() + Poly::v(), DeformationParams::symbolic()) == Poly::q() + Poly::v());
}

TEST_CASE("poly arithmetic") {
  const Poly q = Poly::q(), t = Poly::t(), v = Poly::v(), w = Poly::w();
  CHECK((q + (-q)).is_zero());
  CHECK(((q + t) * (v + w)).str() == "qv + qw + tv + tw");
  CHECK(q.scale(Rational(0)).is_zero());
  CHECK((Poly(1) + q * v + q * w + t * v + t * w).str() == "1 + qv + qw + tv + tw");
  CHECK((q * v).scale(Rational(5, 4)).str() == "(5/4)qv");
  CHECK(pow(q + Poly(1), 2).str() == "1 + 2q + q^2");
  CHECK((Poly(1) - t * v - t * w).scale(Rational(25)).str() == "25 - 25tv - 25tw");
}

TEST_CASE("parameter ranges") {
  CHECK_THROWS_AS(DeformationParams::admissible(Rational(1), Rational(1, 2), Rational(0), Rational(1)),
                  ContractViolation);
  CHECK_NOTHROW(DeformationParams::admissible(Rational(-1, 2), Rational(1, 2), Rational(0), Rational(1)));
  CHECK_NOTHROW(DeformationParams::relaxed(Rational(3), Rational(1), Rational(1), Rational(1)));
}

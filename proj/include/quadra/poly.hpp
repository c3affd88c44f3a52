#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>

#include "quadra/rational.hpp"

namespace quadra {

// Exponents of (q, t, v, w).
using Monomial = std::array<std::uint16_t, 4>;

// Graded order: lower total degree first; inside a degree, larger exponent
// tuples first, so that q-heavy terms lead ("1 + qv + qw + tv + tw").
struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = a[0] + a[1] + a[2] + a[3], db = b[0] + b[1] + b[2] + b[3];
    if (da != db) return da < db;
    return a > b;
  }
};

template <class S> struct ParamValues;

// Sparse polynomial in q,t,v,w over the rationals. No zero coefficients are
// ever stored, so == is structural equality.
class Poly {
 public:
  using Terms = std::map<Monomial, Rational, GradedLex>;

  Poly() = default;
  Poly(int c) : Poly(Rational(c)) {}
  Poly(long c) : Poly(Rational(c)) {}
  Poly(const Rational& c);

  static Poly monomial(Monomial m, const Rational& c = Rational(1));
  static Poly var(int index);  // 0..3 -> q,t,v,w
  static Poly q() { return var(0); }
  static Poly t() { return var(1); }
  static Poly v() { return var(2); }
  static Poly w() { return var(3); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;
  int degree() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly scale(const Rational& c) const;

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) { Poly r = a; r *= b; return r; }
  Poly operator-() const { return scale(Rational(-1)); }
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  // Canonical rendering, e.g. "1 + qv + qw + tv + tw", "2q^2t - 1/3w".
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

 private:
  void add_term(const Monomial& m, const Rational& c);
  Terms terms_;
};

Poly pow(const Poly& base, unsigned exponent);

}  // namespace quadra

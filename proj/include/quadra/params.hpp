#pragma once

#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "quadra/errors.hpp"
#include "quadra/poly.hpp"
#include "quadra/rational.hpp"

namespace quadra {

// q,t,v,w each either a rational value or left symbolic (nullopt).
class DeformationParams {
 public:
  DeformationParams() = default;  // fully symbolic

  // Positivity range |q| <= t <= 1, |v| <= w <= 1 when the values are given.
  static DeformationParams admissible(std::optional<Rational> q, std::optional<Rational> t,
                                      std::optional<Rational> v, std::optional<Rational> w);
  // No range check; for pure combinatorics (e.g. (1,1,1,1) specializations).
  static DeformationParams relaxed(std::optional<Rational> q, std::optional<Rational> t,
                                   std::optional<Rational> v, std::optional<Rational> w);
  static DeformationParams symbolic() { return {}; }

  const std::optional<Rational>& operator[](int i) const { return vals_[i]; }
  bool fully_rational() const;
  bool fully_symbolic() const;
  std::string str() const;

 private:
  std::optional<Rational> vals_[4];
};

// Concrete scalar values of (q,t,v,w) inside a ring S (Rational or Poly).
template <class S>
struct ParamValues {
  S q, t, v, w;
};

ParamValues<Rational> rational_values(const DeformationParams& p);
ParamValues<Poly> poly_values(const DeformationParams& p);

template <class S>
ParamValues<S> values_of(const DeformationParams& p) {
  if constexpr (std::is_same_v<S, Rational>)
    return rational_values(p);
  else
    return poly_values(p);
}

inline Rational lift(const Rational& r, Rational*) { return r; }
inline Poly lift(const Rational& r, Poly*) { return Poly(r); }
template <class S>
S lift(const Rational& r) {
  return lift(r, static_cast<S*>(nullptr));
}

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline bool is_zero(const Poly& p) { return p.is_zero(); }
inline std::string to_string(const Rational& r) { return r.str(); }
inline std::string to_string(const Poly& p) { return p.str(); }

// Powers b^0..b^n of a scalar, 0^0 = 1.
template <class S>
std::vector<S> power_table(const S& b, int n) {
  std::vector<S> out;
  out.reserve(n + 1);
  out.push_back(S(1));
  for (int i = 1; i <= n; ++i) out.push_back(out.back() * b);
  return out;
}

// [n]_{a,b} = sum_{i=1..n} a^{i-1} b^{n-i}; [0] = 0.
template <class S>
S qt_number(int n, const S& a, const S& b) {
  require(n >= 0, "qt_number: negative n");
  if (n == 0) return S(0);
  auto pa = power_table(a, n - 1), pb = power_table(b, n - 1);
  S sum(0);
  for (int i = 1; i <= n; ++i) sum += pa[i - 1] * pb[n - i];
  return sum;
}

// Substitute the rational entries of params into p; symbolic entries stay.
Poly poly_substitute(const Poly& p, const DeformationParams& params);
// Exact evaluation; params must be fully rational.
Rational poly_eval(const Poly& p, const DeformationParams& params);
Rational poly_eval(const Poly& p, const ParamValues<Rational>& params);

}  // namespace quadra

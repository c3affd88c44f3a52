#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "quadra/params.hpp"

namespace quadra {

// x P_n = P_{n+1} + beta_n P_n + gamma_{n-1} P_{n-1}; finite prefixes.
template <class S>
struct JacobiParams {
  std::vector<S> beta, gamma;  // beta[n] = beta_n, gamma[n] = gamma_n
};

template <class S>
struct MonicPolynomial {
  std::vector<S> coeffs;  // c_0 .. c_n, c_n = 1
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

constexpr int kMaxPolyDegree = 30;
constexpr int kMaxMomentOrder = 20;

// beta = 0, gamma_{n-1} = [n]_{q,t}[n]_{v,w}
template <class S>
JacobiParams<S> jacobi_quadrabasic_hermite(const ParamValues<S>& p, int length) {
  JacobiParams<S> j;
  for (int n = 1; n <= length; ++n) {
    j.beta.push_back(S(0));
    j.gamma.push_back(qt_number(n, p.q, p.t) * qt_number(n, p.v, p.w));
  }
  return j;
}

// beta_0 = 0, beta_n = gamma_{n-1} = [n]_{q,t}[n]_{v,w}
template <class S>
JacobiParams<S> jacobi_quadrabasic_poisson(const ParamValues<S>& p, int length) {
  JacobiParams<S> j;
  for (int n = 0; n < length; ++n) {
    j.beta.push_back(qt_number(n, p.q, p.t) * qt_number(n, p.v, p.w));
    j.gamma.push_back(qt_number(n + 1, p.q, p.t) * qt_number(n + 1, p.v, p.w));
  }
  return j;
}

// beta = 0, gamma_{n-1} = [n]_q (1 + alpha q^{n-1}); requires -1 < alpha, q < 1.
JacobiParams<Rational> jacobi_qmp(const Rational& alpha, const Rational& q, int length);

template <class S>
MonicPolynomial<S> poly_from_jacobi(const JacobiParams<S>& j, int n) {
  guard(n <= kMaxPolyDegree, "poly_from_jacobi capped at degree 30");
  require(static_cast<int>(j.beta.size()) >= n && static_cast<int>(j.gamma.size()) >= n - 1,
          "poly_from_jacobi: Jacobi prefix too short");
  std::vector<S> prev{}, cur{S(1)};  // P_{-1} = 0, P_0 = 1
  for (int k = 0; k < n; ++k) {
    std::vector<S> next(k + 2, S(0));
    for (int i = 0; i <= k; ++i) {
      next[i + 1] += cur[i];
      next[i] -= j.beta[k] * cur[i];
    }
    if (k > 0)
      for (int i = 0; i < static_cast<int>(prev.size()); ++i) next[i] -= j.gamma[k - 1] * prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return {cur};
}

// m_0..m_n as (J^k)_{00}: weighted Motzkin paths that never exceed level k/2.
template <class S>
std::vector<S> moments_from_jacobi(const JacobiParams<S>& j, int n) {
  guard(n <= kMaxMomentOrder, "moments_from_jacobi capped at order 20");
  const int levels = n / 2 + 1;
  require(static_cast<int>(j.beta.size()) >= levels && static_cast<int>(j.gamma.size()) >= levels - 1,
          "moments_from_jacobi: Jacobi prefix too short");
  std::vector<S> walk(levels, S(0));
  walk[0] = S(1);
  std::vector<S> out{S(1)};
  for (int k = 1; k <= n; ++k) {
    std::vector<S> next(levels, S(0));
    for (int l = 0; l < levels; ++l) {
      if (is_zero(walk[l])) continue;
      next[l] += j.beta[l] * walk[l];
      if (l + 1 < levels) next[l + 1] += walk[l];
      if (l > 0) next[l - 1] += j.gamma[l - 1] * walk[l];
    }
    walk = std::move(next);
    out.push_back(walk[0]);
  }
  return out;
}

// ||P_1||^2 .. ||P_n||^2 = gamma_0 ... gamma_{k-1}
template <class S>
std::vector<S> norm_squares_from_jacobi(const JacobiParams<S>& j, int n) {
  require(static_cast<int>(j.gamma.size()) >= n, "norm_squares_from_jacobi: prefix too short");
  std::vector<S> out;
  S acc(1);
  for (int k = 0; k < n; ++k) {
    acc = acc * j.gamma[k];
    out.push_back(acc);
  }
  return out;
}

JacobiParams<double> to_double(const JacobiParams<Rational>& j);

struct CauchyResult {
  std::complex<double> value;
  int depth_achieved = 0;
  bool ok = true;
};

// 1/(z - b0 - g0/(z - b1 - ...)) to the given depth, evaluated bottom-up.
CauchyResult cauchy_transform(const JacobiParams<double>& j, std::complex<double> z, int depth);

// The two readings of the q-Meixner-Pollaczek density: the g-factor exactly
// as printed, and the Askey-Wilson normalisation that integrates to 1.
enum class MpForm { AsPrinted, AskeyWilson };

double mp_density(double x, const Rational& alpha, const Rational& q, MpForm form = MpForm::AskeyWilson);

struct QuadratureConfig {
  double rel_tol = 1e-12;
  double tail_tol = 1e-13;  // absolute bound on the neglected tail
  unsigned max_depth = 20;
};

struct QuadratureResult {
  double value = 0;
  double error_estimate = 0;
  double tail_bound = 0;
};

// int x^k mp_density(x) dx over the support.
QuadratureResult mp_moment(int k, const Rational& alpha, const Rational& q, MpForm form,
                           const QuadratureConfig& cfg = {});
// int x^{2n} / (2 cosh(pi x / 2)) dx
QuadratureResult sech_moment(int n, const QuadratureConfig& cfg = {});

// Support of the (q,1,v,1) law.
std::pair<double, double> support_interval(const Rational& q, const Rational& v);

// Nodes/weights of the M-point Gauss rule of the truncated Jacobi matrix.
struct GaussRule {
  std::vector<double> nodes, weights;
};
GaussRule gauss_rule(const JacobiParams<double>& j, int M);

struct CarlemanSum {
  double partial = 0;     // sum_{n<N} gamma_n^{-1/2}
  double comparison = 0;  // sum_{n=1..N} 1/n
};
CarlemanSum carleman_check(const JacobiParams<Rational>& j, int N);

}  // namespace quadra

#include "quadra/orthopoly.hpp"

#include <Eigen/Eigenvalues>
#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <limits>

namespace quadra {

namespace {

constexpr double kPi = boost::math::constants::pi<double>();
constexpr int kMaxProductFactors = 500;
constexpr double kFactorTol = 1e-15;

using cd = std::complex<double>;

// prod_k (1 - c b x q^k + b^2 q^{2k}), truncated once a factor is 1 to 1e-15
cd g_factor(double x, cd b, double q, double c) {
  cd prod = 1.0;
  double qk = 1.0;
  for (int k = 0; k < kMaxProductFactors; ++k) {
    cd f = 1.0 - c * b * x * qk + b * b * qk * qk;
    prod *= f;
    if (std::abs(f - 1.0) < kFactorTol) break;
    qk *= q;
  }
  return prod;
}

// (a; q)_inf
double q_pochhammer(double a, double q) {
  double prod = 1.0, qk = 1.0;
  for (int k = 0; k < kMaxProductFactors; ++k) {
    double f = 1.0 - a * qk;
    prod *= f;
    if (std::abs(f - 1.0) < kFactorTol) break;
    qk *= q;
  }
  return prod;
}

void check_mp_range(const Rational& alpha, const Rational& q) {
  require(Rational(-1) < alpha && alpha < Rational(1), "q-Meixner-Pollaczek: need -1 < alpha < 1");
  require(Rational(-1) < q && q < Rational(1), "q-Meixner-Pollaczek: need -1 < q < 1");
}

template <class F>
double integrate(F f, double a, double b, const QuadratureConfig& cfg, double* err) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, cfg.max_depth,
                                                                        cfg.rel_tol, err);
}

}  // namespace

JacobiParams<Rational> jacobi_qmp(const Rational& alpha, const Rational& q, int length) {
  check_mp_range(alpha, q);
  JacobiParams<Rational> j;
  for (int n = 1; n <= length; ++n) {
    j.beta.emplace_back(0);
    j.gamma.push_back(qt_number(n, q, Rational(1)) *
                      (Rational(1) + alpha * pow(q, static_cast<unsigned>(n - 1))));
  }
  return j;
}

JacobiParams<double> to_double(const JacobiParams<Rational>& j) {
  JacobiParams<double> out;
  for (const auto& b : j.beta) out.beta.push_back(b.to_double());
  for (const auto& g : j.gamma) out.gamma.push_back(g.to_double());
  return out;
}

CauchyResult cauchy_transform(const JacobiParams<double>& j, std::complex<double> z, int depth) {
  require(depth >= 1, "cauchy_transform: depth >= 1");
  require(z.imag() != 0.0, "cauchy_transform: Im z must be nonzero");
  require(static_cast<int>(j.beta.size()) >= depth && static_cast<int>(j.gamma.size()) >= depth - 1,
          "cauchy_transform: Jacobi prefix shorter than depth");
  CauchyResult out;
  cd f = z - j.beta[depth - 1];
  int achieved = 1;
  for (int k = depth - 2; k >= 0; --k) {
    if (std::abs(f) < std::numeric_limits<double>::min() || !std::isfinite(std::abs(f))) {
      out.ok = false;
      out.depth_achieved = achieved;
      return out;
    }
    f = z - j.beta[k] - j.gamma[k] / f;
    ++achieved;
  }
  if (std::abs(f) < std::numeric_limits<double>::min() || !std::isfinite(std::abs(f))) {
    out.ok = false;
    out.depth_achieved = achieved;
    return out;
  }
  out.value = 1.0 / f;
  out.depth_achieved = achieved;
  return out;
}

double mp_density(double x, const Rational& alpha, const Rational& q_r, MpForm form) {
  check_mp_range(alpha, q_r);
  const double q = q_r.to_double(), a = alpha.to_double();
  require(std::abs(q) <= 0.95, "mp_density: |q| > 0.95 rejected (product convergence)");
  const double L = 2.0 / std::sqrt(1.0 - q);
  require(std::abs(x) < L, "mp_density: x outside the support");
  // beta^2 = -alpha; beta is imaginary when alpha > 0
  const cd beta = a <= 0 ? cd(std::sqrt(-a), 0) : cd(0, std::sqrt(a));
  const double c = form == MpForm::AsPrinted ? 4.0 / std::sqrt(1.0 - q) : std::sqrt(1.0 - q);
  const double sq = std::sqrt(std::abs(q));
  const cd I(0, 1);
  cd num = g_factor(x, 1.0, q, c) * g_factor(x, -1.0, q, c);
  if (q >= 0)
    num *= g_factor(x, sq, q, c) * g_factor(x, -sq, q, c);
  else
    num *= g_factor(x, I * sq, q, c) * g_factor(x, -I * sq, q, c);
  const cd den = g_factor(x, I * beta, q, c) * g_factor(x, -I * beta, q, c);
  const double pre = q_pochhammer(q, q) * q_pochhammer(-a, q) / (2.0 * kPi * std::sqrt(L * L - x * x));
  return pre * (num / den).real();
}

QuadratureResult mp_moment(int k, const Rational& alpha, const Rational& q, MpForm form,
                           const QuadratureConfig& cfg) {
  const double L = 2.0 / std::sqrt(1.0 - q.to_double());
  // x = L cos(theta) removes the endpoint square-root singularity
  auto f = [&](double th) {
    const double x = L * std::cos(th);
    if (std::abs(x) >= L) return 0.0;
    return std::pow(x, k) * mp_density(x, alpha, q, form) * L * std::sin(th);
  };
  QuadratureResult r;
  r.value = integrate(f, 0.0, kPi, cfg, &r.error_estimate);
  return r;
}

QuadratureResult sech_moment(int n, const QuadratureConfig& cfg) {
  require(n >= 0 && n <= 10, "sech_moment: 0 <= n <= 10");
  const int m = 2 * n;
  const double a = kPi / 2;
  // 1/(2cosh(a x)) <= e^{-a x}; tail = 2 * Gamma(m+1, aX) / a^{m+1}
  auto tail = [&](double X) { return 2.0 * boost::math::tgamma(m + 1.0, a * X) / std::pow(a, m + 1); };
  double X = 16.0;
  while (tail(X) > cfg.tail_tol) X *= 1.25;
  auto f = [&](double x) { return std::pow(x, m) / (2.0 * std::cosh(a * x)); };
  QuadratureResult r;
  // split [0, X] so the peak near x ~ 2n/a is well resolved
  double err1 = 0, err2 = 0;
  const double mid = std::min(X, 4.0 * (m + 1) / a);
  r.value = 2.0 * (integrate(f, 0.0, mid, cfg, &err1) + integrate(f, mid, X, cfg, &err2));
  r.error_estimate = 2.0 * (err1 + err2);
  r.tail_bound = tail(X);
  return r;
}

std::pair<double, double> support_interval(const Rational& q, const Rational& v) {
  require(q < Rational(1) && v < Rational(1), "support_interval: q, v < 1");
  const double r = 2.0 / (std::sqrt(1.0 - q.to_double()) * std::sqrt(1.0 - v.to_double()));
  return {-r, r};
}

GaussRule gauss_rule(const JacobiParams<double>& j, int M) {
  require(M >= 1 && static_cast<int>(j.beta.size()) >= M && static_cast<int>(j.gamma.size()) >= M - 1,
          "gauss_rule: Jacobi prefix too short");
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(M, M);
  for (int i = 0; i < M; ++i) {
    J(i, i) = j.beta[i];
    if (i + 1 < M) {
      require(j.gamma[i] >= 0, "gauss_rule: negative gamma");
      J(i, i + 1) = J(i + 1, i) = std::sqrt(j.gamma[i]);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  GaussRule rule;
  for (int i = 0; i < M; ++i) {
    rule.nodes.push_back(es.eigenvalues()(i));
    const double v0 = es.eigenvectors()(0, i);
    rule.weights.push_back(v0 * v0);
  }
  return rule;
}

CarlemanSum carleman_check(const JacobiParams<Rational>& j, int N) {
  require(static_cast<int>(j.gamma.size()) >= N, "carleman_check: prefix too short");
  CarlemanSum s;
  for (int n = 0; n < N; ++n) {
    require(j.gamma[n].sign() > 0, "carleman_check: gamma must be positive");
    s.partial += 1.0 / std::sqrt(j.gamma[n].to_double());
    s.comparison += 1.0 / (n + 1);
  }
  return s;
}

}  // namespace quadra

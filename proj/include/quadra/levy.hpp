#pragma once

#include <map>
#include <string>
#include <vector>

#include "quadra/fock.hpp"
#include "quadra/kernels.hpp"
#include "quadra/linalg.hpp"
#include "quadra/moments.hpp"
#include "quadra/partitions.hpp"

namespace quadra {

// Variables x_0..x_{k-1}; the involution reverses a word.
using VarWord = std::vector<int>;

// k variables on K = R^d with diagonal metric (all ones unless produced by
// gns_reconstruct, which keeps an orthogonal but unnormalised basis so that
// everything stays rational). Each T_i is self-adjoint for that metric.
struct LevySpec {
  int k = 0, d = 0;
  std::vector<std::vector<Rational>> xi;
  std::vector<RatMatrix> T;
  std::vector<Rational> lambda;
  std::vector<Rational> metric;

  static LevySpec make(std::vector<std::vector<Rational>> xi, std::vector<RatMatrix> T,
                       std::vector<Rational> lambda, std::vector<Rational> metric = {});
  void validate() const;
  Rational inner(const std::vector<Rational>& a, const std::vector<Rational>& b) const;
};

// R(x_(B:u), s): s*lambda for a singleton, s*<xi, T...T xi> otherwise.
Rational levy_cumulant(const LevySpec& spec, const VarWord& word, const std::vector<int>& block,
                       const Rational& s);
// R_pi = product over blocks.
Rational levy_partition_cumulant(const LevySpec& spec, const VarWord& word, const SetPartition& pi,
                                 const Rational& s);

constexpr int kMaxLevyN = 8;

// Coefficients c_0..c_n of M(x_u, s) = sum_j c_j s^j.
template <class S>
std::vector<S> levy_moment_s_poly(const LevySpec& spec, const VarWord& word, const ParamValues<S>& params,
                                  Exec exec = Exec::Parallel) {
  const int n = static_cast<int>(word.size());
  guard(n <= kMaxLevyN, "levy_moment capped at n = 8");
  require(n >= 1, "levy_moment: empty word");
  const auto& table = partition_table(n, 1);
  auto tw = top_weights(n, params);
  std::vector<S> out(n + 1, S(0));
  // per block count, accumulated separately to keep the reduction exact
  for (int blocks = 1; blocks <= n; ++blocks)
    out[blocks] = reduce_sum<S>(
        table.parts.size(),
        [&](std::size_t i) -> S {
          if (static_cast<int>(table.parts[i].block_count()) != blocks || is_zero(tw[i])) return S(0);
          Rational r = levy_partition_cumulant(spec, word, table.parts[i], Rational(1));
          return r.is_zero() ? S(0) : tw[i] * lift<S>(r);
        },
        exec);
  return out;
}

template <class S>
S levy_moment(const LevySpec& spec, const VarWord& word, const Rational& s, const ParamValues<S>& params,
              Exec exec = Exec::Parallel) {
  auto c = levy_moment_s_poly(spec, word, params, exec);
  S sum(0);
  Rational sp(1);
  for (const auto& cj : c) {
    sum += cj * lift<S>(sp);
    sp *= s;
  }
  return sum;
}

// Half-open rational interval [lo, hi).
struct Interval {
  Rational lo, hi;
};
using IntervalSet = std::vector<Interval>;  // disjoint union

// The Fock-space realisation on H = L^2-step functions (x) K, H-bar = R.
struct IntervalModel {
  Space space;
  std::vector<Factor> factors;
};
IntervalModel build_interval_model(const LevySpec& spec, const VarWord& word,
                                   const std::vector<IntervalSet>& intervals);

template <class S>
S fock_levy_oracle(const LevySpec& spec, const VarWord& word, const std::vector<IntervalSet>& intervals,
                   const ParamValues<S>& params) {
  auto model = build_interval_model(spec, word, intervals);
  Fock<S> F(model.space, params);
  return F.vacuum_expectation(model.factors);
}

// Falling factorial N (N-1) ... (N-k+1).
Rational falling_factorial(int N, int k);

// phi(St_pi) for the equal subdivision of [0, s) into N pieces. By
// exchangeability of disjoint equal intervals only ker v matters, so the sum
// over v with ker v = pi is N^(#pi falling) copies of one canonical term.
template <class S>
S stochastic_measure_moment(const LevySpec& spec, const VarWord& word, const SetPartition& pi,
                            const Rational& s, int N, const ParamValues<S>& params) {
  const int n = static_cast<int>(word.size());
  guard(N <= 12 && n <= 5, "stochastic measure capped at N <= 12, n <= 5");
  require(pi.size() == n, "partition size differs from the word length");
  const int blocks = static_cast<int>(pi.block_count());
  if (blocks > N) return S(0);
  const Rational len = s / Rational(N);
  auto label = pi.rgs();
  std::vector<IntervalSet> iv;
  for (int i = 0; i < n; ++i) iv.push_back({{len * Rational(label[i]), len * Rational(label[i] + 1)}});
  return fock_levy_oracle(spec, word, iv, params) * lift<S>(falling_factorial(N, blocks));
}

// Sum over diagonal sigma with sigma|[n] = pi of the weight times R_pi(x_u, s).
template <class S>
S limit_formula(const LevySpec& spec, const VarWord& word, const SetPartition& pi, const Rational& s,
                const ParamValues<S>& params) {
  const int n = static_cast<int>(word.size());
  const auto& table = partition_table(n, 1);
  auto tw = top_weights(n, params);
  for (std::size_t i = 0; i < table.parts.size(); ++i)
    if (table.parts[i] == pi) return tw[i] * lift<S>(levy_partition_cumulant(spec, word, pi, s));
  throw ContractViolation("limit_formula: partition not found");
}

// err(N) = value(N) - limit is a polynomial of degree <= n-1 in 1/N (n <= 4).
// Fit c0 + c1/N + c2/N^2 + c3/N^3 exactly on the sample points, confirm it on
// the hold-out points; c0 == 0 and |err_N| <= C/N with C = |c1|+|c2|+|c3|
// is the O(1/N) statement.
struct ConvergenceFit {
  std::vector<int> Ns;
  std::vector<Rational> errors;
  Rational coeffs[4];
  Rational C;
  bool holdout_exact = true;
  bool bounded = true;  // |err_N| <= C/N at every sample
  bool ok() const { return coeffs[0].is_zero() && holdout_exact && bounded; }
};

ConvergenceFit stochastic_convergence(const LevySpec& spec, const VarWord& word, const SetPartition& pi,
                                      const Rational& s, const ParamValues<Rational>& params,
                                      const std::vector<int>& Ns = {2, 4, 8, 12},
                                      const std::vector<int>& holdout = {3, 6, 10});

// Appends the diagonal measure Delta_n of variable `var` as a new variable:
// xi' = T^{n-1} xi, T' = T^n, lambda' = <xi, T^{n-2} xi>, so that
// R(x..x, y) = R_{k+n}(x).
LevySpec with_diagonal_measure(const LevySpec& spec, int var, int n);

// --- functionals ---------------------------------------------------------------

template <class S>
struct Functional {
  int k = 0;    // number of variables
  int cap = 0;  // defined on words of length 1..cap
  std::map<VarWord, S> values;

  const S& at(const VarWord& w) const {
    if (static_cast<int>(w.size()) > cap) throw ContractViolation("functional: word exceeds degree cap");
    auto it = values.find(w);
    if (it == values.end()) throw ContractViolation("functional: missing word value");
    return it->second;
  }
};

// All words over k letters of length 1..D, by length then lexicographic.
std::vector<VarWord> words_up_to(int k, int D);

template <class S, class F>
Functional<S> tabulate(int k, int D, F f) {
  Functional<S> out{k, D, {}};
  for (const auto& w : words_up_to(k, D)) out.values.emplace(w, f(w));
  return out;
}

namespace detail {

template <class S>
VarWord sub_word(const VarWord& w, const std::vector<int>& block) {
  VarWord out;
  for (int i : block) out.push_back(w[i]);
  return out;
}

}  // namespace detail

// Psi(x_u) = Phi(x_u) - sum_{pi != 1-hat} weight(pi) prod_B Psi(x_(B:u)).
template <class S>
Functional<S> cumulant_functional(const Functional<S>& phi, const ParamValues<S>& params) {
  guard(phi.cap <= kMaxLevyN, "functional recursion capped at degree 8");
  Functional<S> psi{phi.k, phi.cap, {}};
  std::vector<std::vector<S>> tw(phi.cap + 1);
  for (int n = 1; n <= phi.cap; ++n) tw[n] = top_weights(n, params);
  for (const auto& w : words_up_to(phi.k, phi.cap)) {
    const int n = static_cast<int>(w.size());
    const auto& table = partition_table(n, 1);
    S value = phi.at(w);
    for (std::size_t i = 0; i < table.parts.size(); ++i) {
      const auto& p = table.parts[i];
      if (p.block_count() == 1 || is_zero(tw[n][i])) continue;
      S term = tw[n][i];
      for (const auto& b : p.blocks()) term = term * psi.at(detail::sub_word<S>(w, b));
      value -= term;
    }
    psi.values.emplace(w, value);
  }
  return psi;
}

template <class S>
Functional<S> moment_functional(const Functional<S>& psi, const ParamValues<S>& params) {
  guard(psi.cap <= kMaxLevyN, "functional recursion capped at degree 8");
  Functional<S> phi{psi.k, psi.cap, {}};
  for (int n = 1; n <= psi.cap; ++n) {
    const auto& table = partition_table(n, 1);
    auto tw = top_weights(n, params);
    for (const auto& w : words_up_to(psi.k, n)) {
      if (static_cast<int>(w.size()) != n) continue;
      S value(0);
      for (std::size_t i = 0; i < table.parts.size(); ++i) {
        if (is_zero(tw[i])) continue;
        S term = tw[i];
        for (const auto& b : table.parts[i].blocks()) term = term * psi.at(detail::sub_word<S>(w, b));
        value += term;
      }
      phi.values.emplace(w, value);
    }
  }
  return phi;
}

// Variables 0..k1-1 belong to phi1, k1..k1+k2-1 to phi2; mixed cumulants vanish.
template <class S>
Functional<S> product_functional(const Functional<S>& phi1, const Functional<S>& phi2,
                                 const ParamValues<S>& params) {
  require(phi1.cap == phi2.cap, "product_functional: degree caps differ");
  auto psi1 = cumulant_functional(phi1, params), psi2 = cumulant_functional(phi2, params);
  const int k1 = phi1.k;
  auto psi = tabulate<S>(phi1.k + phi2.k, phi1.cap, [&](const VarWord& w) -> S {
    bool all1 = true, all2 = true;
    for (int x : w) (x < k1 ? all2 : all1) = false;
    if (all1) return psi1.at(w);
    if (all2) {
      VarWord shifted;
      for (int x : w) shifted.push_back(x - k1);
      return psi2.at(shifted);
    }
    return S(0);
  });
  return moment_functional(psi, params);
}

template <class S>
Functional<S> levy_moment_functional(const LevySpec& spec, const Rational& s, int D,
                                     const ParamValues<S>& params) {
  return tabulate<S>(spec.k, D, [&](const VarWord& w) { return levy_moment(spec, w, s, params); });
}

template <class S>
Functional<S> levy_cumulant_functional(const LevySpec& spec, const Rational& s, int D) {
  return tabulate<S>(spec.k, D, [&](const VarWord& w) {
    std::vector<int> all(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) all[i] = static_cast<int>(i);
    return lift<S>(levy_cumulant(spec, w, all, s));
  });
}

// --- Levy-Hinchin pairs and convolution -------------------------------------------

struct LevyHinchinPair {
  Rational lambda;
  std::vector<Rational> tau_moments;  // m_0(tau), m_1(tau), ...
};

// Hankel PSD check of the tau moments up to the largest complete square block.
PsdReport hankel_check(const std::vector<Rational>& moments);

// r_1 = lambda, r_n = m_{n-2}(tau); tau must be Hankel PSD.
std::vector<Rational> lh_cumulants(const LevyHinchinPair& mu, int N);

template <class S>
std::vector<S> convolve(const LevyHinchinPair& mu1, const LevyHinchinPair& mu2, const ParamValues<S>& params,
                        int N) {
  auto r1 = lh_cumulants(mu1, N), r2 = lh_cumulants(mu2, N);
  std::vector<S> r;
  for (int i = 0; i < N; ++i) r.push_back(lift<S>(r1[i] + r2[i]));
  return cumulants_to_moments(r, params);
}

// --- generators ---------------------------------------------------------------------

// Gram matrix G[u,v] = psi(reverse(u) v) over words of length 1..D.
RatMatrix generator_gram(const Functional<Rational>& psi, int D);
PsdReport conditional_positivity(const Functional<Rational>& psi, int D);

// Exact GNS data from a conditionally positive functional known to degree 2D+1.
LevySpec gns_reconstruct(const Functional<Rational>& psi, int D);

}  // namespace quadra

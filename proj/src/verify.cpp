#include "quadra/verify.hpp"

#include <algorithm>
#include <sstream>

#include "quadra/fock.hpp"
#include "quadra/levy.hpp"
#include "quadra/moments.hpp"
#include "quadra/sampling.hpp"

namespace quadra {

void SuiteReport::add(std::string name, bool ok, std::string detail) {
  pass = pass && ok;
  cases.push_back({std::move(name), ok, std::move(detail)});
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"wick-gauss", "wick-full",          "commutation", "positivity",
                                              "adjoint",    "norms",              "cumulant-roundtrip",
                                              "levy",       "convolution",        "trace"};
  return names;
}

namespace {

std::string draw_name(const char* prefix, int i) { return std::string(prefix) + " " + std::to_string(i); }

SuiteReport suite_wick_gauss(Sampler& rng) {
  SuiteReport r{"wick-gauss"};
  const int ns[] = {2, 4, 6};
  for (int i = 0; i < 50; ++i) {
    const int n = ns[i % 3];
    auto dp = rng.admissible();
    auto P = rational_values(dp);
    GaussianSpec spec{Space::euclidean(2, 2), {}};
    std::vector<Factor> word;
    for (int k = 0; k < n; ++k) {
      VectorPair x{rng.vector(2), rng.vector(2)};
      spec.vectors.push_back(x);
      word.push_back({Annihilate{x}, Create{x}});
    }
    auto formula = gaussian_wick(spec, P);
    auto oracle = Fock<Rational>(spec.space, P).vacuum_expectation(word);
    r.add(draw_name("draw", i), formula == oracle,
          "n=" + std::to_string(n) + " " + dp.str() + " formula=" + formula.str() + " oracle=" + oracle.str());
  }
  return r;
}

SuiteReport suite_wick_full(Sampler& rng) {
  SuiteReport r{"wick-full"};
  for (int i = 0; i < 25; ++i) {
    const int n = 2 + i % 4;
    auto dp = rng.admissible();
    auto P = rational_values(dp);
    QuadrabasicSpec spec;
    spec.space = Space::euclidean(2, 2);
    std::vector<Factor> word;
    for (int k = 0; k < n; ++k) {
      VectorPair x{rng.vector(2), rng.vector(2)};
      GaugePair g{rng.symmetric(2), rng.symmetric(2)};
      std::pair<Rational, Rational> lam{rng.nonzero_rational(), rng.nonzero_rational()};
      spec.vectors.push_back(x);
      spec.gauges.push_back(g);
      spec.lambdas.push_back(lam);
      word.push_back({Annihilate{x}, Create{x}, Gauge{g}, Scalar{lam.first * lam.second}});
    }
    auto formula = full_wick(spec, P);
    auto oracle = Fock<Rational>(spec.space, P).vacuum_expectation(word);
    r.add(draw_name("draw", i), formula == oracle,
          "n=" + std::to_string(n) + " " + dp.str() + " formula=" + formula.str() + " oracle=" + oracle.str());
  }
  return r;
}

SuiteReport suite_commutation(Sampler& rng) {
  SuiteReport r{"commutation"};
  for (int i = 0; i < 20; ++i) {
    auto dp = rng.admissible();
    auto single = check_commutation_single(rng.vector(2), rng.vector(2), *dp[0], *dp[1], 3);
    r.add(draw_name("single", i), single.holds, dp.str() + (single.holds ? "" : " fails at " + single.witness));
    // tensor form lives at t = w = 1
    auto tp = DeformationParams::admissible(*dp[0] / *dp[1], Rational(1), *dp[2] / *dp[3], Rational(1));
    VectorPair x1{rng.vector(2), rng.vector(2)}, x2{rng.vector(2), rng.vector(2)};
    auto tensor = check_commutation_tensor(Space::euclidean(2, 2), x1, x2, tp, 3);
    r.add(draw_name("tensor", i), tensor.holds, tp.str() + (tensor.holds ? "" : " fails at " + tensor.witness));
  }
  return r;
}

// PD for |q| < t; for |q| = t singular once two letters can be swapped; for
// |q| > t indefinite. With one letter the matrix is the scalar prod_k [k]_{q,t}.
Definiteness expected_verdict(int n, const Rational& q, const Rational& t, std::size_t d) {
  if (n <= 1) return Definiteness::PositiveDefinite;
  if (d == 1) {
    Rational prod(1);
    for (int k = 1; k <= n; ++k) prod *= qt_number(k, q, t);
    return prod.sign() > 0 ? Definiteness::PositiveDefinite
           : prod.sign() == 0 ? Definiteness::PositiveSemidefinite
                               : Definiteness::Indefinite;
  }
  if (abs(q) < t) return Definiteness::PositiveDefinite;
  if (abs(q) == t) return Definiteness::PositiveSemidefinite;
  return Definiteness::Indefinite;
}

SuiteReport suite_positivity() {
  SuiteReport r{"positivity"};
  const std::pair<Rational, Rational> qts[] = {
      {Rational(1, 3), Rational(1, 2)}, {Rational(-1, 3), Rational(1, 2)}, {Rational(1, 2), Rational(1, 2)},
      {Rational(-1, 2), Rational(1, 2)}, {Rational(0), Rational(1)},      {Rational(1), Rational(1)},
      {Rational(-1), Rational(1)},       {Rational(1), Rational(1, 2)}};
  for (const auto& [q, t] : qts)
    for (int n = 1; n <= 4; ++n)
      for (std::size_t d = 1; d <= 2; ++d) {
        auto got = positivity_check(n, q, t, d).verdict;
        auto want = expected_verdict(n, q, t, d);
        r.add("q=" + q.str() + " t=" + t.str() + " n=" + std::to_string(n) + " d=" + std::to_string(d),
              got == want, std::string("verdict ") + to_string(got) + ", expected " + to_string(want));
      }
  return r;
}

SuiteReport suite_adjoint(Sampler& rng) {
  SuiteReport r{"adjoint"};
  for (int i = 0; i < 20; ++i) {
    auto dp = rng.admissible();
    RatMatrix T(2, 2), Tb(2, 2);
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 2; ++b) {
        T(a, b) = rng.rational(2, 3);
        Tb(a, b) = rng.rational(2, 3);
      }
    auto rep = gauge_adjoint_check(Space::euclidean(2, 2), GaugePair{T, Tb}, dp, 3);
    r.add(draw_name("draw", i), rep.holds, dp.str() + (rep.holds ? "" : " fails at " + rep.witness));
  }
  return r;
}

SuiteReport suite_norms() {
  SuiteReport r{"norms"};
  const std::pair<Rational, Rational> qts[] = {{Rational(-1, 3), Rational(1, 2)},
                                               {Rational(1, 2), Rational(1)},
                                               {Rational(1, 2), Rational(1, 2)},
                                               {Rational(1, 3), Rational(1, 2)}};
  for (const auto& [q, t] : qts) {
    auto c = creation_norm_check(q, t, 200);
    // 0 < q < t = 1 approaches its supremum only in the limit: q^200 error
    const bool ok = std::abs(c.formula - c.empirical) <= 1e-12;
    std::ostringstream s;
    s.precision(17);
    s << c.branch << " formula=" << c.formula << " empirical=" << c.empirical;
    r.add("q=" + q.str() + " t=" + t.str(), ok, s.str());
  }
  return r;
}

// Free moment-cumulant relation straight from NC(n), for the (0,1,0,1) point.
std::vector<Rational> free_moments(const std::vector<Rational>& r) {
  std::vector<Rational> m;
  for (int n = 1; n <= static_cast<int>(r.size()); ++n) {
    Rational sum(0);
    for (const auto& p : enumerate_set_partitions(n, 1)) {
      if (!is_noncrossing(p)) continue;
      Rational term(1);
      for (const auto& b : p.blocks()) term *= r[b.size() - 1];
      sum += term;
    }
    m.push_back(sum);
  }
  return m;
}

SuiteReport suite_cumulant_roundtrip(Sampler& rng) {
  SuiteReport r{"cumulant-roundtrip"};
  for (int i = 0; i < 20; ++i) {
    auto dp = rng.admissible();
    auto P = rational_values(dp);
    std::vector<Rational> m;
    for (int k = 0; k < 8; ++k) m.push_back(rng.rational(5, 4));
    auto back = cumulants_to_moments(moments_to_cumulants(m, P), P);
    r.add(draw_name("draw", i), back == m, dp.str());
  }
  auto free = rational_values(DeformationParams::admissible(Rational(0), Rational(1), Rational(0), Rational(1)));
  for (int i = 0; i < 5; ++i) {
    std::vector<Rational> c;
    for (int k = 0; k < 8; ++k) c.push_back(rng.rational(3, 3));
    r.add(draw_name("free", i), cumulants_to_moments(c, free) == free_moments(c), "NC(n) oracle at (0,1,0,1)");
  }
  return r;
}

LevySpec random_levy(Sampler& rng, int k, std::size_t d) {
  std::vector<std::vector<Rational>> xi;
  std::vector<RatMatrix> T;
  std::vector<Rational> lambda;
  for (int i = 0; i < k; ++i) {
    xi.push_back(rng.vector(d));
    T.push_back(rng.symmetric(d));
    lambda.push_back(rng.rational());
  }
  return LevySpec::make(xi, T, lambda);
}

SuiteReport suite_levy(Sampler& rng) {
  SuiteReport r{"levy"};
  for (int i = 0; i < 10; ++i) {
    auto spec = random_levy(rng, 2, 2);
    auto dp = rng.admissible();
    auto P = rational_values(dp);
    VarWord w;
    const int n = 1 + i % 4;
    for (int j = 0; j < n; ++j) w.push_back(rng.integer(0, 1));
    const Rational s(rng.integer(1, 5), rng.integer(1, 3));
    auto formula = levy_moment(spec, w, s, P);
    auto oracle = fock_levy_oracle(spec, w, std::vector<IntervalSet>(n, IntervalSet{{Rational(0), s}}), P);
    r.add(draw_name("moment", i), formula == oracle,
          "word " + std::to_string(n) + " letters, " + dp.str() + " formula=" + formula.str() + " oracle=" + oracle.str());
  }
  {
    auto spec = random_levy(rng, 2, 2);
    auto P = rational_values(rng.admissible());
    auto phi = levy_moment_functional(spec, Rational(1), 5, P);
    auto psi = cumulant_functional(phi, P);
    auto R = levy_cumulant_functional<Rational>(spec, Rational(1), 5);
    r.add("psi of moments is the cumulant", psi.values == R.values, "words up to length 5");
    bool deriv = true;
    for (const auto& w : words_up_to(2, 4)) deriv = deriv && levy_moment_s_poly(spec, w, P)[1] == R.at(w);
    r.add("generator is the s-derivative", deriv, "words up to length 4");
  }
  {
    auto spec = random_levy(rng, 2, 2);
    const int D = 3;
    auto psi = levy_cumulant_functional<Rational>(spec, Rational(1), 2 * D + 1);
    auto verdict = conditional_positivity(psi, D).verdict;
    r.add("conditional positivity", verdict != Definiteness::Indefinite, to_string(verdict));
    auto rebuilt = gns_reconstruct(psi, D);
    auto again = levy_cumulant_functional<Rational>(rebuilt, Rational(1), D + 1);
    bool same = true;
    for (const auto& [w, v] : again.values) same = same && v == psi.at(w);
    r.add("gns round trip", same, "D=3, words up to length 4, reconstructed d=" + std::to_string(rebuilt.d));
  }
  {
    auto spec = random_levy(rng, 2, 2);
    auto P = rational_values(rng.admissible());
    const VarWord w{0, 1, 1, 0};
    for (const char* text : {"1 4 | 2 3", "1 2 3 4", "1 3 | 2 4", "1 | 2 3 | 4"}) {
      auto pi = SetPartition::parse(text);
      auto fit = stochastic_convergence(spec, w, pi, Rational(1), P);
      std::ostringstream s;
      s.precision(6);
      for (std::size_t k = 0; k < fit.Ns.size(); ++k)
        s << " N=" << fit.Ns[k] << ":" << abs(fit.errors[k]).to_double();
      s << " c0=" << fit.coeffs[0].str() << " C=" << fit.C.to_double()
        << (fit.holdout_exact ? " hold-out exact" : " hold-out MISMATCH");
      const bool ok = fit.ok();
      r.add(std::string("stochastic ") + text, ok, s.str());
    }
  }
  return r;
}

LevyHinchinPair random_lh(Sampler& rng, int len) {
  // tau = positive combination of point masses: Hankel PSD by construction
  std::vector<std::pair<Rational, Rational>> atoms;
  for (int j = 0; j < 3; ++j) atoms.emplace_back(rng.rational(2, 2), Rational(rng.integer(1, 3), rng.integer(1, 3)));
  LevyHinchinPair mu{rng.rational(), {}};
  for (int n = 0; n < len; ++n) {
    Rational m(0);
    for (const auto& [x, wgt] : atoms) m += wgt * pow(x, static_cast<unsigned>(n));
    mu.tau_moments.push_back(m);
  }
  return mu;
}

Functional<Rational> one_variable(const std::vector<Rational>& m) {
  Functional<Rational> f{1, static_cast<int>(m.size()), {}};
  for (std::size_t n = 1; n <= m.size(); ++n) f.values.emplace(VarWord(n, 0), m[n - 1]);
  return f;
}

SuiteReport suite_convolution(Sampler& rng) {
  SuiteReport r{"convolution"};
  for (int i = 0; i < 5; ++i) {
    auto dp = rng.admissible();
    auto P = rational_values(dp);
    auto mu = random_lh(rng, 8), nu = random_lh(rng, 8);
    auto m = convolve(mu, nu, P, 8);
    auto rn = moments_to_cumulants(m, P);
    auto r1 = lh_cumulants(mu, 8), r2 = lh_cumulants(nu, 8);
    bool add = true;
    for (int k = 0; k < 8; ++k) add = add && rn[k] == r1[k] + r2[k];
    r.add(draw_name("additivity", i), add, dp.str());

    const int D = 5;
    auto phi1 = one_variable(cumulants_to_moments(lh_cumulants(mu, D), P));
    auto phi2 = one_variable(cumulants_to_moments(lh_cumulants(nu, D), P));
    auto prod = product_functional(phi1, phi2, P);
    bool same = true;
    for (int n = 1; n <= D; ++n) {
      Rational sum(0);
      for (const auto& w : words_up_to(2, n))
        if (static_cast<int>(w.size()) == n) sum += prod.at(w);
      same = same && sum == m[n - 1];
    }
    r.add(draw_name("product functional", i), same, "(x1+x2)^n for n <= 5");
    auto psi = cumulant_functional(prod, P);
    bool mixed = true;
    for (const auto& [w, v] : psi.values) {
      const bool pure = std::all_of(w.begin(), w.end(), [&](int x) { return x == w[0]; });
      if (!pure) mixed = mixed && v.is_zero();
    }
    r.add(draw_name("mixed cumulants vanish", i), mixed);
  }
  return r;
}

SuiteReport suite_trace(Sampler& rng, const DeformationParams& at) {
  SuiteReport r{"trace"};
  const std::vector<Rational> eta{Rational(1), Rational(2)};
  const Rational eta4 = Rational(25);  // |eta|^4
  auto sym = poly_values(DeformationParams::symbolic());
  const Poly expected = (Poly(Rational(1)) - sym.t * sym.v - sym.t * sym.w) * Poly(eta4);
  auto diff = cyclic_difference(trace_witness(eta), sym);
  r.add("symbolic difference", diff == expected, diff.str());
  const Poly bar_expected = (Poly(Rational(1)) - sym.q * sym.w - sym.t * sym.w) * Poly(eta4);
  auto bar = cyclic_difference(trace_witness(eta, true), sym);
  r.add("bar-side symbolic difference", bar == bar_expected, bar.str());

  DeformationParams point =
      at.fully_rational() ? at : DeformationParams::admissible(Rational(0), Rational(1), Rational(0), Rational(1));
  auto P = rational_values(point);
  auto value = cyclic_difference(trace_witness(eta), P);
  const Rational want = (Rational(1) - P.t * P.v - P.t * P.w) * eta4;
  r.add("difference at " + point.str(), value == want,
        value.str() + (value.is_zero() ? " (vanishes)" : " (nonzero: vacuum state is not a trace here)"));

  auto free = rational_values(DeformationParams::admissible(Rational(0), Rational(1), Rational(0), Rational(1)));
  bool all_zero = true;
  for (int i = 0; i < 10; ++i) {
    GaussianSpec spec{Space::euclidean(2, 2), {}};
    for (int k = 0; k < (i % 2 ? 6 : 4); ++k) spec.vectors.push_back({rng.vector(2), rng.vector(2)});
    all_zero = all_zero && cyclic_difference(spec, free).is_zero();
  }
  r.add("cyclic words at (0,1,0,1)", all_zero, "10 random 4- and 6-words");
  return r;
}

}  // namespace

SuiteReport run_suite(const std::string& name, std::uint64_t seed, const DeformationParams& params) {
  Sampler rng(seed);
  if (name == "wick-gauss") return suite_wick_gauss(rng);
  if (name == "wick-full") return suite_wick_full(rng);
  if (name == "commutation") return suite_commutation(rng);
  if (name == "positivity") return suite_positivity();
  if (name == "adjoint") return suite_adjoint(rng);
  if (name == "norms") return suite_norms();
  if (name == "cumulant-roundtrip") return suite_cumulant_roundtrip(rng);
  if (name == "levy") return suite_levy(rng);
  if (name == "convolution") return suite_convolution(rng);
  if (name == "trace") return suite_trace(rng, params);
  throw ContractViolation("unknown suite '" + name + "'");
}

}  // namespace quadra

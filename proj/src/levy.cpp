#include "quadra/levy.hpp"

#include <algorithm>
#include <set>

namespace quadra {

LevySpec LevySpec::make(std::vector<std::vector<Rational>> xi, std::vector<RatMatrix> T,
                        std::vector<Rational> lambda, std::vector<Rational> metric) {
  LevySpec s;
  s.k = static_cast<int>(xi.size());
  s.d = xi.empty() ? 0 : static_cast<int>(xi[0].size());
  s.xi = std::move(xi);
  s.T = std::move(T);
  s.lambda = std::move(lambda);
  s.metric = metric.empty() ? std::vector<Rational>(s.d, Rational(1)) : std::move(metric);
  s.validate();
  return s;
}

void LevySpec::validate() const {
  require(k >= 1, "levy spec: at least one variable");
  if (static_cast<int>(xi.size()) != k || static_cast<int>(T.size()) != k ||
      static_cast<int>(lambda.size()) != k || static_cast<int>(metric.size()) != d)
    throw DimensionMismatch("levy spec: inconsistent sizes");
  for (const auto& m : metric) require(m.sign() > 0, "levy spec: metric must be positive");
  for (int i = 0; i < k; ++i) {
    if (static_cast<int>(xi[i].size()) != d) throw DimensionMismatch("levy spec: xi dimension");
    if (static_cast<int>(T[i].rows()) != d || static_cast<int>(T[i].cols()) != d)
      throw DimensionMismatch("levy spec: T dimension");
    for (int a = 0; a < d; ++a)
      for (int b = a + 1; b < d; ++b)
        require(metric[a] * T[i](a, b) == metric[b] * T[i](b, a), "levy spec: T must be self-adjoint");
  }
}

Rational LevySpec::inner(const std::vector<Rational>& a, const std::vector<Rational>& b) const {
  Rational s(0);
  for (int i = 0; i < d; ++i) s += a[i] * b[i] * metric[i];
  return s;
}

Rational levy_cumulant(const LevySpec& spec, const VarWord& word, const std::vector<int>& block,
                       const Rational& s) {
  require(!block.empty(), "levy_cumulant: empty block");
  if (block.size() == 1) return s * spec.lambda.at(word.at(block[0]));
  // <xi_{u1}, T_{u2} ... T_{u(m-1)} xi_{um}>
  std::vector<Rational> v = spec.xi.at(word.at(block.back()));
  for (std::size_t j = block.size() - 1; j-- > 1;) v = spec.T.at(word.at(block[j])).apply(v);
  return s * spec.inner(spec.xi.at(word.at(block[0])), v);
}

Rational levy_partition_cumulant(const LevySpec& spec, const VarWord& word, const SetPartition& pi,
                                 const Rational& s) {
  Rational r(1);
  for (const auto& b : pi.blocks()) {
    r *= levy_cumulant(spec, word, b, s);
    if (r.is_zero()) break;
  }
  return r;
}

IntervalModel build_interval_model(const LevySpec& spec, const VarWord& word,
                                   const std::vector<IntervalSet>& intervals) {
  require(intervals.size() == word.size(), "interval model: one interval set per letter");
  std::set<Rational> cuts;
  for (const auto& set : intervals)
    for (const auto& iv : set) {
      require(iv.lo < iv.hi, "interval model: empty interval");
      cuts.insert(iv.lo);
      cuts.insert(iv.hi);
    }
  std::vector<Rational> pts(cuts.begin(), cuts.end());
  auto inside = [](const IntervalSet& set, const Rational& lo, const Rational& hi) {
    for (const auto& iv : set)
      if (iv.lo <= lo && hi <= iv.hi) return true;
    return false;
  };
  // elementary pieces covered by at least one set
  std::vector<std::pair<Rational, Rational>> pieces;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i)
    for (const auto& set : intervals)
      if (inside(set, pts[i], pts[i + 1])) {
        pieces.emplace_back(pts[i], pts[i + 1]);
        break;
      }
  const std::size_t d = spec.d, P = pieces.size();
  guard(P * d <= 255, "interval model: too many basis vectors");

  IntervalModel m;
  m.space.metric_bar = {Rational(1)};
  for (const auto& [lo, hi] : pieces)
    for (std::size_t a = 0; a < d; ++a) m.space.metric_top.push_back((hi - lo) * spec.metric[a]);

  const RatMatrix one = RatMatrix::identity(1);
  for (std::size_t f = 0; f < word.size(); ++f) {
    const int u = word[f];
    std::vector<Rational> xi(P * d, Rational(0));
    RatMatrix T(P * d, P * d);
    Rational length(0);
    for (const auto& iv : intervals[f]) length += iv.hi - iv.lo;
    for (std::size_t p = 0; p < P; ++p) {
      if (!inside(intervals[f], pieces[p].first, pieces[p].second)) continue;
      for (std::size_t a = 0; a < d; ++a) {
        xi[p * d + a] = spec.xi[u][a];
        for (std::size_t b = 0; b < d; ++b) T(p * d + a, p * d + b) = spec.T[u](a, b);
      }
    }
    VectorPair x{xi, {Rational(1)}};
    m.factors.push_back({Annihilate{x}, Create{x}, Gauge{GaugePair{T, one}}, Scalar{length * spec.lambda[u]}});
  }
  return m;
}

Rational falling_factorial(int N, int k) {
  Rational r(1);
  for (int i = 0; i < k; ++i) r *= Rational(N - i);
  return r;
}

std::vector<VarWord> words_up_to(int k, int D) {
  std::vector<VarWord> out;
  std::vector<VarWord> layer{{}};
  for (int len = 1; len <= D; ++len) {
    std::vector<VarWord> next;
    for (const auto& w : layer)
      for (int x = 0; x < k; ++x) {
        auto nw = w;
        nw.push_back(x);
        next.push_back(std::move(nw));
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

PsdReport hankel_check(const std::vector<Rational>& moments) {
  const std::size_t n = (moments.size() + 1) / 2;
  require(n >= 1, "hankel_check: no moments");
  RatMatrix H(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) H(i, j) = moments[i + j];
  return psd_analysis(H);
}

std::vector<Rational> lh_cumulants(const LevyHinchinPair& mu, int N) {
  require(N >= 1, "lh_cumulants: N >= 1");
  require(static_cast<int>(mu.tau_moments.size()) >= N - 1, "lh_cumulants: tau moments too short");
  if (!mu.tau_moments.empty())
    require(hankel_check(mu.tau_moments).verdict != Definiteness::Indefinite,
            "lh_cumulants: tau moments are not a positive sequence");
  std::vector<Rational> r{mu.lambda};
  for (int n = 2; n <= N; ++n) r.push_back(mu.tau_moments[n - 2]);
  return r;
}

namespace {

VarWord reversed(VarWord w) {
  std::reverse(w.begin(), w.end());
  return w;
}

VarWord concat(const VarWord& a, const VarWord& b) {
  VarWord w = a;
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

}  // namespace

RatMatrix generator_gram(const Functional<Rational>& psi, int D) {
  require(2 * D <= psi.cap, "generator_gram: functional known only to degree cap");
  auto words = words_up_to(psi.k, D);
  RatMatrix G(words.size(), words.size());
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = 0; j < words.size(); ++j) G(i, j) = psi.at(concat(reversed(words[i]), words[j]));
  return G;
}

PsdReport conditional_positivity(const Functional<Rational>& psi, int D) {
  return psd_analysis(generator_gram(psi, D));
}

LevySpec gns_reconstruct(const Functional<Rational>& psi, int D) {
  require(2 * D + 1 <= psi.cap, "gns_reconstruct: need psi up to degree 2D+1");
  // hermitian: psi(reverse w) = psi(w)
  for (const auto& [w, v] : psi.values) require(psi.at(reversed(w)) == v, "gns_reconstruct: psi not hermitian");
  auto G = generator_gram(psi, D);
  require(psd_analysis(G).verdict != Definiteness::Indefinite, "gns_reconstruct: psi not conditionally positive");
  auto words = words_up_to(psi.k, D);
  const std::size_t W = words.size();

  // exact Gram-Schmidt; basis vectors as coefficient rows over words
  std::vector<std::vector<Rational>> basis;
  std::vector<Rational> norms;
  auto pair = [&](const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational s(0);
    for (std::size_t i = 0; i < W; ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < W; ++j)
        if (!b[j].is_zero()) s += a[i] * b[j] * G(i, j);
    }
    return s;
  };
  for (std::size_t u = 0; u < W; ++u) {
    std::vector<Rational> r(W, Rational(0));
    r[u] = Rational(1);
    std::vector<Rational> e = r;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      Rational c = pair(basis[k], e) / norms[k];
      if (c.is_zero()) continue;
      for (std::size_t i = 0; i < W; ++i) r[i] -= c * basis[k][i];
    }
    Rational nn = pair(r, r);
    if (nn.sign() > 0) {
      basis.push_back(std::move(r));
      norms.push_back(nn);
    }
  }
  const std::size_t d = basis.size();
  require(d >= 1, "gns_reconstruct: degenerate functional (zero quotient space)");

  // <sum a_u u, x sum b_v v> = sum a_u b_v psi(rev(u) x v)
  auto mixed = [&](const std::vector<Rational>& a, int x, const std::vector<Rational>& b) {
    Rational s(0);
    for (std::size_t i = 0; i < W; ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < W; ++j)
        if (!b[j].is_zero()) s += a[i] * b[j] * psi.at(concat(concat(reversed(words[i]), {x}), words[j]));
    }
    return s;
  };

  std::vector<std::vector<Rational>> xi;
  std::vector<RatMatrix> T;
  std::vector<Rational> lambda;
  for (int x = 0; x < psi.k; ++x) {
    std::vector<Rational> unit(W, Rational(0));
    unit[static_cast<std::size_t>(x)] = Rational(1);  // length-1 words come first
    std::vector<Rational> coords;
    for (std::size_t k = 0; k < d; ++k) coords.push_back(pair(basis[k], unit) / norms[k]);
    xi.push_back(coords);
    RatMatrix H(d, d);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) H(a, b) = mixed(basis[a], x, basis[b]);
    RatMatrix M(d, d);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) M(a, b) = (H(a, b) + H(b, a)) / Rational(2) / norms[a];
    T.push_back(M);
    lambda.push_back(psi.at({x}));
  }
  return LevySpec::make(std::move(xi), std::move(T), std::move(lambda), norms);
}

}  // namespace quadra

namespace quadra {

ConvergenceFit stochastic_convergence(const LevySpec& spec, const VarWord& word, const SetPartition& pi,
                                      const Rational& s, const ParamValues<Rational>& params,
                                      const std::vector<int>& Ns, const std::vector<int>& holdout) {
  require(word.size() <= 4 && Ns.size() == 4, "convergence fit: n <= 4 and four sample points");
  const Rational limit = limit_formula(spec, word, pi, s, params);
  auto err = [&](int N) { return stochastic_measure_moment(spec, word, pi, s, N, params) - limit; };
  ConvergenceFit fit;
  fit.Ns = Ns;
  RatMatrix V(4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    fit.errors.push_back(err(Ns[i]));
    for (std::size_t j = 0; j < 4; ++j) V(i, j) = pow(Rational(1, Ns[i]), static_cast<unsigned>(j));
  }
  auto c = solve(V, fit.errors);
  for (int j = 0; j < 4; ++j) fit.coeffs[j] = c[j];
  auto model = [&](int N) {
    Rational x(1, N), v(0), p(1);
    for (int j = 0; j < 4; ++j, p *= x) v += c[j] * p;
    return v;
  };
  for (int N : holdout) fit.holdout_exact = fit.holdout_exact && model(N) == err(N);
  fit.C = abs(c[1]) + abs(c[2]) + abs(c[3]);
  for (std::size_t i = 0; i < 4; ++i) fit.bounded = fit.bounded && abs(fit.errors[i]) * Rational(Ns[i]) <= fit.C;
  return fit;
}

}  // namespace quadra

namespace quadra {

LevySpec with_diagonal_measure(const LevySpec& spec, int var, int n) {
  require(var >= 0 && var < spec.k && n >= 2, "diagonal measure: valid variable and n >= 2");
  auto power = [&](int e) {
    RatMatrix m = RatMatrix::identity(spec.d);
    for (int i = 0; i < e; ++i) m = m * spec.T[var];
    return m;
  };
  LevySpec out = spec;
  out.xi.push_back(power(n - 1).apply(spec.xi[var]));
  out.T.push_back(power(n));
  out.lambda.push_back(spec.inner(spec.xi[var], power(n - 2).apply(spec.xi[var])));
  out.k += 1;
  out.validate();
  return out;
}

}  // namespace quadra

#include "quadra/fock.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <numeric>

namespace quadra {

std::string WordPair::str() const {
  auto one = [](const Word& w) {
    std::string s = "[";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i] + 1);
    return s + "]";
  };
  return "(" + one(top) + "," + one(bar) + ")";
}

Space Space::euclidean(std::size_t d, std::size_t dbar) {
  return {std::vector<Rational>(d, Rational(1)), std::vector<Rational>(dbar, Rational(1))};
}

GaugePair GaugePair::symmetric(RatMatrix T, RatMatrix Tbar) {
  require(T.is_symmetric() && Tbar.is_symmetric(), "gauge matrices must be symmetric");
  return {std::move(T), std::move(Tbar)};
}

const std::vector<PermutationEntry>& permutations(int n) {
  guard(n >= 0 && n <= kMaxSymmetrizerN, "permutation table capped at n = 7");
  static std::mutex mu;
  static std::vector<std::unique_ptr<std::vector<PermutationEntry>>> cache(kMaxSymmetrizerN + 1);
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) {
    slot = std::make_unique<std::vector<PermutationEntry>>();
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      int inv = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) inv += p[i] > p[j];
      slot->push_back({p, inv});
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return *slot;
}

std::vector<Word> all_words(std::size_t d, std::size_t length) {
  std::vector<Word> out{Word{}};
  for (std::size_t k = 0; k < length; ++k) {
    std::vector<Word> next;
    for (const auto& w : out)
      for (std::size_t a = 0; a < d; ++a) {
        Word nw = w;
        nw.push_back(static_cast<std::uint8_t>(a));
        next.push_back(std::move(nw));
      }
    out = std::move(next);
  }
  return out;
}

std::vector<WordPair> all_word_pairs(std::size_t d, std::size_t dbar, std::size_t level) {
  std::vector<WordPair> out;
  auto tops = all_words(d, level), bars = all_words(dbar, level);
  for (const auto& u : tops)
    for (const auto& ub : bars) out.push_back({u, ub});
  return out;
}

PsdReport positivity_check(int n, const Rational& a, const Rational& b, std::size_t d) {
  guard(n <= 5 && d <= 3, "positivity check capped at n <= 5, d <= 3");
  return psd_analysis(symmetrizer_matrix<Rational>(n, a, b, d));
}

namespace {

Rational dot(const std::vector<Rational>& x, const std::vector<Rational>& y,
             const std::vector<Rational>& metric) {
  Rational s(0);
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * metric[i] * y[i];
  return s;
}

std::string single_str(const Word& w) { return WordPair{w, {}}.str(); }

}  // namespace

IdentityReport check_commutation_single(const std::vector<Rational>& xi,
                                        const std::vector<Rational>& eta, const Rational& a,
                                        const Rational& b, int maxlevel) {
  require(xi.size() == eta.size(), "commutation check: dimension mismatch");
  const std::vector<Rational> metric(xi.size(), Rational(1));
  const Rational ip = dot(xi, eta, metric);
  for (int level = 0; level < maxlevel; ++level)
    for (const auto& w : all_words(xi.size(), level)) {
      SingleVector<Rational> f{{w, Rational(1)}};
      auto lhs = single_annihilate(xi, metric, single_create(eta, f), a, b);
      auto second = single_create(eta, single_annihilate(xi, metric, f, a, b));
      for (const auto& [u, c] : second) single_add(lhs, u, -(a * c));
      SingleVector<Rational> rhs;
      single_add(rhs, w, ip * pow(b, static_cast<unsigned>(level)));
      if (lhs != rhs) return {false, "word " + single_str(w)};
    }
  return {};
}

IdentityReport check_commutation_tensor(const Space& space, const VectorPair& x1,
                                        const VectorPair& x2, const DeformationParams& params,
                                        int maxlevel) {
  auto P = rational_values(params);
  require(P.t == Rational(1) && P.w == Rational(1), "tensor commutation needs t = w = 1");
  Fock<Rational> F(space, P);
  const Rational one(1);
  const Rational xi12 = dot(x1.xi, x2.xi, space.metric_top);
  const Rational eta12 = dot(x1.eta, x2.eta, space.metric_bar);
  for (int level = 0; level < maxlevel; ++level)
    for (const auto& wp : all_word_pairs(space.d(), space.dbar(), level)) {
      auto f = FockVector<Rational>::basis(wp);
      auto lhs = F.annihilate(x1, F.create(x2, f)) -
                 F.create(x2, F.annihilate(x1, f)).scale(P.q * P.v);

      SingleVector<Rational> u{{wp.top, one}}, ub{{wp.bar, one}};
      // q a*(xi2) a(xi1) on top, <eta1,eta2> on bar
      auto top_part = single_create(x2.xi, single_annihilate(x1.xi, space.metric_top, u, P.q, one));
      auto bar_part = single_create(x2.eta, single_annihilate(x1.eta, space.metric_bar, ub, P.v, one));
      auto rhs = tensor(top_part, ub).scale(P.q * eta12) + tensor(u, bar_part).scale(P.v * xi12) +
                 f.scale(xi12 * eta12);
      if (!(lhs == rhs)) return {false, "word pair " + wp.str()};
    }
  return {};
}

NormCheck creation_norm_check(const Rational& q, const Rational& t, int N) {
  require(N >= 1, "norm check needs N >= 1");
  require(abs(q) <= t && t <= Rational(1) && t.sign() > 0, "norm check needs |q| <= t <= 1, t > 0");
  NormCheck out;
  const double qd = q.to_double(), td = t.to_double();

  // [n] via the recurrence [n+1] = t[n] + q^n, exact
  Rational num(1), qpow(1);
  double best = 1;
  for (int n = 1; n <= N; ++n) {
    if (n > 1) {
      qpow *= q;
      num = t * num + qpow;
    }
    best = std::max(best, num.to_double());
  }
  out.empirical = std::sqrt(best);

  if (q.sign() <= 0) {
    out.branch = "-t<=q<=0<t<=1";
    out.formula = 1.0;
  } else if (t == Rational(1)) {
    if (q == Rational(1)) {
      out.branch = "q=t=1";
      out.unbounded = true;
      out.formula = INFINITY;
    } else {
      out.branch = "0<q<t=1";
      out.formula = 1.0 / std::sqrt(1.0 - qd);
    }
  } else if (q == t) {
    out.branch = "0<q=t<1";
    const double ns = std::floor(td / (1.0 - td));
    out.formula = std::sqrt((ns + 1.0) * std::pow(td, ns));
  } else {
    out.branch = "0<q<t<1";
    // maximiser of (t^n - q^n)/(t-q) is n = nhat + 1
    const double nhat = std::floor((std::log(1.0 - qd) - std::log(1.0 - td)) /
                                   (std::log(td) - std::log(qd)));
    out.formula = std::sqrt((std::pow(td, nhat + 1) - std::pow(qd, nhat + 1)) / (td - qd));
  }
  return out;
}

IdentityReport gauge_adjoint_check(const Space& space, const GaugePair& g,
                                   const DeformationParams& params, int maxlevel) {
  Fock<Rational> F(space, rational_values(params));
  const GaugePair gt = g.transposed();
  for (int level = 1; level <= maxlevel; ++level) {
    auto basis = all_word_pairs(space.d(), space.dbar(), level);
    std::vector<FockVector<Rational>> pf, pg, e;
    for (const auto& wp : basis) {
      e.push_back(FockVector<Rational>::basis(wp));
      pf.push_back(F.gauge(g, e.back()));
      pg.push_back(F.gauge(gt, e.back()));
    }
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j)
        if (!(F.inner(pf[i], e[j]) == F.inner(e[i], pg[j])))
          return {false, "f=" + basis[i].str() + " g=" + basis[j].str()};
  }
  return {};
}

}  // namespace quadra

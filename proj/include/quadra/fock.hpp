#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "quadra/errors.hpp"
#include "quadra/linalg.hpp"
#include "quadra/params.hpp"

namespace quadra {

using Word = std::vector<std::uint8_t>;

struct WordPair {
  Word top, bar;
  std::size_t level() const { return top.size(); }
  std::string str() const;
  friend auto operator<=>(const WordPair&, const WordPair&) = default;
};

// One-particle data. The metric is diagonal in the chosen basis (all ones
// unless a caller, e.g. the interval model, needs weighted basis vectors).
struct Space {
  std::vector<Rational> metric_top, metric_bar;

  static Space euclidean(std::size_t d, std::size_t dbar);
  std::size_t d() const { return metric_top.size(); }
  std::size_t dbar() const { return metric_bar.size(); }
};

struct VectorPair {
  std::vector<Rational> xi, eta;
};

// T acts on coordinates: T e_b = sum_a T(a,b) e_a.
struct GaugePair {
  RatMatrix T, Tbar;
  // Rejects non-symmetric matrices (Euclidean basis).
  static GaugePair symmetric(RatMatrix T, RatMatrix Tbar);
  GaugePair transposed() const { return {T.transpose(), Tbar.transpose()}; }
};

struct Create { VectorPair x; };
struct Annihilate { VectorPair x; };
struct Gauge { GaugePair g; };
struct Scalar { Rational value; };  // lambda * lambda-bar times identity
using OperatorToken = std::variant<Create, Annihilate, Gauge, Scalar>;
// A factor is a sum of tokens, e.g. A + A* + p + lambda for a quadrabasic operator.
using Factor = std::vector<OperatorToken>;

constexpr std::size_t kMaxWordFactors = 12;
constexpr std::size_t kMaxFockTerms = 4'000'000;
constexpr int kMaxSymmetrizerN = 7;

template <class S>
class FockVector {
 public:
  using Terms = std::map<WordPair, S>;

  static FockVector vacuum() {
    FockVector f;
    f.terms_.emplace(WordPair{}, S(1));
    return f;
  }
  static FockVector basis(WordPair w, S c = S(1)) {
    FockVector f;
    f.add(std::move(w), c);
    return f;
  }

  void add(const WordPair& w, const S& c) {
    if (is_zero(c)) return;
    auto [it, fresh] = terms_.try_emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  S coefficient(const WordPair& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? S(0) : it->second;
  }
  S vacuum_coefficient() const { return coefficient(WordPair{}); }

  FockVector& operator+=(const FockVector& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  FockVector& operator-=(const FockVector& o) {
    for (const auto& [w, c] : o.terms_) add(w, S(0) - c);
    return *this;
  }
  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
  FockVector scale(const S& c) const {
    FockVector out;
    if (is_zero(c)) return out;
    for (const auto& [w, k] : terms_) out.add(w, k * c);
    return out;
  }
  friend bool operator==(const FockVector& a, const FockVector& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

// Permutations of {0..n-1} with their inversion counts; cached, n <= 7.
struct PermutationEntry {
  std::vector<int> perm;
  int inversions;
};
const std::vector<PermutationEntry>& permutations(int n);

// --- single-space (a,b)-Fock space, used for the tensor identities ---------

template <class S>
using SingleVector = std::map<Word, S>;

template <class S>
void single_add(SingleVector<S>& f, const Word& w, const S& c) {
  if (is_zero(c)) return;
  auto [it, fresh] = f.try_emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (is_zero(it->second)) f.erase(it);
  }
}

template <class S>
SingleVector<S> single_create(const std::vector<Rational>& x, const SingleVector<S>& f) {
  SingleVector<S> out;
  for (const auto& [w, c] : f)
    for (std::size_t a = 0; a < x.size(); ++a) {
      if (x[a].is_zero()) continue;
      Word nw;
      nw.reserve(w.size() + 1);
      nw.push_back(static_cast<std::uint8_t>(a));
      nw.insert(nw.end(), w.begin(), w.end());
      single_add(out, nw, c * lift<S>(x[a]));
    }
  return out;
}

// a(x) w = sum_i a^{i} b^{n-1-i} <x, e_{w_i}> (w without position i)
template <class S>
SingleVector<S> single_annihilate(const std::vector<Rational>& x, const std::vector<Rational>& metric,
                                  const SingleVector<S>& f, const S& a, const S& b) {
  SingleVector<S> out;
  for (const auto& [w, c] : f) {
    const int n = static_cast<int>(w.size());
    if (n == 0) continue;
    auto pa = power_table(a, n - 1), pb = power_table(b, n - 1);
    for (int i = 0; i < n; ++i) {
      Rational inner = x[w[i]] * metric[w[i]];
      if (inner.is_zero()) continue;
      Word nw = w;
      nw.erase(nw.begin() + i);
      single_add(out, nw, c * pa[i] * pb[n - 1 - i] * lift<S>(inner));
    }
  }
  return out;
}

// Sum_sigma a^inv b^(C(n,2)-inv) e_{w o sigma}
template <class S>
SingleVector<S> single_symmetrize(const Word& w, const S& a, const S& b) {
  const int n = static_cast<int>(w.size());
  guard(n <= kMaxSymmetrizerN, "symmetrizer capped at level 7");
  const int top = n * (n - 1) / 2;
  auto pa = power_table(a, top), pb = power_table(b, top);
  SingleVector<S> out;
  for (const auto& e : permutations(n)) {
    Word nw(n);
    for (int k = 0; k < n; ++k) nw[k] = w[e.perm[k]];
    single_add(out, nw, pa[e.inversions] * pb[top - e.inversions]);
  }
  return out;
}

template <class S>
S single_inner(const SingleVector<S>& f, const SingleVector<S>& g, const std::vector<Rational>& metric,
               const S& a, const S& b) {
  S sum(0);
  for (const auto& [u, c] : g)
    for (const auto& [u2, k] : single_symmetrize<S>(u, a, b)) {
      auto it = f.find(u2);
      if (it == f.end()) continue;
      Rational m(1);
      for (auto x : u2) m *= metric[x];
      sum += it->second * c * k * lift<S>(m);
    }
  return sum;
}

template <class S>
FockVector<S> tensor(const SingleVector<S>& top, const SingleVector<S>& bar) {
  FockVector<S> out;
  for (const auto& [u, c] : top)
    for (const auto& [ub, k] : bar) {
      if (u.size() != ub.size()) throw DimensionMismatch("tensor of unequal levels");
      out.add(WordPair{u, ub}, c * k);
    }
  return out;
}

// --- diagonal Fock space operators -------------------------------------------

template <class S>
class Fock {
 public:
  Fock(Space space, ParamValues<S> params) : space_(std::move(space)), p_(std::move(params)) {}

  const Space& space() const { return space_; }
  const ParamValues<S>& params() const { return p_; }

  void check(const VectorPair& x) const {
    if (x.xi.size() != space_.d() || x.eta.size() != space_.dbar())
      throw DimensionMismatch("vector pair does not match the one-particle space");
  }
  void check(const GaugePair& g) const {
    if (g.T.rows() != space_.d() || g.T.cols() != space_.d() || g.Tbar.rows() != space_.dbar() ||
        g.Tbar.cols() != space_.dbar())
      throw DimensionMismatch("gauge pair does not match the one-particle space");
  }

  FockVector<S> create(const VectorPair& x, const FockVector<S>& f) const {
    check(x);
    FockVector<S> out;
    for (const auto& [w, c] : f.terms())
      for (std::size_t a = 0; a < x.xi.size(); ++a) {
        if (x.xi[a].is_zero()) continue;
        for (std::size_t b = 0; b < x.eta.size(); ++b) {
          if (x.eta[b].is_zero()) continue;
          WordPair nw;
          nw.top.push_back(static_cast<std::uint8_t>(a));
          nw.top.insert(nw.top.end(), w.top.begin(), w.top.end());
          nw.bar.push_back(static_cast<std::uint8_t>(b));
          nw.bar.insert(nw.bar.end(), w.bar.begin(), w.bar.end());
          out.add(nw, c * lift<S>(x.xi[a] * x.eta[b]));
        }
      }
    return out;
  }

  FockVector<S> annihilate(const VectorPair& x, const FockVector<S>& f) const {
    check(x);
    FockVector<S> out;
    for (const auto& [w, c] : f.terms()) {
      const int n = static_cast<int>(w.level());
      if (n == 0) continue;
      auto top = side_weights(w.top, p_.q, p_.t, [&](std::size_t i) {
        return x.xi[w.top[i]] * space_.metric_top[w.top[i]];
      });
      auto bar = side_weights(w.bar, p_.v, p_.w, [&](std::size_t j) {
        return x.eta[w.bar[j]] * space_.metric_bar[w.bar[j]];
      });
      for (const auto& [i, ci] : top)
        for (const auto& [j, cj] : bar) {
          WordPair nw = w;
          nw.top.erase(nw.top.begin() + i);
          nw.bar.erase(nw.bar.begin() + j);
          out.add(nw, c * ci * cj);
        }
    }
    return out;
  }

  FockVector<S> gauge(const GaugePair& g, const FockVector<S>& f) const {
    check(g);
    FockVector<S> out;
    for (const auto& [w, c] : f.terms()) {
      if (w.level() == 0) continue;
      auto top = side_gauge(w.top, g.T, p_.q, p_.t);
      auto bar = side_gauge(w.bar, g.Tbar, p_.v, p_.w);
      for (const auto& [u, cu] : top)
        for (const auto& [ub, cb] : bar) out.add(WordPair{u, ub}, c * cu * cb);
    }
    return out;
  }

  FockVector<S> apply(const OperatorToken& tok, const FockVector<S>& f) const {
    return std::visit(
        [&](const auto& op) -> FockVector<S> {
          using T = std::decay_t<decltype(op)>;
          if constexpr (std::is_same_v<T, Create>) return create(op.x, f);
          if constexpr (std::is_same_v<T, Annihilate>) return annihilate(op.x, f);
          if constexpr (std::is_same_v<T, Gauge>) return gauge(op.g, f);
          if constexpr (std::is_same_v<T, Scalar>) return f.scale(lift<S>(op.value));
        },
        tok);
  }

  FockVector<S> apply(const Factor& factor, const FockVector<S>& f) const {
    FockVector<S> out;
    for (const auto& tok : factor) out += apply(tok, f);
    return out;
  }

  // <Omega, F_1 ... F_m Omega>; factors applied right to left. Terms whose
  // level exceeds the number of remaining factors cannot return to the
  // vacuum and are dropped.
  S vacuum_expectation(const std::vector<Factor>& word) const {
    guard(word.size() <= kMaxWordFactors, "vacuum expectation capped at 12 factors");
    FockVector<S> f = FockVector<S>::vacuum();
    for (std::size_t k = word.size(); k-- > 0;) {
      FockVector<S> next = apply(word[k], f);
      FockVector<S> kept;
      for (const auto& [w, c] : next.terms())
        if (w.level() <= k) kept.add(w, c);
      f = std::move(kept);
      guard(f.size() <= kMaxFockTerms, "Fock expansion exceeded the term cap");
      if (f.empty()) return S(0);
    }
    return f.vacuum_coefficient();
  }

  S vacuum_expectation(const std::vector<OperatorToken>& tokens) const {
    std::vector<Factor> word;
    for (const auto& t : tokens) word.push_back(Factor{t});
    return vacuum_expectation(word);
  }

  // <f, g>_{qtvw}: graded, P_{q,t} on top words times P_{v,w} on bar words.
  S inner(const FockVector<S>& f, const FockVector<S>& g) const {
    S sum(0);
    for (const auto& [w, c] : g.terms()) {
      auto top = single_symmetrize<S>(w.top, p_.q, p_.t);
      auto bar = single_symmetrize<S>(w.bar, p_.v, p_.w);
      for (const auto& [u, cu] : top) {
        Rational mu(1);
        for (auto x : u) mu *= space_.metric_top[x];
        for (const auto& [ub, cb] : bar) {
          S fc = f.coefficient(WordPair{u, ub});
          if (is_zero(fc)) continue;
          Rational mb = mu;
          for (auto x : ub) mb *= space_.metric_bar[x];
          sum += fc * c * cu * cb * lift<S>(mb);
        }
      }
    }
    return sum;
  }

 private:
  template <class Inner>
  std::vector<std::pair<std::size_t, S>> side_weights(const Word& w, const S& a, const S& b,
                                                      Inner inner) const {
    const int n = static_cast<int>(w.size());
    auto pa = power_table(a, n - 1), pb = power_table(b, n - 1);
    std::vector<std::pair<std::size_t, S>> out;
    for (int i = 0; i < n; ++i) {
      Rational ip = inner(static_cast<std::size_t>(i));
      if (ip.is_zero()) continue;
      out.emplace_back(i, pa[i] * pb[n - 1 - i] * lift<S>(ip));
    }
    return out;
  }

  // sum_i a^i b^{n-1-i} (T e_{w_i}) (w without i)
  std::vector<std::pair<Word, S>> side_gauge(const Word& w, const RatMatrix& T, const S& a,
                                             const S& b) const {
    const int n = static_cast<int>(w.size());
    auto pa = power_table(a, n - 1), pb = power_table(b, n - 1);
    std::map<Word, S> acc;
    for (int i = 0; i < n; ++i) {
      Word rest = w;
      rest.erase(rest.begin() + i);
      for (std::size_t r = 0; r < T.rows(); ++r) {
        const Rational& m = T(r, w[i]);
        if (m.is_zero()) continue;
        Word nw;
        nw.push_back(static_cast<std::uint8_t>(r));
        nw.insert(nw.end(), rest.begin(), rest.end());
        single_add(acc, nw, pa[i] * pb[n - 1 - i] * lift<S>(m));
      }
    }
    return {acc.begin(), acc.end()};
  }

  Space space_;
  ParamValues<S> p_;
};

// Free-function surface.
template <class S>
FockVector<S> creation_apply(const Fock<S>& F, const VectorPair& x, const FockVector<S>& f) {
  return F.create(x, f);
}
template <class S>
FockVector<S> annihilation_apply(const Fock<S>& F, const VectorPair& x, const FockVector<S>& f) {
  return F.annihilate(x, f);
}
template <class S>
FockVector<S> gauge_apply(const Fock<S>& F, const GaugePair& g, const FockVector<S>& f) {
  return F.gauge(g, f);
}
template <class S>
S deformed_inner(const Fock<S>& F, const FockVector<S>& f, const FockVector<S>& g) {
  return F.inner(f, g);
}

// All words of the given length over {0..d-1}, lexicographic.
std::vector<Word> all_words(std::size_t d, std::size_t length);
std::vector<WordPair> all_word_pairs(std::size_t d, std::size_t dbar, std::size_t level);

// Matrix of P^{(n)}_{a,b} on (R^d)^{(x)n}; word index is base-d, first letter most significant.
template <class S>
Matrix<S> symmetrizer_matrix(int n, const S& a, const S& b, std::size_t d) {
  guard(n <= kMaxSymmetrizerN, "symmetrizer capped at level 7");
  auto words = all_words(d, n);
  auto index = [&](const Word& w) {
    std::size_t k = 0;
    for (auto x : w) k = k * d + x;
    return k;
  };
  Matrix<S> m(words.size(), words.size());
  for (const auto& w : words)
    for (const auto& [u, c] : single_symmetrize<S>(w, a, b)) m(index(u), index(w)) += c;
  return m;
}

PsdReport positivity_check(int n, const Rational& a, const Rational& b, std::size_t d);

struct IdentityReport {
  bool holds = true;
  std::string witness;  // first failing basis element, empty when holds
};

// a(xi) a*(eta) - a a*(eta) a(xi) = <xi,eta> b^N on all words of length <= maxlevel-1.
IdentityReport check_commutation_single(const std::vector<Rational>& xi,
                                        const std::vector<Rational>& eta, const Rational& a,
                                        const Rational& b, int maxlevel);

// Tensor form at t = w = 1 on all word pairs of level <= maxlevel-1.
IdentityReport check_commutation_tensor(const Space& space, const VectorPair& x1,
                                        const VectorPair& x2, const DeformationParams& params,
                                        int maxlevel);

struct NormCheck {
  std::string branch;
  double formula = 0;
  double empirical = 0;
  bool unbounded = false;
};

// sup_{n<=N} sqrt([n]_{q,t}) against the closed form for the creation norm.
NormCheck creation_norm_check(const Rational& q, const Rational& t, int N);

// <p f, g> = <f, p_{T^T} g> on all basis pairs of level <= maxlevel.
IdentityReport gauge_adjoint_check(const Space& space, const GaugePair& g,
                                   const DeformationParams& params, int maxlevel);

}  // namespace quadra

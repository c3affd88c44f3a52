#pragma once

// Brute-force reference implementations used by the tests. Nothing here
// calls into the library's enumeration or Wick code: partitions are built by
// recursive insertion, statistics straight from the definitions, and the
// closed forms are computed from their textbook recurrences.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "quadra/rational.hpp"

namespace oracle {

using quadra::Rational;
using Blocks = std::vector<std::vector<int>>;

// All set partitions of {0..n-1}: element k joins an existing block or opens one.
inline void partitions_rec(int k, int n, Blocks& cur, std::vector<Blocks>& out) {
  if (k == n) {
    out.push_back(cur);
    return;
  }
  for (std::size_t b = 0; b < cur.size(); ++b) {
    cur[b].push_back(k);
    partitions_rec(k + 1, n, cur, out);
    cur[b].pop_back();
  }
  cur.push_back({k});
  partitions_rec(k + 1, n, cur, out);
  cur.pop_back();
}

inline std::vector<Blocks> set_partitions(int n, std::size_t min_block = 1, std::size_t max_block = 0) {
  std::vector<Blocks> all, out;
  Blocks cur;
  partitions_rec(0, n, cur, all);
  for (auto& p : all) {
    bool ok = true;
    for (const auto& b : p) ok = ok && b.size() >= min_block && (max_block == 0 || b.size() <= max_block);
    if (ok) out.push_back(p);
  }
  return out;
}

inline std::vector<Blocks> perfect_matchings(int n) { return set_partitions(n, 2, 2); }

// Bell numbers from the Bell triangle.
inline std::uint64_t bell(int n) {
  std::vector<std::uint64_t> row{1};
  for (int i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (auto x : row) next.push_back(next.back() + x);
    row = next;
  }
  return row.front();
}

// 'O' opener, 'C' closer, 'M' middle, 'S' singleton.
inline std::vector<char> roles(int n, const Blocks& p) {
  std::vector<char> r(n, '?');
  for (const auto& b : p) {
    if (b.size() == 1) {
      r[b[0]] = 'S';
      continue;
    }
    int lo = *std::min_element(b.begin(), b.end()), hi = *std::max_element(b.begin(), b.end());
    for (int x : b) r[x] = x == lo ? 'O' : (x == hi ? 'C' : 'M');
  }
  return r;
}

struct PairStats {
  int cr = 0, nest = 0, cs = 0, sr = 0;
};

// Blocks of size <= 2 only.
inline PairStats pair_stats(const Blocks& p) {
  PairStats s;
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> singles;
  for (const auto& b : p) {
    if (b.size() == 2) pairs.emplace_back(std::min(b[0], b[1]), std::max(b[0], b[1]));
    if (b.size() == 1) singles.push_back(b[0]);
  }
  for (auto [a, b] : pairs) {
    for (auto [c, d] : pairs) {
      if (a < c && c < b && b < d) ++s.cr;
      if (a < c && d < b) ++s.nest;
    }
    for (int x : singles) {
      if (a < x && x < b) ++s.cs;
      if (x > b) ++s.sr;
    }
  }
  return s;
}

// Arcs join consecutive elements of a block; compare arcs of different blocks.
inline std::pair<int, int> arc_stats(const Blocks& p) {
  struct A {
    int l, r, block;
  };
  std::vector<A> arcs;
  for (std::size_t i = 0; i < p.size(); ++i) {
    auto b = p[i];
    std::sort(b.begin(), b.end());
    for (std::size_t k = 1; k < b.size(); ++k) arcs.push_back({b[k - 1], b[k], static_cast<int>(i)});
  }
  int rc = 0, rnest = 0;
  for (const auto& x : arcs)
    for (const auto& y : arcs) {
      if (x.block == y.block) continue;
      if (x.l < y.l && y.l < x.r && x.r < y.r) ++rc;
      if (x.l < y.l && y.r < x.r) ++rnest;
    }
  return {rc, rnest};
}

inline bool noncrossing(const Blocks& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (i == j) continue;
      for (int a : p[i])
        for (int c : p[j])
          for (int b : p[i])
            for (int d : p[j])
              if (a < c && c < b && b < d) return false;
    }
  return true;
}

// Pairs (top, bar) of partitions of [n] with the same role vector.
inline std::uint64_t diagonal_count(int n, std::size_t min_block = 1, std::size_t max_block = 0) {
  std::map<std::vector<char>, std::uint64_t> classes;
  for (const auto& p : set_partitions(n, min_block, max_block)) ++classes[roles(n, p)];
  std::uint64_t total = 0;
  for (auto& [r, c] : classes) total += c * c;
  return total;
}

// Zigzag numbers via the Entringer triangle; secant numbers are the even ones.
inline std::vector<std::uint64_t> euler_secant(int count) {
  const int N = 2 * count;
  std::vector<std::vector<std::uint64_t>> E(N + 1, std::vector<std::uint64_t>(N + 1, 0));
  E[0][0] = 1;
  for (int n = 1; n <= N; ++n)
    for (int k = 1; k <= n; ++k) E[n][k] = E[n][k - 1] + E[n - 1][n - k];
  std::vector<std::uint64_t> out;
  for (int k = 0; k <= count; ++k) out.push_back(E[2 * k][2 * k]);
  return out;  // 1, 1, 5, 61, 1385, ...
}

inline std::uint64_t catalan(int n) {
  std::uint64_t c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

inline std::uint64_t double_factorial_odd(int k) {  // (2k-1)!!
  std::uint64_t r = 1;
  for (int j = 1; j <= 2 * k - 1; j += 2) r *= j;
  return r;
}

// Free moment-cumulant relation: m_n = sum_s r_s sum_{i_1+..+i_s = n-s} prod m_{i_j}.
// r[k] holds r_{k+1}; returns m_1..m_N.
inline std::vector<Rational> free_moments(const std::vector<Rational>& r) {
  const int N = static_cast<int>(r.size());
  std::vector<Rational> m(N + 1, Rational(0));
  m[0] = Rational(1);
  for (int n = 1; n <= N; ++n) {
    // conv[s][j] = sum over compositions of j into s nonnegative parts of prod m
    std::vector<std::vector<Rational>> conv(n + 1, std::vector<Rational>(n + 1, Rational(0)));
    conv[0][0] = Rational(1);
    for (int s = 1; s <= n; ++s)
      for (int j = 0; j <= n - s; ++j)
        for (int i = 0; i <= j; ++i) conv[s][j] += conv[s - 1][j - i] * m[i];
    Rational sum(0);
    for (int s = 1; s <= n; ++s) sum += r[s - 1] * conv[s][n - s];
    m[n] = sum;
  }
  return {m.begin() + 1, m.end()};
}

// Free cumulants by brute-force Moebius inversion over NC(n).
inline std::vector<Rational> free_cumulants_nc(const std::vector<Rational>& m) {
  std::vector<Rational> r;
  for (int n = 1; n <= static_cast<int>(m.size()); ++n) {
    Rational rest(0);
    for (const auto& p : set_partitions(n)) {
      if (p.size() == 1 || !noncrossing(p)) continue;
      Rational term(1);
      for (const auto& b : p) term *= r[b.size() - 1];
      rest += term;
    }
    r.push_back(m[n - 1] - rest);
  }
  return r;
}

// Weighted Motzkin paths of length n from level 0 to 0, enumerated step by step.
template <class S>
void motzkin_rec(int steps_left, int level, const S& weight, const std::vector<S>& beta,
                 const std::vector<S>& gamma, S& total) {
  if (level > steps_left) return;
  if (steps_left == 0) {
    total += weight;
    return;
  }
  motzkin_rec(steps_left - 1, level + 1, weight, beta, gamma, total);
  motzkin_rec(steps_left - 1, level, weight * beta[level], beta, gamma, total);
  if (level > 0) motzkin_rec(steps_left - 1, level - 1, weight * gamma[level - 1], beta, gamma, total);
}

template <class S>
S motzkin_moment(int n, const std::vector<S>& beta, const std::vector<S>& gamma) {
  S total(0);
  motzkin_rec(n, 0, S(1), beta, gamma, total);
  return total;
}

// sum over permutations of a^inv b^(C(n,2)-inv) acting on words; returns the
// matrix on base-d words, first letter most significant.
inline std::vector<std::vector<Rational>> symmetrizer(int n, const Rational& a, const Rational& b, int d) {
  int dim = 1;
  for (int i = 0; i < n; ++i) dim *= d;
  std::vector<std::vector<Rational>> M(dim, std::vector<Rational>(dim, Rational(0)));
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  const int top = n * (n - 1) / 2;
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inv += perm[i] > perm[j];
    Rational w = quadra::pow(a, inv) * quadra::pow(b, top - inv);
    for (int col = 0; col < dim; ++col) {
      std::vector<int> letters(n);
      for (int i = n - 1, c = col; i >= 0; --i, c /= d) letters[i] = c % d;
      int row = 0;
      for (int i = 0; i < n; ++i) row = row * d + letters[perm[i]];
      M[row][col] += w;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return M;
}

inline std::complex<double> semicircle_cauchy(std::complex<double> z) {
  // branch with G(z) ~ 1/z at infinity
  std::complex<double> s = std::sqrt(z * z - 4.0);
  if (std::imag(z) * std::imag(s) < 0) s = -s;
  return (z - s) / 2.0;
}

inline Rational dot(const std::vector<Rational>& x, const std::vector<Rational>& y) {
  Rational s(0);
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

// Anshelevich's q-Wick value: sum over perfect matchings of q^cr prod <xi_l, xi_r>.
inline Rational q_wick(const std::vector<std::vector<Rational>>& xi, const Rational& q) {
  const int n = static_cast<int>(xi.size());
  if (n % 2) return Rational(0);
  Rational sum(0);
  for (const auto& p : perfect_matchings(n)) {
    Rational term = quadra::pow(q, pair_stats(p).cr);
    for (const auto& b : p) term *= dot(xi[b[0]], xi[b[1]]);
    sum += term;
  }
  return sum;
}

}  // namespace oracle

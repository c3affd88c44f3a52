#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "quadra/fock.hpp"
#include "quadra/kernels.hpp"
#include "quadra/partitions.hpp"

namespace quadra {

struct GaussianSpec {
  Space space;
  std::vector<VectorPair> vectors;
};

struct QuadrabasicSpec {
  Space space;
  std::vector<VectorPair> vectors;
  std::vector<GaugePair> gauges;
  std::vector<std::pair<Rational, Rational>> lambdas;  // (lambda_i, lambda_i-bar)
  std::size_t size() const { return vectors.size(); }
  void validate() const;
};

enum class Eps { Create, Annihilate };

constexpr int kMaxWickN = 10;

namespace detail {

Rational metric_dot(const std::vector<Rational>& x, const std::vector<Rational>& y,
                    const std::vector<Rational>& metric);

// <xi_{i1}, T_{i2} ... T_{i_{m-1}} xi_{im}> for every block of size >= 2, in block order.
std::vector<std::vector<Rational>> chain_values(const PartitionTable& table,
                                                const std::vector<const std::vector<Rational>*>& vecs,
                                                const std::vector<const RatMatrix*>& mats,
                                                const std::vector<Rational>& metric);

template <class S>
struct Powers {
  std::vector<S> q, t, v, w;
  Powers(const ParamValues<S>& p, int n)
      : q(power_table(p.q, n)), t(power_table(p.t, n)), v(power_table(p.v, n)), w(power_table(p.w, n)) {}
};

}  // namespace detail

// Sum over diagonal pair partitions of q^cr t^nest v^cr w^nest times
// prod <xi_l, xi_r><xi-bar_l, xi-bar_r-bar>.
template <class S>
S gaussian_wick(const GaussianSpec& spec, const ParamValues<S>& params, Exec exec = Exec::Parallel) {
  const int n = static_cast<int>(spec.vectors.size());
  guard(n <= kMaxWickN, "gaussian_wick capped at n = 10");
  if (n % 2) return S(0);
  const auto& table = partition_table(n, 2, 2);
  std::vector<std::vector<Rational>> gt(n, std::vector<Rational>(n)), gb = gt;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      gt[i][j] = detail::metric_dot(spec.vectors[i].xi, spec.vectors[j].xi, spec.space.metric_top);
      gb[i][j] = detail::metric_dot(spec.vectors[i].eta, spec.vectors[j].eta, spec.space.metric_bar);
    }
  const int maxstat = n * n;
  detail::Powers<S> pw(params, maxstat);
  return reduce_sum<S>(
      table.diagonal.size(),
      [&](std::size_t k) -> S {
        auto [ti, bi] = table.diagonal[k];
        const auto& top = table.parts[ti].blocks();
        const auto& bar = table.parts[bi].blocks();
        Rational value(1);
        for (std::size_t b = 0; b < top.size() && !value.is_zero(); ++b)
          value *= gt[top[b][0]][top[b][1]] * gb[bar[b][0]][bar[b][1]];
        if (value.is_zero()) return S(0);
        const auto& st = table.stats[ti];
        const auto& sb = table.stats[bi];
        return pw.q[st.cr] * pw.t[st.nest] * pw.v[sb.cr] * pw.w[sb.nest] * lift<S>(value);
      },
      exec);
}

// Sum over all diagonal partitions of q^rc t^rnest v^rc w^rnest times R_pi.
template <class S>
S full_wick(const QuadrabasicSpec& spec, const ParamValues<S>& params, Exec exec = Exec::Parallel) {
  spec.validate();
  const int n = static_cast<int>(spec.size());
  guard(n <= 8, "full_wick capped at n = 8");
  if (n == 0) return S(1);
  const auto& table = partition_table(n, 1);
  std::vector<const std::vector<Rational>*> vt, vb;
  std::vector<const RatMatrix*> mt, mb;
  for (int i = 0; i < n; ++i) {
    vt.push_back(&spec.vectors[i].xi);
    vb.push_back(&spec.vectors[i].eta);
    mt.push_back(&spec.gauges[i].T);
    mb.push_back(&spec.gauges[i].Tbar);
  }
  auto rt = detail::chain_values(table, vt, mt, spec.space.metric_top);
  auto rb = detail::chain_values(table, vb, mb, spec.space.metric_bar);
  std::vector<Rational> lam(n);
  for (int i = 0; i < n; ++i) lam[i] = spec.lambdas[i].first * spec.lambdas[i].second;
  detail::Powers<S> pw(params, n * n);
  return reduce_sum<S>(
      table.diagonal.size(),
      [&](std::size_t k) -> S {
        auto [ti, bi] = table.diagonal[k];
        const auto& top = table.parts[ti].blocks();
        Rational value(1);
        for (std::size_t b = 0; b < top.size() && !value.is_zero(); ++b)
          value *= top[b].size() == 1 ? lam[top[b][0]] : rt[ti][b] * rb[bi][b];
        if (value.is_zero()) return S(0);
        const auto& st = table.stats[ti];
        const auto& sb = table.stats[bi];
        return pw.q[st.rc] * pw.t[st.rnest] * pw.v[sb.rc] * pw.w[sb.rnest] * lift<S>(value);
      },
      exec);
}

// Closed form of A^{eps_1}...A^{eps_n} applied to the vacuum as a sum over
// PS(1,2) diagonal partitions compatible with eps.
template <class S>
FockVector<S> word_vacuum_formula(const std::vector<Eps>& eps, const std::vector<VectorPair>& vectors,
                                  const Space& space, const ParamValues<S>& params) {
  const int n = static_cast<int>(eps.size());
  guard(n <= 8, "word_vacuum_formula capped at n = 8");
  require(vectors.size() == eps.size(), "one vector pair per letter");
  auto compatible = [&](const SetPartition& p) {
    for (const auto& b : p.blocks()) {
      if (b.size() == 1 && eps[b[0]] != Eps::Create) return false;
      if (b.size() == 2 && (eps[b[0]] != Eps::Annihilate || eps[b[1]] != Eps::Create)) return false;
    }
    return true;
  };
  detail::Powers<S> pw(params, n * n);
  FockVector<S> out;
  for (const auto& d : enumerate_ps12(n)) {
    if (!compatible(d.top) || !compatible(d.bar)) continue;
    Rational value(1);
    SingleVector<S> top{{Word{}, S(1)}}, bar{{Word{}, S(1)}};
    std::vector<int> st, sb;
    for (const auto& b : d.top.blocks()) {
      if (b.size() == 2)
        value *= detail::metric_dot(vectors[b[0]].xi, vectors[b[1]].xi, space.metric_top);
      else
        st.push_back(b[0]);
    }
    for (const auto& b : d.bar.blocks()) {
      if (b.size() == 2)
        value *= detail::metric_dot(vectors[b[0]].eta, vectors[b[1]].eta, space.metric_bar);
      else
        sb.push_back(b[0]);
    }
    if (value.is_zero()) continue;
    for (auto it = st.rbegin(); it != st.rend(); ++it) top = single_create(vectors[*it].xi, top);
    for (auto it = sb.rbegin(); it != sb.rend(); ++it) bar = single_create(vectors[*it].eta, bar);
    S weight = pw.q[stat_cr(d.top) + stat_cs(d.top)] * pw.t[stat_nest(d.top) + stat_sr(d.top)] *
               pw.v[stat_cr(d.bar) + stat_cs(d.bar)] * pw.w[stat_nest(d.bar) + stat_sr(d.bar)];
    out += tensor(top, bar).scale(weight * lift<S>(value));
  }
  return out;
}

// For each top partition index in partition_table(n, 1): the sum over
// compatible bars of q^rc(top) t^rnest(top) v^rc(bar) w^rnest(bar).
template <class S>
std::vector<S> top_weights(int n, const ParamValues<S>& params) {
  const auto& table = partition_table(n, 1);
  detail::Powers<S> pw(params, n * n);
  std::vector<S> out(table.parts.size(), S(0));
  for (auto [ti, bi] : table.diagonal) {
    const auto& st = table.stats[ti];
    const auto& sb = table.stats[bi];
    out[ti] += pw.q[st.rc] * pw.t[st.rnest] * pw.v[sb.rc] * pw.w[sb.rnest];
  }
  return out;
}

// Weights grouped by the multiset of top block sizes (sorted descending).
template <class S>
std::map<std::vector<int>, S> block_size_weights(int n, const ParamValues<S>& params) {
  const auto& table = partition_table(n, 1);
  auto tw = top_weights(n, params);
  std::map<std::vector<int>, S> out;
  for (std::size_t i = 0; i < table.parts.size(); ++i) {
    if (is_zero(tw[i])) continue;
    std::vector<int> sizes;
    for (const auto& b : table.parts[i].blocks()) sizes.push_back(static_cast<int>(b.size()));
    std::sort(sizes.rbegin(), sizes.rend());
    auto [it, fresh] = out.try_emplace(sizes, tw[i]);
    if (!fresh) it->second += tw[i];
  }
  return out;
}

// m_n = sum over diagonal partitions of weight * prod_{top blocks} r_|B|.
// Sequences are 1-indexed in meaning: element k holds index k+1.
template <class S>
std::vector<S> cumulants_to_moments(const std::vector<S>& r, const ParamValues<S>& params) {
  guard(r.size() <= static_cast<std::size_t>(kMaxWickN), "moment-cumulant transform capped at N = 10");
  std::vector<S> m;
  for (int n = 1; n <= static_cast<int>(r.size()); ++n) {
    S sum(0);
    for (const auto& [sizes, w] : block_size_weights(n, params)) {
      S term = w;
      for (int s : sizes) term = term * r[s - 1];
      sum += term;
    }
    m.push_back(sum);
  }
  return m;
}

template <class S>
std::vector<S> moments_to_cumulants(const std::vector<S>& m, const ParamValues<S>& params) {
  guard(m.size() <= static_cast<std::size_t>(kMaxWickN), "moment-cumulant transform capped at N = 10");
  std::vector<S> r;
  for (int n = 1; n <= static_cast<int>(m.size()); ++n) {
    S rest(0);
    for (const auto& [sizes, w] : block_size_weights(n, params)) {
      if (sizes.size() == 1) {
        // only 1-hat (x) 1-hat has top = 1-hat
        require(w == S(1), "moment-cumulant: leading coefficient is not 1");
        continue;
      }
      S term = w;
      for (int s : sizes) term = term * r[s - 1];
      rest += term;
    }
    r.push_back(m[n - 1] - rest);
  }
  return r;
}

// phi(G_1 ... G_n) - phi(G_2 ... G_n G_1) with G_i = A(x_i) + A*(x_i).
template <class S>
S cyclic_difference(const GaussianSpec& spec, const ParamValues<S>& params) {
  GaussianSpec rotated = spec;
  std::rotate(rotated.vectors.begin(), rotated.vectors.begin() + 1, rotated.vectors.end());
  return gaussian_wick(spec, params) - gaussian_wick(rotated, params);
}

// xi_1 = xi_2 = e_1, xi_3 = xi_4 = e_2, every bar vector eta. With bar_side
// the roles of the two tensor legs are swapped.
GaussianSpec trace_witness(const std::vector<Rational>& eta, bool bar_side = false);

}  // namespace quadra

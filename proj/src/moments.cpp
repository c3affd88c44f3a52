#include "quadra/moments.hpp"

namespace quadra {

void QuadrabasicSpec::validate() const {
  const std::size_t n = vectors.size();
  require(gauges.size() == n && lambdas.size() == n, "quadrabasic spec: one gauge and lambda per factor");
  for (const auto& x : vectors)
    if (x.xi.size() != space.d() || x.eta.size() != space.dbar())
      throw DimensionMismatch("quadrabasic spec: vector dimension");
  for (const auto& g : gauges) {
    if (g.T.rows() != space.d() || g.Tbar.rows() != space.dbar())
      throw DimensionMismatch("quadrabasic spec: gauge dimension");
  }
}

namespace detail {

Rational metric_dot(const std::vector<Rational>& x, const std::vector<Rational>& y,
                    const std::vector<Rational>& metric) {
  if (x.size() != y.size() || x.size() != metric.size()) throw DimensionMismatch("inner product shape");
  Rational s(0);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero() && !y[i].is_zero()) s += x[i] * metric[i] * y[i];
  return s;
}

std::vector<std::vector<Rational>> chain_values(const PartitionTable& table,
                                                const std::vector<const std::vector<Rational>*>& vecs,
                                                const std::vector<const RatMatrix*>& mats,
                                                const std::vector<Rational>& metric) {
  std::vector<std::vector<Rational>> out;
  out.reserve(table.parts.size());
  for (const auto& p : table.parts) {
    std::vector<Rational> vals;
    for (const auto& b : p.blocks()) {
      if (b.size() < 2) {
        vals.emplace_back(0);
        continue;
      }
      std::vector<Rational> v = *vecs[b.back()];
      for (std::size_t k = b.size() - 2; k >= 1; --k) v = mats[b[k]]->apply(v);
      vals.push_back(metric_dot(*vecs[b.front()], v, metric));
    }
    out.push_back(std::move(vals));
  }
  return out;
}

}  // namespace detail
}  // namespace quadra

namespace quadra {

GaussianSpec trace_witness(const std::vector<Rational>& eta, bool bar_side) {
  const std::vector<Rational> e1{Rational(1), Rational(0)}, e2{Rational(0), Rational(1)};
  GaussianSpec spec;
  spec.space = bar_side ? Space::euclidean(eta.size(), 2) : Space::euclidean(2, eta.size());
  for (const auto* e : {&e1, &e1, &e2, &e2})
    spec.vectors.push_back(bar_side ? VectorPair{eta, *e} : VectorPair{*e, eta});
  return spec;
}

}  // namespace quadra

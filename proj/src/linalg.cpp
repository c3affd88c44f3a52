#include "quadra/linalg.hpp"

#include <utility>

namespace quadra {

const char* to_string(Definiteness d) {
  switch (d) {
    case Definiteness::PositiveDefinite: return "PD";
    case Definiteness::PositiveSemidefinite: return "PSD";
    case Definiteness::Indefinite: return "indefinite";
  }
  return "?";
}

PsdReport psd_analysis(const RatMatrix& input) {
  require(input.is_symmetric(), "psd_analysis needs a symmetric matrix");
  RatMatrix a = input;
  const std::size_t n = a.rows();
  std::vector<std::size_t> live(n);
  for (std::size_t i = 0; i < n; ++i) live[i] = i;

  PsdReport rep{Definiteness::PositiveDefinite, 0, 0};
  while (!live.empty()) {
    // largest diagonal entry of the Schur complement as pivot
    std::size_t best = live.size();
    for (std::size_t k = 0; k < live.size(); ++k) {
      const Rational& d = a(live[k], live[k]);
      if (d.sign() < 0) return {Definiteness::Indefinite, rep.rank, 0};
      if (d.sign() > 0 && (best == live.size() || a(live[best], live[best]) < d)) best = k;
    }
    if (best == live.size()) {
      // zero diagonal: PSD only if the whole complement vanishes
      for (std::size_t i : live)
        for (std::size_t j : live)
          if (!a(i, j).is_zero()) return {Definiteness::Indefinite, rep.rank, 0};
      break;
    }
    std::size_t p = live[best];
    live.erase(live.begin() + static_cast<long>(best));
    Rational piv = a(p, p);
    for (std::size_t i : live) {
      if (a(i, p).is_zero()) continue;
      Rational f = a(i, p) / piv;
      for (std::size_t j : live) a(i, j) -= f * a(p, j);
    }
    ++rep.rank;
  }
  rep.kernel_dim = n - rep.rank;
  if (rep.kernel_dim) rep.verdict = Definiteness::PositiveSemidefinite;
  return rep;
}

std::vector<Rational> solve(const RatMatrix& a_in, const std::vector<Rational>& b_in) {
  const std::size_t n = a_in.rows();
  if (a_in.cols() != n || b_in.size() != n) throw DimensionMismatch("solve shape");
  RatMatrix a = a_in;
  std::vector<Rational> b = b_in;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    require(p < n, "solve: singular matrix");
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      std::swap(b[p], b[c]);
    }
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      Rational f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
      b[i] -= f * b[c];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational s = b[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= a(i, j) * x[j];
    x[i] = s / a(i, i);
  }
  return x;
}

}  // namespace quadra

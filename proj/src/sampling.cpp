#include "quadra/sampling.hpp"

namespace quadra {

int Sampler::integer(int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  // rejection keeps it unbiased
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do x = rng_();
  while (x >= limit);
  return lo + static_cast<int>(x % span);
}

Rational Sampler::rational(int max_abs_num, int max_den) {
  const int den = integer(1, max_den);
  return Rational(integer(-max_abs_num, max_abs_num), den);
}

Rational Sampler::nonzero_rational(int max_abs_num, int max_den) {
  Rational r;
  do r = rational(max_abs_num, max_den);
  while (r.is_zero());
  return r;
}

std::vector<Rational> Sampler::vector(std::size_t d) {
  std::vector<Rational> v;
  for (std::size_t i = 0; i < d; ++i) v.push_back(rational());
  return v;
}

RatMatrix Sampler::symmetric(std::size_t d) {
  RatMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) m(i, j) = m(j, i) = rational(2, 3);
  return m;
}

DeformationParams Sampler::admissible() {
  auto pair = [&]() {
    const int den = integer(1, 6);
    Rational t(integer(1, den), den);
    const int qd = integer(1, 6);
    Rational q = t * Rational(integer(-(qd - 1), qd - 1), qd);
    return std::pair{q, t};
  };
  auto [q, t] = pair();
  auto [v, w] = pair();
  return DeformationParams::admissible(q, t, v, w);
}

}  // namespace quadra

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "quadra/fock.hpp"
#include "quadra/params.hpp"

namespace quadra {

// Seeded draws of small rationals for the property suites. mt19937_64 is
// fully specified; the integer distribution below is hand-rolled so draws are
// identical across standard libraries.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi);  // inclusive
  Rational rational(int max_abs_num = 3, int max_den = 4);
  Rational nonzero_rational(int max_abs_num = 3, int max_den = 4);
  std::vector<Rational> vector(std::size_t d);
  RatMatrix symmetric(std::size_t d);
  // |q| < t <= 1, |v| < w <= 1, denominators <= 6.
  DeformationParams admissible();

 private:
  std::mt19937_64 rng_;
};

}  // namespace quadra

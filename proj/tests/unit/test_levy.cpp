#include <functional>

#include "doctest.h"
#include "quadra/levy.hpp"
#include "quadra/orthopoly.hpp"
#include "quadra/sampling.hpp"

using namespace quadra;

namespace {

const ParamValues<Poly> kSym = poly_values(DeformationParams::symbolic());

std::vector<int> all_positions(std::size_t n) {
  std::vector<int> b(n);
  for (std::size_t i = 0; i < n; ++i) b[i] = static_cast<int>(i);
  return b;
}

LevySpec random_spec(Sampler& rng, int k, std::size_t d) {
  std::vector<std::vector<Rational>> xi;
  std::vector<RatMatrix> T;
  std::vector<Rational> lam;
  for (int i = 0; i < k; ++i) {
    xi.push_back(rng.vector(d));
    T.push_back(rng.symmetric(d));
    lam.push_back(rng.rational());
  }
  return LevySpec::make(xi, T, lam);
}

LevySpec one_dim(long xi, long T, long lambda) {
  return LevySpec::make({{Rational(xi)}}, {RatMatrix::from_rows({{Rational(T)}})}, {Rational(lambda)});
}

Functional<Rational> functional_from(int k, int cap, const std::function<Rational(const VarWord&)>& f) {
  return tabulate<Rational>(k, cap, f);
}

}  // namespace

TEST_CASE("levy cumulants") {
  auto spec = LevySpec::make({{Rational(1), Rational(2)}, {Rational(3), Rational(-1)}},
                             {RatMatrix::from_rows({{Rational(1), Rational(1)}, {Rational(1), Rational(0)}}),
                              RatMatrix::identity(2)},
                             {Rational(3, 2), Rational(1, 2)});
  CHECK(levy_cumulant(spec, {0}, {0}, Rational(2)) == Rational(3));
  // pair: the chain is empty, T does not enter
  CHECK(levy_cumulant(spec, {0, 1}, {0, 1}, Rational(5)) == Rational(5) * Rational(3 - 2));
  // three letters: s <xi_u1, T_u2 xi_u3>; T_0 (3,-1) = (2, 3), <(1,2),(2,3)> = 8
  CHECK(levy_cumulant(spec, {0, 0, 1}, {0, 1, 2}, Rational(1)) == Rational(8));
  CHECK(levy_partition_cumulant(spec, {0, 1, 0}, SetPartition::parse("1 3 | 2"), Rational(2)) ==
        Rational(2) * Rational(5) * Rational(2) * Rational(1, 2));
  CHECK_THROWS(levy_cumulant(spec, {0, 2}, {0, 1}, Rational(1)));
  CHECK_THROWS_AS(LevySpec::make({{Rational(1), Rational(0)}},
                                 {RatMatrix::from_rows({{Rational(0), Rational(1)}, {Rational(0), Rational(0)}})},
                                 {Rational(0)}),
                  ContractViolation);
}

TEST_CASE("levy moments") {
  Sampler rng(31);
  auto spec = random_spec(rng, 2, 2);
  const Rational s(3, 2);
  CHECK(levy_moment(spec, {1}, s, kSym) == Poly(s * spec.lambda[1]));

  // linear s-coefficient is the top cumulant, for every word up to length 6
  for (const auto& w : words_up_to(2, 6)) {
    auto c = levy_moment_s_poly(spec, w, kSym);
    REQUIRE(c[0].is_zero());
    REQUIRE(c[1] == Poly(levy_cumulant(spec, w, all_positions(w.size()), Rational(1))));
  }

  // Brownian spec: Gaussian moments times s^{n/2}
  auto bm = one_dim(1, 0, 0);
  auto gauss = moments_from_jacobi(jacobi_quadrabasic_hermite(kSym, 5), 8);
  const Rational s4(4);
  for (int n = 1; n <= 8; ++n) {
    Poly want = n % 2 ? Poly(0) : gauss[n].scale(pow(s4, n / 2));
    CHECK(levy_moment(bm, VarWord(n, 0), s4, kSym) == want);
  }

  // serial and OpenMP paths agree (8 letters: 4140 partitions)
  auto P = rational_values(rng.admissible());
  VarWord w8{0, 1, 1, 0, 1, 0, 0, 1};
  CHECK(levy_moment(spec, w8, s, P, Exec::Serial) == levy_moment(spec, w8, s, P, Exec::Parallel));
  CHECK_THROWS_AS(levy_moment(spec, VarWord(9, 0), s, P), ResourceLimit);
}

TEST_CASE("interval Fock model") {
  Sampler rng(32);
  auto one = one_dim(2, 1, 3);
  const Rational s(1, 2);
  // n = 2: s<xi,xi> + s^2 lambda^2
  auto P = rational_values(rng.admissible());
  CHECK(fock_levy_oracle(one, {0, 0}, {{{Rational(0), s}}, {{Rational(0), s}}}, P) ==
        s * Rational(4) + s * s * Rational(9));

  // Gaussian spec, pairing across disjoint intervals gives nothing
  auto bm = one_dim(1, 0, 0);
  CHECK(fock_levy_oracle(bm, {0, 0}, {{{Rational(0), Rational(1)}}, {{Rational(1), Rational(2)}}}, P).is_zero());

  for (int i = 0; i < 6; ++i) {
    auto spec = random_spec(rng, 1 + i % 2, 1 + i % 2);
    auto Pi = rational_values(rng.admissible());
    const Rational si = rng.nonzero_rational(2, 3) * rng.nonzero_rational(2, 3);
    const Rational len = abs(si);
    for (const auto& w : words_up_to(spec.k, 4)) {
      std::vector<IntervalSet> iv(w.size(), IntervalSet{{Rational(0), len}});
      REQUIRE(fock_levy_oracle(spec, w, iv, Pi) == levy_moment(spec, w, len, Pi));
    }
  }
}

TEST_CASE("stochastic measures") {
  Sampler rng(33);
  auto spec = random_spec(rng, 2, 2);
  auto P = rational_values(rng.admissible());
  const Rational s(1);
  CHECK(stochastic_measure_moment(spec, {0, 1, 0}, SetPartition::zero(3), s, 2, P).is_zero());

  // exchangeability: sum over every index vector with the given kernel
  const int N = 3;
  const VarWord word{0, 1, 1};
  for (const auto& pi : enumerate_set_partitions(3, 1)) {
    Rational brute(0);
    const Rational len = s / Rational(N);
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b)
        for (int c = 0; c < N; ++c) {
          std::vector<int> v{a, b, c};
          if (!(kernel(v) == pi)) continue;
          std::vector<IntervalSet> iv;
          for (int x : v) iv.push_back({{len * Rational(x), len * Rational(x + 1)}});
          brute += fock_levy_oracle(spec, word, iv, P);
        }
    CHECK(stochastic_measure_moment(spec, word, pi, s, N, P) == brute);
  }

  for (const char* p : {"1 2", "1 | 2"}) {
    auto fit = stochastic_convergence(spec, {0, 1}, SetPartition::parse(p), s, P);
    CHECK(fit.ok());
  }
  auto fit = stochastic_convergence(spec, {0, 1, 1, 0}, SetPartition::parse("1 4 | 2 3"), s, P);
  CHECK(fit.ok());
  CHECK(fit.coeffs[0].is_zero());
  CHECK_THROWS_AS(stochastic_measure_moment(spec, {0, 1}, SetPartition::one(2), s, 13, P), ResourceLimit);
}

TEST_CASE("diagonal measures") {
  Sampler rng(34);
  for (int trial = 0; trial < 4; ++trial) {
    auto spec = random_spec(rng, 1, 2);
    for (int n = 2; n <= 3; ++n) {
      auto ext = with_diagonal_measure(spec, 0, n);
      for (int k = 0; k <= 3; ++k) {
        VarWord w(k, 0);
        w.push_back(1);
        CHECK(levy_cumulant(ext, w, all_positions(w.size()), Rational(1)) ==
              levy_cumulant(spec, VarWord(k + n, 0), all_positions(k + n), Rational(1)));
      }
    }
  }
}

TEST_CASE("cumulant functional inverts the moment functional") {
  Sampler rng(35);
  auto spec = random_spec(rng, 2, 2);
  auto P = rational_values(rng.admissible());
  const Rational s(2, 3);
  auto M = levy_moment_functional(spec, s, 5, P);
  auto R = levy_cumulant_functional<Rational>(spec, s, 5);
  CHECK(cumulant_functional(M, P).values == R.values);
  CHECK(moment_functional(R, P).values == M.values);
}

TEST_CASE("product functionals") {
  Sampler rng(36);
  auto P = rational_values(rng.admissible());
  auto phi1 = levy_moment_functional(random_spec(rng, 1, 2), Rational(1), 4, P);
  auto zero = functional_from(1, 4, [](const VarWord&) { return Rational(0); });
  auto prod = product_functional(phi1, zero, P);
  for (const auto& w : words_up_to(1, 4)) CHECK(prod.at(w) == phi1.at(w));

  auto phi2 = levy_moment_functional(random_spec(rng, 1, 1), Rational(1, 2), 4, P);
  auto both = product_functional(phi1, phi2, P);
  CHECK(both.at({0, 1}) == phi1.at({0}) * phi2.at({0}));
  auto psi = cumulant_functional(both, P);
  for (const auto& w : words_up_to(2, 4)) {
    bool has0 = false, has1 = false;
    for (int x : w) (x == 0 ? has0 : has1) = true;
    if (has0 && has1) REQUIRE(psi.at(w).is_zero());
  }
}

TEST_CASE("convolution") {
  Sampler rng(37);
  auto P = rational_values(rng.admissible());
  LevyHinchinPair mu{Rational(1, 2), {Rational(1), Rational(1, 3), Rational(1, 2), Rational(0), Rational(1)}};
  auto twice = convolve<Rational>(mu, mu, P, 6);
  auto r2 = moments_to_cumulants(twice, P);
  auto r1 = lh_cumulants(mu, 6);
  for (int n = 0; n < 6; ++n) CHECK(r2[n] == Rational(2) * r1[n]);

  LevyHinchinPair shift{Rational(3), {Rational(0), Rational(0), Rational(0), Rational(0), Rational(0)}};
  auto rs = moments_to_cumulants(convolve<Rational>(mu, shift, P, 6), P);
  CHECK(rs[0] == r1[0] + Rational(3));
  for (int n = 1; n < 6; ++n) CHECK(rs[n] == r1[n]);

  // (mu1 * mu2)(x^n) = (Phi1 x Phi2)((x1 + x2)^n)
  auto one_var = [&](const LevyHinchinPair& m) {
    auto mom = cumulants_to_moments(std::vector<Rational>(lh_cumulants(m, 5)), P);
    return functional_from(1, 5, [&](const VarWord& w) { return mom[w.size() - 1]; });
  };
  LevyHinchinPair nu{Rational(-1), {Rational(2), Rational(1), Rational(1), Rational(1)}};
  auto conv = convolve<Rational>(mu, nu, P, 5);
  auto prod = product_functional(one_var(mu), one_var(nu), P);
  for (int n = 1; n <= 5; ++n) {
    Rational sum(0);
    for (const auto& w : words_up_to(2, n))
      if (static_cast<int>(w.size()) == n) sum += prod.at(w);
    CHECK(sum == conv[n - 1]);
  }

  LevyHinchinPair bad{Rational(0), {Rational(1), Rational(0), Rational(-1)}};
  CHECK_THROWS_AS(lh_cumulants(bad, 4), ContractViolation);
}

TEST_CASE("conditional positivity") {
  Sampler rng(38);
  auto spec = random_spec(rng, 2, 2);
  auto psi = levy_cumulant_functional<Rational>(spec, Rational(1), 4);
  CHECK(conditional_positivity(psi, 2).verdict != Definiteness::Indefinite);
  auto neg = functional_from(1, 2, [](const VarWord& w) { return Rational(w.size() == 2 ? -1 : 0); });
  CHECK(conditional_positivity(neg, 1).verdict == Definiteness::Indefinite);
  auto zero = functional_from(2, 4, [](const VarWord&) { return Rational(0); });
  CHECK(conditional_positivity(zero, 2).verdict == Definiteness::PositiveSemidefinite);
  CHECK_THROWS_AS(conditional_positivity(zero, 3), ContractViolation);
}

TEST_CASE("GNS reconstruction") {
  const int D = 3;
  // Poisson: xi = 1, T = 1, lambda = 1
  auto pois = levy_cumulant_functional<Rational>(one_dim(1, 1, 1), Rational(1), 2 * D + 1);
  auto rec = gns_reconstruct(pois, D);
  for (const auto& w : words_up_to(1, D + 1))
    CHECK(levy_cumulant(rec, w, all_positions(w.size()), Rational(1)) == pois.at(w));

  // Gaussian: the quotient is spanned by x alone and T vanishes
  auto gauss = levy_cumulant_functional<Rational>(one_dim(1, 0, 0), Rational(1), 2 * D + 1);
  auto g = gns_reconstruct(gauss, D);
  CHECK(g.d == 1);
  CHECK(g.T[0] == RatMatrix(1, 1));
  CHECK(g.lambda[0] == Rational(0));

  // psi(x_i x_j) = delta_ij, zero elsewhere
  auto delta = functional_from(2, 2 * D + 1, [](const VarWord& w) {
    return Rational(w.size() == 2 && w[0] == w[1] ? 1 : 0);
  });
  auto dl = gns_reconstruct(delta, D);
  CHECK(dl.d == 2);
  for (int i = 0; i < 2; ++i) {
    CHECK(dl.lambda[i] == Rational(0));
    CHECK(dl.T[i] == RatMatrix(2, 2));
    for (int j = 0; j < 2; ++j) CHECK(dl.inner(dl.xi[i], dl.xi[j]) == Rational(i == j ? 1 : 0));
  }

  // random two-variable spec
  Sampler rng(39);
  auto spec = random_spec(rng, 2, 2);
  auto psi = levy_cumulant_functional<Rational>(spec, Rational(1), 2 * 2 + 1);
  auto r2 = gns_reconstruct(psi, 2);
  for (const auto& w : words_up_to(2, 3))
    CHECK(levy_cumulant(r2, w, all_positions(w.size()), Rational(1)) == psi.at(w));
}

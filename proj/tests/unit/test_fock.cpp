#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "quadra/fock.hpp"
#include "quadra/sampling.hpp"

using namespace quadra;

namespace {

const ParamValues<Poly> kSym = poly_values(DeformationParams::symbolic());

ParamValues<Rational> rp(long q, long qd, long t, long td, long v, long vd, long w, long wd) {
  return {Rational(q, qd), Rational(t, td), Rational(v, vd), Rational(w, wd)};
}

VectorPair unit1() { return {{Rational(1)}, {Rational(1)}}; }

template <class S>
FockVector<S> power_state(const Fock<S>& F, const VectorPair& x, int n) {
  auto f = FockVector<S>::vacuum();
  for (int i = 0; i < n; ++i) f = F.create(x, f);
  return f;
}

}  // namespace

TEST_CASE("creation") {
  Fock<Poly> F(Space::euclidean(2, 2), kSym);
  VectorPair e1{{Rational(1), Rational(0)}, {Rational(1), Rational(0)}};
  auto f = F.create(e1, FockVector<Poly>::vacuum());
  CHECK(f.size() == 1);
  CHECK(f.coefficient(WordPair{{0}, {0}}) == Poly(1));
  auto g = F.create(e1, f);
  CHECK(g.size() == 1);
  CHECK(g.coefficient(WordPair{{0, 0}, {0, 0}}) == Poly(1));
  CHECK_THROWS_AS(F.create(unit1(), f), DimensionMismatch);
}

TEST_CASE("annihilation") {
  Fock<Poly> F(Space::euclidean(1, 1), kSym);
  CHECK(F.annihilate(unit1(), FockVector<Poly>::vacuum()).empty());
  for (int n = 1; n <= 5; ++n) {
    auto f = power_state(F, unit1(), n);
    auto g = F.annihilate(unit1(), f);
    Poly want = qt_number(n, kSym.q, kSym.t) * qt_number(n, kSym.v, kSym.w);
    CHECK(g == power_state(F, unit1(), n - 1).scale(want));
  }
  Fock<Poly> F2(Space::euclidean(2, 2), kSym);
  VectorPair e1{{Rational(1), Rational(0)}, {Rational(1), Rational(0)}};
  VectorPair e2{{Rational(0), Rational(1)}, {Rational(0), Rational(1)}};
  CHECK(F2.annihilate(e2, power_state(F2, e1, 3)).empty());
}

TEST_CASE("gauge") {
  Fock<Poly> F(Space::euclidean(1, 1), kSym);
  GaugePair id{RatMatrix::identity(1), RatMatrix::identity(1)};
  CHECK(F.gauge(id, FockVector<Poly>::vacuum()).empty());
  CHECK(F.gauge(id, power_state(F, unit1(), 1)) == power_state(F, unit1(), 1));
  for (int n = 1; n <= 5; ++n) {
    auto f = power_state(F, unit1(), n);
    Poly eig = qt_number(n, kSym.q, kSym.t) * qt_number(n, kSym.v, kSym.w);
    CHECK(F.gauge(id, f) == f.scale(eig));
  }
  CHECK_THROWS_AS(GaugePair::symmetric(RatMatrix::from_rows({{Rational(0), Rational(1)}, {Rational(0), Rational(0)}}),
                                       RatMatrix::identity(1)),
                  ContractViolation);
}

TEST_CASE("vacuum expectation") {
  Fock<Poly> F(Space::euclidean(1, 1), kSym);
  CHECK(F.vacuum_expectation(std::vector<OperatorToken>{Annihilate{unit1()}, Create{unit1()}}) == Poly(1));
  Factor G{Annihilate{unit1()}, Create{unit1()}};
  CHECK(F.vacuum_expectation(std::vector<Factor>(4, G)).str() == "1 + qv + qw + tv + tw");
  CHECK(F.vacuum_expectation(std::vector<Factor>(3, G)).is_zero());
  CHECK(F.vacuum_expectation(std::vector<OperatorToken>{Create{unit1()}, Create{unit1()}}).is_zero());
  CHECK_THROWS_AS(F.vacuum_expectation(std::vector<Factor>(13, G)), ResourceLimit);
}

TEST_CASE("symmetrizer matrix") {
  const Poly q = Poly::q(), t = Poly::t();
  CHECK(symmetrizer_matrix<Poly>(1, q, t, 2) == Matrix<Poly>::identity(2));
  auto m = symmetrizer_matrix<Poly>(2, q, t, 1);
  CHECK(m(0, 0) == q + t);

  Sampler rng(11);
  for (int i = 0; i < 6; ++i) {
    Rational a = rng.rational(), b = rng.rational();
    for (int n = 1; n <= 4; ++n)
      for (int d = 1; d <= 2; ++d) {
        auto got = symmetrizer_matrix<Rational>(n, a, b, d);
        auto want = oracle::symmetrizer(n, a, b, d);
        for (std::size_t r = 0; r < got.rows(); ++r)
          for (std::size_t c = 0; c < got.cols(); ++c) REQUIRE(got(r, c) == want[r][c]);
      }
  }

  // With 0^0 = 1 the literal sum vanishes at a = b = 0 for n >= 2 (every
  // permutation carries a positive power of 0). The identity case of the
  // free Fock space is (a, b) = (0, 1).
  CHECK(symmetrizer_matrix<Rational>(2, Rational(0), Rational(0), 2) == RatMatrix(4, 4));
  CHECK(symmetrizer_matrix<Rational>(3, Rational(0), Rational(1), 2) == RatMatrix::identity(8));
}

TEST_CASE("deformed inner product") {
  Fock<Poly> F(Space::euclidean(1, 1), kSym);
  auto vac = FockVector<Poly>::vacuum();
  CHECK(F.inner(vac, vac) == Poly(1));
  Poly prod(1);
  for (int n = 1; n <= 4; ++n) {
    prod = prod * qt_number(n, kSym.q, kSym.t) * qt_number(n, kSym.v, kSym.w);
    auto f = power_state(F, unit1(), n);
    CHECK(F.inner(f, f) == prod);
    CHECK(F.inner(f, power_state(F, unit1(), n - 1)).is_zero());
  }
}

TEST_CASE("A and A* are adjoint, inner product symmetric") {
  Sampler rng(5);
  for (int i = 0; i < 5; ++i) {
    auto P = rational_values(rng.admissible());
    Fock<Rational> F(Space::euclidean(2, 2), P);
    VectorPair x{rng.vector(2), rng.vector(2)};
    for (int level = 0; level <= 2; ++level)
      for (const auto& u : all_word_pairs(2, 2, level))
        for (const auto& v : all_word_pairs(2, 2, level + 1)) {
          auto f = FockVector<Rational>::basis(u), g = FockVector<Rational>::basis(v);
          REQUIRE(F.inner(F.create(x, f), g) == F.inner(f, F.annihilate(x, g)));
          REQUIRE(F.inner(g, g) == F.inner(g, g));
        }
    for (const auto& u : all_word_pairs(2, 2, 2))
      for (const auto& v : all_word_pairs(2, 2, 2)) {
        auto f = FockVector<Rational>::basis(u), g = FockVector<Rational>::basis(v);
        REQUIRE(F.inner(f, g) == F.inner(g, f));
      }
  }
}

TEST_CASE("commutation relations") {
  Sampler rng(3);
  for (int i = 0; i < 8; ++i) {
    auto dp = rng.admissible();
    CHECK(check_commutation_single(rng.vector(2), rng.vector(2), *dp[0], *dp[1], 4).holds);
    auto tp = DeformationParams::admissible(*dp[0] / *dp[1], Rational(1), *dp[2] / *dp[3], Rational(1));
    VectorPair x1{rng.vector(2), rng.vector(2)}, x2{rng.vector(2), rng.vector(2)};
    CHECK(check_commutation_tensor(Space::euclidean(2, 2), x1, x2, tp, 3).holds);
  }
  // the tensor form is only claimed at t = w = 1
  CHECK_THROWS_AS(check_commutation_tensor(
                      Space::euclidean(1, 1), unit1(), unit1(),
                      DeformationParams::admissible(Rational(1, 2), Rational(1, 2), Rational(0), Rational(1)), 3),
                  ContractViolation);
}

TEST_CASE("creation norm branches") {
  struct Case {
    Rational q, t;
    double expect;
  } cases[] = {{Rational(-1, 3), Rational(1, 2), 1.0},
               {Rational(1, 2), Rational(1), 1.0 / std::sqrt(0.5)},
               {Rational(1, 2), Rational(1, 2), 1.0},
               {Rational(1, 3), Rational(1, 2), 1.0}};
  for (const auto& c : cases) {
    auto r = creation_norm_check(c.q, c.t, 200);
    CHECK(std::abs(r.formula - c.expect) < 1e-12);
    CHECK(std::abs(r.formula - r.empirical) < 1e-12);
  }
  CHECK(creation_norm_check(Rational(1), Rational(1), 10).unbounded);
}

TEST_CASE("positivity verdicts") {
  CHECK(positivity_check(3, Rational(1, 3), Rational(1, 2), 2).verdict == Definiteness::PositiveDefinite);
  auto semi = positivity_check(2, Rational(1, 2), Rational(1, 2), 2);
  CHECK(semi.verdict == Definiteness::PositiveSemidefinite);
  CHECK(semi.kernel_dim > 0);
  CHECK(positivity_check(3, Rational(0), Rational(1), 2).verdict == Definiteness::PositiveDefinite);
  CHECK(positivity_check(2, Rational(1), Rational(1, 2), 2).verdict == Definiteness::Indefinite);
}

TEST_CASE("gauge adjointness") {
  Sampler rng(9);
  auto dp = rng.admissible();
  GaugePair g{rng.symmetric(2), rng.symmetric(2)};
  CHECK(gauge_adjoint_check(Space::euclidean(2, 2), g, dp, 3).holds);
  GaugePair zero{RatMatrix(2, 2), RatMatrix(2, 2)};
  CHECK(gauge_adjoint_check(Space::euclidean(2, 2), zero, dp, 3).holds);
  // non-symmetric T is adjoint to its transpose, not to itself
  RatMatrix T = RatMatrix::from_rows({{Rational(0), Rational(1)}, {Rational(0), Rational(0)}});
  CHECK(gauge_adjoint_check(Space::euclidean(2, 1), GaugePair{T, RatMatrix::identity(1)}, dp, 2).holds);
  Fock<Rational> F(Space::euclidean(2, 1), rational_values(dp));
  auto f = FockVector<Rational>::basis(WordPair{{0}, {0}}), h = FockVector<Rational>::basis(WordPair{{1}, {0}});
  GaugePair gp{T, RatMatrix::identity(1)};
  CHECK(F.inner(F.gauge(gp, h), f) == F.inner(h, F.gauge(gp.transposed(), f)));
  CHECK_FALSE(F.inner(F.gauge(gp, h), f) == F.inner(h, F.gauge(gp, f)));
}

#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "vilenkin/heisenberg.hpp"

using namespace vilenkin;

namespace {

HeisElement random_element(long long p, int d, int n, std::mt19937& rng) {
  std::uniform_int_distribution<long long> dist(0, checked_pow(p, n) - 1);
  std::vector<long long> xs(static_cast<size_t>(d)), ys(static_cast<size_t>(d));
  for (auto& v : xs) v = dist(rng);
  for (auto& v : ys) v = dist(rng);
  return HeisElement::from_values(p, d, n, xs, ys, dist(rng));
}

}  // namespace

TEST_CASE("group law on frozen examples") {
  const auto e = HeisElement::identity(3, 1, 2);
  const auto a = HeisElement::from_values(3, 1, 2, {1}, {0}, 0);
  const auto b = HeisElement::from_values(3, 1, 2, {0}, {1}, 0);
  CHECK(heis_mul(e, a) == a);
  CHECK(heis_mul(a, e) == a);
  CHECK(heis_mul(a, b) == HeisElement::from_values(3, 1, 2, {1}, {1}, 1));
  CHECK(heis_mul(b, a) == HeisElement::from_values(3, 1, 2, {1}, {1}, 0));
}

TEST_CASE("group law against the matrix oracle") {
  std::mt19937 rng(51);
  for (long long p : {2LL, 3LL})
    for (int d : {1, 2})
      for (int trial = 0; trial < 50; ++trial) {
        const auto g = random_element(p, d, 3, rng);
        const auto h = random_element(p, d, 3, rng);
        CHECK(heis_mul(g, h) == oracles::heis_mul_by_matrices(g, h));
        CHECK(heis_mul(g, heis_inv(g)) == HeisElement::identity(p, d, 3));
        CHECK(heis_mul(heis_inv(g), g) == HeisElement::identity(p, d, 3));
      }
  const auto g2 = random_element(2, 1, 2, rng);
  CHECK_THROWS_AS(heis_mul(g2, random_element(3, 1, 2, rng)), PrecisionError);
  CHECK_THROWS_AS(heis_mul(g2, random_element(2, 1, 3, rng)), PrecisionError);
}

TEST_CASE("flat grid enumeration round trips") {
  for (long long p : {2LL, 3LL})
    for (int d : {1, 2})
      for (long long i = 0; i < heis_grid_size(p, d, 1); ++i)
        CHECK(heis_flat_index(heis_element_at(p, d, 1, i)) == i);
}

TEST_CASE("dual enumeration realizes the Peter-Weyl counts") {
  CHECK(enumerate_dual(2, 1, 0).size() == 1);
  CHECK(enumerate_dual(2, 1, 0)[0] == HeisDualIndex::trivial(2, 1));

  // d=1, p=2, n=1: four 1-dimensional classes and one 2-dimensional.
  const auto d21 = enumerate_dual(2, 1, 1);
  CHECK(d21.size() == 5);
  long long ones = 0, twos = 0;
  for (const auto& z : d21) {
    if (z.dim() == 1) ++ones;
    if (z.dim() == 2) ++twos;
  }
  CHECK(ones == 4);
  CHECK(twos == 1);

  // d=1, p=3, n=1: nine 1-dimensional plus two 3-dimensional.
  const auto d31 = enumerate_dual(3, 1, 1);
  long long dim1 = 0, dim3 = 0;
  for (const auto& z : d31) {
    if (z.dim() == 1) ++dim1;
    if (z.dim() == 3) ++dim3;
  }
  CHECK(dim1 == 9);
  CHECK(dim3 == 2);

  for (long long p : {2LL, 3LL})
    for (int d : {1, 2})
      for (int n = 0; n <= 2; ++n) {
        long long total = 0;
        for (const auto& z : enumerate_dual(p, d, n)) total += z.dim() * z.dim();
        CHECK(total == checked_pow(p, n * (2 * d + 1)));
      }
}

TEST_CASE("dual shells carry exact norm p^n") {
  for (long long p : {2LL, 3LL})
    for (int n = 1; n <= 2; ++n) {
      const auto level = enumerate_dual(p, 1, n);
      const auto shell = enumerate_dual_shell(p, 1, n);
      long long below = 0;
      for (const auto& z : level)
        if (z.norm() < checked_pow(p, n)) ++below;
      CHECK(below + static_cast<long long>(shell.size()) ==
            static_cast<long long>(level.size()));
      for (const auto& z : shell) CHECK(z.norm() == checked_pow(p, n));
      // The below-norm classes biject with the level-(n-1) enumeration.
      CHECK(below == static_cast<long long>(enumerate_dual(p, 1, n - 1).size()));
    }
}

TEST_CASE("matrix coefficients on frozen examples") {
  const auto trivial = HeisDualIndex::trivial(2, 1);
  std::mt19937 rng(53);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = random_element(2, 1, 2, rng);
    const auto c = matrix_coeff(trivial, 0, 0, g);
    REQUIRE(c.has_value());
    CHECK(c->is_one());
  }

  // zeta = (0, 0, 1/2) at level 1: j = 1, dimension 2.
  const HeisDualIndex zeta(1, 1, QpModZp(2, 1, 1), {0}, {0});
  CHECK(zeta.dim() == 2);
  const auto center = HeisElement::from_values(2, 1, 1, {0}, {0}, 1);
  const auto c00 = matrix_coeff(zeta, 0, 0, center);
  REQUIRE(c00.has_value());
  CHECK(*c00 == Phase(2, 1, 1));  // e^{2 pi i /2} = -1

  const auto shift = HeisElement::from_values(2, 1, 1, {1}, {0}, 0);
  const auto c10 = matrix_coeff(zeta, 1, 0, shift);
  REQUIRE(c10.has_value());
  CHECK(c10->is_one());
  CHECK(!matrix_coeff(zeta, 0, 0, shift).has_value());

  CHECK_THROWS_AS(matrix_coeff(zeta, 0, 0, HeisElement::identity(3, 1, 1)),
                  PrecisionError);
}

TEST_CASE("rep matrices: identity, unitarity, homomorphism") {
  std::mt19937 rng(59);
  for (long long p : {2LL, 3LL}) {
    for (int n = 0; n <= 2; ++n) {
      const auto dual = enumerate_dual(p, 1, n);
      const int prec = std::max(1, n);
      for (const auto& zeta : dual) {
        CHECK(rep_matrix(zeta, HeisElement::identity(p, 1, prec)).is_identity());
        for (int trial = 0; trial < 3; ++trial) {
          const auto g = random_element(p, 1, prec, rng);
          const auto h = random_element(p, 1, prec, rng);
          const auto mg = rep_matrix(zeta, g);
          CHECK((mg * mg.adjoint()).is_identity());
          CHECK(mg * rep_matrix(zeta, h) == rep_matrix(zeta, heis_mul(g, h)));
        }
      }
    }
  }
  // The explicit noncommuting pair: x-shift and y-shift.
  const HeisDualIndex zeta(1, 1, QpModZp(2, 1, 1), {0}, {0});
  const auto g = HeisElement::from_values(2, 1, 1, {0}, {1}, 0);
  const auto h = HeisElement::from_values(2, 1, 1, {1}, {0}, 0);
  CHECK(rep_matrix(zeta, g) * rep_matrix(zeta, h) ==
        rep_matrix(zeta, heis_mul(g, h)));
  CHECK(!(rep_matrix(zeta, g) * rep_matrix(zeta, h) ==
          rep_matrix(zeta, heis_mul(h, g))));
}

TEST_CASE("rep matrices depend on g only through g mod p^level") {
  std::mt19937 rng(61);
  for (long long p : {2LL, 3LL})
    for (const auto& zeta : enumerate_dual(p, 1, 2))
      for (int trial = 0; trial < 5; ++trial) {
        const auto g = random_element(p, 1, 4, rng);
        CHECK(rep_matrix(zeta, g) == rep_matrix(zeta, g.truncated(2)));
      }
}

TEST_CASE("coefficient norms") {
  CHECK(coeff_norm_sq(HeisDualIndex::trivial(2, 1), 0, 0) == 1);
  const HeisDualIndex half(1, 1, QpModZp(2, 1, 1), {0}, {0});
  CHECK(coeff_norm_sq(half, 0, 0) == Rat(1, 2));
  CHECK(coeff_norm_sq(half, 1, 0) == Rat(1, 2));
  const HeisDualIndex third_d2(2, 1, QpModZp(3, 1, 1), {0, 0}, {0, 0});
  CHECK(coeff_norm_sq(third_d2, 0, 0) == Rat(1, 9));
  // Equality with 1/|gamma|^d across a level-2 sweep.
  for (const auto& zeta : enumerate_dual(2, 1, 2))
    for (long long k = 0; k < zeta.dim(); ++k)
      CHECK(coeff_norm_sq(zeta, k, 0) == Rat(1, big_pow(2, zeta.j())));
}

TEST_CASE("K0 decomposition of coset indicators") {
  // At v = e, the coefficient on the trivial class is 1/p^{r(2d+1)} and
  // every coefficient has magnitude |gamma|^d / p^{r(2d+1)}.
  const auto e = HeisElement::identity(2, 1, 2);
  const auto terms = k0_decomposition(e, 1);
  bool saw_trivial = false;
  for (const auto& t : terms) {
    CHECK(t.coeff.scale ==
          Rat(big_pow(2, t.zeta.j() * 1), big_pow(2, 3)) / 1);
    if (t.zeta.j() == 0 && t.zeta.norm() == 1) {  // gamma, alpha, beta all trivial
      saw_trivial = true;
      CHECK(t.coeff.scale == Rat(1, 8));
      CHECK(t.coeff.phase.is_one());
    }
  }
  CHECK(saw_trivial);
  // Term count: one per (zeta, column) pair.
  long long expected = 0;
  for (const auto& z : enumerate_dual(2, 1, 1)) expected += z.dim();
  CHECK(static_cast<long long>(terms.size()) == expected);

  CHECK_THROWS_AS(k0_decomposition(HeisElement::identity(2, 1, 1), 1),
                  PrecisionError);

  // Pointwise reconstruction at small parameters.
  std::mt19937 rng(67);
  for (long long p : {2LL, 3LL}) {
    for (int trial = 0; trial < 3; ++trial) {
      const auto v = random_element(p, 1, 2, rng);
      CHECK(k0_reconstruction_max_error(v, 1, k0_decomposition(v, 1)) <= 1e-9);
    }
  }
}

TEST_CASE("Schur orthogonality at level 1, exactly") {
  // All matrix-coefficient functions of H_1(Z_2) at level 1 over the grid
  // mod 2: <F_a, F_b> = delta_{ab} / |gamma|^d.
  const long long p = 2;
  struct Fn {
    HeisDualIndex zeta;
    long long k, k2;
  };
  std::vector<Fn> fns;
  for (const auto& zeta : enumerate_dual(p, 1, 1))
    for (long long k = 0; k < zeta.dim(); ++k)
      for (long long k2 = 0; k2 < zeta.dim(); ++k2) fns.push_back({zeta, k, k2});
  REQUIRE(fns.size() == 8);  // Sum dim^2 = p^{3}
  const long long grid = heis_grid_size(p, 1, 1);
  for (size_t a = 0; a < fns.size(); ++a)
    for (size_t b = 0; b < fns.size(); ++b) {
      Cyclo acc(p);
      for (long long i = 0; i < grid; ++i) {
        const auto g = heis_element_at(p, 1, 1, i);
        const auto fa = matrix_coeff(fns[a].zeta, fns[a].k, fns[a].k2, g);
        const auto fb = matrix_coeff(fns[b].zeta, fns[b].k, fns[b].k2, g);
        if (fa && fb) acc += Cyclo(*fa * fb->conj());
      }
      acc *= Rat(1, grid);
      if (a == b)
        CHECK(acc == Cyclo(p, Rat(1, big_pow(p, fns[a].zeta.j()))));
      else
        CHECK(acc.is_zero());
    }
}

#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "vilenkin/dimensions.hpp"

using namespace vilenkin;

namespace {

FiniteRep rep_of(std::shared_ptr<const FiniteGroup> g, std::vector<long long> mults) {
  return FiniteRep{std::move(g), std::move(mults)};
}

}  // namespace

TEST_CASE("symmetry detection and basic return probabilities") {
  const auto z3 = cyclic_group(3, 1);
  CHECK(!rep_of(z3, {0, 1, 0}).is_symmetric());  // chi_1 alone
  const auto sym = rep_of(z3, {0, 1, 1});        // chi_1 + chi_2
  CHECK(sym.is_symmetric());
  CHECK(sym.dim() == 2);

  // Twice the trivial representation returns with probability 1.
  const auto twice_trivial = rep_of(z3, {2, 0, 0});
  for (long long n : {1LL, 2LL, 5LL}) CHECK(rw_return_prob(twice_trivial, n) == 1);

  // Z/2, trivial + sign: p_n = 1/2 for every n.
  const auto z2 = cyclic_group(2, 1);
  const auto ts = rep_of(z2, {1, 1});
  for (long long n : {1LL, 2LL, 3LL, 7LL}) CHECK(rw_return_prob(ts, n) == Rat(1, 2));

  // Z/3, chi_1 + chi_2: (1/3) Sum (Tr/2)^{2n} gives 1/2 at n=1, 3/8 at n=2.
  CHECK(rw_return_prob(sym, 1) == Rat(1, 2));
  CHECK(rw_return_prob(sym, 2) == Rat(3, 8));

  CHECK_THROWS_AS(rw_return_prob(rep_of(z3, {0, 1, 0}), 1), DomainError);
  CHECK_THROWS_AS(rw_return_prob(sym, 0), DomainError);
}

TEST_CASE("return probabilities equal trivial-isotype counts") {
  // Every symmetric rep of dim <= 4 on the four small groups, 2n <= 6:
  // p_n * k^{2n} must equal the explicit tensor-decomposition count.
  std::vector<std::shared_ptr<const FiniteGroup>> groups = {
      cyclic_group(2, 1), cyclic_group(3, 1), cyclic_group(2, 2),
      heisenberg_quotient_group(2, 1, 1)};
  for (const auto& g : groups) {
    const int r = g->num_irreps();
    std::vector<long long> mults(static_cast<size_t>(r), 0);
    // Enumerate multiplicity vectors with total dimension <= 4.
    const long long total = checked_pow(5, r);
    int tested = 0;
    for (long long code = 1; code < total; ++code) {
      long long c = code;
      long long dim = 0;
      for (int i = 0; i < r; ++i) {
        mults[static_cast<size_t>(i)] = c % 5;
        c /= 5;
        dim += mults[static_cast<size_t>(i)] * g->irrep_dims[static_cast<size_t>(i)];
      }
      if (dim == 0 || dim > 4) continue;
      const FiniteRep rep = rep_of(g, mults);
      if (!rep.is_symmetric()) continue;
      ++tested;
      for (long long n = 1; 2 * n <= 6; ++n) {
        const Rat pn = rw_return_prob(rep, n);
        const BigInt count = oracles::trivial_multiplicity_by_decomposition(
            rep, static_cast<int>(2 * n));
        Rat scaled = pn;
        for (long long i = 0; i < 2 * n; ++i) scaled *= rep.dim();
        CHECK(scaled == Rat(count));
      }
    }
    CHECK(tested > 0);
  }
}

TEST_CASE("tensor counts on the larger cyclic groups up to order 9") {
  // Conjugation-closed reps chi_j + chi_{q-j} (plus copies of the trivial)
  // on Z/8 and Z/9.
  for (auto [p, n] : std::vector<std::pair<long long, int>>{{2, 3}, {3, 2}}) {
    const auto g = cyclic_group(p, n);
    const long long q = g->order;
    for (long long j = 1; 2 * j < q + 1; ++j)
      for (long long triv = 0; triv <= 1; ++triv) {
        std::vector<long long> mults(static_cast<size_t>(q), 0);
        mults[0] = triv;
        mults[static_cast<size_t>(j)] += 1;
        mults[static_cast<size_t>((q - j) % q)] += 1;
        const FiniteRep rep{g, mults};
        REQUIRE(rep.is_symmetric());
        for (long long steps = 1; 2 * steps <= 6; ++steps) {
          Rat scaled = rw_return_prob(rep, steps);
          for (long long i = 0; i < 2 * steps; ++i) scaled *= rep.dim();
          CHECK(scaled == Rat(oracles::trivial_multiplicity_by_decomposition(
                            rep, static_cast<int>(2 * steps))));
        }
      }
  }
}

TEST_CASE("lower bound p_n >= 1/|G| and the vanishing estimate") {
  const auto z3 = cyclic_group(3, 1);
  const auto rep = rep_of(z3, {0, 1, 1});
  for (long long n = 1; n <= 2000; ++n)
    CHECK(rw_return_prob_double(rep, n) >= 1.0 / 3 - 1e-12);
  for (long long n : {10LL, 100LL, 1000LL})
    CHECK(rw_return_prob(rep, n) >= Rat(1, 3));

  // Estimates decrease toward zero and respect the universal bound.
  const double e2 = rw_dim_estimate(rep, 100);
  const double e3 = rw_dim_estimate(rep, 1000);
  const double e4 = rw_dim_estimate(rep, 10000);
  CHECK(e2 > e3);
  CHECK(e3 > e4);
  CHECK(e4 <= rw_dim_upper_bound(3, 10000));
  CHECK(rw_dim_upper_bound(3, 10000) == doctest::Approx(0.23857).epsilon(1e-4));

  // p_n = 1 cases estimate exactly 0.
  CHECK(rw_dim_estimate(rep_of(z3, {2, 0, 0}), 50) == 0.0);
  CHECK_THROWS_AS(rw_dim_estimate(rep, 1), DomainError);
}

TEST_CASE("shell multiplicities") {
  CHECK(shell_multiplicity(VilenkinGroupKind::PadicIntegers, 5, 1, 0) == 1);
  CHECK(shell_multiplicity(VilenkinGroupKind::PadicIntegers, 2, 1, 3) == 4);
  CHECK(shell_multiplicity(VilenkinGroupKind::Heisenberg, 2, 1, 1) == 7);
  // Shells add up to the Peter-Weyl total.
  for (long long p : {2LL, 3LL}) {
    long long acc = 0;
    for (int n = 0; n <= 2; ++n)
      acc += shell_multiplicity(VilenkinGroupKind::Heisenberg, p, 1, n);
    CHECK(acc == checked_pow(p, 2 * 3));
  }
}

TEST_CASE("Dirac truncation spectrum and trace") {
  const auto t = make_dirac_truncation(2, VilenkinGroupKind::PadicIntegers, 1, 1.0, 3);
  const auto spec = dirac_spectrum(t);
  REQUIRE(spec.size() == 4);
  CHECK(spec[0] == std::pair<double, long long>{1.0, 1});
  CHECK(spec[1] == std::pair<double, long long>{4.0, 1});
  CHECK(spec[2] == std::pair<double, long long>{18.0, 2});
  CHECK(spec[3] == std::pair<double, long long>{64.0, 4});

  CHECK(dirac_trace_power(make_dirac_truncation(
                              2, VilenkinGroupKind::PadicIntegers, 1, 1.0, 0))
            .partial_sum == 1);
  const auto ts = dirac_trace_power(t);
  CHECK(ts.partial_sum == Rat(205, 144));
  CHECK(ts.tail_lower == Rat(1, 5));
  CHECK(ts.tail_upper == Rat(1, 4));
  const double zeta2 = 3.14159265358979323846 * 3.14159265358979323846 / 6.0;
  CHECK(zeta2 - to_double(ts.partial_sum) >= to_double(ts.tail_lower));
  CHECK(zeta2 - to_double(ts.partial_sum) <= to_double(ts.tail_upper));

  // Eigenvalues increase along shells for s <= 2.
  for (double s : {0.5, 1.0, 2.0}) {
    const auto tt = make_dirac_truncation(3, VilenkinGroupKind::PadicIntegers, 1, s, 6);
    for (size_t n = 1; n < tt.eigenvalues.size(); ++n)
      CHECK(tt.eigenvalues[n] > tt.eigenvalues[n - 1]);
  }
  CHECK_THROWS_AS(
      make_dirac_truncation(2, VilenkinGroupKind::PadicIntegers, 1, 0.0, 3),
      DomainError);
}

TEST_CASE("commutator blocks vanish above the function's shell") {
  const auto t = make_dirac_truncation(2, VilenkinGroupKind::PadicIntegers, 1, 1.0, 4);

  // The trivial character commutes with D.
  const auto m0 =
      commutator_block(character_function<CD>(2, 1, 0).to_complex(), t, 3);
  for (const CD& v : m0.a) CHECK(v == CD{0.0, 0.0});

  // f = chi_{1,1} (shell 1), L = 4: every column with source shell >= 2 is
  // identically zero, bit-for-bit.
  const auto f = character_function<CD>(2, 4, 1);
  const auto m = commutator_block(f, t, 4);
  for (long long j = 0; j < m.cols; ++j) {
    if (shell_of(2, static_cast<MonnaIndex>(j)) <= 1) continue;
    for (long long k = 0; k < m.rows; ++k) CHECK(m.at(k, j) == CD{0.0, 0.0});
  }
  // And the low block is genuinely nonzero: [D, pi(f)] chi_0 has a component
  // on chi_1 with weight lambda_1 - lambda_0 = 3.
  CHECK(m.at(1, 0).real() == doctest::Approx(3.0));

  // A non-shell-pure function is rejected.
  LevelFunction<CD> bad(2, 2);
  bad[0] = 1.0;
  bad[1] = 2.0;
  bad[2] = -1.0;
  bad[3] = 0.5;
  CHECK_THROWS_AS(commutator_block(bad, t, 3), DomainError);
}

TEST_CASE("qDq compression is diagonal with the closed-form entries") {
  const Coset q(2, 1, 0);

  SUBCASE("constant lambda gives c times the identity") {
    std::map<CharIndex, double> lambda;
    for (const CharIndex& idx : char_indices_up_to_level(2, 3))
      lambda[idx] = 2.5;
    const auto rep = compressed_qdq(lambda, q, 2);
    CHECK(rep.diagonal_ok);
    CHECK(rep.max_offdiag <= 1e-12);
    for (double d : rep.diagonal) CHECK(d == doctest::Approx(2.5).epsilon(1e-12));
    CHECK(rep.index.has_value());
    CHECK(*rep.index == 0);
  }

  SUBCASE("lambda_{l,s} = s reproduces the worked example") {
    std::map<CharIndex, Rat> lambda;
    for (const CharIndex& idx : char_indices_up_to_level(2, 3))
      lambda[idx] = Rat(idx.n);
    const auto rep = compressed_qdq_exact(lambda, q, 2);
    CHECK(rep.offdiag_zero);
    CHECK(rep.diagonal_matches);
    // psi_{1,0}: (lambda_{1,0} + lambda_{1,1})/2 = 1/2.
    // psi_{1,1}: (lambda_{1,2} + lambda_{3,2})/2 = 2.
    REQUIRE(rep.basis.size() == 4);
    CHECK(rep.basis[0] == CharIndex(2, 1, 0));
    CHECK(rep.diagonal[0] == Rat(1, 2));
    CHECK(rep.basis[1] == CharIndex(2, 1, 1));
    CHECK(rep.diagonal[1] == Rat(2));
    CHECK(rep.index.has_value());
  }

  SUBCASE("exact rational tables at p = 3, off-diagonal identically zero") {
    std::mt19937 rng(89);
    std::uniform_int_distribution<int> num(1, 12);
    std::map<CharIndex, Rat> lambda;
    for (const CharIndex& idx : char_indices_up_to_level(3, 3))
      lambda[idx] = Rat(num(rng), 4);
    const auto rep = compressed_qdq_exact(lambda, Coset(3, 1, 2), 2);
    CHECK(rep.offdiag_zero);
    CHECK(rep.diagonal_matches);
    CHECK(rep.basis.size() == 9);
  }

  SUBCASE("random float tables stay diagonal at 1e-12") {
    std::mt19937 rng(71);
    std::uniform_real_distribution<double> dist(0.5, 3.0);
    for (long long p : {2LL, 3LL})
      for (int r = 1; r <= 2; ++r)
        for (int trial = 0; trial < 5; ++trial) {
          std::map<CharIndex, double> lambda;
          for (const CharIndex& idx : char_indices_up_to_level(p, r + 2))
            lambda[idx] = dist(rng);
          const auto rep = compressed_qdq(lambda, Coset(p, r, trial % 2), 2);
          CHECK(rep.max_offdiag <= 1e-12);
          CHECK(rep.max_diag_error <= 1e-12);
          CHECK(rep.index.has_value());
        }
  }

  SUBCASE("incomplete tables are rejected") {
    std::map<CharIndex, double> lambda;
    for (const CharIndex& idx : char_indices_up_to_level(2, 3))
      lambda[idx] = 1.0;
    lambda.erase(CharIndex(2, 3, 3));
    CHECK_THROWS_AS(compressed_qdq(lambda, q, 2), DomainError);
  }
}

TEST_CASE("Gelfand-Kirillov growth sequences") {
  CHECK(gk_growth({}, 4) == std::vector<long long>{0, 0, 0, 0, 0});

  // V = span{chi_{1,1}} at p = 2, N = 1: dims 1, 2, 2, ...
  CHECK(gk_growth_exact({character_function<Cyclo>(2, 1, 1)}, 5) ==
        std::vector<long long>{1, 2, 2, 2, 2, 2});

  std::mt19937 rng(73);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (long long p : {2LL, 3LL}) {
    const int N = 3;
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<LevelFunction<CD>> gens;
      for (int i = 0; i < 2; ++i) {
        LevelFunction<CD> f(p, N);
        for (size_t x = 0; x < f.size(); ++x) f[x] = CD{dist(rng), dist(rng)};
        gens.push_back(std::move(f));
      }
      const int k_max = static_cast<int>(checked_pow(p, N)) + 2;
      const auto dims = gk_growth(gens, k_max);
      for (size_t k = 1; k < dims.size(); ++k) CHECK(dims[k] >= dims[k - 1]);
      CHECK(dims.back() <= checked_pow(p, N));
      CHECK(dims.back() == dims[dims.size() - 2]);  // saturated
    }
  }
}

TEST_CASE("phi checkers: commuting families pass, mutations are flagged") {
  for (long long p : {2LL, 3LL}) {
    for (int m = 0; m <= 2; ++m) {
      const std::uint64_t B = static_cast<std::uint64_t>(checked_pow(p, m + 1));
      const std::uint64_t N = 4 * B;

      // Block translation phi(n) = n + 2B.
      PhiTable shift{p, {}, {}};
      for (std::uint64_t n = 0; n < N; ++n) shift.values.push_back(n + 2 * B);
      CHECK(phi_commuting_check(shift, m).passed());
      const auto blocks = phi_block_check(shift, m, 0);
      CHECK(blocks.passed());
      CHECK(blocks.blocks_checked == 4);

      // phi = sigma(c, .) commutes by commutativity of the dual group.
      PhiTable sig{p, {}, {}};
      for (std::uint64_t n = 0; n < N; ++n)
        sig.values.push_back(sigma(p, 5, n));
      CHECK(phi_commuting_check(sig, m).passed());
      CHECK(phi_block_check(sig, m, 0).passed());

      // Swapping 0 <-> B breaks commuting somewhere below B.
      PhiTable swapped{p, {}, {}};
      for (std::uint64_t n = 0; n < N; ++n) swapped.values.push_back(n);
      swapped.values[0] = B;
      swapped.values[static_cast<size_t>(B)] = 0;
      const auto rep = phi_commuting_check(swapped, m);
      CHECK(!rep.passed());
      bool low = false;
      for (std::uint64_t v : rep.violations) low = low || v < B;
      CHECK(low);
      CHECK(!phi_block_check(swapped, m, 0).passed());
    }
  }

  PhiTable dup{2, {}, {}};
  dup.values = {std::uint64_t(1), std::uint64_t(1)};
  CHECK_THROWS_AS(phi_commuting_check(dup, 0), DomainError);
  PhiTable ok{2, {}, {}};
  ok.values = {std::uint64_t(0), std::uint64_t(1)};
  ok.declared_missing = {std::uint64_t(1)};
  CHECK_THROWS_AS(phi_commuting_check(ok, 0), DomainError);
  ok.declared_missing = {std::uint64_t(5)};
  CHECK_NOTHROW(phi_commuting_check(ok, 0));
  CHECK_THROWS_AS(phi_block_check(ok, 0, 99), DomainError);
}

TEST_CASE("commuting tables are block-preserving (implication property)") {
  // Randomized block translations composed with sigma translations; the
  // implication "commuting passes => block check passes" must hold, and
  // adversarial cross-block swaps must trip the commuting check.
  std::mt19937 rng(79);
  for (long long p : {2LL, 3LL}) {
    for (int m = 0; m <= 1; ++m) {
      const std::uint64_t B = static_cast<std::uint64_t>(checked_pow(p, m + 1));
      const std::uint64_t N = 4 * B;
      std::uniform_int_distribution<std::uint64_t> c_dist(0, 6);
      for (int trial = 0; trial < 20; ++trial) {
        PhiTable t{p, {}, {}};
        const std::uint64_t shift = c_dist(rng) * B;
        const std::uint64_t c = c_dist(rng);
        for (std::uint64_t n = 0; n < N; ++n)
          t.values.push_back(sigma(p, c, n) + shift);
        const bool commutes = phi_commuting_check(t, m).passed();
        CHECK(commutes);
        if (commutes) CHECK(phi_block_check(t, m, 0).passed());

        // Mutate: swap two entries from different blocks.
        std::uniform_int_distribution<std::uint64_t> pos(0, N - 1);
        std::uint64_t a = pos(rng), b = pos(rng);
        if (a / B == b / B) b = (b + B) % N;
        std::swap(t.values[static_cast<size_t>(a)], t.values[static_cast<size_t>(b)]);
        CHECK(!phi_block_check(t, m, 0).passed());
        CHECK(!phi_commuting_check(t, m).passed());
      }
    }
  }
}

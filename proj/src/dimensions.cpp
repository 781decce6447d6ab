#include "vilenkin/dimensions.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "vilenkin/heisenberg.hpp"

namespace vilenkin {

namespace {

Rat rat_pow(const Rat& x, long long e) {
  using boost::multiprecision::pow;
  const BigInt num = pow(boost::multiprecision::numerator(x),
                         static_cast<unsigned>(e));
  const BigInt den = pow(boost::multiprecision::denominator(x),
                         static_cast<unsigned>(e));
  return Rat(num, den);
}

Cyclo cyclo_pow(const Cyclo& x, long long e) {
  Cyclo acc(x.p(), Rat(1));
  Cyclo base = x;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

}  // namespace

long long FiniteRep::dim() const {
  long long k = 0;
  for (int i = 0; i < group->num_irreps(); ++i)
    k += mults[static_cast<size_t>(i)] * group->irrep_dims[static_cast<size_t>(i)];
  return k;
}

Cyclo FiniteRep::trace(int g) const {
  Cyclo acc(group->p);
  for (int i = 0; i < group->num_irreps(); ++i) {
    const long long m = mults[static_cast<size_t>(i)];
    if (m != 0)
      acc += group->irrep_traces[static_cast<size_t>(i)][static_cast<size_t>(g)] *
             Rat(m);
  }
  return acc;
}

bool FiniteRep::is_symmetric() const {
  for (int g = 0; g < group->order; ++g) {
    const Cyclo t = trace(g);
    if (!(t.conj() == t)) return false;
  }
  return true;
}

Rat rw_return_prob(const FiniteRep& rep, long long n) {
  if (n < 1) throw DomainError("rw_return_prob: n must be >= 1");
  if (!rep.is_symmetric())
    throw DomainError("rw_return_prob: representation is not symmetric");
  const long long k = rep.dim();
  if (k < 1) throw DomainError("rw_return_prob: zero representation");
  const long long order = rep.group->order;

  // Sum_g Tr(g)^{2n}; individual powers may be irrational but the total is
  // an integer multiple of 1/1 by the multiplicity identity.
  bool all_rational = true;
  std::vector<Rat> rational_traces;
  for (int g = 0; g < order && all_rational; ++g) {
    if (auto r = rep.trace(g).as_rational())
      rational_traces.push_back(*r);
    else
      all_rational = false;
  }

  Rat total;
  if (all_rational) {
    for (const Rat& t : rational_traces) total += rat_pow(t, 2 * n);
  } else {
    Cyclo acc(rep.group->p);
    for (int g = 0; g < order; ++g) acc += cyclo_pow(rep.trace(g), 2 * n);
    const auto r = acc.as_rational();
    if (!r) throw DomainError("rw_return_prob: power sum failed to be rational");
    total = *r;
  }
  return total / (Rat(order) * rat_pow(Rat(k), 2 * n));
}

double rw_return_prob_double(const FiniteRep& rep, long long n) {
  const long long k = rep.dim();
  double total = 0.0;
  for (int g = 0; g < rep.group->order; ++g) {
    const double t = rep.trace(g).to_complex().real() / static_cast<double>(k);
    total += std::pow(t, static_cast<double>(2 * n));
  }
  return total / static_cast<double>(rep.group->order);
}

double rw_dim_estimate(const FiniteRep& rep, long long n) {
  if (n < 2) throw DomainError("rw_dim_estimate: n must be >= 2 (log n = 0)");
  const Rat pn = rw_return_prob(rep, n);
  return -2.0 * log_rat(pn) / std::log(static_cast<double>(n));
}

double rw_dim_upper_bound(long long group_order, long long n) {
  return 2.0 * std::log(static_cast<double>(group_order)) /
         std::log(static_cast<double>(n));
}

// ---------------------------------------------------------------------------
// Dirac truncations

long long shell_multiplicity(VilenkinGroupKind kind, long long p, int d, int n) {
  if (n < 0) throw DomainError("shell_multiplicity: n must be >= 0");
  if (n == 0) return 1;
  if (kind == VilenkinGroupKind::PadicIntegers)
    return checked_pow(p, n) - checked_pow(p, n - 1);
  long long total = 0;
  for (const HeisDualIndex& zeta : enumerate_dual_shell(p, d, n))
    total += zeta.dim() * zeta.dim();
  return total;
}

DiracTruncation make_dirac_truncation(long long p, VilenkinGroupKind kind, int d,
                                      double s, int max_shell) {
  if (!(s > 0.0)) throw DomainError("Dirac truncation: s must be > 0");
  if (max_shell < 0) throw DomainError("Dirac truncation: max shell must be >= 0");
  DiracTruncation t;
  t.p = p;
  t.kind = kind;
  t.d = d;
  t.s = s;
  t.max_shell = max_shell;
  for (int n = 0; n <= max_shell; ++n) {
    const long long m = shell_multiplicity(kind, p, d, n);
    t.shell_dims.push_back(m);
    t.eigenvalues.push_back(std::pow(
        static_cast<double>(n + 1) * (n + 1) * static_cast<double>(m), 1.0 / s));
  }
  return t;
}

std::vector<std::pair<double, long long>> dirac_spectrum(const DiracTruncation& t) {
  std::vector<std::pair<double, long long>> out;
  for (int n = 0; n <= t.max_shell; ++n)
    out.emplace_back(t.eigenvalues[static_cast<size_t>(n)],
                     t.shell_dims[static_cast<size_t>(n)]);
  return out;
}

DiracTraceSum dirac_trace_power(const DiracTruncation& t) {
  DiracTraceSum out;
  for (long long n = 0; n <= t.max_shell; ++n)
    out.partial_sum += Rat(1, (n + 1) * (n + 1));
  out.tail_lower = Rat(1, t.max_shell + 2);
  out.tail_upper = Rat(1, t.max_shell + 1);
  return out;
}

CMatrix commutator_block(const LevelFunction<CD>& f, const DiracTruncation& t,
                         int L, double tol) {
  const long long p = f.p();
  if (t.p != p) throw PrecisionError("commutator_block: prime mismatch");
  if (t.max_shell < L)
    throw DomainError("commutator_block: Dirac truncation shorter than L");
  const std::optional<int> shell = pure_shell_of(analyze_fast(f), tol);
  if (!shell) throw DomainError("commutator_block: f is not shell-pure");
  if (L < *shell) throw DomainError("commutator_block: L must be >= shell of f");
  // pi(f) of the declared shell-pure f: drop the sub-tolerance dust so the
  // vanishing columns come out as exact zeros.
  const CoefSequence<CD> coefs = shell_mask(analyze_fast(f), *shell);

  const long long n = checked_pow(p, L);
  std::vector<Rat> tvals(static_cast<size_t>(n));
  std::vector<int> shl(static_cast<size_t>(n));
  for (long long k = 0; k < n; ++k) {
    const PadicTrunc pk = PadicTrunc::from_value(
        p, std::max(1, digit_length(p, static_cast<MonnaIndex>(k))), k);
    tvals[static_cast<size_t>(k)] = monna_map(pk);
    shl[static_cast<size_t>(k)] = shell_of(p, static_cast<MonnaIndex>(k));
  }
  CMatrix out(n, n);
  for (long long j = 0; j < n; ++j) {
    for (long long k = 0; k < n; ++k) {
      // pi(f)_{kj} is the coefficient of f at the dual-group difference k - j.
      Rat diff = tvals[static_cast<size_t>(k)] - tvals[static_cast<size_t>(j)];
      if (diff < 0) diff += 1;
      const MonnaIndex a = monna_inverse(p, diff);
      if (a >= coefs.size()) continue;
      const CD c = coefs.at_monna(a);
      if (std::abs(c) == 0.0) continue;
      const double gap = t.eigenvalues[static_cast<size_t>(shl[static_cast<size_t>(k)])] -
                         t.eigenvalues[static_cast<size_t>(shl[static_cast<size_t>(j)])];
      out.at(k, j) = gap * c;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// qDq compression

namespace {

// Shared value-space computation: synthesize D applied to each psi through
// its character expansion, cut the result back to the coset, and take inner
// products against the unscaled psi family. The p^{+-r/2} normalizations
// cancel, so everything stays in the coefficient ring.
template <class S, class R>
std::vector<S> qdq_matrix(const std::map<CharIndex, R>& lambda, const Coset& q,
                          int L, std::vector<CharIndex>& basis,
                          std::vector<S>& closed_form_num,
                          std::function<S(const Cyclo&, const R&)> mul_lambda) {
  const long long p = q.p;
  const int r = q.level;
  const int big = r + L;
  // The table must cover every character up to level L + r.
  for (const CharIndex& idx : char_indices_up_to_level(p, big))
    if (!lambda.count(idx))
      throw DomainError("compressed_qdq: lambda table is missing index (" +
                        std::to_string(idx.m) + "," + std::to_string(idx.n) + ")");
  basis = char_indices_up_to_level(p, L);
  const long long dim = static_cast<long long>(basis.size());
  const long long stride = checked_pow(p, r);

  std::vector<LevelFunction<S>> unscaled;
  unscaled.reserve(basis.size());
  for (const CharIndex& idx : basis) {
    LevelFunction<Cyclo> u = psi_unscaled(q, idx, big);
    if constexpr (std::is_same_v<S, Cyclo>)
      unscaled.push_back(std::move(u));
    else
      unscaled.push_back(u.to_complex());
  }

  std::vector<S> matrix(static_cast<size_t>(dim * dim), ScalarTraits<S>::zero(p));
  closed_form_num.assign(basis.size(), ScalarTraits<S>::zero(p));
  for (long long col = 0; col < dim; ++col) {
    const CoefSequence<Cyclo> expansion =
        psi_expansion_unscaled(q, basis[static_cast<size_t>(col)]);
    CoefSequence<S> dcoefs(p, big);
    S lam_sum = ScalarTraits<S>::zero(p);
    for (size_t k = 0; k < expansion.size(); ++k) {
      const Cyclo& c = expansion.at_monna(static_cast<MonnaIndex>(k));
      if (c.is_zero()) continue;
      const R& lv = lambda.at(to_char_index(p, static_cast<MonnaIndex>(k)));
      dcoefs.set_monna(static_cast<MonnaIndex>(k), mul_lambda(c, lv));
      lam_sum = lam_sum + mul_lambda(Cyclo(p, Rat(1)), lv);
    }
    ScalarTraits<S>::scale(lam_sum, Rat(1, big_pow(p, r)));
    closed_form_num[static_cast<size_t>(col)] = lam_sum;

    LevelFunction<S> e = synthesize(dcoefs);
    // q e: zero outside the coset.
    for (size_t x = 0; x < e.size(); ++x)
      if (static_cast<long long>(x) % stride != q.representative)
        e[x] = ScalarTraits<S>::zero(p);
    for (long long row = 0; row < dim; ++row)
      matrix[static_cast<size_t>(row * dim + col)] =
          inner_product(e, unscaled[static_cast<size_t>(row)]);
  }
  return matrix;
}

}  // namespace

QdqReport compressed_qdq(const std::map<CharIndex, double>& lambda, const Coset& q,
                         int L, double tol) {
  if (L < 1) throw DomainError("compressed_qdq: L must be >= 1");
  QdqReport rep;
  std::vector<CD> closed;
  std::function<CD(const Cyclo&, const double&)> mul =
      [](const Cyclo& c, const double& l) { return c.to_complex() * l; };
  const std::vector<CD> m = qdq_matrix<CD, double>(lambda, q, L, rep.basis, closed, mul);
  const long long dim = static_cast<long long>(rep.basis.size());
  rep.matrix = CMatrix(dim, dim);
  rep.matrix.a = m;
  for (long long r = 0; r < dim; ++r)
    for (long long c = 0; c < dim; ++c)
      if (r != c)
        rep.max_offdiag = std::max(rep.max_offdiag, std::abs(rep.matrix.at(r, c)));
  for (long long i = 0; i < dim; ++i) {
    rep.diagonal.push_back(rep.matrix.at(i, i).real());
    rep.closed_form.push_back(closed[static_cast<size_t>(i)].real());
    rep.max_diag_error = std::max(
        rep.max_diag_error, std::abs(rep.matrix.at(i, i) - closed[static_cast<size_t>(i)]));
  }
  rep.diagonal_ok = rep.max_offdiag <= tol && rep.max_diag_error <= tol;
  const bool all_nonzero =
      std::all_of(rep.diagonal.begin(), rep.diagonal.end(),
                  [&](double dgl) { return std::abs(dgl) > tol; });
  if (rep.diagonal_ok && all_nonzero) rep.index = 0;
  return rep;
}

QdqExactReport compressed_qdq_exact(const std::map<CharIndex, Rat>& lambda,
                                    const Coset& q, int L) {
  if (L < 1) throw DomainError("compressed_qdq: L must be >= 1");
  QdqExactReport rep;
  std::vector<Cyclo> closed;
  std::function<Cyclo(const Cyclo&, const Rat&)> mul =
      [](const Cyclo& c, const Rat& l) { return c * l; };
  rep.matrix = qdq_matrix<Cyclo, Rat>(lambda, q, L, rep.basis, closed, mul);
  const long long dim = static_cast<long long>(rep.basis.size());
  rep.offdiag_zero = true;
  rep.diagonal_matches = true;
  for (long long r = 0; r < dim; ++r)
    for (long long c = 0; c < dim; ++c)
      if (r != c && !rep.matrix[static_cast<size_t>(r * dim + c)].is_zero())
        rep.offdiag_zero = false;
  for (long long i = 0; i < dim; ++i) {
    const auto diag = rep.matrix[static_cast<size_t>(i * dim + i)].as_rational();
    const auto want = closed[static_cast<size_t>(i)].as_rational();
    if (!diag || !want) throw DomainError("compressed_qdq: non-rational diagonal");
    rep.diagonal.push_back(*diag);
    rep.closed_form.push_back(*want);
    if (*diag != *want) rep.diagonal_matches = false;
  }
  const bool all_nonzero = std::all_of(rep.diagonal.begin(), rep.diagonal.end(),
                                       [](const Rat& d) { return d != 0; });
  if (rep.offdiag_zero && all_nonzero) rep.index = 0;
  return rep;
}

// ---------------------------------------------------------------------------
// Gelfand-Kirillov growth

std::vector<long long> gk_growth(const std::vector<LevelFunction<CD>>& generators,
                                 int k_max, double tol) {
  if (k_max < 0) throw DomainError("gk_growth: k_max must be >= 0");
  long long p = 0;
  int level = 0;
  for (const auto& g : generators) {
    if (p == 0) p = g.p();
    if (g.p() != p) throw PrecisionError("gk_growth: generators over different primes");
    level = std::max(level, g.level());
  }
  if (generators.empty()) {
    // V = {0} is the degenerate case: report zero dimensions throughout.
    return std::vector<long long>(static_cast<size_t>(k_max) + 1, 0);
  }

  std::vector<LevelFunction<CD>> gens;
  for (const auto& g : generators) gens.push_back(g.promoted(level));
  const size_t n = gens[0].size();

  std::vector<std::vector<CD>> basis;
  auto try_add = [&](std::vector<CD> v) -> bool {
    double n0 = 0;
    for (const CD& z : v) n0 += std::norm(z);
    n0 = std::sqrt(n0);
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis) {
        CD proj{0.0, 0.0};
        for (size_t i = 0; i < n; ++i) proj += v[i] * std::conj(b[i]);
        for (size_t i = 0; i < n; ++i) v[i] -= proj * b[i];
      }
    }
    double rem = 0;
    for (const CD& z : v) rem += std::norm(z);
    rem = std::sqrt(rem);
    if (rem <= tol * std::max(1.0, n0)) return false;
    for (CD& z : v) z /= rem;
    basis.push_back(std::move(v));
    return true;
  };

  std::vector<long long> dims;
  try_add(std::vector<CD>(n, CD{1.0, 0.0}));
  dims.push_back(static_cast<long long>(basis.size()));
  std::vector<size_t> last_added = {0};
  for (int k = 1; k <= k_max; ++k) {
    std::vector<size_t> added_now;
    for (const auto& g : gens) {
      for (size_t bi : last_added) {
        std::vector<CD> v(n);
        for (size_t i = 0; i < n; ++i) v[i] = g[i] * basis[bi][i];
        if (try_add(std::move(v))) added_now.push_back(basis.size() - 1);
      }
    }
    dims.push_back(static_cast<long long>(basis.size()));
    last_added = std::move(added_now);
    if (last_added.empty()) {
      while (static_cast<int>(dims.size()) <= k_max) dims.push_back(dims.back());
      break;
    }
  }
  return dims;
}

std::vector<long long> gk_growth_exact(
    const std::vector<LevelFunction<Cyclo>>& generators, int k_max) {
  if (k_max < 0) throw DomainError("gk_growth: k_max must be >= 0");
  if (generators.empty())
    return std::vector<long long>(static_cast<size_t>(k_max) + 1, 0);
  long long p = generators[0].p();
  int level = 0;
  for (const auto& g : generators) {
    if (g.p() != p) throw PrecisionError("gk_growth: generators over different primes");
    level = std::max(level, g.level());
  }
  std::vector<LevelFunction<Cyclo>> gens;
  for (const auto& g : generators) gens.push_back(g.promoted(level));
  const size_t n = gens[0].size();

  struct Row {
    size_t pivot;
    std::vector<Cyclo> v;
  };
  std::vector<Row> rows;  // kept in increasing pivot order
  std::vector<std::vector<Cyclo>> reps;

  // Fraction-free elimination; returns true when the candidate added rank.
  auto try_add = [&](std::vector<Cyclo> v) -> bool {
    const std::vector<Cyclo> original = v;
    for (const Row& row : rows) {
      if (v[row.pivot].is_zero()) continue;
      const Cyclo factor = v[row.pivot];
      for (size_t i = 0; i < n; ++i)
        v[i] = v[i] * row.v[row.pivot] - factor * row.v[i];
    }
    size_t pivot = n;
    for (size_t i = 0; i < n; ++i)
      if (!v[i].is_zero()) {
        pivot = i;
        break;
      }
    if (pivot == n) return false;
    Row row{pivot, std::move(v)};
    auto it = std::lower_bound(rows.begin(), rows.end(), row,
                               [](const Row& a, const Row& b) { return a.pivot < b.pivot; });
    rows.insert(it, std::move(row));
    reps.push_back(original);
    return true;
  };

  std::vector<long long> dims;
  try_add(std::vector<Cyclo>(n, Cyclo(p, Rat(1))));
  dims.push_back(static_cast<long long>(rows.size()));
  std::vector<size_t> last_added = {0};
  for (int k = 1; k <= k_max; ++k) {
    std::vector<size_t> added_now;
    for (const auto& g : gens) {
      for (size_t ri : last_added) {
        std::vector<Cyclo> v(n);
        for (size_t i = 0; i < n; ++i) v[i] = g[i] * reps[ri][i];
        if (try_add(std::move(v))) added_now.push_back(reps.size() - 1);
      }
    }
    dims.push_back(static_cast<long long>(rows.size()));
    last_added = std::move(added_now);
    if (last_added.empty()) {
      while (static_cast<int>(dims.size()) <= k_max) dims.push_back(dims.back());
      break;
    }
  }
  return dims;
}

// ---------------------------------------------------------------------------
// phi / sigma obstruction checkers

void PhiTable::validate() const {
  if (p < 2 || !is_prime(p)) throw DomainError("PhiTable: p must be a prime >= 2");
  std::set<std::uint64_t> image;
  for (const auto& v : values)
    if (v && !image.insert(*v).second)
      throw DomainError("PhiTable: table is not injective");
  for (std::uint64_t miss : declared_missing)
    if (image.count(miss))
      throw DomainError("PhiTable: declared deficiency set intersects the image");
}

PhiCommutingReport phi_commuting_check(const PhiTable& phi, int m) {
  phi.validate();
  if (m < 0) throw DomainError("phi_commuting_check: m must be >= 0");
  PhiCommutingReport rep;
  rep.m = m;
  const std::uint64_t N = phi.domain_size();
  for (std::uint64_t n = 0; n < N; ++n) {
    if (!phi.values[static_cast<size_t>(n)]) continue;
    const std::uint64_t s = sigma_pm_closed(phi.p, m, n);
    if (s >= N || !phi.values[static_cast<size_t>(s)]) continue;
    ++rep.checked;
    const std::uint64_t lhs = *phi.values[static_cast<size_t>(s)];
    const std::uint64_t rhs =
        sigma_pm_closed(phi.p, m, *phi.values[static_cast<size_t>(n)]);
    if (lhs != rhs) rep.violations.push_back(n);
  }
  return rep;
}

PhiBlockReport phi_block_check(const PhiTable& phi, int m, std::uint64_t m0) {
  phi.validate();
  if (m < 0) throw DomainError("phi_block_check: m must be >= 0");
  if (m0 >= phi.domain_size())
    throw DomainError("phi_block_check: m0 outside the table domain");
  PhiBlockReport rep;
  rep.m = m;
  rep.m0 = m0;
  const std::uint64_t N = phi.domain_size();
  const std::uint64_t B = static_cast<std::uint64_t>(checked_pow(phi.p, m + 1));
  for (std::uint64_t l = (m0 + B - 1) / B; (l + 1) * B <= N; ++l) {
    bool defined = true;
    std::set<std::uint64_t> image_blocks;
    for (std::uint64_t t = 0; t < B && defined; ++t) {
      const auto& v = phi.values[static_cast<size_t>(l * B + t)];
      if (!v)
        defined = false;
      else
        image_blocks.insert(*v / B);
    }
    if (!defined) continue;
    ++rep.blocks_checked;
    if (image_blocks.size() > 1)
      rep.violations.push_back(PhiBlockViolation{
          l, std::vector<std::uint64_t>(image_blocks.begin(), image_blocks.end())});
  }
  return rep;
}

}  // namespace vilenkin

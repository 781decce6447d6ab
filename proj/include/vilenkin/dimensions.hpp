#pragma once

#include <map>
#include <optional>
#include <utility>

#include "vilenkin/finite_group.hpp"
#include "vilenkin/fourier.hpp"

namespace vilenkin {

// A finite-dimensional representation of a finite group, as multiplicities
// of the group's irreducible constituents.
struct FiniteRep {
  std::shared_ptr<const FiniteGroup> group;
  std::vector<long long> mults;

  long long dim() const;
  Cyclo trace(int g) const;
  // chi = conj(chi): every trace value is fixed by conjugation.
  bool is_symmetric() const;
};

// Return probability after 2n steps: p_n = m(chi^{(x)2n}) / k^{2n}
//   = (1/|G|) Sum_g (Tr chi(g) / k)^{2n}, an exact rational.
// Requires a symmetric rep and n >= 1.
Rat rw_return_prob(const FiniteRep& rep, long long n);

// Same quantity in floating point, for long sweeps over n.
double rw_return_prob_double(const FiniteRep& rep, long long n);

// -2 log p_n / log n, the quantity whose limsup defines d_RW. Requires n >= 2.
double rw_dim_estimate(const FiniteRep& rep, long long n);

// The universal bound 2 log|G| / log n that forces the estimate to 0.
double rw_dim_upper_bound(long long group_order, long long n);

enum class VilenkinGroupKind { PadicIntegers, Heisenberg };

// dim M(G_n^perp \ G_{n-1}^perp): 1 at n = 0; p^n - p^{n-1} for Z_p; the
// level-n dual shell's Sum dim^2 for H_d (delegates to enumerate_dual).
long long shell_multiplicity(VilenkinGroupKind kind, long long p, int d, int n);

// The Dirac truncation of the spectral-dimension construction: D acts on
// shell n as the scalar ((n+1)^2 M_n)^{1/s}.
struct DiracTruncation {
  long long p = 0;
  VilenkinGroupKind kind = VilenkinGroupKind::PadicIntegers;
  int d = 1;
  double s = 1.0;
  int max_shell = 0;
  std::vector<long long> shell_dims;  // M_n, n = 0..max_shell
  std::vector<double> eigenvalues;    // ((n+1)^2 M_n)^{1/s}
};

DiracTruncation make_dirac_truncation(long long p, VilenkinGroupKind kind, int d,
                                      double s, int max_shell);

// (eigenvalue, multiplicity) per shell n <= max_shell.
std::vector<std::pair<double, long long>> dirac_spectrum(const DiracTruncation& t);

// Partial sum of Tr |D|^{-s} = Sum 1/(n+1)^2, independent of s and of the
// multiplicity table, with the certified integral tail bounds.
struct DiracTraceSum {
  Rat partial_sum;  // Sum_{n<=N} 1/(n+1)^2
  Rat tail_lower;   // 1/(N+2) <= zeta(2) - partial_sum
  Rat tail_upper;   // <= 1/(N+1)
};
DiracTraceSum dirac_trace_power(const DiracTruncation& t);

// Dense complex matrix, row-major.
struct CMatrix {
  long long rows = 0, cols = 0;
  std::vector<CD> a;

  CMatrix() = default;
  CMatrix(long long r, long long c)
      : rows(r), cols(c), a(static_cast<size_t>(r * c), CD{0.0, 0.0}) {}
  CD& at(long long r, long long c) { return a[static_cast<size_t>(r * cols + c)]; }
  const CD& at(long long r, long long c) const {
    return a[static_cast<size_t>(r * cols + c)];
  }
};

// Matrix of [D, pi(f)] on the characters chi_0..chi_{p^L - 1} (columns index
// the source character). f must be shell-pure; columns in shells above f's
// shell vanish identically, so the commutator is a finite block.
CMatrix commutator_block(const LevelFunction<CD>& f, const DiracTruncation& t,
                         int L, double tol = 1e-12);

// The compression q D q on the psi basis of q L^2(Z_p), for q = 1_{x+p^r Z_p}
// and D chi_{l,s} = lambda_{l,s} chi_{l,s}.
struct QdqReport {
  std::vector<CharIndex> basis;       // psi indices, level <= L, Monna order
  CMatrix matrix;
  double max_offdiag = 0.0;
  std::vector<double> diagonal;
  std::vector<double> closed_form;    // p^{-r} partial lambda sums
  double max_diag_error = 0.0;
  bool diagonal_ok = false;
  // 0 whenever every diagonal entry is nonzero; the compression then has
  // trivial index at this truncation.
  std::optional<long long> index;
};

QdqReport compressed_qdq(const std::map<CharIndex, double>& lambda, const Coset& q,
                         int L, double tol = 1e-12);

// Exact-rational variant: off-diagonal entries must vanish identically.
struct QdqExactReport {
  std::vector<CharIndex> basis;
  std::vector<Cyclo> matrix;  // row-major, dim x dim
  bool offdiag_zero = false;
  std::vector<Rat> diagonal;
  std::vector<Rat> closed_form;
  bool diagonal_matches = false;
  std::optional<long long> index;
};

QdqExactReport compressed_qdq_exact(const std::map<CharIndex, Rat>& lambda,
                                    const Coset& q, int L);

// dim(V_0), dim(V_1), ..., dim(V_{k_max}) for V spanned by the generators,
// V_k = span{1} + V.V_{k-1}; rank by Gram-Schmidt at the given tolerance.
std::vector<long long> gk_growth(const std::vector<LevelFunction<CD>>& generators,
                                 int k_max, double tol = 1e-9);

// Exact rank path (fraction-free elimination over the cyclotomic field).
std::vector<long long> gk_growth_exact(
    const std::vector<LevelFunction<Cyclo>>& generators, int k_max);

// A partial injection [0, N) -> N_0 with a declared co-image deficiency set.
struct PhiTable {
  long long p = 0;
  std::vector<std::optional<std::uint64_t>> values;
  std::vector<std::uint64_t> declared_missing;

  std::uint64_t domain_size() const { return values.size(); }
  // DomainError on a non-injective table or a deficiency set meeting the image.
  void validate() const;
};

// Scans every in-domain n with phi(sigma(p^m, n)) defined and reports the n
// where phi(sigma(p^m, n)) != sigma(p^m, phi(n)).
struct PhiCommutingReport {
  int m = 0;
  std::uint64_t checked = 0;
  std::vector<std::uint64_t> violations;
  bool passed() const { return violations.empty(); }
};
PhiCommutingReport phi_commuting_check(const PhiTable& phi, int m);

// For every block P_{m,l} fully contained in [m0, N) with all images defined,
// asserts phi maps it into a single block. Must pass whenever the commuting
// check passes on the same table.
struct PhiBlockViolation {
  std::uint64_t block = 0;
  std::vector<std::uint64_t> image_blocks;
};
struct PhiBlockReport {
  int m = 0;
  std::uint64_t m0 = 0;
  std::uint64_t blocks_checked = 0;
  std::vector<PhiBlockViolation> violations;
  bool passed() const { return violations.empty(); }
};
PhiBlockReport phi_block_check(const PhiTable& phi, int m, std::uint64_t m0);

}  // namespace vilenkin

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vilenkin/cyclotomic.hpp"
#include "vilenkin/padic.hpp"

namespace vilenkin {

// An element [x, y, z] of H_d(Z_p) truncated at precision N: the unipotent
// matrix with top row (1, x^t, z), middle block (I_d, y), bottom (0, 0, 1).
struct HeisElement {
  HeisElement(std::vector<PadicTrunc> x, std::vector<PadicTrunc> y, PadicTrunc z);
  static HeisElement identity(long long p, int d, int precision);
  static HeisElement from_values(long long p, int d, int precision,
                                 const std::vector<long long>& xs,
                                 const std::vector<long long>& ys, long long zv);

  std::vector<PadicTrunc> x, y;
  PadicTrunc z;

  long long p() const { return z.p(); }
  int d() const { return static_cast<int>(x.size()); }
  int precision() const { return z.precision(); }
  HeisElement truncated(int r) const;

  bool operator==(const HeisElement&) const = default;
};

// [x,y,z][x',y',z'] = [x+x', y+y', z+z'+x^t y'].
HeisElement heis_mul(const HeisElement& g, const HeisElement& h);
// [x,y,z]^{-1} = [-x, -y, -z + x^t y].
HeisElement heis_inv(const HeisElement& g);

// Enumeration of the truncation grid H_d(Z_p/p^N): flat index over the
// (2d+1) digit blocks (x_0..x_{d-1}, y_0..y_{d-1}, z), x_0 least significant.
HeisElement heis_element_at(long long p, int d, int precision, long long flat);
long long heis_flat_index(const HeisElement& g);
long long heis_grid_size(long long p, int d, int precision);

// A class (alpha, beta, gamma) of the unitary dual at level n:
// gamma = a/p^j in Q_p/Z_p reduced, and alpha, beta in Q_p^d modulo
// |gamma|_p^{-1} Z_p^d with canonical representatives c/p^n, 0 <= c < p^{n-j}.
// The representation has dimension |gamma|_p^d = p^{jd}.
class HeisDualIndex {
 public:
  HeisDualIndex(int d, int level, const QpModZp& gamma,
                std::vector<long long> alpha_num, std::vector<long long> beta_num);
  static HeisDualIndex trivial(long long p, int d);

  long long p() const { return gamma_.p(); }
  int d() const { return d_; }
  int level() const { return level_; }
  const QpModZp& gamma() const { return gamma_; }
  int j() const { return gamma_.denom_exponent(); }
  const std::vector<long long>& alpha_num() const { return alpha_; }
  const std::vector<long long>& beta_num() const { return beta_; }
  Rat alpha_value(int i) const;  // c_i / p^level
  Rat beta_value(int i) const;

  long long dim() const;   // p^{jd}
  long long norm() const;  // max coordinate |.|_p, trivial coordinates count 1

  std::string label() const;
  bool operator==(const HeisDualIndex&) const = default;

 private:
  int d_;
  int level_;
  QpModZp gamma_;
  std::vector<long long> alpha_, beta_;
};

// All classes with ||(alpha,beta,gamma)||_p <= p^n, in a fixed deterministic
// order (j ascending, then gamma, alpha, beta).
std::vector<HeisDualIndex> enumerate_dual(long long p, int d, int n);
// The shell ||.||_p = p^n.
std::vector<HeisDualIndex> enumerate_dual_shell(long long p, int d, int n);

// Row/column labels k live in (Z/p^j Z)^d; flat index is lexicographic with
// the first coordinate most significant.
std::vector<long long> dual_point_unflatten(const HeisDualIndex& zeta, long long flat);
long long dual_point_flatten(const HeisDualIndex& zeta,
                             const std::vector<long long>& k);

// (chi_zeta)_{k,k'}([x,y,z]) =
//   e^{2 pi i {gamma(z + k'y) + (x alpha + y beta)}_p} 1_{k-k'+p^j Z_p^d}(x),
// an exact phase when the indicator fires, nothing otherwise.
// Requires g.precision >= level(zeta).
std::optional<Phase> matrix_coeff(const HeisDualIndex& zeta, long long row,
                                  long long col, const HeisElement& g);

// The full (generalized permutation) matrix of chi_zeta(g).
class RepMatrix {
 public:
  RepMatrix(HeisDualIndex zeta, std::vector<std::optional<Phase>> entries);

  const HeisDualIndex& zeta() const { return zeta_; }
  long long dim() const { return dim_; }
  const std::optional<Phase>& entry(long long row, long long col) const {
    return entries_[static_cast<size_t>(row * dim_ + col)];
  }

  RepMatrix adjoint() const;
  friend RepMatrix operator*(const RepMatrix& a, const RepMatrix& b);
  bool is_identity() const;
  bool operator==(const RepMatrix&) const = default;

 private:
  HeisDualIndex zeta_;
  long long dim_;
  std::vector<std::optional<Phase>> entries_;
};

RepMatrix rep_matrix(const HeisDualIndex& zeta, const HeisElement& g);

// An exact scalar of the form scale * e^{2 pi i q}, scale rational.
struct ScaledPhase {
  Rat scale;
  Phase phase;

  std::complex<double> value() const { return to_double(scale) * phase.value(); }
  Cyclo to_cyclo() const { return Cyclo::term(phase, scale); }
  bool operator==(const ScaledPhase&) const = default;
};

// One summand of the K_0 generator decomposition: the coefficient sits on
// the matrix entry (row, col) = (k + P_gamma(x), k) of chi_zeta and equals
// |gamma|_p^d e^{-2 pi i {gamma(z + ky) + x alpha + y beta}_p} / p^{r(2d+1)}.
struct K0Term {
  HeisDualIndex zeta;
  long long row;
  long long col;
  ScaledPhase coeff;
};

// Decomposition of 1_{v . H_d(p^r Z_p)} over matrix coefficients of the
// level-r dual. Requires v.precision >= 2r.
std::vector<K0Term> k0_decomposition(const HeisElement& v, int r);

// Max pointwise |synthesized - indicator| over the full precision-r grid.
double k0_reconstruction_max_error(const HeisElement& v, int r,
                                   const std::vector<K0Term>& terms);

// ||(chi_zeta)_{row,col}||^2 by an exact Haar sum over the truncation grid;
// equals |gamma|_p^{-d}.
Rat coeff_norm_sq(const HeisDualIndex& zeta, long long row, long long col);

// Exact trace Sum_k (chi_zeta)_{kk}(g).
Cyclo rep_trace(const HeisDualIndex& zeta, const HeisElement& g);

}  // namespace vilenkin

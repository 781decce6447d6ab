#include "vilenkin/heisenberg.hpp"

#include <sstream>

namespace vilenkin {

namespace {

PadicTrunc dot(const std::vector<PadicTrunc>& a, const std::vector<PadicTrunc>& b) {
  PadicTrunc acc = PadicTrunc::zero(a[0].p(), a[0].precision());
  for (size_t i = 0; i < a.size(); ++i) acc = acc + a[i] * b[i];
  return acc;
}

void require_compatible(const HeisElement& g, const HeisElement& h) {
  if (g.p() != h.p() || g.d() != h.d() || g.precision() != h.precision())
    throw PrecisionError("Heisenberg operands disagree on (p, d, N)");
}

}  // namespace

HeisElement::HeisElement(std::vector<PadicTrunc> x_, std::vector<PadicTrunc> y_,
                         PadicTrunc z_)
    : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {
  if (x.empty() || x.size() != y.size())
    throw DomainError("HeisElement: x and y must have equal positive length");
  for (const auto* vec : {&x, &y})
    for (const PadicTrunc& c : *vec)
      if (c.p() != z.p() || c.precision() != z.precision())
        throw PrecisionError("HeisElement: components disagree on (p, N)");
}

HeisElement HeisElement::identity(long long p, int d, int precision) {
  std::vector<PadicTrunc> xs(static_cast<size_t>(d), PadicTrunc::zero(p, precision));
  return HeisElement(xs, xs, PadicTrunc::zero(p, precision));
}

HeisElement HeisElement::from_values(long long p, int d, int precision,
                                     const std::vector<long long>& xs,
                                     const std::vector<long long>& ys, long long zv) {
  if (xs.size() != static_cast<size_t>(d) || ys.size() != static_cast<size_t>(d))
    throw DomainError("HeisElement::from_values: need d coordinates");
  std::vector<PadicTrunc> x, y;
  for (long long v : xs) x.push_back(PadicTrunc::from_value(p, precision, v));
  for (long long v : ys) y.push_back(PadicTrunc::from_value(p, precision, v));
  return HeisElement(std::move(x), std::move(y),
                     PadicTrunc::from_value(p, precision, zv));
}

HeisElement HeisElement::truncated(int r) const {
  std::vector<PadicTrunc> xt, yt;
  for (const auto& c : x) xt.push_back(c.truncated(r));
  for (const auto& c : y) yt.push_back(c.truncated(r));
  return HeisElement(std::move(xt), std::move(yt), z.truncated(r));
}

HeisElement heis_mul(const HeisElement& g, const HeisElement& h) {
  require_compatible(g, h);
  std::vector<PadicTrunc> x, y;
  for (int i = 0; i < g.d(); ++i) {
    x.push_back(g.x[static_cast<size_t>(i)] + h.x[static_cast<size_t>(i)]);
    y.push_back(g.y[static_cast<size_t>(i)] + h.y[static_cast<size_t>(i)]);
  }
  return HeisElement(std::move(x), std::move(y), g.z + h.z + dot(g.x, h.y));
}

HeisElement heis_inv(const HeisElement& g) {
  std::vector<PadicTrunc> x, y;
  for (int i = 0; i < g.d(); ++i) {
    x.push_back(-g.x[static_cast<size_t>(i)]);
    y.push_back(-g.y[static_cast<size_t>(i)]);
  }
  return HeisElement(std::move(x), std::move(y), -g.z + dot(g.x, g.y));
}

long long heis_grid_size(long long p, int d, int precision) {
  return checked_pow(p, precision * (2 * d + 1));
}

HeisElement heis_element_at(long long p, int d, int precision, long long flat) {
  const long long block = checked_pow(p, precision);
  std::vector<long long> xs(static_cast<size_t>(d)), ys(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) {
    xs[static_cast<size_t>(i)] = flat % block;
    flat /= block;
  }
  for (int i = 0; i < d; ++i) {
    ys[static_cast<size_t>(i)] = flat % block;
    flat /= block;
  }
  return HeisElement::from_values(p, d, precision, xs, ys, flat % block);
}

long long heis_flat_index(const HeisElement& g) {
  const long long block = checked_pow(g.p(), g.precision());
  long long flat = g.z.value_ll();
  for (int i = g.d(); i-- > 0;) flat = flat * block + g.y[static_cast<size_t>(i)].value_ll();
  for (int i = g.d(); i-- > 0;) flat = flat * block + g.x[static_cast<size_t>(i)].value_ll();
  return flat;
}

// ---------------------------------------------------------------------------
// Dual classes

HeisDualIndex::HeisDualIndex(int d, int level, const QpModZp& gamma,
                             std::vector<long long> alpha_num,
                             std::vector<long long> beta_num)
    : d_(d), level_(level), gamma_(gamma),
      alpha_(std::move(alpha_num)), beta_(std::move(beta_num)) {
  if (d_ < 1) throw DomainError("HeisDualIndex: d must be >= 1");
  if (level_ < 0) throw DomainError("HeisDualIndex: level must be >= 0");
  if (gamma_.denom_exponent() > level_)
    throw DomainError("HeisDualIndex: |gamma|_p exceeds the level");
  if (alpha_.size() != static_cast<size_t>(d_) ||
      beta_.size() != static_cast<size_t>(d_))
    throw DomainError("HeisDualIndex: alpha/beta must have d coordinates");
  const long long bound = checked_pow(p(), level_ - j());
  for (const auto* v : {&alpha_, &beta_})
    for (long long c : *v)
      if (c < 0 || c >= bound)
        throw DomainError("HeisDualIndex: representative outside [0, p^{n-j})");
}

HeisDualIndex HeisDualIndex::trivial(long long p, int d) {
  return HeisDualIndex(d, 0, QpModZp::trivial(p),
                       std::vector<long long>(static_cast<size_t>(d), 0),
                       std::vector<long long>(static_cast<size_t>(d), 0));
}

Rat HeisDualIndex::alpha_value(int i) const {
  return Rat(alpha_[static_cast<size_t>(i)], big_pow(p(), level_));
}

Rat HeisDualIndex::beta_value(int i) const {
  return Rat(beta_[static_cast<size_t>(i)], big_pow(p(), level_));
}

long long HeisDualIndex::dim() const { return checked_pow(p(), j() * d_); }

long long HeisDualIndex::norm() const {
  long long best = checked_pow(p(), j());  // |gamma|, trivial -> 1
  for (const auto* v : {&alpha_, &beta_}) {
    for (long long c : *v) {
      if (c == 0) {
        best = std::max(best, 1LL);
        continue;
      }
      int val = 0;
      long long m = c;
      while (m % p() == 0) {
        m /= p();
        ++val;
      }
      best = std::max(best, checked_pow(p(), level_ - val));
    }
  }
  return best;
}

std::string HeisDualIndex::label() const {
  std::ostringstream os;
  auto coord = [&](long long c) { return rat_to_string(Rat(c, big_pow(p(), level_))); };
  os << "(alpha=[";
  for (size_t i = 0; i < alpha_.size(); ++i)
    os << (i ? "," : "") << coord(alpha_[i]);
  os << "],beta=[";
  for (size_t i = 0; i < beta_.size(); ++i)
    os << (i ? "," : "") << coord(beta_[i]);
  os << "],gamma=" << rat_to_string(gamma_.value()) << ")";
  return os.str();
}

std::vector<HeisDualIndex> enumerate_dual(long long p, int d, int n) {
  if (n < 0) throw DomainError("enumerate_dual: level must be >= 0");
  std::vector<HeisDualIndex> out;
  for (int j = 0; j <= n; ++j) {
    std::vector<QpModZp> gammas;
    if (j == 0) {
      gammas.push_back(QpModZp::trivial(p));
    } else {
      const long long pj = checked_pow(p, j);
      for (long long a = 1; a < pj; ++a)
        if (a % p != 0) gammas.push_back(QpModZp(p, a, j));
    }
    const long long reps = checked_pow(p, n - j);
    const long long combos = checked_pow(p, (n - j) * d);
    auto unflatten = [&](long long flat) {
      std::vector<long long> v(static_cast<size_t>(d));
      for (int i = d; i-- > 0;) {
        v[static_cast<size_t>(i)] = flat % reps;
        flat /= reps;
      }
      return v;
    };
    for (const QpModZp& gamma : gammas)
      for (long long fa = 0; fa < combos; ++fa)
        for (long long fb = 0; fb < combos; ++fb)
          out.emplace_back(d, n, gamma, unflatten(fa), unflatten(fb));
  }
  return out;
}

std::vector<HeisDualIndex> enumerate_dual_shell(long long p, int d, int n) {
  const long long pn = checked_pow(p, n);
  std::vector<HeisDualIndex> out;
  for (HeisDualIndex& zeta : enumerate_dual(p, d, n))
    if (zeta.norm() == pn) out.push_back(std::move(zeta));
  return out;
}

std::vector<long long> dual_point_unflatten(const HeisDualIndex& zeta, long long flat) {
  const long long pj = checked_pow(zeta.p(), zeta.j());
  std::vector<long long> k(static_cast<size_t>(zeta.d()));
  for (int i = zeta.d(); i-- > 0;) {
    k[static_cast<size_t>(i)] = flat % pj;
    flat /= pj;
  }
  return k;
}

long long dual_point_flatten(const HeisDualIndex& zeta, const std::vector<long long>& k) {
  const long long pj = checked_pow(zeta.p(), zeta.j());
  long long flat = 0;
  for (long long c : k) flat = flat * pj + (c % pj + pj) % pj;
  return flat;
}

// ---------------------------------------------------------------------------
// Matrix coefficients

namespace {

// {gamma (z + k.y) + x.alpha + y.beta}_p as an exact class; k is the column
// label vector.
QpModZp coeff_exponent(const HeisDualIndex& zeta, const std::vector<long long>& k,
                       const HeisElement& g) {
  const long long p = zeta.p();
  Rat u = zeta.gamma().value() * Rat(g.z.value());
  for (int i = 0; i < zeta.d(); ++i) {
    const BigInt xi = g.x[static_cast<size_t>(i)].value();
    const BigInt yi = g.y[static_cast<size_t>(i)].value();
    u += zeta.gamma().value() * Rat(k[static_cast<size_t>(i)] * yi);
    u += zeta.alpha_value(i) * Rat(xi) + zeta.beta_value(i) * Rat(yi);
  }
  return frac_part(p, u);
}

}  // namespace

std::optional<Phase> matrix_coeff(const HeisDualIndex& zeta, long long row,
                                  long long col, const HeisElement& g) {
  if (g.p() != zeta.p() || g.d() != zeta.d())
    throw PrecisionError("matrix_coeff: element and class disagree on (p, d)");
  if (g.precision() < zeta.level())
    throw PrecisionError("matrix_coeff: element precision below dual level");
  const long long pj = checked_pow(zeta.p(), zeta.j());
  const std::vector<long long> kr = dual_point_unflatten(zeta, row);
  const std::vector<long long> kc = dual_point_unflatten(zeta, col);
  for (int i = 0; i < zeta.d(); ++i) {
    const long long xi = g.x[static_cast<size_t>(i)].truncated(
        std::max(1, zeta.j())).value_ll() % pj;
    const long long want =
        ((kr[static_cast<size_t>(i)] - kc[static_cast<size_t>(i)]) % pj + pj) % pj;
    if (xi != want) return std::nullopt;
  }
  return Phase::from_class(coeff_exponent(zeta, kc, g));
}

RepMatrix::RepMatrix(HeisDualIndex zeta, std::vector<std::optional<Phase>> entries)
    : zeta_(std::move(zeta)), dim_(zeta_.dim()), entries_(std::move(entries)) {
  if (entries_.size() != static_cast<size_t>(dim_ * dim_))
    throw DomainError("RepMatrix: wrong entry count");
}

RepMatrix RepMatrix::adjoint() const {
  std::vector<std::optional<Phase>> out(entries_.size());
  for (long long r = 0; r < dim_; ++r)
    for (long long c = 0; c < dim_; ++c) {
      const auto& e = entry(c, r);
      out[static_cast<size_t>(r * dim_ + c)] =
          e ? std::optional<Phase>(e->conj()) : std::nullopt;
    }
  return RepMatrix(zeta_, std::move(out));
}

RepMatrix operator*(const RepMatrix& a, const RepMatrix& b) {
  if (!(a.zeta_ == b.zeta_))
    throw PrecisionError("RepMatrix product: different dual classes");
  const long long dim = a.dim_;
  std::vector<std::optional<Phase>> out(static_cast<size_t>(dim * dim));
  for (long long r = 0; r < dim; ++r)
    for (long long c = 0; c < dim; ++c) {
      std::optional<Phase> acc;
      for (long long m = 0; m < dim; ++m) {
        const auto& ea = a.entry(r, m);
        const auto& eb = b.entry(m, c);
        if (!ea || !eb) continue;
        if (acc)
          throw DomainError("RepMatrix product: generalized permutation "
                            "structure violated");
        acc = *ea * *eb;
      }
      out[static_cast<size_t>(r * dim + c)] = acc;
    }
  return RepMatrix(a.zeta_, std::move(out));
}

bool RepMatrix::is_identity() const {
  for (long long r = 0; r < dim_; ++r)
    for (long long c = 0; c < dim_; ++c) {
      const auto& e = entry(r, c);
      if (r == c) {
        if (!e || !e->is_one()) return false;
      } else if (e) {
        return false;
      }
    }
  return true;
}

RepMatrix rep_matrix(const HeisDualIndex& zeta, const HeisElement& g) {
  // The matrix of the operator chi(g) on the basis {e_k}: entry (r, c) is
  // <chi(g) e_c, e_r> = (chi)_{c,r} in the coefficient-function indexing, so
  // that rep_matrix(g) rep_matrix(h) = rep_matrix(gh). Assembling the
  // coefficient functions at their own (k, k') positions would compose the
  // other way around on this noncommutative group.
  const long long dim = zeta.dim();
  std::vector<std::optional<Phase>> entries(static_cast<size_t>(dim * dim));
  for (long long r = 0; r < dim; ++r)
    for (long long c = 0; c < dim; ++c)
      entries[static_cast<size_t>(r * dim + c)] = matrix_coeff(zeta, c, r, g);
  return RepMatrix(zeta, std::move(entries));
}

Cyclo rep_trace(const HeisDualIndex& zeta, const HeisElement& g) {
  Cyclo acc(zeta.p());
  for (long long k = 0; k < zeta.dim(); ++k)
    if (const auto e = matrix_coeff(zeta, k, k, g)) acc += Cyclo(*e);
  return acc;
}

// ---------------------------------------------------------------------------
// K_0 decomposition

std::vector<K0Term> k0_decomposition(const HeisElement& v, int r) {
  if (r < 1) throw DomainError("k0_decomposition: r must be >= 1");
  if (v.precision() < 2 * r)
    throw PrecisionError("k0_decomposition: need v.precision >= 2r");
  const long long p = v.p();
  const int d = v.d();
  const Rat denom(1, big_pow(p, r * (2 * d + 1)));
  std::vector<K0Term> out;
  for (const HeisDualIndex& zeta : enumerate_dual(p, d, r)) {
    const long long pj = checked_pow(p, zeta.j());
    const Rat scale = Rat(big_pow(p, zeta.j() * d)) * denom;  // |gamma|^d / p^{r(2d+1)}
    for (long long col = 0; col < zeta.dim(); ++col) {
      std::vector<long long> k = dual_point_unflatten(zeta, col);
      // row = k + P_gamma(x), componentwise mod p^j.
      std::vector<long long> rowv = k;
      for (int i = 0; i < d; ++i)
        rowv[static_cast<size_t>(i)] =
            (rowv[static_cast<size_t>(i)] +
             v.x[static_cast<size_t>(i)].truncated(std::max(1, zeta.j())).value_ll()) %
            pj;
      const Phase ph = Phase::from_class(coeff_exponent(zeta, k, v)).conj();
      out.push_back(K0Term{zeta, dual_point_flatten(zeta, rowv), col,
                           ScaledPhase{scale, ph}});
    }
  }
  return out;
}

double k0_reconstruction_max_error(const HeisElement& v, int r,
                                   const std::vector<K0Term>& terms) {
  const long long p = v.p();
  const int d = v.d();
  const HeisElement vr = v.truncated(r);
  double worst = 0.0;
  for (long long flat = 0; flat < heis_grid_size(p, d, r); ++flat) {
    const HeisElement g = heis_element_at(p, d, r, flat);
    std::complex<double> acc{0.0, 0.0};
    for (const K0Term& t : terms)
      if (const auto e = matrix_coeff(t.zeta, t.row, t.col, g))
        acc += t.coeff.value() * e->value();
    const double want = (g == vr) ? 1.0 : 0.0;
    worst = std::max(worst, std::abs(acc - std::complex<double>{want, 0.0}));
  }
  return worst;
}

Rat coeff_norm_sq(const HeisDualIndex& zeta, long long row, long long col) {
  const long long p = zeta.p();
  const int d = zeta.d();
  const int grid_level = std::max(zeta.level(), 1);
  long long hits = 0;
  const long long total = heis_grid_size(p, d, grid_level);
  for (long long flat = 0; flat < total; ++flat) {
    const HeisElement g = heis_element_at(p, d, grid_level, flat);
    if (matrix_coeff(zeta, row, col, g)) ++hits;  // |phase|^2 = 1 on the coset
  }
  return Rat(hits, total);
}

}  // namespace vilenkin

#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "vilenkin/characters.hpp"
#include "vilenkin/cyclotomic.hpp"

namespace vilenkin {

// The two coefficient rings the transforms run over: exact cyclotomic values
// for library-built data, complex doubles for user/float input.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<std::complex<double>> {
  static std::complex<double> zero(long long) { return {0.0, 0.0}; }
  static std::complex<double> one(long long) { return {1.0, 0.0}; }
  static std::complex<double> from_rat(long long, const Rat& r) {
    return {to_double(r), 0.0};
  }
  static std::complex<double> from_phase(const Phase& ph) { return ph.value(); }
  static std::complex<double> conj(const std::complex<double>& z) {
    return std::conj(z);
  }
  static void scale(std::complex<double>& z, const Rat& r) { z *= to_double(r); }
  static std::complex<double> to_complex(const std::complex<double>& z) { return z; }
  static bool is_zero(const std::complex<double>& z, double tol) {
    return std::abs(z) <= tol;
  }
  static constexpr bool exact = false;
};

template <>
struct ScalarTraits<Cyclo> {
  static Cyclo zero(long long p) { return Cyclo(p); }
  static Cyclo one(long long p) { return Cyclo(p, Rat(1)); }
  static Cyclo from_rat(long long p, const Rat& r) { return Cyclo(p, r); }
  static Cyclo from_phase(const Phase& ph) { return Cyclo(ph); }
  static Cyclo conj(const Cyclo& z) { return z.conj(); }
  static void scale(Cyclo& z, const Rat& r) { z *= r; }
  static std::complex<double> to_complex(const Cyclo& z) { return z.to_complex(); }
  static bool is_zero(const Cyclo& z, double) { return z.is_zero(); }
  static constexpr bool exact = true;
};

using CD = std::complex<double>;

// A function on Z_p constant on cosets mod p^r, stored as its p^r values
// on the residues 0, ..., p^r - 1.
template <class S>
class LevelFunction {
 public:
  LevelFunction(long long p, int level)
      : p_(p), level_(level),
        values_(static_cast<size_t>(checked_pow(p, level)),
                ScalarTraits<S>::zero(p)) {}

  LevelFunction(long long p, int level, std::vector<S> values)
      : p_(p), level_(level), values_(std::move(values)) {
    if (values_.size() != static_cast<size_t>(checked_pow(p, level)))
      throw DomainError("LevelFunction: value count must be p^level");
  }

  long long p() const { return p_; }
  int level() const { return level_; }
  size_t size() const { return values_.size(); }
  const S& operator[](size_t x) const { return values_[x]; }
  S& operator[](size_t x) { return values_[x]; }
  const std::vector<S>& values() const { return values_; }

  // Constant extension onto sub-cosets: the embedding M(G_r) into M(G_L).
  LevelFunction promoted(int target_level) const {
    if (target_level < level_) throw DomainError("promoted: target below level");
    if (target_level == level_) return *this;
    LevelFunction out(p_, target_level);
    const size_t base = values_.size();
    for (size_t x = 0; x < out.size(); ++x) out[x] = values_[x % base];
    return out;
  }

  LevelFunction<CD> to_complex() const {
    std::vector<CD> v(values_.size());
    for (size_t i = 0; i < v.size(); ++i)
      v[i] = ScalarTraits<S>::to_complex(values_[i]);
    return LevelFunction<CD>(p_, level_, std::move(v));
  }

  bool operator==(const LevelFunction&) const = default;

 private:
  long long p_;
  int level_;
  std::vector<S> values_;
};

// Character coefficients of a level-r function: a table over G_r^perp,
// stored densely in Monna order (entry k is the coefficient of chi_k).
template <class S>
class CoefSequence {
 public:
  CoefSequence(long long p, int level)
      : p_(p), level_(level),
        coefs_(static_cast<size_t>(checked_pow(p, level)),
               ScalarTraits<S>::zero(p)) {}

  CoefSequence(long long p, int level, std::vector<S> coefs)
      : p_(p), level_(level), coefs_(std::move(coefs)) {
    if (coefs_.size() != static_cast<size_t>(checked_pow(p, level)))
      throw DomainError("CoefSequence: coefficient count must be p^level");
  }

  long long p() const { return p_; }
  int level() const { return level_; }
  size_t size() const { return coefs_.size(); }

  const S& at_monna(MonnaIndex k) const {
    if (k >= coefs_.size()) throw DomainError("CoefSequence: index beyond level");
    return coefs_[static_cast<size_t>(k)];
  }
  void set_monna(MonnaIndex k, S v) {
    if (k >= coefs_.size()) throw DomainError("CoefSequence: index beyond level");
    coefs_[static_cast<size_t>(k)] = std::move(v);
  }
  const S& at(const CharIndex& idx) const { return at_monna(to_monna_index(idx)); }
  const std::vector<S>& coefs() const { return coefs_; }

  // Monna indices are level-free, so embedding just pads with zeros.
  CoefSequence embedded(int target_level) const {
    if (target_level < level_) throw DomainError("embedded: target below level");
    CoefSequence out(p_, target_level);
    for (size_t k = 0; k < coefs_.size(); ++k) out.coefs_[k] = coefs_[k];
    return out;
  }

  CoefSequence<CD> to_complex() const {
    std::vector<CD> v(coefs_.size());
    for (size_t i = 0; i < v.size(); ++i)
      v[i] = ScalarTraits<S>::to_complex(coefs_[i]);
    return CoefSequence<CD>(p_, level_, std::move(v));
  }

  bool operator==(const CoefSequence&) const = default;

 private:
  long long p_;
  int level_;
  std::vector<S> coefs_;
};

namespace detail {

// table[e] = e^{sign * 2 pi i e / p^level}
template <class S>
std::vector<S> root_table(long long p, int level, int sign) {
  const long long n = checked_pow(p, level);
  std::vector<S> table(static_cast<size_t>(n));
  for (long long e = 0; e < n; ++e) {
    Phase ph(p, e, level);
    table[static_cast<size_t>(e)] =
        ScalarTraits<S>::from_phase(sign < 0 ? ph.conj() : ph);
  }
  return table;
}

}  // namespace detail

template <class S>
LevelFunction<S> indicator_function(const Coset& c, int level) {
  if (level < c.level) throw DomainError("indicator_function: level below coset level");
  LevelFunction<S> out(c.p, level);
  const long long stride = checked_pow(c.p, c.level);
  for (size_t x = static_cast<size_t>(c.representative); x < out.size();
       x += static_cast<size_t>(stride))
    out[x] = ScalarTraits<S>::one(c.p);
  return out;
}

template <class S>
LevelFunction<S> character_function(long long p, int level, MonnaIndex k) {
  if (digit_length(p, k) > level)
    throw DomainError("character_function: index beyond level");
  LevelFunction<S> out(p, level);
  const Phase root = monna_char_root(p, k);
  for (size_t x = 0; x < out.size(); ++x)
    out[x] = ScalarTraits<S>::from_phase(root.pow(static_cast<long long>(x)));
  return out;
}

template <class S>
LevelFunction<S> pointwise_product(const LevelFunction<S>& a,
                                   const LevelFunction<S>& b) {
  if (a.p() != b.p()) throw PrecisionError("pointwise_product: different primes");
  const int L = std::max(a.level(), b.level());
  LevelFunction<S> fa = a.promoted(L);
  const LevelFunction<S> fb = b.promoted(L);
  for (size_t x = 0; x < fa.size(); ++x) fa[x] = fa[x] * fb[x];
  return fa;
}

// Haar inner product <f, g> = p^{-r} Sum_x f(x) conj(g(x)).
template <class S>
S inner_product(const LevelFunction<S>& f, const LevelFunction<S>& g) {
  if (f.p() != g.p()) throw PrecisionError("inner_product: different primes");
  const int L = std::max(f.level(), g.level());
  const LevelFunction<S> a = f.promoted(L);
  const LevelFunction<S> b = g.promoted(L);
  S acc = ScalarTraits<S>::zero(f.p());
  for (size_t x = 0; x < a.size(); ++x)
    acc = acc + a[x] * ScalarTraits<S>::conj(b[x]);
  ScalarTraits<S>::scale(acc, Rat(1, big_pow(f.p(), L)));
  return acc;
}

// Coefficients by direct inner products: c_k = p^{-r} Sum_x f(x) conj(chi_k(x)).
template <class S>
CoefSequence<S> analyze_naive(const LevelFunction<S>& f) {
  const long long p = f.p();
  const int r = f.level();
  const long long n = checked_pow(p, r);
  const std::vector<S> conj_roots = detail::root_table<S>(p, r, -1);
  CoefSequence<S> out(p, r);
  const Rat inv_n(1, big_pow(p, r));
  for (long long k = 0; k < n; ++k) {
    const long long rev = static_cast<long long>(
        digit_reverse(p, static_cast<std::uint64_t>(k), r));
    S acc = ScalarTraits<S>::zero(p);
    long long e = 0;
    for (long long x = 0; x < n; ++x) {
      acc = acc + f[static_cast<size_t>(x)] * conj_roots[static_cast<size_t>(e)];
      e += rev;
      if (e >= n) e -= n;
    }
    ScalarTraits<S>::scale(acc, inv_n);
    out.set_monna(static_cast<MonnaIndex>(k), std::move(acc));
  }
  return out;
}

// Radix-p decimation-in-frequency transform. Each stage splits the output
// index by its least significant digit, so the natural output layout is the
// digit reversal of the DFT index -- exactly the Monna ordering. Cost
// O(r p^r) multiplies against O(p^{2r}) for the naive route.
template <class S>
CoefSequence<S> analyze_fast(const LevelFunction<S>& f) {
  const long long p = f.p();
  const int r = f.level();
  const long long n = checked_pow(p, r);
  const std::vector<S> w = detail::root_table<S>(p, r, -1);  // w[e]=e^{-2pi i e/n}
  std::vector<S> a = f.values();
  std::vector<S> tmp(static_cast<size_t>(p), ScalarTraits<S>::zero(p));
  for (long long len = n; len >= p; len /= p) {
    const long long sub = len / p;
    const long long unit = n / len;  // twiddle scale for this stage
    for (long long start = 0; start < n; start += len) {
      for (long long x = 0; x < sub; ++x) {
        for (long long j = 0; j < p; ++j)
          tmp[static_cast<size_t>(j)] = a[static_cast<size_t>(start + x + j * sub)];
        for (long long t0 = 0; t0 < p; ++t0) {
          S acc = tmp[0];
          for (long long j = 1; j < p; ++j) {
            const long long e = (j * t0 % p) * (n / p);
            acc = acc + tmp[static_cast<size_t>(j)] * w[static_cast<size_t>(e)];
          }
          if (t0 != 0 && x != 0)
            acc = acc * w[static_cast<size_t>(t0 * x * unit % n)];
          a[static_cast<size_t>(start + t0 * sub + x)] = std::move(acc);
        }
      }
    }
  }
  const Rat inv_n(1, big_pow(p, r));
  for (auto& v : a) ScalarTraits<S>::scale(v, inv_n);
  return CoefSequence<S>(p, r, std::move(a));
}

// f(x) = Sum_k c_k chi_k(x), by direct summation.
template <class S>
LevelFunction<S> synthesize_naive(const CoefSequence<S>& c) {
  const long long p = c.p();
  const int r = c.level();
  const long long n = checked_pow(p, r);
  const std::vector<S> roots = detail::root_table<S>(p, r, +1);
  LevelFunction<S> out(p, r);
  for (long long k = 0; k < n; ++k) {
    const S& ck = c.at_monna(static_cast<MonnaIndex>(k));
    if (ScalarTraits<S>::exact && ScalarTraits<S>::is_zero(ck, 0.0)) continue;
    const long long rev = static_cast<long long>(
        digit_reverse(p, static_cast<std::uint64_t>(k), r));
    long long e = 0;
    for (long long x = 0; x < n; ++x) {
      out[static_cast<size_t>(x)] =
          out[static_cast<size_t>(x)] + ck * roots[static_cast<size_t>(e)];
      e += rev;
      if (e >= n) e -= n;
    }
  }
  return out;
}

// Inverse of the fast transform: the same stages undone in reverse order,
// with conjugate twiddles; the p^{-r} of analysis and the p^r of the p-point
// inverse butterflies cancel exactly.
template <class S>
LevelFunction<S> synthesize(const CoefSequence<S>& c) {
  const long long p = c.p();
  const int r = c.level();
  const long long n = checked_pow(p, r);
  const std::vector<S> w = detail::root_table<S>(p, r, +1);  // w[e]=e^{+2pi i e/n}
  std::vector<S> a = c.coefs();
  std::vector<S> tmp(static_cast<size_t>(p), ScalarTraits<S>::zero(p));
  for (long long len = p; len <= n; len *= p) {
    const long long sub = len / p;
    const long long unit = n / len;
    for (long long start = 0; start < n; start += len) {
      for (long long x = 0; x < sub; ++x) {
        for (long long t0 = 0; t0 < p; ++t0) {
          S h = a[static_cast<size_t>(start + t0 * sub + x)];
          if (t0 != 0 && x != 0)
            h = h * w[static_cast<size_t>(t0 * x * unit % n)];
          tmp[static_cast<size_t>(t0)] = std::move(h);
        }
        for (long long j = 0; j < p; ++j) {
          S acc = tmp[0];
          for (long long t0 = 1; t0 < p; ++t0) {
            const long long e = (j * t0 % p) * (n / p);
            acc = acc + tmp[static_cast<size_t>(t0)] * w[static_cast<size_t>(e)];
          }
          a[static_cast<size_t>(start + x + j * sub)] = std::move(acc);
        }
      }
    }
  }
  return LevelFunction<S>(p, r, std::move(a));
}

// Exact coefficient table of the K_0 generator 1_{x + p^r Z_p}:
// the coefficient of chi_{m,n} is conj(chi_{m,n}(1))^x / p^r.
CoefSequence<Cyclo> indicator_coefficients(const Coset& c);

// All character indices with level <= r, in Monna order.
std::vector<CharIndex> char_indices_up_to_level(long long p, int r);

// psi_{m,n} for the coset x + p^r Z_p, divided by its normalization p^{r/2}
// so that the values stay in the cyclotomic field: a single phase
// chi_{m,n}((z-x)/p^r) on the coset and 0 outside.
LevelFunction<Cyclo> psi_unscaled(const Coset& c, const CharIndex& idx, int level);

// The character expansion of psi_unscaled (again without the p^{-r/2}):
// conj(chi_{l,s}(x)) over all (l,s) in S with s <= r when (m,n) = (1,0),
// else conj(chi_{l,n+r}(x)) over l congruent to m mod p^n.
CoefSequence<Cyclo> psi_expansion_unscaled(const Coset& c, const CharIndex& idx);

// Normalized float variants.
LevelFunction<CD> psi_eval(const Coset& c, const CharIndex& idx, int level);
CoefSequence<CD> psi_char_expansion(const Coset& c, const CharIndex& idx);

// Keep only the coefficients of characters in shell n (level exactly n).
template <class S>
CoefSequence<S> shell_mask(const CoefSequence<S>& c, int shell) {
  CoefSequence<S> out(c.p(), c.level());
  for (size_t k = 0; k < c.size(); ++k)
    if (shell_of(c.p(), static_cast<MonnaIndex>(k)) == shell)
      out.set_monna(static_cast<MonnaIndex>(k), c.at_monna(static_cast<MonnaIndex>(k)));
  return out;
}

template <class S>
LevelFunction<S> shell_project(const LevelFunction<S>& f, int shell) {
  return synthesize(shell_mask(analyze_fast(f), shell));
}

// Largest character level carrying a nonzero coefficient; -1 for the zero
// function.
template <class S>
int max_coef_level(const CoefSequence<S>& c, double tol = 1e-12) {
  int level = -1;
  for (size_t k = 0; k < c.size(); ++k)
    if (!ScalarTraits<S>::is_zero(c.at_monna(static_cast<MonnaIndex>(k)), tol))
      level = std::max(level, shell_of(c.p(), static_cast<MonnaIndex>(k)));
  return level;
}

// The unique shell carrying all of c's support, if there is one.
template <class S>
std::optional<int> pure_shell_of(const CoefSequence<S>& c, double tol = 1e-12) {
  std::optional<int> shell;
  for (size_t k = 0; k < c.size(); ++k) {
    if (ScalarTraits<S>::is_zero(c.at_monna(static_cast<MonnaIndex>(k)), tol)) continue;
    const int s = shell_of(c.p(), static_cast<MonnaIndex>(k));
    if (shell && *shell != s) return std::nullopt;
    shell = s;
  }
  return shell;
}

// Checks the product lemma instance: f with coefficients at levels <= m,
// g supported in shell n, m < n; then f*g must live entirely in shell n.
template <class S>
bool filtration_product_check(const LevelFunction<S>& f,
                              const LevelFunction<S>& g, double tol = 1e-9) {
  const CoefSequence<S> cf = analyze_fast(f);
  const CoefSequence<S> cg = analyze_fast(g);
  const int m = max_coef_level(cf, tol);
  const std::optional<int> gshell = pure_shell_of(cg, tol);
  if (!gshell) throw DomainError("filtration_product_check: g is not shell-pure");
  if (m >= *gshell)
    throw DomainError("filtration_product_check: requires f-level < g-shell");
  const CoefSequence<S> prod = analyze_fast(pointwise_product(f, g));
  for (size_t k = 0; k < prod.size(); ++k) {
    if (shell_of(prod.p(), static_cast<MonnaIndex>(k)) == *gshell) continue;
    if (!ScalarTraits<S>::is_zero(prod.at_monna(static_cast<MonnaIndex>(k)), tol))
      return false;
  }
  return true;
}

}  // namespace vilenkin

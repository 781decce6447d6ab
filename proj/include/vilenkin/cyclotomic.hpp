#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vilenkin/padic.hpp"

namespace vilenkin {

// An exact element of the union of the cyclotomic fields Q(zeta_{p^L}),
// stored as a finite sum  Sum c_q * e^{2 pi i q}  with rational coefficients
// c_q and exponents q in [0,1) with p-power denominator.
//
// Canonical form keeps exponents in [0, (p-1)/p): at a common level L this
// is the power basis {zeta^e : 0 <= e < (p-1) p^{L-1}} of Q(zeta_{p^L}), and
// any term with q >= (p-1)/p rewrites in one step through
//   e^{2 pi i q} = - Sum_{j=0}^{p-2} e^{2 pi i (q - (p-1)/p + j/p)}.
// Equality and zero tests are therefore exact.
class Cyclo {
 public:
  Cyclo() : p_(0) {}                 // zero with the prime not yet pinned
  explicit Cyclo(long long p) : p_(p) {}
  Cyclo(long long p, const Rat& c);  // the rational constant c
  Cyclo(const Phase& ph);            // NOLINT: deliberate implicit lift

  static Cyclo term(const Phase& ph, const Rat& coeff);

  long long p() const { return p_; }

  Cyclo& operator+=(const Cyclo& o);
  Cyclo& operator-=(const Cyclo& o);
  Cyclo& operator*=(const Cyclo& o);
  Cyclo& operator*=(const Rat& c);
  Cyclo& operator*=(const Phase& ph);
  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
  friend Cyclo operator*(Cyclo a, const Rat& c) { return a *= c; }
  friend Cyclo operator*(const Rat& c, Cyclo a) { return a *= c; }
  Cyclo operator-() const;

  Cyclo conj() const;
  bool is_zero() const { return terms_.empty(); }
  bool operator==(const Cyclo& o) const;

  // The value as a rational, when it lies in Q.
  std::optional<Rat> as_rational() const;

  std::complex<double> to_complex() const;
  std::string to_string() const;

  const std::map<Rat, Rat>& terms() const { return terms_; }

 private:
  void add_term(const Rat& q, const Rat& c);
  void canonicalize();
  void unify(const Cyclo& o);

  long long p_;
  std::map<Rat, Rat> terms_;
};

// Exact accumulator for integer-weighted sums of p^L-th roots of unity,
// the workhorse behind the large orthogonality and reconstruction sweeps.
class RootSum {
 public:
  RootSum(long long p, int level);

  // Adds w * zeta^{e} with zeta = e^{2 pi i / p^L}; e is taken mod p^L.
  void add(long long e, long long w) {
    long long r = e % n_;
    if (r < 0) r += n_;
    weights_[static_cast<size_t>(r)] += w;
  }

  // Coefficients over the power basis after reduction (size (p-1)p^{L-1}).
  std::vector<long long> reduced() const;

  bool is_zero() const;
  // Does the sum equal the rational value v exactly?
  bool equals(const Rat& v) const;
  Cyclo to_cyclo() const;
  std::complex<double> to_complex() const;

 private:
  long long p_;
  int level_;
  long long n_;
  std::vector<long long> weights_;
};

}  // namespace vilenkin

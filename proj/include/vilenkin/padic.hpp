#pragma once

#include <complex>
#include <compare>
#include <cstdint>
#include <vector>

#include "vilenkin/rational.hpp"

namespace vilenkin {

// An element of Z_p known to precision N: the digit vector (x_0,...,x_{N-1})
// of Sum x_k p^k. Arithmetic is integer arithmetic mod p^N on the encoded
// value; operations never extend precision.
class PadicTrunc {
 public:
  PadicTrunc(long long p, int precision, std::vector<int> digits);
  static PadicTrunc from_value(long long p, int precision, const BigInt& value);
  static PadicTrunc zero(long long p, int precision);

  long long p() const { return p_; }
  int precision() const { return static_cast<int>(digits_.size()); }
  const std::vector<int>& digits() const { return digits_; }
  int digit(int k) const { return digits_[static_cast<size_t>(k)]; }

  BigInt value() const;       // Sum x_k p^k
  long long value_ll() const; // same, DomainError if p^N exceeds 2^62
  bool is_zero() const;

  PadicTrunc truncated(int r) const;  // drop digits beyond r (r <= N)

  friend PadicTrunc operator+(const PadicTrunc& a, const PadicTrunc& b);
  friend PadicTrunc operator*(const PadicTrunc& a, const PadicTrunc& b);
  PadicTrunc operator-() const;
  friend PadicTrunc operator-(const PadicTrunc& a, const PadicTrunc& b);

  bool operator==(const PadicTrunc&) const = default;

 private:
  long long p_;
  std::vector<int> digits_;
};

// The clopen coset x + p^r Z_p, representative reduced mod p^r.
struct Coset {
  Coset(long long p, int level, long long representative);

  long long p;
  int level;
  long long representative;

  bool contains(const PadicTrunc& x) const;
  bool operator==(const Coset&) const = default;
};

Rat haar_measure(const Coset& c);  // p^{-r}

// A class in Q_p/Z_p as its canonical representative a/p^n in [0,1),
// reduced (p does not divide a unless the class is trivial: a=0, n=0).
// The trivial class stands for the representative "1" and has norm 1.
class QpModZp {
 public:
  QpModZp(long long p, const BigInt& numerator, int denom_exponent);
  static QpModZp trivial(long long p);

  long long p() const { return p_; }
  long long numerator() const { return num_; }
  int denom_exponent() const { return exp_; }
  bool is_trivial() const { return exp_ == 0; }
  Rat value() const;

  bool operator==(const QpModZp&) const = default;

 private:
  long long p_;
  long long num_;
  int exp_;
};

// {x}_p: keep only the negative-power digits of a rational with p-power
// denominator. DomainError otherwise.
QpModZp frac_part(long long p, const Rat& x);

// |a/p^n|_p = p^n; trivial class reports 1.
long long padic_norm(const QpModZp& x);

// An exact root of unity e^{2 pi i a/p^n}, exponent reduced mod 1.
class Phase {
 public:
  Phase(long long p, const BigInt& numerator, int denom_exponent);
  static Phase one(long long p);
  static Phase from_exponent(long long p, const Rat& e);  // e taken mod 1
  static Phase from_class(const QpModZp& c);              // e^{2 pi i {c}}

  long long p() const { return p_; }
  long long numerator() const { return num_; }
  int denom_exponent() const { return exp_; }
  Rat exponent() const;  // a/p^n in [0,1)
  bool is_one() const { return exp_ == 0; }

  Phase operator*(const Phase& o) const;
  Phase conj() const;
  Phase pow(const BigInt& e) const;
  std::complex<double> value() const;

  bool operator==(const Phase&) const = default;
  auto operator<=>(const Phase&) const = default;

 private:
  long long p_;
  long long num_;
  int exp_;
};

// The Monna map T(Sum x_k p^k) = Sum x_k p^{-k-1}, an exact rational with
// denominator dividing p^N.
Rat monna_map(const PadicTrunc& x);

// The unique k in N_0 with T(k) = t, for t = a/p^n in [0,1). DomainError
// if the denominator is not a power of p.
std::uint64_t monna_inverse(long long p, const Rat& t);

}  // namespace vilenkin

#include "vilenkin/padic.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace vilenkin {

BigInt big_pow(long long base, long long exp) {
  BigInt r = 1;
  BigInt b = base;
  while (exp > 0) {
    if (exp & 1) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

long long checked_pow(long long base, long long exp) {
  const long long limit = (1LL << 62);
  long long r = 1;
  for (long long i = 0; i < exp; ++i) {
    if (r > limit / base) throw DomainError("checked_pow: result exceeds 2^62");
    r *= base;
  }
  return r;
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int p_valuation(const BigInt& n, long long p) {
  if (n == 0) throw DomainError("p_valuation of zero");
  BigInt m = n;
  int v = 0;
  while (m % p == 0) {
    m /= p;
    ++v;
  }
  return v;
}

int split_p_power_denominator(const Rat& x, long long p, BigInt& numerator_out) {
  BigInt den = boost::multiprecision::denominator(x);
  int k = 0;
  while (den % p == 0) {
    den /= p;
    ++k;
  }
  if (den != 1)
    throw DomainError("denominator is not a power of " + std::to_string(p));
  numerator_out = boost::multiprecision::numerator(x);
  return k;
}

double to_double(const Rat& x) { return x.convert_to<double>(); }

double log_rat(const Rat& x) {
  if (x <= 0) throw DomainError("log_rat: nonpositive argument");
  auto log_big = [](const BigInt& n) {
    const unsigned bits = boost::multiprecision::msb(n);
    if (bits <= 900) return std::log(n.convert_to<double>());
    // Use the top 512 bits and re-add the shifted-out scale.
    BigInt top = n >> (bits - 512);
    return std::log(top.convert_to<double>()) +
           static_cast<double>(bits - 512) * std::numbers::ln2;
  };
  return log_big(boost::multiprecision::numerator(x)) -
         log_big(boost::multiprecision::denominator(x));
}

std::string rat_to_string(const Rat& x) {
  const BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

// ---------------------------------------------------------------------------
// PadicTrunc

PadicTrunc::PadicTrunc(long long p, int precision, std::vector<int> digits)
    : p_(p), digits_(std::move(digits)) {
  if (p < 2 || !is_prime(p)) throw DomainError("p must be a prime >= 2");
  if (precision < 1) throw DomainError("precision must be >= 1");
  if (digits_.size() != static_cast<size_t>(precision))
    throw DomainError("digit count does not match precision");
  for (int d : digits_)
    if (d < 0 || d >= p) throw DomainError("digit out of range [0, p)");
}

PadicTrunc PadicTrunc::from_value(long long p, int precision, const BigInt& value) {
  if (p < 2 || !is_prime(p)) throw DomainError("p must be a prime >= 2");
  if (precision < 1) throw DomainError("precision must be >= 1");
  const BigInt modulus = big_pow(p, precision);
  BigInt v = value % modulus;
  if (v < 0) v += modulus;
  std::vector<int> digits(static_cast<size_t>(precision));
  for (int k = 0; k < precision; ++k) {
    digits[static_cast<size_t>(k)] = static_cast<int>(v % p);
    v /= p;
  }
  return PadicTrunc(p, precision, std::move(digits));
}

PadicTrunc PadicTrunc::zero(long long p, int precision) {
  return PadicTrunc(p, precision, std::vector<int>(static_cast<size_t>(precision), 0));
}

BigInt PadicTrunc::value() const {
  BigInt v = 0;
  for (size_t k = digits_.size(); k-- > 0;) v = v * p_ + digits_[k];
  return v;
}

long long PadicTrunc::value_ll() const {
  checked_pow(p_, precision());
  return value().convert_to<long long>();
}

bool PadicTrunc::is_zero() const {
  for (int d : digits_)
    if (d != 0) return false;
  return true;
}

PadicTrunc PadicTrunc::truncated(int r) const {
  if (r < 1 || r > precision()) throw DomainError("truncated: bad target precision");
  return PadicTrunc(p_, r, std::vector<int>(digits_.begin(), digits_.begin() + r));
}

namespace {
void require_compatible(const PadicTrunc& a, const PadicTrunc& b) {
  if (a.p() != b.p())
    throw PrecisionError("p-adic operands have different primes");
  if (a.precision() != b.precision())
    throw PrecisionError("p-adic operands have different precisions");
}
}  // namespace

PadicTrunc operator+(const PadicTrunc& a, const PadicTrunc& b) {
  require_compatible(a, b);
  const int n = a.precision();
  std::vector<int> out(static_cast<size_t>(n));
  long long carry = 0;
  for (int k = 0; k < n; ++k) {
    long long s = carry + a.digit(k) + b.digit(k);
    out[static_cast<size_t>(k)] = static_cast<int>(s % a.p());
    carry = s / a.p();
  }
  return PadicTrunc(a.p(), n, std::move(out));
}

PadicTrunc operator*(const PadicTrunc& a, const PadicTrunc& b) {
  require_compatible(a, b);
  const int n = a.precision();
  std::vector<long long> acc(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    if (a.digit(i) == 0) continue;
    for (int j = 0; i + j < n; ++j)
      acc[static_cast<size_t>(i + j)] +=
          static_cast<long long>(a.digit(i)) * b.digit(j);
  }
  std::vector<int> out(static_cast<size_t>(n));
  long long carry = 0;
  for (int k = 0; k < n; ++k) {
    long long s = acc[static_cast<size_t>(k)] + carry;
    out[static_cast<size_t>(k)] = static_cast<int>(s % a.p());
    carry = s / a.p();
  }
  return PadicTrunc(a.p(), n, std::move(out));
}

PadicTrunc PadicTrunc::operator-() const {
  // p^N - x, digitwise: zero stays zero.
  std::vector<int> out(digits_.size(), 0);
  size_t first = 0;
  while (first < digits_.size() && digits_[first] == 0) ++first;
  if (first == digits_.size()) return *this;
  out[first] = static_cast<int>(p_) - digits_[first];
  for (size_t k = first + 1; k < digits_.size(); ++k)
    out[k] = static_cast<int>(p_) - 1 - digits_[k];
  return PadicTrunc(p_, precision(), std::move(out));
}

PadicTrunc operator-(const PadicTrunc& a, const PadicTrunc& b) { return a + (-b); }

// ---------------------------------------------------------------------------
// Coset

Coset::Coset(long long p_, int level_, long long representative_)
    : p(p_), level(level_), representative(representative_) {
  if (p < 2 || !is_prime(p)) throw DomainError("p must be a prime >= 2");
  if (level < 0) throw DomainError("coset level must be >= 0");
  const long long size = checked_pow(p, level);
  representative %= size;
  if (representative < 0) representative += size;
}

bool Coset::contains(const PadicTrunc& x) const {
  if (x.p() != p) throw PrecisionError("coset and element have different primes");
  if (x.precision() < level)
    throw PrecisionError("element precision below coset level");
  long long v = 0;
  for (int k = level; k-- > 0;) v = v * p + x.digit(k);
  return v == representative;
}

Rat haar_measure(const Coset& c) {
  return Rat(1, big_pow(c.p, c.level));
}

// ---------------------------------------------------------------------------
// QpModZp

QpModZp::QpModZp(long long p, const BigInt& numerator, int denom_exponent)
    : p_(p) {
  if (p < 2 || !is_prime(p)) throw DomainError("p must be a prime >= 2");
  if (denom_exponent < 0) throw DomainError("denominator exponent must be >= 0");
  BigInt mod = big_pow(p, denom_exponent);
  BigInt a = numerator % mod;
  if (a < 0) a += mod;
  int n = denom_exponent;
  if (a == 0) {
    n = 0;
  } else {
    while (a % p == 0) {
      a /= p;
      --n;
    }
  }
  checked_pow(p, n);
  num_ = a.convert_to<long long>();
  exp_ = n;
}

QpModZp QpModZp::trivial(long long p) { return QpModZp(p, 0, 0); }

Rat QpModZp::value() const { return Rat(num_, big_pow(p_, exp_)); }

QpModZp frac_part(long long p, const Rat& x) {
  BigInt num;
  const int k = split_p_power_denominator(x, p, num);
  return QpModZp(p, num, k);
}

long long padic_norm(const QpModZp& x) { return checked_pow(x.p(), x.denom_exponent()); }

// ---------------------------------------------------------------------------
// Phase

Phase::Phase(long long p, const BigInt& numerator, int denom_exponent) : p_(p) {
  const QpModZp c(p, numerator, denom_exponent);
  num_ = c.numerator();
  exp_ = c.denom_exponent();
}

Phase Phase::one(long long p) { return Phase(p, 0, 0); }

Phase Phase::from_exponent(long long p, const Rat& e) {
  BigInt num;
  const int k = split_p_power_denominator(e, p, num);
  return Phase(p, num, k);
}

Phase Phase::from_class(const QpModZp& c) {
  return Phase(c.p(), c.numerator(), c.denom_exponent());
}

Rat Phase::exponent() const { return Rat(num_, big_pow(p_, exp_)); }

Phase Phase::operator*(const Phase& o) const {
  if (p_ != o.p_) throw PrecisionError("phases over different primes");
  const int n = std::max(exp_, o.exp_);
  const BigInt num = BigInt(num_) * big_pow(p_, n - exp_) +
                     BigInt(o.num_) * big_pow(p_, n - o.exp_);
  return Phase(p_, num, n);
}

Phase Phase::conj() const {
  if (exp_ == 0) return *this;
  return Phase(p_, big_pow(p_, exp_) - num_, exp_);
}

Phase Phase::pow(const BigInt& e) const {
  return Phase(p_, BigInt(num_) * e, exp_);
}

std::complex<double> Phase::value() const {
  const double t = 2.0 * std::numbers::pi * to_double(exponent());
  return {std::cos(t), std::sin(t)};
}

// ---------------------------------------------------------------------------
// Monna map

Rat monna_map(const PadicTrunc& x) {
  // Sum x_k / p^{k+1} = (digit reversal of x) / p^N.
  BigInt num = 0;
  for (int k = 0; k < x.precision(); ++k) num = num * x.p() + x.digit(k);
  return Rat(num, big_pow(x.p(), x.precision()));
}

std::uint64_t monna_inverse(long long p, const Rat& t) {
  if (t < 0 || t >= 1) throw DomainError("monna_inverse: argument outside [0,1)");
  BigInt a;
  const int n = split_p_power_denominator(t, p, a);
  checked_pow(p, n);  // the result k < p^n must fit
  // k is the digit reversal of a over n base-p places.
  std::uint64_t k = 0;
  BigInt rest = a;
  for (int i = 0; i < n; ++i) {
    k = k * static_cast<std::uint64_t>(p) +
        (rest % p).convert_to<std::uint64_t>();
    rest /= p;
  }
  return k;
}

}  // namespace vilenkin

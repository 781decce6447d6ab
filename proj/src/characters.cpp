#include "vilenkin/characters.hpp"

namespace vilenkin {

CharIndex::CharIndex(long long p_, long long m_, int n_) : p(p_), m(m_), n(n_) {
  if (p < 2 || !is_prime(p)) throw DomainError("p must be a prime >= 2");
  if (n == 0) {
    if (m != 1) throw DomainError("the level-0 index must be (1,0)");
    return;
  }
  if (n < 0 || m < 1) throw DomainError("character index outside S");
  if (m % p == 0) throw DomainError("character index outside S: p | m");
  if (m >= checked_pow(p, n)) throw DomainError("character index outside S: m >= p^n");
}

int digit_length(long long p, MonnaIndex k) {
  int len = 0;
  while (k > 0) {
    k /= static_cast<std::uint64_t>(p);
    ++len;
  }
  return len;
}

int shell_of(long long p, MonnaIndex k) { return digit_length(p, k); }

std::uint64_t digit_reverse(long long p, std::uint64_t v, int width) {
  std::uint64_t r = 0;
  for (int i = 0; i < width; ++i) {
    r = r * static_cast<std::uint64_t>(p) + v % static_cast<std::uint64_t>(p);
    v /= static_cast<std::uint64_t>(p);
  }
  if (v != 0) throw DomainError("digit_reverse: value does not fit the width");
  return r;
}

Phase char_root(const CharIndex& idx) { return Phase(idx.p, idx.m, idx.n); }

Phase monna_char_root(long long p, MonnaIndex k) {
  const int len = digit_length(p, k);
  return Phase(p, digit_reverse(p, k, len), len);
}

Phase char_eval(const CharIndex& idx, const PadicTrunc& x) {
  if (x.p() != idx.p) throw PrecisionError("character and point have different primes");
  if (x.precision() < idx.n)
    throw PrecisionError("point precision below character level");
  // Only x mod p^n matters.
  long long xr = 0;
  for (int k = idx.n; k-- > 0;) xr = xr * idx.p + x.digit(k);
  return char_root(idx).pow(xr);
}

Phase monna_char_eval(long long p, MonnaIndex k, const PadicTrunc& x) {
  return char_eval(to_char_index(p, k), x);
}

CharIndex to_char_index(long long p, MonnaIndex k) {
  if (k == 0) return CharIndex(p, 1, 0);
  const Phase root = monna_char_root(p, k);
  return CharIndex(p, root.numerator(), root.denom_exponent());
}

MonnaIndex to_monna_index(const CharIndex& idx) {
  if (idx.n == 0) return 0;
  return digit_reverse(idx.p, static_cast<std::uint64_t>(idx.m), idx.n);
}

MonnaIndex sigma(long long p, MonnaIndex a, MonnaIndex b) {
  const PadicTrunc pa = PadicTrunc::from_value(p, std::max(1, digit_length(p, a)), a);
  const PadicTrunc pb = PadicTrunc::from_value(p, std::max(1, digit_length(p, b)), b);
  Rat t = monna_map(pa) + monna_map(pb);
  if (t >= 1) t -= 1;
  return monna_inverse(p, t);
}

std::uint64_t sigma_pm_closed(long long p, int m, std::uint64_t n) {
  if (m < 0) throw DomainError("sigma_pm_closed: m must be >= 0");
  // kappa(m,n): the largest k <= m with digit n_k != p-1, if any.
  int kappa = -1;
  std::uint64_t v = n;
  for (int k = 0; k <= m; ++k) {
    if (v % static_cast<std::uint64_t>(p) != static_cast<std::uint64_t>(p - 1))
      kappa = k;
    v /= static_cast<std::uint64_t>(p);
  }
  const std::uint64_t pm1 = static_cast<std::uint64_t>(checked_pow(p, m + 1));
  if (kappa >= 0) {
    const std::uint64_t pk = static_cast<std::uint64_t>(checked_pow(p, kappa));
    return n + pk + pk * static_cast<std::uint64_t>(p) - pm1;
  }
  return n + 1 - pm1;
}

std::uint64_t sigma_iter_closed(long long p, int m, std::uint64_t l, std::uint64_t i) {
  const std::uint64_t period = static_cast<std::uint64_t>(checked_pow(p, m + 1));
  i %= period;
  return l * period + digit_reverse(p, i, m + 1);
}

BlockId block_of(long long p, int m, MonnaIndex k) {
  if (m < 0) throw DomainError("block_of: m must be >= 0");
  const std::uint64_t size = static_cast<std::uint64_t>(checked_pow(p, m + 1));
  return BlockId{p, m, k / size};
}

std::vector<MonnaIndex> block_members(const BlockId& b) {
  const std::uint64_t size = static_cast<std::uint64_t>(checked_pow(b.p, b.m + 1));
  std::vector<MonnaIndex> out;
  out.reserve(static_cast<size_t>(size));
  for (std::uint64_t t = 0; t < size; ++t) out.push_back(b.l * size + t);
  return out;
}

}  // namespace vilenkin

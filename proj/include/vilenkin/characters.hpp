#pragma once

#include <cstdint>
#include <vector>

#include "vilenkin/padic.hpp"

namespace vilenkin {

// A character of Z_p in the (m,n) parametrization: chi(1) = e^{2 pi i m/p^n},
// with (m,n) in S = {(1,0)} union {(m,n) : m < p^n, p does not divide m}.
struct CharIndex {
  CharIndex(long long p, long long m, int n);

  long long p;
  long long m;
  int n;  // level: the character is trivial on p^n Z_p and not above

  bool is_trivial() const { return n == 0; }
  bool operator==(const CharIndex&) const = default;
  // Ordered by (p, n, m): level-major, stable across enumeration sweeps.
  auto operator<=>(const CharIndex& o) const {
    if (auto c = p <=> o.p; c != 0) return c;
    if (auto c = n <=> o.n; c != 0) return c;
    return m <=> o.m;
  }
};

// The Monna parametrization: chi_k(1) = e^{2 pi i T(k)}; k = 0 is trivial.
using MonnaIndex = std::uint64_t;

// Number of base-p digits of k (0 for k = 0); equals the shell of chi_k.
int digit_length(long long p, MonnaIndex k);
int shell_of(long long p, MonnaIndex k);

// Digit reversal of v over `width` base-p places. v must be < p^width.
std::uint64_t digit_reverse(long long p, std::uint64_t v, int width);

// chi(1) as an exact phase.
Phase char_root(const CharIndex& idx);
Phase monna_char_root(long long p, MonnaIndex k);

// Exact evaluation; requires x.precision >= level of the character.
Phase char_eval(const CharIndex& idx, const PadicTrunc& x);
Phase monna_char_eval(long long p, MonnaIndex k, const PadicTrunc& x);

// Lossless conversion between the two parametrizations.
CharIndex to_char_index(long long p, MonnaIndex k);
MonnaIndex to_monna_index(const CharIndex& idx);

// The dual group law in Monna coordinates: chi_a * chi_b = chi_{sigma(a,b)}.
// Brute force through exact T-addition; the reference implementation.
MonnaIndex sigma(long long p, MonnaIndex a, MonnaIndex b);

// sigma(p^m, n) in closed form through kappa(m,n), the largest k <= m with
// n_k != p-1. Production fast path; must agree with sigma everywhere.
std::uint64_t sigma_pm_closed(long long p, int m, std::uint64_t n);

// The i-fold iterate sigma^i(p^m, l p^{m+1}) in closed form: digit-reversed
// i added onto the block offset, with period p^{m+1} in i.
std::uint64_t sigma_iter_closed(long long p, int m, std::uint64_t l, std::uint64_t i);

// P_{m,l} = {n + l p^{m+1} : 0 <= n < p^{m+1}}; for fixed m the blocks
// partition N_0 and each is a single sigma(p^m,.)-orbit.
struct BlockId {
  long long p;
  int m;
  std::uint64_t l;
  bool operator==(const BlockId&) const = default;
};

BlockId block_of(long long p, int m, MonnaIndex k);
std::vector<MonnaIndex> block_members(const BlockId& b);

}  // namespace vilenkin

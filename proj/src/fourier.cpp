#include "vilenkin/fourier.hpp"

#include <cmath>

namespace vilenkin {

CoefSequence<Cyclo> indicator_coefficients(const Coset& c) {
  const long long p = c.p;
  const int r = c.level;
  CoefSequence<Cyclo> out(p, r);
  const Rat scale(1, big_pow(p, r));
  const long long n = checked_pow(p, r);
  for (long long k = 0; k < n; ++k) {
    const Phase ph = monna_char_root(p, static_cast<MonnaIndex>(k))
                         .pow(c.representative)
                         .conj();
    out.set_monna(static_cast<MonnaIndex>(k), Cyclo::term(ph, scale));
  }
  return out;
}

std::vector<CharIndex> char_indices_up_to_level(long long p, int r) {
  const long long n = checked_pow(p, r);
  std::vector<CharIndex> out;
  out.reserve(static_cast<size_t>(n));
  for (long long k = 0; k < n; ++k)
    out.push_back(to_char_index(p, static_cast<MonnaIndex>(k)));
  return out;
}

LevelFunction<Cyclo> psi_unscaled(const Coset& c, const CharIndex& idx, int level) {
  if (idx.p != c.p) throw PrecisionError("psi: coset and index have different primes");
  if (level < c.level + idx.n)
    throw PrecisionError("psi: evaluation level must be >= r + n");
  const long long p = c.p;
  LevelFunction<Cyclo> out(p, level);
  const long long stride = checked_pow(p, c.level);
  const Phase root = char_root(idx);
  const long long count = checked_pow(p, level - c.level);
  for (long long w = 0; w < count; ++w) {
    const long long z = c.representative + w * stride;
    out[static_cast<size_t>(z)] = Cyclo(root.pow(w));
  }
  return out;
}

CoefSequence<Cyclo> psi_expansion_unscaled(const Coset& c, const CharIndex& idx) {
  if (idx.p != c.p) throw PrecisionError("psi: coset and index have different primes");
  const long long p = c.p;
  const int r = c.level;
  if (idx.is_trivial()) {
    // One term conj(chi_{l,s}(x)) for every (l,s) in S with s <= r.
    CoefSequence<Cyclo> out(p, r);
    const long long n = checked_pow(p, r);
    for (long long k = 0; k < n; ++k) {
      const Phase ph = monna_char_root(p, static_cast<MonnaIndex>(k))
                           .pow(c.representative)
                           .conj();
      out.set_monna(static_cast<MonnaIndex>(k), Cyclo(ph));
    }
    return out;
  }
  CoefSequence<Cyclo> out(p, idx.n + r);
  const long long step = checked_pow(p, idx.n);
  const long long limit = checked_pow(p, idx.n + r);
  for (long long l = idx.m; l < limit; l += step) {
    const CharIndex target(p, l, idx.n + r);
    const Phase ph = char_root(target).pow(c.representative).conj();
    out.set_monna(to_monna_index(target), Cyclo(ph));
  }
  return out;
}

LevelFunction<CD> psi_eval(const Coset& c, const CharIndex& idx, int level) {
  const LevelFunction<Cyclo> base = psi_unscaled(c, idx, level);
  const double scale = std::pow(static_cast<double>(c.p), 0.5 * c.level);
  std::vector<CD> v(base.size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = scale * base[i].to_complex();
  return LevelFunction<CD>(c.p, level, std::move(v));
}

CoefSequence<CD> psi_char_expansion(const Coset& c, const CharIndex& idx) {
  const CoefSequence<Cyclo> base = psi_expansion_unscaled(c, idx);
  const double scale = std::pow(static_cast<double>(c.p), -0.5 * c.level);
  std::vector<CD> v(base.size());
  for (size_t i = 0; i < v.size(); ++i)
    v[i] = scale * base.at_monna(static_cast<MonnaIndex>(i)).to_complex();
  return CoefSequence<CD>(c.p, base.level(), std::move(v));
}

}  // namespace vilenkin

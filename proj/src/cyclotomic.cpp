#include "vilenkin/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace vilenkin {

Cyclo::Cyclo(long long p, const Rat& c) : p_(p) {
  if (c != 0) terms_[Rat(0)] = c;
}

Cyclo::Cyclo(const Phase& ph) : p_(ph.p()) {
  terms_[ph.exponent()] = 1;
  canonicalize();
}

Cyclo Cyclo::term(const Phase& ph, const Rat& coeff) {
  Cyclo r(ph.p());
  if (coeff != 0) {
    r.terms_[ph.exponent()] = coeff;
    r.canonicalize();
  }
  return r;
}

void Cyclo::unify(const Cyclo& o) {
  if (p_ == 0) p_ = o.p_;
  else if (o.p_ != 0 && o.p_ != p_)
    throw PrecisionError("cyclotomic values over different primes");
}

void Cyclo::add_term(const Rat& q, const Rat& c) {
  auto it = terms_.find(q);
  if (it == terms_.end()) {
    if (c != 0) terms_[q] = c;
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Cyclo::canonicalize() {
  if (p_ == 0) return;
  const Rat threshold(p_ - 1, p_);
  bool dirty = false;
  for (const auto& [q, c] : terms_)
    if (q >= threshold) { dirty = true; break; }
  if (!dirty) return;
  std::map<Rat, Rat> out;
  auto put = [&out](const Rat& q, const Rat& c) {
    auto it = out.find(q);
    if (it == out.end()) out[q] = c;
    else {
      it->second += c;
      if (it->second == 0) out.erase(it);
    }
  };
  const Rat step(1, p_);
  for (const auto& [q, c] : terms_) {
    if (q < threshold) {
      put(q, c);
    } else {
      // zeta^q = -Sum_{j<p-1} zeta^{q - (p-1)/p + j/p}; lands in the basis.
      Rat base = q - threshold;
      for (long long j = 0; j < p_ - 1; ++j) put(base + j * step, -c);
    }
  }
  terms_ = std::move(out);
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
  unify(o);
  for (const auto& [q, c] : o.terms_) add_term(q, c);
  canonicalize();
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
  unify(o);
  for (const auto& [q, c] : o.terms_) add_term(q, -c);
  canonicalize();
  return *this;
}

Cyclo& Cyclo::operator*=(const Cyclo& o) {
  unify(o);
  std::map<Rat, Rat> out;
  for (const auto& [qa, ca] : terms_) {
    for (const auto& [qb, cb] : o.terms_) {
      Rat q = qa + qb;
      if (q >= 1) q -= 1;
      auto it = out.find(q);
      if (it == out.end()) out[q] = ca * cb;
      else {
        it->second += ca * cb;
        if (it->second == 0) out.erase(it);
      }
    }
  }
  terms_ = std::move(out);
  canonicalize();
  return *this;
}

Cyclo& Cyclo::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [q, v] : terms_) v *= c;
  return *this;
}

Cyclo& Cyclo::operator*=(const Phase& ph) {
  unify(Cyclo(ph.p()));
  const Rat shift = ph.exponent();
  std::map<Rat, Rat> out;
  for (const auto& [q, c] : terms_) {
    Rat s = q + shift;
    if (s >= 1) s -= 1;
    out[s] = c;
  }
  terms_ = std::move(out);
  canonicalize();
  return *this;
}

Cyclo Cyclo::operator-() const {
  Cyclo r = *this;
  for (auto& [q, c] : r.terms_) c = -c;
  return r;
}

Cyclo Cyclo::conj() const {
  Cyclo r(p_);
  for (const auto& [q, c] : terms_) {
    Rat s = (q == 0) ? Rat(0) : Rat(1) - q;
    r.terms_[s] = c;
  }
  r.canonicalize();
  return r;
}

bool Cyclo::operator==(const Cyclo& o) const {
  if (p_ != 0 && o.p_ != 0 && p_ != o.p_) return terms_.empty() && o.terms_.empty();
  return terms_ == o.terms_;
}

std::optional<Rat> Cyclo::as_rational() const {
  if (terms_.empty()) return Rat(0);
  if (terms_.size() == 1 && terms_.begin()->first == 0)
    return terms_.begin()->second;
  return std::nullopt;
}

std::complex<double> Cyclo::to_complex() const {
  std::complex<double> z{0.0, 0.0};
  for (const auto& [q, c] : terms_) {
    const double t = 2.0 * std::numbers::pi * to_double(q);
    z += to_double(c) * std::complex<double>{std::cos(t), std::sin(t)};
  }
  return z;
}

std::string Cyclo::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [q, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << rat_to_string(c);
    if (q != 0) os << "*e(" << rat_to_string(q) << ")";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// RootSum

RootSum::RootSum(long long p, int level) : p_(p), level_(level) {
  if (p < 2) throw DomainError("RootSum: p must be >= 2");
  if (level < 0) throw DomainError("RootSum: level must be >= 0");
  n_ = checked_pow(p, level);
  weights_.assign(static_cast<size_t>(n_), 0);
}

std::vector<long long> RootSum::reduced() const {
  // Fold exponents e >= (p-1)p^{L-1} down to the power basis.
  const long long stride = n_ / p_;  // p^{L-1}; equals 0 only when L = 0
  std::vector<long long> v = weights_;
  if (level_ == 0) return v;
  const long long cut = (p_ - 1) * stride;
  for (long long e = cut; e < n_; ++e) {
    const long long w = v[static_cast<size_t>(e)];
    if (w == 0) continue;
    v[static_cast<size_t>(e)] = 0;
    const long long c = e - cut;
    for (long long j = 0; j < p_ - 1; ++j)
      v[static_cast<size_t>(c + j * stride)] -= w;
  }
  v.resize(static_cast<size_t>(cut));
  return v;
}

bool RootSum::is_zero() const { return equals(Rat(0)); }

bool RootSum::equals(const Rat& v) const {
  const std::vector<long long> r = reduced();
  if (r.empty()) return v == 0;  // level 0 edge: no basis beyond constants
  if (Rat(r[0]) != v) return false;
  for (size_t i = 1; i < r.size(); ++i)
    if (r[i] != 0) return false;
  return true;
}

Cyclo RootSum::to_cyclo() const {
  Cyclo out(p_);
  for (long long e = 0; e < n_; ++e) {
    const long long w = weights_[static_cast<size_t>(e)];
    if (w != 0) out += Cyclo::term(Phase(p_, e, level_), Rat(w));
  }
  return out;
}

std::complex<double> RootSum::to_complex() const {
  std::complex<double> z{0.0, 0.0};
  for (long long e = 0; e < n_; ++e) {
    const long long w = weights_[static_cast<size_t>(e)];
    if (w == 0) continue;
    const double t = 2.0 * std::numbers::pi * static_cast<double>(e) /
                     static_cast<double>(n_);
    z += static_cast<double>(w) * std::complex<double>{std::cos(t), std::sin(t)};
  }
  return z;
}

}  // namespace vilenkin

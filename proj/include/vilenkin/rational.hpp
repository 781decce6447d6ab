#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "vilenkin/errors.hpp"

namespace vilenkin {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

BigInt big_pow(long long base, long long exp);

// base^exp in a long long; throws DomainError past 2^62.
long long checked_pow(long long base, long long exp);

bool is_prime(long long n);

// Largest k with p^k | n (n != 0).
int p_valuation(const BigInt& n, long long p);

// Writes n = a / p^k with p not dividing a; returns k. n must have a
// p-power denominator, else DomainError.
int split_p_power_denominator(const Rat& x, long long p, BigInt& numerator_out);

double to_double(const Rat& x);

// Natural log of a positive rational, robust to operands far outside
// double range.
double log_rat(const Rat& x);

// "a/b" in lowest terms, "a" when b = 1.
std::string rat_to_string(const Rat& x);

}  // namespace vilenkin

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace symprod {

using Integer = mpz_class;
using Rational = mpq_class;

struct PrimePower {
  Integer prime;
  unsigned exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization of a nonzero integer, primes ascending. The sign is
/// dropped; factor_integer(-12) == factor_integer(12). Throws on 0.
std::vector<PrimePower> factor_integer(const Integer& n);

bool is_prime(const Integer& n);

/// Largest e with p^e | n, for n != 0 and p >= 2.
unsigned valuation(const Integer& n, const Integer& p);

Integer pow(const Integer& base, unsigned long exponent);
Integer abs(const Integer& n);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

Rational make_rational(const Integer& num, const Integer& den);

std::string to_string(const Integer& n);
/// "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& q);

/// Parses "[-]digits[/digits]". Throws ParseError on malformed input and
/// Error(division_by_zero) on a zero denominator.
Rational parse_rational(std::string_view text);

/// Natural log of |n| for n != 0 (accurate for huge n).
double log_abs(const Integer& n);

std::vector<std::uint32_t> small_primes_upto(std::uint32_t limit);

}  // namespace symprod

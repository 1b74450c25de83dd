#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace zdyn {

using BigInt = mpz_class;
/// Always canonical: lowest terms, positive denominator, zero as 0/1.
using BigRational = mpq_class;

/// Deterministic primality test for machine-sized candidates (trial division).
bool is_prime(std::uint64_t p) noexcept;

/// Exponent v with x = p^v * (unit at p). Throws ZeroInput for x = 0 and
/// NotPrime for composite p.
long padic_valuation(const BigRational& x, std::uint64_t p);
long padic_valuation(const BigInt& x, std::uint64_t p);

/// log|x| for nonzero x, accurate to double precision regardless of size.
double log_abs(const BigInt& x);
double log_abs(const BigRational& x);

/// Reads "a" or "a/b" in decimal. Throws ParseError.
BigRational parse_rational(const std::string& text);
std::string to_string(const BigRational& x);

BigRational pow(const BigRational& base, long exponent);

}  // namespace zdyn

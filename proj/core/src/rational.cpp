#include "zdyn/rational.hpp"

#include <cmath>
#include <numbers>

#include "zdyn/error.hpp"

namespace zdyn {

bool is_prime(std::uint64_t p) noexcept {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t q = 3; q <= p / q; q += 2) {
    if (p % q == 0) return false;
  }
  return true;
}

long padic_valuation(const BigInt& x, std::uint64_t p) {
  if (x == 0) throw Error(ErrorKind::ZeroInput, "p-adic valuation of zero is undefined");
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  BigInt prime;
  mpz_set_ui(prime.get_mpz_t(), static_cast<unsigned long>(p));
  BigInt rest;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), prime.get_mpz_t()));
}

long padic_valuation(const BigRational& x, std::uint64_t p) {
  if (x == 0) throw Error(ErrorKind::ZeroInput, "p-adic valuation of zero is undefined");
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  const BigInt num = x.get_num();
  const BigInt den = x.get_den();
  return padic_valuation(num, p) - (den == 1 ? 0 : padic_valuation(den, p));
}

double log_abs(const BigInt& x) {
  if (x == 0) throw Error(ErrorKind::ZeroInput, "log of zero");
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, x.get_mpz_t());
  return std::log(std::fabs(mantissa)) + static_cast<double>(exponent) * std::numbers::ln2;
}

double log_abs(const BigRational& x) {
  return log_abs(BigInt(x.get_num())) - log_abs(BigInt(x.get_den()));
}

BigRational parse_rational(const std::string& text) {
  BigRational value;
  if (text.empty() || value.set_str(text, 10) != 0) {
    throw Error(ErrorKind::ParseError, "not a rational number: '" + text + "'");
  }
  if (value.get_den() == 0) {
    throw Error(ErrorKind::ParseError, "zero denominator: '" + text + "'");
  }
  value.canonicalize();
  return value;
}

std::string to_string(const BigRational& x) { return x.get_str(10); }

BigRational pow(const BigRational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw Error(ErrorKind::ZeroInput, "negative power of zero");
    return pow(BigRational(1) / base, -exponent);
  }
  BigInt num;
  BigInt den;
  const auto e = static_cast<unsigned long>(exponent);
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  BigRational result(num, den);
  result.canonicalize();
  return result;
}

}  // namespace zdyn

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace zdyn {

/// Laurent polynomial over F_2 in one indeterminate t, stored as a dense bitset
/// between the lowest and highest nonzero exponents.
class F2Laurent {
 public:
  F2Laurent() = default;  // zero

  static F2Laurent one() { return monomial(0); }
  static F2Laurent monomial(long exponent);
  /// 1 + t
  static F2Laurent one_plus_t();
  /// Parses "t^-1+1+t", "1+t^3", "0". Throws ParseError.
  static F2Laurent parse(const std::string& text);

  bool is_zero() const noexcept { return words_.empty(); }
  /// Lowest exponent with coefficient 1 (ord_t). Undefined for zero.
  long low() const noexcept { return low_; }
  /// Highest exponent with coefficient 1 (degree). Undefined for zero.
  long high() const noexcept;
  bool coefficient(long exponent) const noexcept;
  /// Number of factors (1 + t) dividing this element.
  long order_at_one_plus_t() const;

  F2Laurent operator+(const F2Laurent& other) const;
  F2Laurent operator*(const F2Laurent& other) const;
  F2Laurent& operator+=(const F2Laurent& other) { return *this = *this + other; }
  F2Laurent& operator*=(const F2Laurent& other) { return *this = *this * other; }
  F2Laurent squared() const;
  /// Nonnegative powers only; negative powers leave F_2[t^{±1}] in general.
  F2Laurent pow(unsigned long exponent) const;

  bool operator==(const F2Laurent&) const = default;

  std::string to_string() const;

 private:
  F2Laurent(std::vector<std::uint64_t> words, long low);
  void normalize();
  std::size_t bit_length() const noexcept;

  std::vector<std::uint64_t> words_;  // bit k is the coefficient of t^(low_ + k)
  long low_ = 0;
};

enum class F2Place { Infinite, T, OnePlusT };

std::string to_string(F2Place place);

/// Integer e with log|f|_v = e * log 2 under the normalisation |f|_inf = 2^deg f,
/// |f|_t = 2^-ord_t f, |f|_{t+1} = 2^-ord_{t+1} f. Throws ZeroInput.
long f2_place_exponent(const F2Laurent& f, F2Place place);
/// log|f|_v in nats.
double f2_place_value(const F2Laurent& f, F2Place place);

}  // namespace zdyn

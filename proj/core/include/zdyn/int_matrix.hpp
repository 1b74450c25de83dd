#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "zdyn/rational.hpp"

namespace zdyn {

/// Square matrix with exact big-integer entries, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t dimension);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t dimension);
  /// Rows separated by ';', entries by whitespace or ','. Throws ParseError.
  static IntMatrix parse(const std::string& text);

  std::size_t dimension() const noexcept { return dimension_; }
  BigInt& operator()(std::size_t row, std::size_t col) { return entries_[row * dimension_ + col]; }
  const BigInt& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dimension_ + col];
  }

  IntMatrix operator*(const IntMatrix& other) const;
  IntMatrix operator-(const IntMatrix& other) const;
  IntMatrix operator+(const IntMatrix& other) const;
  bool operator==(const IntMatrix& other) const = default;

  std::string to_string() const;

 private:
  std::size_t dimension_ = 0;
  std::vector<BigInt> entries_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
BigInt int_matrix_det(const IntMatrix& m);

/// Adjugate: adj(m) * m = det(m) * I.
IntMatrix int_matrix_adjugate(const IntMatrix& m);

/// m^k by binary exponentiation; negative k uses the exact inverse and requires
/// |det m| = 1 (throws NotUnimodular otherwise).
IntMatrix int_matrix_pow(const IntMatrix& m, long k);

}  // namespace zdyn

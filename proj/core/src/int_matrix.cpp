#include "zdyn/int_matrix.hpp"

#include <sstream>
#include <utility>

#include "zdyn/error.hpp"

namespace zdyn {

IntMatrix::IntMatrix(std::size_t dimension)
    : dimension_(dimension), entries_(dimension * dimension, BigInt(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : IntMatrix(rows.size()) {
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != dimension_) throw Error(ErrorKind::InvalidArgument, "matrix is not square");
    std::size_t c = 0;
    for (long v : row) (*this)(r, c++) = v;
    ++r;
  }
}

IntMatrix IntMatrix::identity(std::size_t dimension) {
  IntMatrix m(dimension);
  for (std::size_t i = 0; i < dimension; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::parse(const std::string& text) {
  std::vector<std::vector<BigInt>> rows;
  std::stringstream row_stream(text);
  std::string row_text;
  while (std::getline(row_stream, row_text, ';')) {
    for (char& c : row_text) {
      if (c == ',') c = ' ';
    }
    std::istringstream entries(row_text);
    std::vector<BigInt> row;
    std::string token;
    while (entries >> token) {
      BigInt value;
      if (value.set_str(token, 10) != 0) {
        throw Error(ErrorKind::ParseError, "bad matrix entry '" + token + "'");
      }
      row.push_back(value);
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error(ErrorKind::ParseError, "empty matrix");
  IntMatrix m(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size()) {
      throw Error(ErrorKind::ParseError, "matrix '" + text + "' is not square");
    }
    for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (other.dimension_ != dimension_) throw Error(ErrorKind::InvalidArgument, "dimension mismatch");
  IntMatrix out(dimension_);
  for (std::size_t i = 0; i < dimension_; ++i) {
    for (std::size_t k = 0; k < dimension_; ++k) {
      const BigInt& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < dimension_; ++j) out(i, j) += a * other(k, j);
    }
  }
  return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& other) const {
  if (other.dimension_ != dimension_) throw Error(ErrorKind::InvalidArgument, "dimension mismatch");
  IntMatrix out(dimension_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] - other.entries_[i];
  return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& other) const {
  if (other.dimension_ != dimension_) throw Error(ErrorKind::InvalidArgument, "dimension mismatch");
  IntMatrix out(dimension_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] + other.entries_[i];
  return out;
}

std::string IntMatrix::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < dimension_; ++r) {
    if (r) out += "; ";
    for (std::size_t c = 0; c < dimension_; ++c) {
      if (c) out += ' ';
      out += (*this)(r, c).get_str();
    }
  }
  return out;
}

BigInt int_matrix_det(const IntMatrix& m) {
  const std::size_t n = m.dimension();
  if (n == 0) return 1;
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
  }
  int sign = 1;
  BigInt previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), previous.get_mpz_t());
      }
    }
    previous = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

IntMatrix int_matrix_adjugate(const IntMatrix& m) {
  const std::size_t n = m.dimension();
  IntMatrix adj(n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      IntMatrix minor(n - 1);
      for (std::size_t r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(mr, mc++) = m(r, c);
        }
        ++mr;
      }
      BigInt cofactor = int_matrix_det(minor);
      if ((i + j) % 2) cofactor = -cofactor;
      adj(j, i) = cofactor;  // transpose of the cofactor matrix
    }
  }
  return adj;
}

IntMatrix int_matrix_pow(const IntMatrix& m, long k) {
  IntMatrix base = m;
  if (k < 0) {
    const BigInt det = int_matrix_det(m);
    if (abs(det) != 1) {
      throw Error(ErrorKind::NotUnimodular,
                  "negative power of a matrix with determinant " + det.get_str());
    }
    // m^-1 = adj(m) / det(m) and det = +-1
    base = int_matrix_adjugate(m);
    if (det < 0) base = IntMatrix(m.dimension()) - base;
    k = -k;
  }
  IntMatrix result = IntMatrix::identity(m.dimension());
  auto e = static_cast<unsigned long>(k);
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

}  // namespace zdyn

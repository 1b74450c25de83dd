#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <random>
#include <set>

#include "zdyn/actions.hpp"
#include "zdyn/error.hpp"
#include "zdyn/f2_laurent.hpp"
#include "zdyn/int_matrix.hpp"
#include "zdyn/rational.hpp"

using namespace zdyn;

namespace {

// p-adic valuation of a machine integer by repeated division.
long naive_valuation(long long x, long long p) {
  long v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

// Polynomials over F_2 as exponent sets; product by schoolbook convolution.
std::set<long> naive_mul(const std::set<long>& a, const std::set<long>& b) {
  std::set<long> out;
  for (long i : a) {
    for (long j : b) {
      const long k = i + j;
      if (!out.erase(k)) out.insert(k);
    }
  }
  return out;
}

F2Laurent from_set(const std::set<long>& exps) {
  F2Laurent f;
  for (long e : exps) f += F2Laurent::monomial(e);
  return f;
}

// Laplace expansion along the first row.
BigInt cofactor_det(const std::vector<std::vector<BigInt>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  BigInt total = 0;
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<std::vector<BigInt>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<BigInt> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != col) row.push_back(m[r][c]);
      }
      minor.push_back(row);
    }
    const BigInt term = m[0][col] * cofactor_det(minor);
    total += (col % 2 == 0) ? term : BigInt(-term);
  }
  return total;
}

std::vector<std::vector<BigInt>> rows_of(const IntMatrix& m) {
  std::vector<std::vector<BigInt>> rows(m.dimension(), std::vector<BigInt>(m.dimension()));
  for (std::size_t i = 0; i < m.dimension(); ++i) {
    for (std::size_t j = 0; j < m.dimension(); ++j) rows[i][j] = m(i, j);
  }
  return rows;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
  }
  return m;
}

}  // namespace

TEST(Rational, ValuationSmallCases) {
  EXPECT_EQ(padic_valuation(BigRational(8, 3), 2), 3);
  EXPECT_EQ(padic_valuation(BigRational(-1, 4), 2), -2);
  EXPECT_EQ(padic_valuation(BigRational(7775), 5), 2);
  EXPECT_EQ(padic_valuation(BigRational(7775), 311), 1);
  EXPECT_EQ(padic_valuation(BigRational(7775), 3), 0);
}

TEST(Rational, ValuationMatchesRepeatedDivision) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> dist(1, 1'000'000'000LL);
  for (int i = 0; i < 2000; ++i) {
    const long long a = dist(rng), b = dist(rng);
    for (long long p : {2LL, 3LL, 5LL, 7LL, 97LL}) {
      const BigRational x(BigInt(std::to_string(a)), BigInt(std::to_string(b)));
      EXPECT_EQ(padic_valuation(x, p), naive_valuation(a, p) - naive_valuation(b, p));
    }
  }
}

TEST(Rational, ValuationErrors) {
  try {
    padic_valuation(BigRational(0), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroInput);
  }
  try {
    padic_valuation(BigRational(12), 6);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPrime);
  }
}

TEST(Rational, ProductFormulaForSUnits) {
  // x = +-2^a 3^b 5^c is a unit away from {2,3,5}: log|x| + sum_p log|x|_p = 0.
  for (long a = -6; a <= 6; a += 3) {
    for (long b = -4; b <= 4; b += 2) {
      for (long c = -3; c <= 3; ++c) {
        const BigRational x = pow(BigRational(2), a) * pow(BigRational(3), b) * pow(BigRational(5), c);
        double sum = log_abs(x);
        for (std::uint64_t p : {2u, 3u, 5u}) sum -= padic_valuation(x, p) * std::log(static_cast<double>(p));
        EXPECT_NEAR(sum, 0.0, 1e-12);
      }
    }
  }
}

TEST(Rational, LogAbsOfHugeIntegers) {
  BigInt big;
  mpz_ui_pow_ui(big.get_mpz_t(), 3, 5000);
  EXPECT_NEAR(log_abs(big), 5000 * std::log(3.0), 1e-9);
  EXPECT_NEAR(log_abs(BigRational(1, 1) / BigRational(big)), -5000 * std::log(3.0), 1e-9);
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("6/4"), BigRational(3, 2));
  EXPECT_EQ(parse_rational("-7"), BigRational(-7));
  EXPECT_EQ(to_string(BigRational(-3, 2)), "-3/2");
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("two"), Error);
}

TEST(Rational, PrimalityAgainstSieve) {
  std::vector<bool> composite(2000, false);
  for (std::size_t i = 2; i < composite.size(); ++i) {
    if (composite[i]) continue;
    for (std::size_t j = i * i; j < composite.size(); j += i) composite[j] = true;
  }
  for (std::uint64_t n = 0; n < composite.size(); ++n) EXPECT_EQ(is_prime(n), n >= 2 && !composite[n]) << n;
}

TEST(F2Laurent, MultiplicationBasics) {
  const F2Laurent one_t = F2Laurent::one_plus_t();
  EXPECT_EQ(one_t * one_t, F2Laurent::parse("1+t^2"));
  EXPECT_EQ(F2Laurent::monomial(1) * F2Laurent::monomial(-1), F2Laurent::one());
  EXPECT_EQ(F2Laurent::parse("t^-1+1+t").to_string(), "t^-1+1+t");
  EXPECT_TRUE((one_t + one_t).is_zero());
}

TEST(F2Laurent, MultiplicationMatchesSchoolbook) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> exp(-70, 70);
  std::uniform_int_distribution<int> size(1, 40);
  for (int trial = 0; trial < 300; ++trial) {
    std::set<long> a, b;
    for (int k = size(rng); k > 0; --k) a.insert(exp(rng));
    for (int k = size(rng); k > 0; --k) b.insert(exp(rng));
    const std::set<long> expected = naive_mul(a, b);
    EXPECT_EQ(from_set(a) * from_set(b), from_set(expected));
  }
}

TEST(F2Laurent, PowerIsRepeatedProduct) {
  const F2Laurent f = F2Laurent::parse("1+t+t^3");
  F2Laurent acc = F2Laurent::one();
  for (unsigned k = 0; k <= 20; ++k) {
    EXPECT_EQ(f.pow(k), acc);
    acc *= f;
  }
}

TEST(F2Laurent, PlaceValues) {
  const double l2 = std::log(2.0);
  EXPECT_NEAR(f2_place_value(F2Laurent::parse("t^2+t"), F2Place::T), -l2, 1e-15);
  const F2Laurent f = F2Laurent::parse("t^2+1");
  EXPECT_NEAR(f2_place_value(f, F2Place::Infinite), 2 * l2, 1e-15);
  EXPECT_NEAR(f2_place_value(f, F2Place::T), 0.0, 1e-15);
  EXPECT_NEAR(f2_place_value(f, F2Place::OnePlusT), -2 * l2, 1e-15);
  for (F2Place v : {F2Place::Infinite, F2Place::T, F2Place::OnePlusT}) {
    EXPECT_EQ(f2_place_exponent(F2Laurent::one(), v), 0);
  }
  // t^(2^k) + 1 = (1 + t)^(2^k): the three places cancel exactly
  for (unsigned k = 1; k <= 6; ++k) {
    const F2Laurent g = F2Laurent::monomial(1L << k) + F2Laurent::one();
    long total = 0;
    for (F2Place v : {F2Place::Infinite, F2Place::T, F2Place::OnePlusT}) total += f2_place_exponent(g, v);
    EXPECT_EQ(total, 0);
    EXPECT_EQ(g.order_at_one_plus_t(), 1L << k);
  }
  EXPECT_THROW(f2_place_exponent(F2Laurent(), F2Place::T), Error);
}

TEST(F2Laurent, PlaceValueIsMultiplicative) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> exp(-20, 20);
  for (int trial = 0; trial < 200; ++trial) {
    std::set<long> a{exp(rng), exp(rng), exp(rng)}, b{exp(rng), exp(rng)};
    const F2Laurent f = from_set(a), g = from_set(b);
    if (f.is_zero() || g.is_zero()) continue;
    for (F2Place v : {F2Place::Infinite, F2Place::T, F2Place::OnePlusT}) {
      EXPECT_EQ(f2_place_exponent(f * g, v), f2_place_exponent(f, v) + f2_place_exponent(g, v));
    }
  }
}

TEST(IntMatrix, DeterminantSmallCases) {
  EXPECT_EQ(int_matrix_det(IntMatrix::identity(4)), 1);
  EXPECT_EQ(int_matrix_det(IntMatrix{{0, 1}, {1, 2}} - IntMatrix::identity(2)), -2);
  EXPECT_EQ(int_matrix_det(IntMatrix{{1, 2}, {2, 4}}), 0);
}

TEST(IntMatrix, DeterminantMatchesCofactorExpansion) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const IntMatrix m = random_matrix(rng, n, -9, 9);
    EXPECT_EQ(int_matrix_det(m), cofactor_det(rows_of(m)));
  }
}

TEST(IntMatrix, DeterminantIsMultiplicative) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const IntMatrix a = random_matrix(rng, 4, -9, 9), b = random_matrix(rng, 4, -9, 9);
    EXPECT_EQ(int_matrix_det(a * b), int_matrix_det(a) * int_matrix_det(b));
  }
}

TEST(IntMatrix, AdjugateIdentity) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const IntMatrix m = random_matrix(rng, 4, -5, 5);
    IntMatrix scaled = IntMatrix::identity(4);
    const BigInt det = int_matrix_det(m);
    for (std::size_t i = 0; i < 4; ++i) scaled(i, i) = det;
    EXPECT_EQ(int_matrix_adjugate(m) * m, scaled);
  }
}

TEST(IntMatrix, ShiftedUnitMatchesEmbeddings) {
  // 1 + sqrt2 on {1, sqrt2, sqrt5, sqrt10}; conjugates 1 +- sqrt2, each twice
  const IntMatrix m = sqrt2_sqrt5_multiplication_matrix(1, 1, 0, 0);
  const double r2 = std::sqrt(2.0);
  const double product = (r2) * (-r2) * (r2) * (-r2);
  EXPECT_EQ(int_matrix_det(m - IntMatrix::identity(4)), BigInt(std::lround(product)));
}

TEST(IntMatrix, PowersCompose) {
  const std::vector<IntMatrix> units = {
      sqrt2_sqrt5_multiplication_matrix(1, 1, 0, 0),
      sqrt2_sqrt5_multiplication_matrix(2, 0, 1, 0),
      IntMatrix{{2, 1}, {1, 1}},
  };
  for (const auto& m : units) {
    const std::size_t n = m.dimension();
    EXPECT_EQ(int_matrix_pow(m, 0), IntMatrix::identity(n));
    for (long a = -3; a <= 3; ++a) {
      for (long b = -3; b <= 3; ++b) {
        EXPECT_EQ(int_matrix_pow(m, a + b), int_matrix_pow(m, a) * int_matrix_pow(m, b));
      }
    }
    EXPECT_EQ(int_matrix_pow(m, -1) * m, IntMatrix::identity(n));
  }
  try {
    int_matrix_pow(IntMatrix{{2, 0}, {0, 1}}, -1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotUnimodular);
  }
}

TEST(IntMatrix, ParseRoundTrip) {
  const IntMatrix m = IntMatrix::parse("1 2; 3 4");
  EXPECT_EQ(m, (IntMatrix{{1, 2}, {3, 4}}));
  EXPECT_EQ(IntMatrix::parse(m.to_string()), m);
  EXPECT_THROW(IntMatrix::parse("1 2; 3"), Error);
}

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace toric_diamond {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
Integer absolute(const Integer& a);

// Floor division and the matching non-negative remainder for b != 0.
Integer floor_div(const Integer& a, const Integer& b);
Integer mod_floor(const Integer& a, const Integer& b);

struct ExtendedGcd {
  Integer g;  // always >= 0
  Integer s;
  Integer t;  // s*a + t*b == g
};
ExtendedGcd extended_gcd(const Integer& a, const Integer& b);

Integer numerator(const Rational& q);
Integer denominator(const Rational& q);
bool is_integral(const Rational& q);
Integer floor_of(const Rational& q);

std::string to_string(const Integer& a);
std::string to_string(const Rational& q);

// Positive divisors of n > 0 in increasing order (trial division).
std::vector<Integer> divisors(const Integer& n);

// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::vector<std::vector<Integer>> const& rows, std::size_t cols_if_empty = 0);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix transpose() const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

  std::vector<std::vector<Integer>> to_rows() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

// Fraction-free (Bareiss) determinant of a square matrix; 1 for 0x0.
Integer determinant(const IntMatrix& a);

}  // namespace toric_diamond

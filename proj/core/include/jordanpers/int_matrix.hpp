#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "jordanpers/errors.hpp"

namespace jordanpers {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Dense row-major matrix with arbitrary-precision integer entries.
/// Houses the interval R-matrix, where exactness of determinants and of
/// the linear solve is the whole point.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const BigInt& operator()(std::size_t i, std::size_t j) const {
    return e_[i * cols_ + j];
  }
  BigInt& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> e_;
};

/// Exact determinant by Bareiss fraction-free elimination.
BigInt determinant(const IntMatrix& a);

/// Solves A x = b exactly over the rationals for square invertible A, then
/// insists the solution is a nonnegative integer vector. Throws
/// SingularMatrix, NonIntegralSolution or NegativeMultiplicity otherwise;
/// any of those signals a corrupt input R-vector rather than a numerical
/// problem.
std::vector<BigInt> solve_nonneg_integer(const IntMatrix& a,
                                         const std::vector<BigInt>& b);

}  // namespace jordanpers

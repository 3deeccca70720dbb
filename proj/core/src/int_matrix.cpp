#include "jordanpers/int_matrix.hpp"

#include <string>

namespace jordanpers {

BigInt determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw ShapeMismatch("determinant: matrix not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m.at(i, j) = v / prev;  // exact by Bareiss
      }
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

std::vector<BigInt> solve_nonneg_integer(const IntMatrix& a,
                                         const std::vector<BigInt>& b) {
  if (a.rows() != a.cols()) throw ShapeMismatch("solve: matrix not square");
  const std::size_t n = a.rows();
  if (b.size() != n) throw ShapeMismatch("solve: rhs size mismatch");

  // Rational Gauss-Jordan on [a | b].
  std::vector<std::vector<BigRat>> m(n, std::vector<BigRat>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = BigRat(a(i, j));
    m[i][n] = BigRat(b[i]);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) throw SingularMatrix("solve: singular matrix");
    std::swap(m[c], m[piv]);
    const BigRat inv = 1 / m[c][c];
    for (std::size_t j = c; j <= n; ++j) m[c][j] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      const BigRat f = m[i][c];
      for (std::size_t j = c; j <= n; ++j) m[i][j] -= f * m[c][j];
    }
  }

  std::vector<BigInt> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    const BigRat& v = m[i][n];
    if (boost::multiprecision::denominator(v) != 1)
      throw NonIntegralSolution("solve: coordinate " + std::to_string(i) +
                                " is not an integer");
    x[i] = boost::multiprecision::numerator(v);
    if (x[i] < 0)
      throw NegativeMultiplicity("solve: coordinate " + std::to_string(i) +
                                 " is negative");
  }
  return x;
}

}  // namespace jordanpers

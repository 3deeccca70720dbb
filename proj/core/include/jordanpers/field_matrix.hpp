#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "jordanpers/errors.hpp"

namespace jordanpers {

/// Default session prime (2^15 - 19). Large enough that random rank
/// collapses are negligible in property tests, small enough that products
/// of residues never overflow 64-bit arithmetic.
inline constexpr std::uint64_t kDefaultPrime = 32749;

bool is_prime(std::uint64_t p);

/// Throws InvalidPrime unless 2 <= p < 2^31 and p is prime.
void check_prime(std::uint64_t p);

/// Dense row-major matrix over GF(p). Entries are always reduced residues
/// in [0, p). Zero-sized matrices (0xk, kx0) are first-class values; they
/// show up constantly as maps in and out of zero spaces.
class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(std::size_t rows, std::size_t cols, std::uint64_t p);

  static FieldMatrix identity(std::size_t n, std::uint64_t p);
  /// Builds from signed integers, reducing mod p. `cols` disambiguates the
  /// column count when `rows` is empty.
  static FieldMatrix from_rows(const std::vector<std::vector<long long>>& rows,
                               std::size_t cols, std::uint64_t p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint64_t prime() const { return p_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  std::uint64_t operator()(std::size_t i, std::size_t j) const {
    return e_[i * cols_ + j];
  }
  /// Stores v mod p.
  void set(std::size_t i, std::size_t j, std::uint64_t v) {
    e_[i * cols_ + j] = v % p_;
  }
  void set_signed(std::size_t i, std::size_t j, long long v);

  bool is_zero() const;
  bool operator==(const FieldMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::uint64_t p_ = kDefaultPrime;
  std::vector<std::uint64_t> e_;
};

/// GF(p)-rank by Gaussian elimination. Deterministic: pivots are chosen as
/// the first nonzero entry in column order.
std::size_t rank(FieldMatrix a);

FieldMatrix matmul(const FieldMatrix& a, const FieldMatrix& b);
FieldMatrix transpose(const FieldMatrix& a);

/// Reduced row echelon form (pivots 1, zeros above and below).
FieldMatrix rref(FieldMatrix a);

/// Canonical basis of the column space: the transposed RREF of a^T with zero
/// rows dropped. Column count equals rank(a), and two matrices with equal
/// column spaces yield identical output.
FieldMatrix image_basis(const FieldMatrix& a);

/// Assembles a block grid into one matrix. Every block row must agree on
/// row counts, every block column on column counts; ragged grids are
/// rejected with ShapeMismatch.
FieldMatrix block_assemble(const std::vector<std::vector<FieldMatrix>>& blocks);

FieldMatrix direct_sum_mat(const FieldMatrix& a, const FieldMatrix& b);

/// Uniformly random invertible n x n matrix by rejection sampling,
/// deterministic in seed.
FieldMatrix random_invertible(std::size_t n, std::uint64_t seed, std::uint64_t p);

/// Inverse of a square matrix; throws SingularMatrix.
FieldMatrix inverse(const FieldMatrix& a);

/// Solves X * b = d for X (left division). Returns std::nullopt when no
/// exact solution exists; free coordinates of a solution are set to zero.
std::optional<FieldMatrix> solve_left(const FieldMatrix& b, const FieldMatrix& d);

}  // namespace jordanpers

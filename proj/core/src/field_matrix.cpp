#include "jordanpers/field_matrix.hpp"

#include <random>
#include <string>

namespace jordanpers {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return (a * b) % p;  // safe: a, b < p < 2^31
}

std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return (a + p - b) % p;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  return powmod(a, p - 2, p);
}

void require_same_prime(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.prime() != b.prime())
    throw FieldMismatch("matrices over different primes: " +
                        std::to_string(a.prime()) + " vs " +
                        std::to_string(b.prime()));
}

}  // namespace

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

void check_prime(std::uint64_t p) {
  if (p >= (1ull << 31))
    throw InvalidPrime("prime modulus must be < 2^31, got " + std::to_string(p));
  if (!is_prime(p))
    throw InvalidPrime(std::to_string(p) + " is not prime");
}

FieldMatrix::FieldMatrix(std::size_t rows, std::size_t cols, std::uint64_t p)
    : rows_(rows), cols_(cols), p_(p), e_(rows * cols, 0) {}

FieldMatrix FieldMatrix::identity(std::size_t n, std::uint64_t p) {
  FieldMatrix m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

FieldMatrix FieldMatrix::from_rows(const std::vector<std::vector<long long>>& rows,
                                   std::size_t cols, std::uint64_t p) {
  FieldMatrix m(rows.size(), cols, p);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw ShapeMismatch("row " + std::to_string(i) + " has " +
                          std::to_string(rows[i].size()) + " entries, expected " +
                          std::to_string(cols));
    for (std::size_t j = 0; j < cols; ++j) m.set_signed(i, j, rows[i][j]);
  }
  return m;
}

void FieldMatrix::set_signed(std::size_t i, std::size_t j, long long v) {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += static_cast<long long>(p_);
  e_[i * cols_ + j] = static_cast<std::uint64_t>(r);
}

bool FieldMatrix::is_zero() const {
  for (auto v : e_)
    if (v != 0) return false;
  return true;
}

std::size_t rank(FieldMatrix a) {
  const std::uint64_t p = a.prime();
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r)
      for (std::size_t j = c; j < a.cols(); ++j) {
        std::uint64_t t = a(r, j);
        a.set(r, j, a(piv, j));
        a.set(piv, j, t);
      }
    const std::uint64_t inv = invmod(a(r, c), p);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      const std::uint64_t f = a(i, c);
      if (f == 0) continue;
      const std::uint64_t fi = mulmod(f, inv, p);
      for (std::size_t j = c; j < a.cols(); ++j)
        a.set(i, j, submod(a(i, j), mulmod(fi, a(r, j), p), p));
    }
    ++r;
  }
  return r;
}

FieldMatrix matmul(const FieldMatrix& a, const FieldMatrix& b) {
  require_same_prime(a, b);
  if (a.cols() != b.rows())
    throw ShapeMismatch("matmul: " + std::to_string(a.rows()) + "x" +
                        std::to_string(a.cols()) + " times " +
                        std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  const std::uint64_t p = a.prime();
  FieldMatrix c(a.rows(), b.cols(), p);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::uint64_t aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const std::uint64_t v = (c(i, j) + aik * b(k, j)) % p;
        c.set(i, j, v);
      }
    }
  return c;
}

FieldMatrix transpose(const FieldMatrix& a) {
  FieldMatrix t(a.cols(), a.rows(), a.prime());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t.set(j, i, a(i, j));
  return t;
}

FieldMatrix rref(FieldMatrix a) {
  const std::uint64_t p = a.prime();
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < a.cols(); ++j) {
        std::uint64_t t = a(r, j);
        a.set(r, j, a(piv, j));
        a.set(piv, j, t);
      }
    const std::uint64_t inv = invmod(a(r, c), p);
    for (std::size_t j = 0; j < a.cols(); ++j) a.set(r, j, mulmod(a(r, j), inv, p));
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      const std::uint64_t f = a(i, c);
      if (f == 0) continue;
      for (std::size_t j = 0; j < a.cols(); ++j)
        a.set(i, j, submod(a(i, j), mulmod(f, a(r, j), p), p));
    }
    ++r;
  }
  return a;
}

FieldMatrix image_basis(const FieldMatrix& a) {
  const FieldMatrix e = rref(transpose(a));
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < e.rows(); ++i) {
    bool nonzero = false;
    for (std::size_t j = 0; j < e.cols() && !nonzero; ++j) nonzero = e(i, j) != 0;
    if (nonzero) keep.push_back(i);
  }
  FieldMatrix b(a.rows(), keep.size(), a.prime());
  for (std::size_t k = 0; k < keep.size(); ++k)
    for (std::size_t j = 0; j < a.rows(); ++j) b.set(j, k, e(keep[k], j));
  return b;
}

FieldMatrix block_assemble(const std::vector<std::vector<FieldMatrix>>& blocks) {
  if (blocks.empty()) throw ShapeMismatch("block_assemble: empty grid");
  const std::size_t bc = blocks[0].size();
  if (bc == 0) throw ShapeMismatch("block_assemble: empty block row");
  for (const auto& row : blocks)
    if (row.size() != bc) throw ShapeMismatch("block_assemble: ragged block grid");

  const std::uint64_t p = blocks[0][0].prime();
  std::vector<std::size_t> row_of(blocks.size()), col_of(bc);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    row_of[i] = blocks[i][0].rows();
    for (const auto& blk : blocks[i]) {
      if (blk.prime() != p) throw FieldMismatch("block_assemble: prime mismatch");
      if (blk.rows() != row_of[i])
        throw ShapeMismatch("block_assemble: inconsistent row counts in block row " +
                            std::to_string(i));
    }
  }
  for (std::size_t j = 0; j < bc; ++j) {
    col_of[j] = blocks[0][j].cols();
    for (const auto& row : blocks)
      if (row[j].cols() != col_of[j])
        throw ShapeMismatch("block_assemble: inconsistent column counts in block column " +
                            std::to_string(j));
  }

  std::size_t total_r = 0, total_c = 0;
  for (auto r : row_of) total_r += r;
  for (auto c : col_of) total_c += c;
  FieldMatrix m(total_r, total_c, p);
  std::size_t roff = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    std::size_t coff = 0;
    for (std::size_t j = 0; j < bc; ++j) {
      const auto& blk = blocks[i][j];
      for (std::size_t r = 0; r < blk.rows(); ++r)
        for (std::size_t c = 0; c < blk.cols(); ++c)
          m.set(roff + r, coff + c, blk(r, c));
      coff += col_of[j];
    }
    roff += row_of[i];
  }
  return m;
}

FieldMatrix direct_sum_mat(const FieldMatrix& a, const FieldMatrix& b) {
  require_same_prime(a, b);
  const std::uint64_t p = a.prime();
  return block_assemble({{a, FieldMatrix(a.rows(), b.cols(), p)},
                         {FieldMatrix(b.rows(), a.cols(), p), b}});
}

FieldMatrix random_invertible(std::size_t n, std::uint64_t seed, std::uint64_t p) {
  std::mt19937_64 gen(seed);
  for (;;) {
    FieldMatrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.set(i, j, gen() % p);
    if (rank(m) == n) return m;
  }
}

FieldMatrix inverse(const FieldMatrix& a) {
  if (a.rows() != a.cols()) throw ShapeMismatch("inverse: matrix not square");
  const std::size_t n = a.rows();
  const std::uint64_t p = a.prime();
  // Gauss-Jordan on [a | I].
  FieldMatrix aug(n, 2 * n, p);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.set(i, j, a(i, j));
    aug.set(i, n + i, 1);
  }
  aug = rref(std::move(aug));
  for (std::size_t i = 0; i < n; ++i)
    if (aug(i, i) != 1) throw SingularMatrix("inverse: singular matrix");
  FieldMatrix inv(n, n, p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.set(i, j, aug(i, n + j));
  return inv;
}

std::optional<FieldMatrix> solve_left(const FieldMatrix& b, const FieldMatrix& d) {
  require_same_prime(b, d);
  if (b.cols() != d.cols())
    throw ShapeMismatch("solve_left: column counts differ");
  // X * b = d  <=>  b^T * X^T = d^T; row-reduce [b^T | d^T].
  const std::uint64_t p = b.prime();
  const FieldMatrix bt = transpose(b);
  const FieldMatrix dt = transpose(d);
  const std::size_t k = bt.cols();  // unknown rows of X^T
  FieldMatrix aug(bt.rows(), k + dt.cols(), p);
  for (std::size_t i = 0; i < bt.rows(); ++i) {
    for (std::size_t j = 0; j < k; ++j) aug.set(i, j, bt(i, j));
    for (std::size_t j = 0; j < dt.cols(); ++j) aug.set(i, k + j, dt(i, j));
  }
  aug = rref(std::move(aug));
  FieldMatrix xt(k, dt.cols(), p);
  for (std::size_t i = 0; i < aug.rows(); ++i) {
    std::size_t piv = 0;
    while (piv < k && aug(i, piv) == 0) ++piv;
    if (piv == k) {
      // Zero row on the b^T side: d^T side must vanish too.
      for (std::size_t j = 0; j < dt.cols(); ++j)
        if (aug(i, k + j) != 0) return std::nullopt;
      continue;
    }
    for (std::size_t j = 0; j < dt.cols(); ++j) xt.set(piv, j, aug(i, k + j));
  }
  return transpose(xt);
}

}  // namespace jordanpers

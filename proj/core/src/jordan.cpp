#include "jordanpers/jordan.hpp"

#include <numeric>
#include <string>

namespace jordanpers {

int NilpotentOperator::total_dim() const {
  return std::accumulate(slice_dims.begin(), slice_dims.end(), 0);
}

NilpotentOperator nilpotent_operator(const PersModule& m, const SliceSequence& s) {
  const std::size_t n = s.count();
  if (n < 2) throw RangeError("nilpotent operator needs at least 2 slices");
  const std::uint64_t p = m.prime();

  NilpotentOperator op;
  op.slice_dims.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    int d = 0;
    for (const auto& x : s.slice(i)) d += m.dim_at(x);
    op.slice_dims[i] = d;
  }

  for (std::size_t i = 0; i + 1 < n; ++i) {
    const auto& src = s.slice(i);
    const auto& dst = s.slice(i + 1);
    std::vector<std::vector<FieldMatrix>> grid(std::max<std::size_t>(dst.size(), 1));
    if (dst.empty() || src.empty()) {
      op.subdiag_blocks.push_back(
          FieldMatrix(op.slice_dims[i + 1], op.slice_dims[i], p));
      continue;
    }
    for (std::size_t r = 0; r < dst.size(); ++r) {
      grid[r].reserve(src.size());
      for (std::size_t c = 0; c < src.size(); ++c) {
        const Point& x = src[c];
        const Point& y = dst[r];
        if (m.poset().leq(x, y) && x != y)
          grid[r].push_back(m.structure_map(x, y));
        else
          grid[r].push_back(FieldMatrix(m.dim_at(y), m.dim_at(x), p));
      }
    }
    op.subdiag_blocks.push_back(block_assemble(grid));
  }

  // Assemble the n x n block matrix with the subdiagonal blocks in place.
  std::vector<std::vector<FieldMatrix>> grid(n);
  for (std::size_t r = 0; r < n; ++r) {
    grid[r].reserve(n);
    for (std::size_t c = 0; c < n; ++c) {
      if (r == c + 1)
        grid[r].push_back(op.subdiag_blocks[c]);
      else
        grid[r].push_back(FieldMatrix(op.slice_dims[r], op.slice_dims[c], p));
    }
  }
  op.assembled = block_assemble(grid);
  return op;
}

std::int64_t JordanType::total_dim() const {
  std::int64_t t = 0;
  for (std::size_t i = 0; i < counts.size(); ++i)
    t += static_cast<std::int64_t>(i + 1) * counts[i];
  return t;
}

namespace {

// rank(T^k) for k = 0..n+1 with rank(T^0) = D.
std::vector<std::int64_t> rank_powers(const FieldMatrix& t, std::size_t n) {
  std::vector<std::int64_t> r(n + 2);
  r[0] = static_cast<std::int64_t>(t.rows());
  FieldMatrix pow = t;
  for (std::size_t k = 1; k <= n + 1; ++k) {
    if (k > 1) pow = matmul(pow, t);
    r[k] = static_cast<std::int64_t>(rank(pow));
    if (r[k] == 0) {  // all higher powers vanish too
      for (std::size_t l = k + 1; l <= n + 1; ++l) r[l] = 0;
      break;
    }
  }
  return r;
}

JordanType jordan_type_of(const FieldMatrix& t, std::size_t n) {
  const auto r = rank_powers(t, n);
  JordanType jt;
  jt.counts.resize(n);
  for (std::size_t i = 1; i <= n; ++i) {
    const std::int64_t a = r[i + 1] + r[i - 1] - 2 * r[i];
    if (a < 0) throw Error("jordan_type: negative block count (invalid operator)");
    jt.counts[i - 1] = a;
  }
  if (jt.total_dim() != r[0])
    throw Error("jordan_type: dimension conservation failed");
  return jt;
}

}  // namespace

JordanType jordan_type(const PersModule& m, const SliceSequence& s) {
  const NilpotentOperator op = nilpotent_operator(m, s);
  return jordan_type_of(op.assembled, s.count());
}

std::vector<std::int64_t> an_decomposition_counts(const PersModule& m,
                                                  const SliceSequence& s) {
  const NilpotentOperator op = nilpotent_operator(m, s);
  const std::size_t n = s.count();
  const std::uint64_t p = m.prime();

  // r(i,j) = rank of the composite block map V_i -> V_j (1-based, i <= j).
  auto rank_span = [&](std::size_t i, std::size_t j) -> std::int64_t {
    if (i < 1 || j > n || i > j) return 0;  // out-of-range convention
    if (i == j) return op.slice_dims[i - 1];
    FieldMatrix acc = FieldMatrix::identity(op.slice_dims[i - 1], p);
    for (std::size_t k = i; k < j; ++k) acc = matmul(op.subdiag_blocks[k - 1], acc);
    return static_cast<std::int64_t>(rank(acc));
  };

  std::vector<std::int64_t> counts(n, 0);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i; j <= n; ++j) {
      const std::int64_t mult = rank_span(i, j) - rank_span(i == 1 ? 0 : i - 1, j) -
                                rank_span(i, j + 1) + rank_span(i - 1, j + 1);
      if (mult < 0)
        throw Error("an_decomposition_counts: negative interval multiplicity");
      counts[j - i] += mult;
    }
  return counts;
}

RankInvariantTable rank_invariant(const PersModule& grid_module) {
  const Poset& p = grid_module.poset();
  if (!p.is_grid()) throw PosetMismatch("rank_invariant needs a grid module");
  RankInvariantTable table(p.dim());
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b) {
      const Point x = p.point(a);
      const Point y = p.point(b);
      if (!leq_coords(x, y)) continue;
      table.set(x, y, rank(grid_module.structure_map(x, y)));
    }
  return table;
}

JordanModuleFamily::JordanModuleFamily(PersModule base, SliceSequence slices)
    : base_(std::move(base)), slices_(std::move(slices)) {
  if (!base_.poset().is_grid())
    throw PosetMismatch("Jordan modules are defined for grid modules");
  if (slices_.count() < 2)
    throw RangeError("Jordan modules need at least 2 slices");
  window_ = minkowski_window(base_.poset(), slices_);
  const std::size_t n = slices_.count();
  for (const auto& x : window_) {
    const NilpotentOperator op =
        nilpotent_operator(shift(base_, x), slices_);
    std::vector<FieldMatrix> levels;
    levels.reserve(n + 1);
    const std::size_t d = op.assembled.rows();
    FieldMatrix pow = FieldMatrix::identity(d, base_.prime());
    levels.push_back(image_basis(pow));  // degree 0: the full ambient space
    for (std::size_t i = 1; i <= n; ++i) {
      pow = matmul(op.assembled, pow);
      levels.push_back(image_basis(pow));
    }
    bases_.emplace(x, std::move(levels));
  }
}

std::size_t JordanModuleFamily::ambient_dim(const Point& x) const {
  std::size_t d = 0;
  for (const auto& s : slices_.all())
    for (const auto& z : s) d += base_.dim_at(add(x, z));
  return d;
}

FieldMatrix JordanModuleFamily::level_basis(std::size_t degree, const Point& x) const {
  auto it = bases_.find(x);
  if (it == bases_.end()) return FieldMatrix(0, 0, base_.prime());
  return it->second.at(degree);
}

std::size_t JordanModuleFamily::level_dim(std::size_t degree, const Point& x) const {
  auto it = bases_.find(x);
  return it == bases_.end() ? 0 : it->second.at(degree).cols();
}

FieldMatrix JordanModuleFamily::ambient_shift(const Point& x, const Point& y) const {
  FieldMatrix acc(0, 0, base_.prime());
  for (const auto& s : slices_.all())
    for (const auto& z : s)
      acc = direct_sum_mat(acc, base_.structure_map(add(x, z), add(y, z)));
  return acc;
}

RankInvariantTable JordanModuleFamily::rank_table(std::size_t degree) const {
  RankInvariantTable table(base_.poset().dim());
  for (const auto& x : window_)
    for (const auto& y : window_) {
      if (!leq_coords(x, y)) continue;
      const FieldMatrix basis = level_basis(degree, x);
      if (basis.cols() == 0) {
        table.set(x, y, 0);
        continue;
      }
      table.set(x, y, rank(matmul(ambient_shift(x, y), basis)));
    }
  return table;
}

JordanModuleFamily jordan_module_family(const PersModule& grid_module,
                                        const SliceSequence& slices) {
  return JordanModuleFamily(grid_module, slices);
}

std::vector<RankInvariantTable> filtered_rank(const PersModule& grid_module,
                                              const SliceSequence& slices) {
  const JordanModuleFamily fam(grid_module, slices);
  std::vector<RankInvariantTable> tables;
  tables.reserve(slices.count());
  for (std::size_t i = 0; i < slices.count(); ++i)
    tables.push_back(fam.rank_table(i));
  return tables;
}

}  // namespace jordanpers

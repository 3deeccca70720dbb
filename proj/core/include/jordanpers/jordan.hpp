#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "jordanpers/module.hpp"
#include "jordanpers/rank_table.hpp"
#include "jordanpers/slices.hpp"

namespace jordanpers {

/// The nilpotent slice operator T_{M,S}: block matrix on the restriction of
/// M to the slices, with the maps between consecutive slices on the block
/// subdiagonal and zeros elsewhere. Within each slice, summands are ordered
/// lex by coordinates; that fixed order makes the operator reproducible.
struct NilpotentOperator {
  std::vector<int> slice_dims;             // d_1..d_n
  std::vector<FieldMatrix> subdiag_blocks; // n-1 blocks, block i: d_{i+1} x d_i
  FieldMatrix assembled;                   // D x D, D = sum d_i

  int total_dim() const;
};

NilpotentOperator nilpotent_operator(const PersModule& m, const SliceSequence& s);

/// Jordan type: counts[i-1] is the number of i x i Jordan blocks of T_{M,S}.
/// Always satisfies sum(i * counts[i-1]) = total restricted dimension.
struct JordanType {
  std::vector<std::int64_t> counts;

  std::int64_t total_dim() const;
  bool operator==(const JordanType&) const = default;
};

/// Jordan type via the rank-power identity
/// a_i = rank(T^{i+1}) + rank(T^{i-1}) - 2 rank(T^i), with rank(T^0) = D
/// (so a_1 = rank(T^2) + D - 2 rank(T)).
JordanType jordan_type(const PersModule& m, const SliceSequence& s);

/// Independent second computation of the same counts: the subdiagonal blocks
/// form an equioriented A_n representation; interval multiplicities follow
/// from the standard rank inclusion-exclusion, and a_i is the number of
/// indecomposables of total dimension i. Used to cross-validate jordan_type.
std::vector<std::int64_t> an_decomposition_counts(const PersModule& m,
                                                  const SliceSequence& s);

/// Classical rank invariant of a grid module over its window.
RankInvariantTable rank_invariant(const PersModule& grid_module);

/// The degree-i Jordan modules of a grid module at S, materialized over the
/// Minkowski evaluation window: for every window point x, the canonical
/// image basis of T^i_{M[x],S} inside the ambient restricted space.
/// Everything vanishes outside the window (trivial extension).
class JordanModuleFamily {
 public:
  JordanModuleFamily(PersModule base, SliceSequence slices);

  const PersModule& base() const { return base_; }
  const SliceSequence& slices() const { return slices_; }
  const std::vector<Point>& eval_window() const { return window_; }
  /// Number of levels (n + 1: degrees 0..n).
  std::size_t levels() const { return slices_.count() + 1; }

  std::size_t ambient_dim(const Point& x) const;
  /// Canonical image basis of T^i at x (columns). Zero columns outside the
  /// window.
  FieldMatrix level_basis(std::size_t degree, const Point& x) const;
  std::size_t level_dim(std::size_t degree, const Point& x) const;

  /// The ambient shift map (+)_{z in S} M_{y+z, x+z}, block diagonal in
  /// slice order; restricting it to level bases gives the induced maps.
  FieldMatrix ambient_shift(const Point& x, const Point& y) const;

  /// rk^i: rank invariant of the degree-i Jordan module over the window.
  RankInvariantTable rank_table(std::size_t degree) const;

 private:
  PersModule base_;
  SliceSequence slices_;
  std::vector<Point> window_;
  std::map<Point, std::vector<FieldMatrix>> bases_;  // x -> basis per degree 0..n
};

JordanModuleFamily jordan_module_family(const PersModule& grid_module,
                                        const SliceSequence& slices);

/// The Jordan filtered rank invariant: tables rk^0, ..., rk^{n-1}.
std::vector<RankInvariantTable> filtered_rank(const PersModule& grid_module,
                                              const SliceSequence& slices);

}  // namespace jordanpers

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "jordanpers/poset.hpp"

namespace jordanpers {

/// Ordered tuple (S_1, ..., S_n) of pairwise disjoint finite point sets.
/// Each slice is kept sorted lex; this fixed order is what makes the slice
/// operator reproducible. Construction throws OverlappingSlices on any
/// repeated point; n = 1 is representable but rejected by the operator
/// constructions downstream.
class SliceSequence {
 public:
  explicit SliceSequence(std::vector<std::vector<Point>> slices);

  std::size_t count() const { return slices_.size(); }
  const std::vector<Point>& slice(std::size_t i) const { return slices_[i]; }
  const std::vector<std::vector<Point>>& all() const { return slices_; }
  /// Union of all slices, sorted lex.
  std::vector<Point> union_points() const;

  bool operator==(const SliceSequence&) const = default;

 private:
  std::vector<std::vector<Point>> slices_;
};

/// Checks a raw slice list against a poset. Pairwise disjointness is always
/// enforced (OverlappingSlices). With strict=true the three advisory slice
/// conditions are reported as warnings, never errors: comparable elements
/// within a slice, reversed comparabilities between consecutive slices, and
/// slice elements with no successor in the next slice.
std::vector<std::string> validate_slices(const Poset& poset,
                                         const std::vector<std::vector<Point>>& slices,
                                         bool strict);

/// The canonical grid slicing by point norm: S_i = {x : |x - lo| = i - 1},
/// n = shape_1 + ... + shape_d + 1.
SliceSequence norm_slices(const Poset& grid);

/// Minimal (S+) and maximal (S-) elements of the induced subposet on
/// {i..j} of a zigzag. For i = j both are {i}. Returned raw (not as a
/// SliceSequence): for i = j the two sets coincide.
std::pair<std::vector<Point>, std::vector<Point>> zigzag_slices(const Poset& zigzag,
                                                                int i, int j);

/// Evaluation window for Jordan modules:
/// E = {x in Z^d : exists z in union(S) with x + z inside the grid window}.
/// Outside E every restricted space vanishes. Sorted lex.
std::vector<Point> minkowski_window(const Poset& grid, const SliceSequence& slices);

}  // namespace jordanpers

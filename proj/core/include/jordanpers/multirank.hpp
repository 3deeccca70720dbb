#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jordanpers/int_matrix.hpp"
#include "jordanpers/module.hpp"
#include "jordanpers/slices.hpp"

namespace jordanpers {

/// Rank of the block matrix from (+)_{x in s1} M_x to (+)_{y in s2} M_y with
/// (y,x)-entry M_yx when x < y strictly, zero otherwise. s1 and s2 may
/// intersect; comparabilities within a slice are ignored, exactly as in the
/// block formula.
std::uint64_t multirank(const PersModule& m, std::vector<Point> s1,
                        std::vector<Point> s2);

/// R(M): the multiranks over all zigzag index pairs i <= j (natural order),
/// with diagonal entries dim M_i.
struct MultirankVector {
  int n = 0;
  std::map<std::pair<int, int>, std::uint64_t> values;

  std::uint64_t at(int i, int j) const { return values.at({i, j}); }
  /// Flattened in lex pair order (1,1),(1,2),...,(n,n).
  std::vector<std::uint64_t> flatten() const;
  /// Upper-triangular text rendering, row i holding entries (i,i)..(i,n).
  std::string render_triangle() const;

  bool operator==(const MultirankVector&) const = default;
};

MultirankVector R_vector(const PersModule& zigzag_module);

/// Fixed lex order of zigzag index pairs; pair_index inverts it.
std::vector<std::pair<int, int>> zigzag_pair_order(int n);

/// The interval R-matrix: column for [i,j] is R(I_[i,j]) flattened. Square
/// of size n(n+1)/2 and unimodular for every orientation.
IntMatrix interval_R_matrix(const Poset& zigzag);

struct Barcode {
  std::map<std::pair<int, int>, std::uint64_t> multiplicities;  // nonzero only

  bool operator==(const Barcode&) const = default;
};

/// Inverts the interval basis: solves interval_R_matrix * m = R(M). Theorem-
/// level guarantees make the solution exist, be integral and nonnegative for
/// any genuine zigzag module; the solve errors signal corrupt input.
Barcode barcode_from_R(const PersModule& zigzag_module);

/// Completeness-based isomorphism test: R(M) = R(N) iff M and N are
/// isomorphic.
bool is_isomorphic(const PersModule& a, const PersModule& b);

/// Direct sum of interval modules with the given bars (repeats allowed).
PersModule interval_sum_module(const Poset& zigzag,
                               const std::vector<std::pair<int, int>>& bars,
                               std::uint64_t prime);

/// Conjugates by a fresh random invertible at every point, deterministic in
/// seed.
PersModule random_conjugation(const PersModule& m, std::uint64_t seed);

/// Deterministic random multiset of bars on {1..n}.
std::vector<std::pair<int, int>> random_bars(int n, int count, std::uint64_t seed);

}  // namespace jordanpers

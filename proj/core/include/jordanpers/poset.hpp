#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jordanpers/errors.hpp"

namespace jordanpers {

/// A poset point. Grid posets use d coordinates in Z^d (negative values are
/// legal; they arise from shifts and from slices reaching outside the stored
/// window). Zigzag posets use a single 1-based vertex {k}; general posets a
/// single element index.
using Point = std::vector<int>;

Point add(const Point& a, const Point& b);
Point sub(const Point& a, const Point& b);
/// Componentwise x <= y (the Z^d order).
bool leq_coords(const Point& x, const Point& y);
std::string point_to_string(const Point& p);

/// Finite poset: a grid window of Z^d, a zigzag (type A_n quiver with
/// arbitrary orientation), or an arbitrary finite poset given by covering
/// pairs. Stored elements are indexed 0..size()-1 in a fixed deterministic
/// order (lex coordinates for grids, 1..n for zigzags, input order for
/// general posets).
class Poset {
 public:
  enum class Kind { grid, zigzag, general };

  Poset() = default;

  /// Grid window [0, shape_1] x ... x [0, shape_d].
  static Poset make_grid(std::vector<int> shape);
  /// Grid window [lo, lo + shape].
  static Poset make_grid_window(Point lo, std::vector<int> shape);
  /// Zigzag on {1..n}; orientation has n-1 letters, 'F' at position i means
  /// the arrow i -> i+1, 'B' means i+1 -> i.
  static Poset make_zigzag(int n, const std::string& orientation);
  /// General finite poset from covering pairs (a, b) meaning a covered-by b.
  /// Redundant (transitively implied) pairs are dropped; cycles are rejected
  /// with InvalidPoset.
  static Poset make_general(std::vector<std::string> elements,
                            const std::vector<std::pair<std::string, std::string>>& covering);

  Kind kind() const { return kind_; }
  bool is_grid() const { return kind_ == Kind::grid; }
  bool is_zigzag() const { return kind_ == Kind::zigzag; }
  int size() const { return size_; }
  /// Coordinate dimension of points (d for grids, 1 otherwise).
  int dim() const;

  Point point(int idx) const;
  /// Index of a stored point; nullopt when a grid point lies outside the
  /// window. Throws UnknownElement for invalid zigzag/general points.
  std::optional<int> index(const Point& p) const;
  bool contains(const Point& p) const;

  /// x <= y. For grids this is the componentwise order on all of Z^d; for
  /// zigzag and general posets both points must be stored elements
  /// (UnknownElement otherwise).
  bool leq(const Point& x, const Point& y) const;
  bool leq_idx(int a, int b) const;

  /// Hasse arrows as (source, target) index pairs, deterministic order,
  /// transitively reduced.
  const std::vector<std::pair<int, int>>& hasse_arrows() const { return arrows_; }
  /// Element indices in a topological order (sources before targets).
  const std::vector<int>& topo_order() const { return topo_; }
  /// In-arrows of an element, as indices into hasse_arrows().
  const std::vector<std::vector<int>>& in_arrows() const { return in_arrows_; }

  // Grid accessors.
  const std::vector<int>& shape() const;
  const Point& lo() const;
  Point hi() const;
  /// The window of the eps-shift: same shape, lo translated by -eps.
  Poset shifted_window(const Point& eps) const;

  // Zigzag accessors.
  int zigzag_n() const;
  const std::string& orientation() const;

  std::string label(int idx) const;
  std::optional<int> index_of_label(const std::string& s) const;

  bool operator==(const Poset&) const = default;

 private:
  void finalize_arrows();

  Kind kind_ = Kind::general;
  int size_ = 0;
  // grid
  Point lo_;
  std::vector<int> shape_;
  // zigzag
  int n_ = 0;
  std::string orientation_;
  // general
  std::vector<std::string> labels_;
  std::vector<std::vector<bool>> closure_;  // zigzag + general

  std::vector<std::pair<int, int>> arrows_;
  std::vector<std::vector<int>> in_arrows_;
  std::vector<int> topo_;
};

}  // namespace jordanpers

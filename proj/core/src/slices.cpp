#include "jordanpers/slices.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace jordanpers {

SliceSequence::SliceSequence(std::vector<std::vector<Point>> slices)
    : slices_(std::move(slices)) {
  std::set<Point> seen;
  for (auto& s : slices_) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (const auto& p : s)
      if (!seen.insert(p).second)
        throw OverlappingSlices("slices overlap at " + point_to_string(p));
  }
}

std::vector<Point> SliceSequence::union_points() const {
  std::vector<Point> u;
  for (const auto& s : slices_) u.insert(u.end(), s.begin(), s.end());
  std::sort(u.begin(), u.end());
  return u;
}

std::vector<std::string> validate_slices(const Poset& poset,
                                         const std::vector<std::vector<Point>>& slices,
                                         bool strict) {
  SliceSequence seq(slices);  // throws OverlappingSlices
  std::vector<std::string> warnings;
  if (!strict) return warnings;
  const std::size_t n = seq.count();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = seq.slice(i);
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = a + 1; b < s.size(); ++b)
        if (poset.leq(s[a], s[b]) || poset.leq(s[b], s[a]))
          warnings.push_back("comparable elements within slice " + std::to_string(i + 1) +
                             ": " + point_to_string(s[a]) + " and " + point_to_string(s[b]));
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (const auto& x : seq.slice(i))
      for (const auto& y : seq.slice(i + 1))
        if (poset.leq(y, x))
          warnings.push_back("reversed comparability between slices " + std::to_string(i + 1) +
                             " and " + std::to_string(i + 2) + ": " + point_to_string(y) +
                             " < " + point_to_string(x));
    for (const auto& x : seq.slice(i)) {
      bool has_successor = false;
      for (const auto& y : seq.slice(i + 1))
        if (poset.leq(x, y) && x != y) { has_successor = true; break; }
      if (!has_successor)
        warnings.push_back("element " + point_to_string(x) + " of slice " +
                           std::to_string(i + 1) + " has no successor in slice " +
                           std::to_string(i + 2));
    }
  }
  return warnings;
}

SliceSequence norm_slices(const Poset& grid) {
  const auto& shape = grid.shape();
  const Point& lo = grid.lo();
  const int n = std::accumulate(shape.begin(), shape.end(), 0) + 1;
  std::vector<std::vector<Point>> slices(n);
  for (int idx = 0; idx < grid.size(); ++idx) {
    const Point p = grid.point(idx);
    int norm = 0;
    for (std::size_t i = 0; i < p.size(); ++i) norm += p[i] - lo[i];
    slices[norm].push_back(p);
  }
  return SliceSequence(std::move(slices));
}

std::pair<std::vector<Point>, std::vector<Point>> zigzag_slices(const Poset& zigzag,
                                                                int i, int j) {
  const int n = zigzag.zigzag_n();
  if (i < 1 || j > n || i > j)
    throw RangeError("zigzag_slices: need 1 <= i <= j <= n, got i=" + std::to_string(i) +
                     ", j=" + std::to_string(j) + ", n=" + std::to_string(n));
  std::vector<Point> s_plus, s_minus;
  for (int k = i; k <= j; ++k) {
    bool minimal = true, maximal = true;
    for (int l = i; l <= j; ++l) {
      if (l == k) continue;
      if (zigzag.leq(Point{l}, Point{k})) minimal = false;
      if (zigzag.leq(Point{k}, Point{l})) maximal = false;
    }
    if (minimal) s_plus.push_back(Point{k});
    if (maximal) s_minus.push_back(Point{k});
  }
  return {s_plus, s_minus};
}

std::vector<Point> minkowski_window(const Poset& grid, const SliceSequence& slices) {
  if (!grid.is_grid()) throw PosetMismatch("minkowski_window needs a grid poset");
  std::set<Point> window;
  const auto zs = slices.union_points();
  for (int idx = 0; idx < grid.size(); ++idx) {
    const Point w = grid.point(idx);
    for (const auto& z : zs) window.insert(sub(w, z));
  }
  return {window.begin(), window.end()};
}

}  // namespace jordanpers

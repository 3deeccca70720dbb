#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "jordanpers/poset.hpp"

namespace jordanpers {

/// Natural number extended by infinity (infinity is the top element).
struct ExtNat {
  static constexpr std::uint64_t kInfRaw = ~0ull;
  std::uint64_t raw = 0;

  static ExtNat infinity() { return ExtNat{kInfRaw}; }
  static ExtNat of(std::uint64_t v) { return ExtNat{v}; }
  bool is_infinite() const { return raw == kInfRaw; }
  std::uint64_t finite() const { return raw; }

  auto operator<=>(const ExtNat&) const = default;
};

std::string to_string(ExtNat v);

/// Finite table realizing a rank functor on Z^d: values are stored for
/// comparable pairs inside a finite window; comparable pairs outside the
/// window read 0 (trivial extension), incomparable pairs read infinity.
class RankInvariantTable {
 public:
  explicit RankInvariantTable(int dim) : dim_(dim) {}

  int dim() const { return dim_; }

  void set(const Point& x, const Point& y, std::uint64_t v);
  ExtNat value(const Point& x, const Point& y) const;

  const std::map<std::pair<Point, Point>, std::uint64_t>& entries() const {
    return entries_;
  }

  /// Entrywise equality as functions on Z^d x Z^d: compared over the union
  /// of both tables' stored pairs plus the out-of-window conventions.
  bool same_values(const RankInvariantTable& other) const;

  /// Bounding box of all coordinates appearing in pairs with nonzero value;
  /// nullopt when the table is identically zero.
  std::optional<std::pair<Point, Point>> support_box() const;

 private:
  int dim_;
  std::map<std::pair<Point, Point>, std::uint64_t> entries_;
};

}  // namespace jordanpers

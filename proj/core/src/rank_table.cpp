#include "jordanpers/rank_table.hpp"

#include <algorithm>
#include <set>

namespace jordanpers {

std::string to_string(ExtNat v) {
  return v.is_infinite() ? "inf" : std::to_string(v.finite());
}

void RankInvariantTable::set(const Point& x, const Point& y, std::uint64_t v) {
  if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
    throw DimensionMismatch("rank table: point dimension mismatch");
  if (!leq_coords(x, y))
    throw NotComparable("rank table: pair is not comparable");
  entries_[{x, y}] = v;
}

ExtNat RankInvariantTable::value(const Point& x, const Point& y) const {
  if (!leq_coords(x, y)) return ExtNat::infinity();
  auto it = entries_.find({x, y});
  return it == entries_.end() ? ExtNat::of(0) : ExtNat::of(it->second);
}

bool RankInvariantTable::same_values(const RankInvariantTable& other) const {
  if (dim_ != other.dim_) return false;
  for (const auto& [pair, v] : entries_)
    if (other.value(pair.first, pair.second) != ExtNat::of(v)) return false;
  for (const auto& [pair, v] : other.entries_)
    if (value(pair.first, pair.second) != ExtNat::of(v)) return false;
  return true;
}

std::optional<std::pair<Point, Point>> RankInvariantTable::support_box() const {
  std::optional<std::pair<Point, Point>> box;
  auto absorb = [&](const Point& p) {
    if (!box) {
      box = {p, p};
      return;
    }
    for (int i = 0; i < dim_; ++i) {
      box->first[i] = std::min(box->first[i], p[i]);
      box->second[i] = std::max(box->second[i], p[i]);
    }
  };
  for (const auto& [pair, v] : entries_) {
    if (v == 0) continue;
    absorb(pair.first);
    absorb(pair.second);
  }
  return box;
}

}  // namespace jordanpers

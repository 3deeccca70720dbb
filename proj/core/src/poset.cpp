#include "jordanpers/poset.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace jordanpers {

Point add(const Point& a, const Point& b) {
  if (a.size() != b.size()) throw DimensionMismatch("point dimension mismatch");
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Point sub(const Point& a, const Point& b) {
  if (a.size() != b.size()) throw DimensionMismatch("point dimension mismatch");
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

bool leq_coords(const Point& x, const Point& y) {
  if (x.size() != y.size()) throw DimensionMismatch("point dimension mismatch");
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] > y[i]) return false;
  return true;
}

std::string point_to_string(const Point& p) {
  std::ostringstream os;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) os << ',';
    os << p[i];
  }
  return os.str();
}

Poset Poset::make_grid(std::vector<int> shape) {
  return make_grid_window(Point(shape.size(), 0), std::move(shape));
}

Poset Poset::make_grid_window(Point lo, std::vector<int> shape) {
  if (lo.size() != shape.size())
    throw DimensionMismatch("grid: lo and shape dimensions differ");
  for (int s : shape)
    if (s < 0) throw InvalidPoset("grid: negative shape entry");
  Poset p;
  p.kind_ = Kind::grid;
  p.lo_ = std::move(lo);
  p.shape_ = std::move(shape);
  long long sz = 1;
  for (int s : p.shape_) sz *= (s + 1);
  p.size_ = static_cast<int>(sz);
  p.finalize_arrows();
  return p;
}

Poset Poset::make_zigzag(int n, const std::string& orientation) {
  if (n < 1) throw InvalidPoset("zigzag: n must be >= 1");
  if (static_cast<int>(orientation.size()) != n - 1)
    throw InvalidPoset("zigzag: orientation must have n-1 letters");
  for (char c : orientation)
    if (c != 'F' && c != 'B')
      throw InvalidPoset("zigzag: orientation letters must be F or B");
  Poset p;
  p.kind_ = Kind::zigzag;
  p.n_ = n;
  p.orientation_ = orientation;
  p.size_ = n;
  // Reachability closure along the A_n path.
  p.closure_.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) p.closure_[i][i] = true;
  for (int step = 0; step < n; ++step)
    for (int i = 0; i + 1 < n; ++i) {
      const int a = orientation[i] == 'F' ? i : i + 1;
      const int b = orientation[i] == 'F' ? i + 1 : i;
      for (int s = 0; s < n; ++s)
        if (p.closure_[s][a] && !p.closure_[s][b]) p.closure_[s][b] = true;
    }
  p.finalize_arrows();
  return p;
}

Poset Poset::make_general(std::vector<std::string> elements,
                          const std::vector<std::pair<std::string, std::string>>& covering) {
  Poset p;
  p.kind_ = Kind::general;
  p.labels_ = std::move(elements);
  p.size_ = static_cast<int>(p.labels_.size());
  std::map<std::string, int> idx;
  for (int i = 0; i < p.size_; ++i) {
    if (idx.count(p.labels_[i])) throw InvalidPoset("duplicate element: " + p.labels_[i]);
    idx[p.labels_[i]] = i;
  }
  std::set<std::pair<int, int>> cov;
  for (const auto& [a, b] : covering) {
    auto ia = idx.find(a), ib = idx.find(b);
    if (ia == idx.end()) throw UnknownElement("covering references unknown element: " + a);
    if (ib == idx.end()) throw UnknownElement("covering references unknown element: " + b);
    if (ia->second == ib->second) throw InvalidPoset("self-covering at " + a);
    cov.insert({ia->second, ib->second});
  }
  // Reflexive-transitive closure; reject cycles.
  const int n = p.size_;
  p.closure_.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) p.closure_[i][i] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [a, b] : cov)
      for (int s = 0; s < n; ++s)
        if (p.closure_[s][a] && !p.closure_[s][b]) {
          p.closure_[s][b] = true;
          changed = true;
        }
  }
  for (const auto& [a, b] : cov)
    if (p.closure_[b][a])
      throw InvalidPoset("covering contains a cycle through " + p.labels_[a]);
  p.finalize_arrows();
  return p;
}

int Poset::dim() const { return kind_ == Kind::grid ? static_cast<int>(shape_.size()) : 1; }

Point Poset::point(int idx) const {
  if (idx < 0 || idx >= size_) throw UnknownElement("point index out of range");
  switch (kind_) {
    case Kind::grid: {
      Point p(shape_.size());
      int rem = idx;
      for (int i = static_cast<int>(shape_.size()) - 1; i >= 0; --i) {
        const int w = shape_[i] + 1;
        p[i] = lo_[i] + rem % w;
        rem /= w;
      }
      return p;
    }
    case Kind::zigzag:
      return Point{idx + 1};
    case Kind::general:
      return Point{idx};
  }
  throw Error("unreachable");
}

std::optional<int> Poset::index(const Point& p) const {
  switch (kind_) {
    case Kind::grid: {
      if (static_cast<int>(p.size()) != dim())
        throw DimensionMismatch("grid point has wrong dimension");
      int idx = 0;
      for (std::size_t i = 0; i < shape_.size(); ++i) {
        const int c = p[i] - lo_[i];
        if (c < 0 || c > shape_[i]) return std::nullopt;
        idx = idx * (shape_[i] + 1) + c;
      }
      return idx;
    }
    case Kind::zigzag: {
      if (p.size() != 1) throw UnknownElement("zigzag point must be a single vertex");
      if (p[0] < 1 || p[0] > n_)
        throw UnknownElement("zigzag vertex out of range: " + std::to_string(p[0]));
      return p[0] - 1;
    }
    case Kind::general: {
      if (p.size() != 1 || p[0] < 0 || p[0] >= size_)
        throw UnknownElement("unknown poset element index");
      return p[0];
    }
  }
  throw Error("unreachable");
}

bool Poset::contains(const Point& p) const {
  if (kind_ == Kind::grid) return index(p).has_value();
  try {
    return index(p).has_value();
  } catch (const UnknownElement&) {
    return false;
  }
}

bool Poset::leq(const Point& x, const Point& y) const {
  if (kind_ == Kind::grid) return leq_coords(x, y);
  const int a = *index(x);
  const int b = *index(y);
  return closure_[a][b];
}

bool Poset::leq_idx(int a, int b) const {
  if (kind_ == Kind::grid) return leq_coords(point(a), point(b));
  return closure_[a][b];
}

void Poset::finalize_arrows() {
  arrows_.clear();
  switch (kind_) {
    case Kind::grid:
      for (int idx = 0; idx < size_; ++idx) {
        const Point p = point(idx);
        for (std::size_t i = 0; i < shape_.size(); ++i) {
          Point q = p;
          q[i] += 1;
          if (auto t = index(q)) arrows_.push_back({idx, *t});
        }
      }
      break;
    case Kind::zigzag:
      for (int i = 0; i + 1 < n_; ++i) {
        if (orientation_[i] == 'F')
          arrows_.push_back({i, i + 1});
        else
          arrows_.push_back({i + 1, i});
      }
      break;
    case Kind::general: {
      // Transitive reduction: keep (a,b) only when no c strictly between.
      std::vector<std::pair<int, int>> cov;
      for (int a = 0; a < size_; ++a)
        for (int b = 0; b < size_; ++b) {
          if (a == b || !closure_[a][b]) continue;
          bool direct = true;
          for (int c = 0; c < size_ && direct; ++c)
            if (c != a && c != b && closure_[a][c] && closure_[c][b]) direct = false;
          if (direct) cov.push_back({a, b});
        }
      arrows_ = std::move(cov);
      break;
    }
  }
  in_arrows_.assign(size_, {});
  for (std::size_t k = 0; k < arrows_.size(); ++k)
    in_arrows_[arrows_[k].second].push_back(static_cast<int>(k));

  // Kahn topological order; ties broken by element index for determinism.
  std::vector<int> indeg(size_, 0);
  for (const auto& [s, t] : arrows_) ++indeg[t];
  std::set<int> ready;
  for (int i = 0; i < size_; ++i)
    if (indeg[i] == 0) ready.insert(i);
  topo_.clear();
  std::vector<std::vector<int>> outs(size_);
  for (const auto& [s, t] : arrows_) outs[s].push_back(t);
  while (!ready.empty()) {
    const int v = *ready.begin();
    ready.erase(ready.begin());
    topo_.push_back(v);
    for (int t : outs[v])
      if (--indeg[t] == 0) ready.insert(t);
  }
  if (static_cast<int>(topo_.size()) != size_)
    throw InvalidPoset("covering relation is cyclic");
}

const std::vector<int>& Poset::shape() const {
  if (kind_ != Kind::grid) throw PosetMismatch("not a grid poset");
  return shape_;
}

const Point& Poset::lo() const {
  if (kind_ != Kind::grid) throw PosetMismatch("not a grid poset");
  return lo_;
}

Point Poset::hi() const {
  if (kind_ != Kind::grid) throw PosetMismatch("not a grid poset");
  Point h = lo_;
  for (std::size_t i = 0; i < shape_.size(); ++i) h[i] += shape_[i];
  return h;
}

Poset Poset::shifted_window(const Point& eps) const {
  if (kind_ != Kind::grid) throw PosetMismatch("only grid modules can be shifted");
  return make_grid_window(sub(lo_, eps), shape_);
}

int Poset::zigzag_n() const {
  if (kind_ != Kind::zigzag) throw PosetMismatch("not a zigzag poset");
  return n_;
}

const std::string& Poset::orientation() const {
  if (kind_ != Kind::zigzag) throw PosetMismatch("not a zigzag poset");
  return orientation_;
}

std::string Poset::label(int idx) const {
  if (kind_ == Kind::general) return labels_[idx];
  return point_to_string(point(idx));
}

std::optional<int> Poset::index_of_label(const std::string& s) const {
  if (kind_ == Kind::general) {
    for (int i = 0; i < size_; ++i)
      if (labels_[i] == s) return i;
    return std::nullopt;
  }
  throw PosetMismatch("labels are only stored for general posets");
}

}  // namespace jordanpers

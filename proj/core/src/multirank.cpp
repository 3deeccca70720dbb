#include "jordanpers/multirank.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace jordanpers {

std::uint64_t multirank(const PersModule& m, std::vector<Point> s1,
                        std::vector<Point> s2) {
  std::sort(s1.begin(), s1.end());
  s1.erase(std::unique(s1.begin(), s1.end()), s1.end());
  std::sort(s2.begin(), s2.end());
  s2.erase(std::unique(s2.begin(), s2.end()), s2.end());
  const std::uint64_t p = m.prime();

  std::size_t rows = 0, cols = 0;
  for (const auto& y : s2) rows += m.dim_at(y);
  for (const auto& x : s1) cols += m.dim_at(x);
  if (rows == 0 || cols == 0) return 0;

  std::vector<std::vector<FieldMatrix>> grid(s2.size());
  for (std::size_t r = 0; r < s2.size(); ++r) {
    grid[r].reserve(s1.size());
    for (std::size_t c = 0; c < s1.size(); ++c) {
      const Point& x = s1[c];
      const Point& y = s2[r];
      if (m.poset().leq(x, y) && x != y)
        grid[r].push_back(m.structure_map(x, y));
      else
        grid[r].push_back(FieldMatrix(m.dim_at(y), m.dim_at(x), p));
    }
  }
  return rank(block_assemble(grid));
}

std::vector<std::pair<int, int>> zigzag_pair_order(int n) {
  std::vector<std::pair<int, int>> order;
  order.reserve(n * (n + 1) / 2);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) order.push_back({i, j});
  return order;
}

MultirankVector R_vector(const PersModule& zigzag_module) {
  const Poset& p = zigzag_module.poset();
  const int n = p.zigzag_n();
  MultirankVector r;
  r.n = n;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      if (i == j) {
        r.values[{i, j}] = zigzag_module.dim_at(Point{i});
      } else {
        auto [s_plus, s_minus] = zigzag_slices(p, i, j);
        r.values[{i, j}] = multirank(zigzag_module, s_plus, s_minus);
      }
    }
  return r;
}

std::vector<std::uint64_t> MultirankVector::flatten() const {
  std::vector<std::uint64_t> flat;
  flat.reserve(values.size());
  for (const auto& [ij, v] : values) flat.push_back(v);  // map order is lex
  return flat;
}

std::string MultirankVector::render_triangle() const {
  std::ostringstream os;
  for (int i = 1; i <= n; ++i) {
    for (int k = 1; k < i; ++k) os << "  ";
    for (int j = i; j <= n; ++j) {
      if (j > i) os << ' ';
      os << at(i, j);
    }
    os << '\n';
  }
  return os.str();
}

IntMatrix interval_R_matrix(const Poset& zigzag) {
  const int n = zigzag.zigzag_n();
  const auto order = zigzag_pair_order(n);
  const std::size_t sz = order.size();
  IntMatrix a(sz, sz);
  for (std::size_t col = 0; col < sz; ++col) {
    const auto [i, j] = order[col];
    // Ranks of interval-module operators are characteristic independent;
    // any prime works here.
    const auto flat = R_vector(interval_module(zigzag, i, j, kDefaultPrime)).flatten();
    for (std::size_t row = 0; row < sz; ++row) a.at(row, col) = flat[row];
  }
  return a;
}

Barcode barcode_from_R(const PersModule& zigzag_module) {
  const Poset& p = zigzag_module.poset();
  const int n = p.zigzag_n();
  const auto flat = R_vector(zigzag_module).flatten();
  std::vector<BigInt> b(flat.begin(), flat.end());
  const auto mult = solve_nonneg_integer(interval_R_matrix(p), b);
  const auto order = zigzag_pair_order(n);
  Barcode bc;
  for (std::size_t k = 0; k < order.size(); ++k)
    if (mult[k] != 0)
      bc.multiplicities[order[k]] = static_cast<std::uint64_t>(mult[k]);
  return bc;
}

bool is_isomorphic(const PersModule& a, const PersModule& b) {
  if (!(a.poset() == b.poset())) throw PosetMismatch("is_isomorphic: posets differ");
  if (a.prime() != b.prime()) throw FieldMismatch("is_isomorphic: primes differ");
  return R_vector(a) == R_vector(b);
}

PersModule interval_sum_module(const Poset& zigzag,
                               const std::vector<std::pair<int, int>>& bars,
                               std::uint64_t prime) {
  PersModule m = zero_module(zigzag, prime);
  for (const auto& [i, j] : bars)
    m = direct_sum(m, interval_module(zigzag, i, j, prime));
  return m;
}

PersModule random_conjugation(const PersModule& m, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::map<Point, FieldMatrix> g;
  const Poset& p = m.poset();
  for (int idx = 0; idx < p.size(); ++idx) {
    const int d = m.dim_idx(idx);
    if (d == 0) continue;
    g.emplace(p.point(idx), random_invertible(d, gen(), m.prime()));
  }
  return conjugate(m, g);
}

std::vector<std::pair<int, int>> random_bars(int n, int count, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::vector<std::pair<int, int>> bars;
  bars.reserve(count);
  for (int k = 0; k < count; ++k) {
    const int i = 1 + static_cast<int>(gen() % n);
    const int j = i + static_cast<int>(gen() % (n - i + 1));
    bars.push_back({i, j});
  }
  std::sort(bars.begin(), bars.end());
  return bars;
}

}  // namespace jordanpers

#include "jordanpers/module.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace jordanpers {

namespace {

std::string arrow_str(const Point& x, const Point& y) {
  return point_to_string(x) + "->" + point_to_string(y);
}

// Arrow index lookup shared by the composite walkers.
std::map<std::pair<int, int>, std::size_t> arrow_lookup(const Poset& p) {
  std::map<std::pair<int, int>, std::size_t> lut;
  const auto& arrows = p.hasse_arrows();
  for (std::size_t k = 0; k < arrows.size(); ++k) lut[arrows[k]] = k;
  return lut;
}

}  // namespace

PersModule::PersModule(Poset poset, std::uint64_t prime, std::vector<int> dims,
                       std::vector<FieldMatrix> arrow_maps)
    : poset_(std::move(poset)), prime_(prime), dims_(std::move(dims)),
      maps_(std::move(arrow_maps)) {
  check_prime(prime_);
  if (static_cast<int>(dims_.size()) != poset_.size())
    throw ShapeMismatch("module: dims size does not match poset size");
  for (int d : dims_)
    if (d < 0) throw ShapeMismatch("module: negative dimension");
  const auto& arrows = poset_.hasse_arrows();
  if (maps_.size() != arrows.size())
    throw ShapeMismatch("module: arrow map count does not match Hasse arrow count");
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    const auto [s, t] = arrows[k];
    if (maps_[k].rows() != static_cast<std::size_t>(dims_[t]) ||
        maps_[k].cols() != static_cast<std::size_t>(dims_[s]))
      throw ShapeMismatch("module: map " + arrow_str(poset_.point(s), poset_.point(t)) +
                          " has shape " + std::to_string(maps_[k].rows()) + "x" +
                          std::to_string(maps_[k].cols()) + ", expected " +
                          std::to_string(dims_[t]) + "x" + std::to_string(dims_[s]));
    if (maps_[k].prime() != prime_)
      throw FieldMismatch("module: arrow map over wrong prime");
  }
}

int PersModule::dim_at(const Point& x) const {
  const auto idx = poset_.index(x);
  return idx ? dims_[*idx] : 0;
}

int PersModule::total_dim() const {
  int t = 0;
  for (int d : dims_) t += d;
  return t;
}

FieldMatrix PersModule::structure_map(const Point& x, const Point& y) const {
  if (!poset_.leq(x, y))
    throw NotComparable("structure_map: " + point_to_string(x) + " is not <= " +
                        point_to_string(y));
  if (x == y) return FieldMatrix::identity(dim_at(x), prime_);
  if (dim_at(x) == 0 || dim_at(y) == 0)
    return FieldMatrix(dim_at(y), dim_at(x), prime_);

  const auto lut = arrow_lookup(poset_);
  switch (poset_.kind()) {
    case Poset::Kind::grid: {
      // Canonical staircase: raise coordinates in order. The box [x, y]
      // lies inside the window because both endpoints do.
      FieldMatrix acc = FieldMatrix::identity(dim_at(x), prime_);
      Point q = x;
      for (std::size_t i = 0; i < q.size(); ++i)
        while (q[i] < y[i]) {
          Point next = q;
          next[i] += 1;
          const auto a = lut.at({*poset_.index(q), *poset_.index(next)});
          acc = matmul(maps_[a], acc);
          q = next;
        }
      return acc;
    }
    case Poset::Kind::zigzag: {
      const int a = x[0], b = y[0];
      const int step = b > a ? 1 : -1;
      FieldMatrix acc = FieldMatrix::identity(dim_at(x), prime_);
      for (int q = a; q != b; q += step) {
        const auto k = lut.at({*poset_.index(Point{q}), *poset_.index(Point{q + step})});
        acc = matmul(maps_[k], acc);
      }
      return acc;
    }
    case Poset::Kind::general: {
      // Canonical path by dynamic programming along the first usable
      // in-arrow of each element in topological order.
      const int src = *poset_.index(x);
      const int dst = *poset_.index(y);
      std::map<int, FieldMatrix> comp;
      comp.emplace(src, FieldMatrix::identity(dims_[src], prime_));
      for (int t : poset_.topo_order()) {
        if (t == src || !poset_.leq_idx(src, t)) continue;
        for (int ai : poset_.in_arrows()[t]) {
          const int u = poset_.hasse_arrows()[ai].first;
          auto it = comp.find(u);
          if (it != comp.end()) {
            comp.emplace(t, matmul(maps_[ai], it->second));
            break;
          }
        }
      }
      return comp.at(dst);
    }
  }
  throw Error("unreachable");
}

std::string ValidationReport::describe() const {
  if (ok) return "ok";
  std::ostringstream os;
  os << "functor law violated at (" << point_to_string(violation->x) << ", "
     << point_to_string(violation->y) << "): composites via "
     << point_to_string(violation->via_u) << " and " << point_to_string(violation->via_v)
     << " differ";
  return os.str();
}

ValidationReport validate(const PersModule& m) {
  const Poset& p = m.poset();
  ValidationReport rep;
  switch (p.kind()) {
    case Poset::Kind::zigzag:
      return rep;  // an A_n quiver has no squares
    case Poset::Kind::grid: {
      const int d = p.dim();
      for (int idx = 0; idx < p.size(); ++idx) {
        const Point b = p.point(idx);
        for (int i = 0; i < d; ++i)
          for (int j = i + 1; j < d; ++j) {
            Point bi = b, bj = b, top = b;
            bi[i] += 1;
            bj[j] += 1;
            top[i] += 1;
            top[j] += 1;
            if (!p.contains(top)) continue;
            const FieldMatrix via_i =
                matmul(m.structure_map(bi, top), m.structure_map(b, bi));
            const FieldMatrix via_j =
                matmul(m.structure_map(bj, top), m.structure_map(b, bj));
            if (!(via_i == via_j)) {
              rep.ok = false;
              rep.violation = Violation{b, top, bi, bj, via_i, via_j};
              return rep;
            }
          }
      }
      return rep;
    }
    case Poset::Kind::general: {
      // Canonical composites from every source, then every pair of
      // in-routes into every target is compared over every common lower
      // bound.
      const int n = p.size();
      const auto& arrows = p.hasse_arrows();
      std::vector<std::map<int, FieldMatrix>> comp(n);  // comp[src][t]
      for (int src = 0; src < n; ++src) {
        comp[src].emplace(src, FieldMatrix::identity(m.dim_idx(src), m.prime()));
        for (int t : p.topo_order()) {
          if (t == src || !p.leq_idx(src, t)) continue;
          for (int ai : p.in_arrows()[t]) {
            const int u = arrows[ai].first;
            auto it = comp[src].find(u);
            if (it != comp[src].end()) {
              comp[src].emplace(t, matmul(m.arrow_map(ai), it->second));
              break;
            }
          }
        }
      }
      for (int t = 0; t < n; ++t) {
        const auto& ins = p.in_arrows()[t];
        for (std::size_t r = 0; r < ins.size(); ++r)
          for (std::size_t s = r + 1; s < ins.size(); ++s) {
            const int u = arrows[ins[r]].first;
            const int v = arrows[ins[s]].first;
            for (int x = 0; x < n; ++x) {
              if (!p.leq_idx(x, u) || !p.leq_idx(x, v)) continue;
              const FieldMatrix cu = matmul(m.arrow_map(ins[r]), comp[x].at(u));
              const FieldMatrix cv = matmul(m.arrow_map(ins[s]), comp[x].at(v));
              if (!(cu == cv)) {
                rep.ok = false;
                rep.violation =
                    Violation{p.point(x), p.point(t), p.point(u), p.point(v), cu, cv};
                return rep;
              }
            }
          }
      }
      return rep;
    }
  }
  throw Error("unreachable");
}

PersModule zero_module(const Poset& poset, std::uint64_t prime) {
  std::vector<FieldMatrix> maps(poset.hasse_arrows().size(), FieldMatrix(0, 0, prime));
  return PersModule(poset, prime, std::vector<int>(poset.size(), 0), std::move(maps));
}

PersModule direct_sum(const PersModule& a, const PersModule& b) {
  if (!(a.poset() == b.poset())) throw PosetMismatch("direct_sum: posets differ");
  if (a.prime() != b.prime()) throw FieldMismatch("direct_sum: primes differ");
  std::vector<int> dims(a.poset().size());
  for (int i = 0; i < a.poset().size(); ++i) dims[i] = a.dim_idx(i) + b.dim_idx(i);
  std::vector<FieldMatrix> maps;
  maps.reserve(a.poset().hasse_arrows().size());
  for (std::size_t k = 0; k < a.poset().hasse_arrows().size(); ++k)
    maps.push_back(direct_sum_mat(a.arrow_map(k), b.arrow_map(k)));
  return PersModule(a.poset(), a.prime(), std::move(dims), std::move(maps));
}

PersModule shift(const PersModule& m, const Point& eps) {
  // Window translation preserves the lex point order, so dims and maps
  // carry over verbatim.
  Poset p = m.poset().shifted_window(eps);
  return PersModule(std::move(p), m.prime(), m.dims(),
                    [&] {
                      std::vector<FieldMatrix> maps;
                      maps.reserve(m.poset().hasse_arrows().size());
                      for (std::size_t k = 0; k < m.poset().hasse_arrows().size(); ++k)
                        maps.push_back(m.arrow_map(k));
                      return maps;
                    }());
}

PersModule interval_module(const Poset& zigzag, int i, int j, std::uint64_t prime) {
  const int n = zigzag.zigzag_n();
  if (i < 1 || j > n || i > j)
    throw RangeError("interval_module: need 1 <= i <= j <= n");
  std::vector<int> dims(n, 0);
  for (int k = i; k <= j; ++k) dims[k - 1] = 1;
  std::vector<FieldMatrix> maps;
  for (const auto& [s, t] : zigzag.hasse_arrows()) {
    FieldMatrix f(dims[t], dims[s], prime);
    if (dims[s] == 1 && dims[t] == 1) f.set(0, 0, 1);
    maps.push_back(std::move(f));
  }
  return PersModule(zigzag, prime, std::move(dims), std::move(maps));
}

PersModule conjugate(const PersModule& m, const std::map<Point, FieldMatrix>& g) {
  const Poset& p = m.poset();
  std::vector<FieldMatrix> gm(p.size()), gm_inv(p.size());
  for (int idx = 0; idx < p.size(); ++idx) {
    const Point x = p.point(idx);
    auto it = g.find(x);
    if (it == g.end()) {
      gm[idx] = FieldMatrix::identity(m.dim_idx(idx), m.prime());
    } else {
      if (it->second.rows() != static_cast<std::size_t>(m.dim_idx(idx)) ||
          it->second.cols() != static_cast<std::size_t>(m.dim_idx(idx)))
        throw ShapeMismatch("conjugate: g at " + point_to_string(x) + " has wrong shape");
      gm[idx] = it->second;
    }
    gm_inv[idx] = inverse(gm[idx]);
  }
  std::vector<FieldMatrix> maps;
  const auto& arrows = p.hasse_arrows();
  maps.reserve(arrows.size());
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    const auto [s, t] = arrows[k];
    maps.push_back(matmul(gm[t], matmul(m.arrow_map(k), gm_inv[s])));
  }
  return PersModule(p, m.prime(), m.dims(), std::move(maps));
}

PersModule random_module(const Poset& poset, int max_dim, std::uint64_t seed,
                         std::uint64_t prime) {
  check_prime(prime);
  if (max_dim < 0) throw RangeError("random_module: max_dim must be >= 0");
  std::mt19937_64 gen(seed);
  const int n = poset.size();
  std::vector<int> dims(n);
  for (int i = 0; i < n; ++i) dims[i] = static_cast<int>(gen() % (max_dim + 1));

  const auto& arrows = poset.hasse_arrows();
  std::vector<FieldMatrix> maps(arrows.size());
  // comp[t][x]: canonical composite x -> t among the already-fixed maps.
  std::vector<std::map<int, FieldMatrix>> comp(n);
  auto random_matrix = [&](int r, int c) {
    FieldMatrix f(r, c, prime);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) f.set(i, j, gen() % prime);
    return f;
  };

  for (int t : poset.topo_order()) {
    const auto& ins = poset.in_arrows()[t];
    bool zeroed = false;
    for (std::size_t r = 0; r < ins.size() && !zeroed; ++r) {
      const int u_r = arrows[ins[r]].first;
      if (r == 0) {
        maps[ins[0]] = random_matrix(dims[t], dims[u_r]);
        continue;
      }
      // Constraints against every earlier sibling over every common lower
      // bound, stacked into one left-division problem.
      std::vector<std::vector<FieldMatrix>> brow(1), drow(1);
      for (std::size_t s = 0; s < r; ++s) {
        const int u_s = arrows[ins[s]].first;
        for (int x = 0; x < n; ++x) {
          if (!poset.leq_idx(x, u_r) || !poset.leq_idx(x, u_s)) continue;
          brow[0].push_back(comp[u_r].at(x));
          drow[0].push_back(matmul(maps[ins[s]], comp[u_s].at(x)));
        }
      }
      if (brow[0].empty()) {
        maps[ins[r]] = random_matrix(dims[t], dims[u_r]);
        continue;
      }
      auto solved = solve_left(block_assemble(brow), block_assemble(drow));
      if (solved) {
        maps[ins[r]] = std::move(*solved);
      } else {
        for (int ai : ins)
          maps[ai] = FieldMatrix(dims[t], dims[arrows[ai].first], prime);
        zeroed = true;
      }
    }
    // Extend the canonical composites to t.
    comp[t].emplace(t, FieldMatrix::identity(dims[t], prime));
    for (int x = 0; x < n; ++x) {
      if (x == t || !poset.leq_idx(x, t)) continue;
      for (int ai : ins) {
        const int u = arrows[ai].first;
        auto it = comp[u].find(x);
        if (it != comp[u].end()) {
          comp[t].emplace(x, matmul(maps[ai], it->second));
          break;
        }
      }
    }
  }
  return PersModule(poset, prime, std::move(dims), std::move(maps));
}

FieldMatrix ModuleHom::component_at(const Point& x) const {
  auto it = components.find(x);
  if (it != components.end()) return it->second;
  return FieldMatrix(target.dim_at(x), source.dim_at(x), source.prime());
}

std::string HomReport::describe() const {
  if (ok) return "ok";
  std::ostringstream os;
  os << "homomorphism violation at (" << point_to_string(violation->x) << ", "
     << point_to_string(violation->y) << "): " << violation->detail;
  return os.str();
}

namespace {

// Bounding box of the windows of a grid hom's source and target.
std::pair<Point, Point> hom_hull(const ModuleHom& f) {
  Point lo = f.source.poset().lo();
  Point hi = f.source.poset().hi();
  const Point tlo = f.target.poset().lo();
  const Point thi = f.target.poset().hi();
  for (std::size_t i = 0; i < lo.size(); ++i) {
    lo[i] = std::min(lo[i], tlo[i]);
    hi[i] = std::max(hi[i], thi[i]);
  }
  return {lo, hi};
}

template <typename Fn>
void for_each_in_box(const Point& lo, const Point& hi, Fn&& fn) {
  Point q = lo;
  for (;;) {
    fn(q);
    std::size_t i = q.size();
    while (i > 0) {
      --i;
      if (q[i] < hi[i]) {
        q[i] += 1;
        for (std::size_t j = i + 1; j < q.size(); ++j) q[j] = lo[j];
        break;
      }
      if (i == 0) return;
    }
  }
}

}  // namespace

HomReport validate_hom(const ModuleHom& f) {
  HomReport rep;
  const Poset& sp = f.source.poset();
  const Poset& tp = f.target.poset();
  if (sp.kind() != tp.kind() ||
      (sp.is_grid() && sp.dim() != tp.dim()) ||
      (!sp.is_grid() && !(sp == tp))) {
    rep.ok = false;
    rep.violation = HomViolation{{}, {}, "source and target posets are incompatible"};
    return rep;
  }
  for (const auto& [x, c] : f.components) {
    if (c.rows() != static_cast<std::size_t>(f.target.dim_at(x)) ||
        c.cols() != static_cast<std::size_t>(f.source.dim_at(x))) {
      rep.ok = false;
      rep.violation = HomViolation{x, x, "component has wrong shape"};
      return rep;
    }
  }
  auto check_arrow = [&](const Point& x, const Point& y) -> bool {
    const FieldMatrix lhs = matmul(f.component_at(y), f.source.structure_map(x, y));
    const FieldMatrix rhs = matmul(f.target.structure_map(x, y), f.component_at(x));
    if (lhs == rhs) return true;
    rep.ok = false;
    rep.violation = HomViolation{x, y, "naturality square does not commute"};
    return false;
  };
  if (sp.is_grid()) {
    // Only arrows with source inside either window can be non-vacuous.
    const auto [lo, hi] = hom_hull(f);
    bool good = true;
    for_each_in_box(lo, hi, [&](const Point& q) {
      if (!good) return;
      for (int i = 0; i < sp.dim() && good; ++i) {
        Point y = q;
        y[i] += 1;
        good = check_arrow(q, y);
      }
    });
  } else {
    for (const auto& [s, t] : sp.hasse_arrows())
      if (!check_arrow(sp.point(s), sp.point(t))) break;
  }
  return rep;
}

ModuleHom shift_hom(const PersModule& m, const Point& eps) {
  for (int e : eps)
    if (e < 0) throw NegativeShift("shift_hom: eps must be componentwise nonnegative");
  ModuleHom f{m, shift(m, eps), {}};
  const Poset& p = m.poset();
  for (int idx = 0; idx < p.size(); ++idx) {
    const Point x = p.point(idx);
    if (m.dim_at(x) == 0 || m.dim_at(add(x, eps)) == 0) continue;
    f.components.emplace(x, m.structure_map(x, add(x, eps)));
  }
  return f;
}

bool verify_interleaving(const InterleavingCertificate& cert, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (cert.epsilon < 0) return fail("epsilon is negative");
  const PersModule& m = cert.phi.source;
  const PersModule& n = cert.psi.source;
  if (!m.poset().is_grid() || !n.poset().is_grid())
    return fail("interleaving certificates require grid modules");
  if (m.poset().dim() != n.poset().dim()) return fail("grid dimensions differ");
  if (m.prime() != n.prime()) return fail("primes differ");
  const Point eps(m.poset().dim(), cert.epsilon);
  if (!(cert.phi.target == shift(n, eps))) return fail("phi does not land in N[eps]");
  if (!(cert.psi.target == shift(m, eps))) return fail("psi does not land in M[eps]");
  if (!validate_hom(cert.phi).ok) return fail("phi is not a homomorphism");
  if (!validate_hom(cert.psi).ok) return fail("psi is not a homomorphism");

  const Point eps2(m.poset().dim(), 2 * cert.epsilon);
  // psi[eps] . phi = sh_M^{2eps} over M's window.
  for (int idx = 0; idx < m.poset().size(); ++idx) {
    const Point x = m.poset().point(idx);
    const FieldMatrix lhs =
        matmul(cert.psi.component_at(add(x, eps)), cert.phi.component_at(x));
    if (!(lhs == m.structure_map(x, add(x, eps2))))
      return fail("psi[eps] . phi != sh_M^{2eps} at " + point_to_string(x));
  }
  // phi[eps] . psi = sh_N^{2eps} over N's window.
  for (int idx = 0; idx < n.poset().size(); ++idx) {
    const Point x = n.poset().point(idx);
    const FieldMatrix lhs =
        matmul(cert.phi.component_at(add(x, eps)), cert.psi.component_at(x));
    if (!(lhs == n.structure_map(x, add(x, eps2))))
      return fail("phi[eps] . psi != sh_N^{2eps} at " + point_to_string(x));
  }
  return true;
}

InterleavingCertificate canonical_shift_certificate(const PersModule& m, int delta) {
  if (delta < 0) throw NegativeShift("canonical certificate: delta must be >= 0");
  const Point dvec(m.poset().dim(), delta);
  const PersModule n = shift(m, dvec);
  InterleavingCertificate cert;
  cert.epsilon = delta;
  cert.phi = shift_hom(m, Point(m.poset().dim(), 2 * delta));
  cert.phi.target = shift(n, dvec);  // same module, read as N[delta]
  cert.psi = ModuleHom{n, shift(m, dvec), {}};
  for (int idx = 0; idx < n.poset().size(); ++idx) {
    const Point x = n.poset().point(idx);
    if (n.dim_at(x) > 0)
      cert.psi.components.emplace(x, FieldMatrix::identity(n.dim_at(x), n.prime()));
  }
  return cert;
}

}  // namespace jordanpers

#include "jordanpers/distances.hpp"

#include <algorithm>
#include <ostream>

namespace jordanpers {

namespace {

struct Box {
  Point lo, hi;

  int dim() const { return static_cast<int>(lo.size()); }
  long long count() const {
    long long c = 1;
    for (int i = 0; i < dim(); ++i) c *= (hi[i] - lo[i] + 1);
    return c;
  }
  bool contains(const Point& p) const {
    for (int i = 0; i < dim(); ++i)
      if (p[i] < lo[i] || p[i] > hi[i]) return false;
    return true;
  }
  long long index(const Point& p) const {
    long long idx = 0;
    for (int i = 0; i < dim(); ++i) idx = idx * (hi[i] - lo[i] + 1) + (p[i] - lo[i]);
    return idx;
  }
  Point point(long long idx) const {
    Point p(dim());
    for (int i = dim() - 1; i >= 0; --i) {
      const int w = hi[i] - lo[i] + 1;
      p[i] = lo[i] + static_cast<int>(idx % w);
      idx /= w;
    }
    return p;
  }
};

std::optional<Box> union_support(const RankInvariantTable& f,
                                 const RankInvariantTable& g) {
  auto bf = f.support_box();
  auto bg = g.support_box();
  if (!bf) return bg ? std::optional<Box>{Box{bg->first, bg->second}} : std::nullopt;
  if (!bg) return Box{bf->first, bf->second};
  Box u{bf->first, bf->second};
  for (int i = 0; i < u.dim(); ++i) {
    u.lo[i] = std::min(u.lo[i], bg->first[i]);
    u.hi[i] = std::max(u.hi[i], bg->second[i]);
  }
  return u;
}

// Dense value snapshot over all ordered pairs of box points; out-of-box
// comparable pairs read 0.
struct DenseTable {
  const Box* box;
  long long npts;
  std::vector<std::uint32_t> values;  // indexed a * npts + b

  DenseTable(const RankInvariantTable& t, const Box& b) : box(&b), npts(b.count()) {
    values.assign(static_cast<std::size_t>(npts * npts), 0);
    for (const auto& [pair, v] : t.entries()) {
      if (v == 0) continue;
      if (!b.contains(pair.first) || !b.contains(pair.second)) continue;
      values[static_cast<std::size_t>(b.index(pair.first) * npts + b.index(pair.second))] =
          static_cast<std::uint32_t>(v);
    }
  }

  std::uint32_t at(const Point& x, const Point& y) const {
    if (!box->contains(x) || !box->contains(y)) return 0;
    return values[static_cast<std::size_t>(box->index(x) * npts + box->index(y))];
  }
};

}  // namespace

ErosionResult erosion_distance(const RankInvariantTable& f,
                               const RankInvariantTable& g) {
  if (f.dim() != g.dim())
    throw DimensionMismatch("erosion_distance: table dimensions differ");
  const int d = f.dim();
  const auto hull = union_support(f, g);
  if (!hull) return {ExtNat::of(0), std::nullopt};

  int diam = 0;
  for (int i = 0; i < d; ++i) diam = std::max(diam, hull->hi[i] - hull->lo[i]);
  const int bound = diam + 1;

  Box padded = *hull;
  for (int i = 0; i < d; ++i) {
    padded.lo[i] -= bound;
    padded.hi[i] += bound;
  }
  const DenseTable df(f, padded), dg(g, padded);
  const long long npts = padded.count();

  // All comparable pairs inside the padded box.
  std::vector<std::pair<long long, long long>> pairs;
  for (long long a = 0; a < npts; ++a) {
    const Point x = padded.point(a);
    for (long long b = 0; b < npts; ++b) {
      if (leq_coords(x, padded.point(b))) pairs.push_back({a, b});
    }
  }

  std::optional<ErosionWitness> last_fail;
  for (int eps = 0; eps <= bound; ++eps) {
    const Point evec(d, eps);
    bool ok = true;
    for (const auto& [a, b] : pairs) {
      const Point x = padded.point(a);
      const Point y = padded.point(b);
      const Point xe = sub(x, evec);
      const Point ye = add(y, evec);
      if (df.at(xe, ye) > dg.at(x, y)) {
        last_fail = ErosionWitness{x, y, static_cast<std::uint64_t>(eps), false};
        ok = false;
        break;
      }
      if (dg.at(xe, ye) > df.at(x, y)) {
        last_fail = ErosionWitness{x, y, static_cast<std::uint64_t>(eps), true};
        ok = false;
        break;
      }
    }
    if (ok) return {ExtNat::of(static_cast<std::uint64_t>(eps)), last_fail};
  }
  return {ExtNat::infinity(), last_fail};
}

void Landscape::set(int k, const Point& x, std::uint64_t v) {
  entries_[{k, x}] = v;
}

std::uint64_t Landscape::value(int k, const Point& x) const {
  auto it = entries_.find({k, x});
  return it == entries_.end() ? 0 : it->second;
}

void Landscape::to_csv(std::ostream& os) const {
  os << "k";
  for (int i = 1; i <= dim_; ++i) os << ",x" << i;
  os << ",value\n";
  for (const auto& [kx, v] : entries_) {
    os << kx.first;
    for (int c : kx.second) os << ',' << c;
    os << ',' << v << '\n';
  }
}

namespace {

// Scans the shell ||h||_inf = r, h >= 0; true when every pair passes.
bool shell_ok(const RankInvariantTable& f, const Point& x, int k, int r) {
  const int d = f.dim();
  Point h(d, 0);
  for (;;) {
    int maxc = 0;
    for (int c : h) maxc = std::max(maxc, c);
    if (maxc == r) {
      if (f.value(sub(x, h), add(x, h)) < ExtNat::of(static_cast<std::uint64_t>(k)))
        return false;
    }
    int i = d - 1;
    while (i >= 0 && h[i] == r) {
      h[i] = 0;
      --i;
    }
    if (i < 0) return true;
    h[i] += 1;
  }
}

}  // namespace

Landscape landscape(const RankInvariantTable& f, int k_max) {
  if (k_max < 1) throw RangeError("landscape: k_max must be >= 1");
  Landscape l(f.dim(), k_max);
  const auto support = f.support_box();
  if (!support) return l;

  Box eval{support->first, support->second};
  int diam = 0;
  for (int i = 0; i < f.dim(); ++i) {
    diam = std::max(diam, eval.hi[i] - eval.lo[i]);
    eval.lo[i] -= 1;
    eval.hi[i] += 1;
  }
  const int cap = diam + 2;  // some shell must fail within the support reach

  for (long long idx = 0; idx < eval.count(); ++idx) {
    const Point x = eval.point(idx);
    for (int k = 1; k <= k_max; ++k) {
      int r = 0;
      while (r <= cap && shell_ok(f, x, k, r)) ++r;
      if (r > cap) throw Error("landscape: no failing shell within the support bound");
      l.set(k, x, static_cast<std::uint64_t>(r));
      if (r == 0) {
        // Monotone in k: all larger k vanish here too.
        for (int kk = k + 1; kk <= k_max; ++kk) l.set(kk, x, 0);
        break;
      }
    }
  }
  return l;
}

std::uint64_t landscape_sup_diff(const Landscape& a, const Landscape& b) {
  std::uint64_t sup = 0;
  auto absorb = [&](const Landscape& s, const Landscape& t) {
    for (const auto& [kx, v] : s.entries()) {
      const std::uint64_t w = t.value(kx.first, kx.second);
      sup = std::max(sup, v > w ? v - w : w - v);
    }
  };
  absorb(a, b);
  absorb(b, a);
  return sup;
}

std::uint64_t landscape_distance_at_S(const PersModule& m, const PersModule& n,
                                      const SliceSequence& s, int k_max) {
  const JordanModuleFamily fm(m, s), fn(n, s);
  if (k_max <= 0) {
    std::size_t dmax = 0;
    for (const auto& x : fm.eval_window()) dmax = std::max(dmax, fm.ambient_dim(x));
    for (const auto& x : fn.eval_window()) dmax = std::max(dmax, fn.ambient_dim(x));
    k_max = std::max<int>(1, static_cast<int>(dmax));
  }
  std::uint64_t best = 0;
  for (std::size_t i = 0; i < s.count(); ++i) {
    const Landscape lm = landscape(fm.rank_table(i), k_max);
    const Landscape ln = landscape(fn.rank_table(i), k_max);
    best = std::max(best, landscape_sup_diff(lm, ln));
  }
  return best;
}

std::vector<DegreeErosion> erosion_profile_at_S(const PersModule& m,
                                                const PersModule& n,
                                                const SliceSequence& s) {
  const auto tm = filtered_rank(m, s);
  const auto tn = filtered_rank(n, s);
  std::vector<DegreeErosion> profile;
  profile.reserve(tm.size());
  for (std::size_t i = 0; i < tm.size(); ++i)
    profile.push_back({i, erosion_distance(tm[i], tn[i])});
  return profile;
}

ExtNat erosion_distance_at_S(const PersModule& m, const PersModule& n,
                             const SliceSequence& s) {
  ExtNat best = ExtNat::of(0);
  for (const auto& de : erosion_profile_at_S(m, n, s)) best = std::max(best, de.result.value);
  return best;
}

StabilityReport check_stability(const PersModule& m, const PersModule& n,
                                const SliceSequence& s,
                                const InterleavingCertificate& cert) {
  std::string why;
  if (!verify_interleaving(cert, &why))
    throw InvalidCertificate("certificate does not verify: " + why);
  StabilityReport rep;
  rep.epsilon = static_cast<std::uint64_t>(cert.epsilon);
  rep.degree_erosions = erosion_profile_at_S(m, n, s);
  rep.d_e = ExtNat::of(0);
  for (const auto& de : rep.degree_erosions) rep.d_e = std::max(rep.d_e, de.result.value);
  rep.d_l = landscape_distance_at_S(m, n, s);
  rep.chain_ok = ExtNat::of(rep.d_l) <= rep.d_e && rep.d_e <= ExtNat::of(rep.epsilon);
  return rep;
}

}  // namespace jordanpers

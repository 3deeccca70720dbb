#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <vector>

#include "jordanpers/jordan.hpp"
#include "jordanpers/module.hpp"
#include "jordanpers/rank_table.hpp"
#include "jordanpers/slices.hpp"

namespace jordanpers {

/// A pair (x, y) witnessing that erosion by `epsilon` fails: the stated
/// eroded inequality is violated there (re-checkable against the tables).
struct ErosionWitness {
  Point x, y;
  std::uint64_t epsilon = 0;
  /// false: F(x-eps, y+eps) > G(x, y); true: the symmetric inequality.
  bool second_eroded = false;
};

struct ErosionResult {
  ExtNat value = ExtNat::of(0);
  /// Present whenever value > 0: a violation of the (value - 1) conditions.
  /// For an infinite value, a violation at the search bound.
  std::optional<ErosionWitness> witness;
};

/// Erosion distance between two rank functors: the smallest integer eps >= 0
/// with F(x-eps, y+eps) <= G(x,y) and G(x-eps, y+eps) <= F(x,y) for all
/// comparable pairs. Pairs are scanned over the support hull padded by the
/// search bound (the l-inf diameter of the union of supports plus one);
/// beyond that box both tables vanish on comparable pairs and every
/// constraint holds, so the scan is exhaustive. Returns infinity when no
/// eps within the bound works.
ErosionResult erosion_distance(const RankInvariantTable& f,
                               const RankInvariantTable& g);

/// Integer-grid persistence landscape of a rank functor. lambda(k, x) = v
/// means every h >= 0 with ||h||_inf < v satisfies F(x-h, x+h) >= k and some
/// h with ||h||_inf = v fails (0 when h = 0 already fails). Only h >= 0
/// constrains: for any other h the pair (x-h, x+h) is incomparable and reads
/// infinity. Values are zero outside the stored grid.
class Landscape {
 public:
  Landscape(int dim, int k_max) : dim_(dim), k_max_(k_max) {}

  int dim() const { return dim_; }
  int k_max() const { return k_max_; }

  void set(int k, const Point& x, std::uint64_t v);
  std::uint64_t value(int k, const Point& x) const;
  const std::map<std::pair<int, Point>, std::uint64_t>& entries() const {
    return entries_;
  }

  /// CSV rows "k,x_1,...,x_d,value".
  void to_csv(std::ostream& os) const;

 private:
  int dim_;
  int k_max_;
  std::map<std::pair<int, Point>, std::uint64_t> entries_;
};

Landscape landscape(const RankInvariantTable& f, int k_max);

/// Sup-norm distance between two landscapes, taken over the union of their
/// stored (k, x) entries (both vanish elsewhere).
std::uint64_t landscape_sup_diff(const Landscape& a, const Landscape& b);

/// max_i || lambda_{M^i_S} - lambda_{N^i_S} ||_inf over degrees 0..n-1.
/// k_max = 0 selects the default: the largest ambient restricted dimension
/// of either module.
std::uint64_t landscape_distance_at_S(const PersModule& m, const PersModule& n,
                                      const SliceSequence& s, int k_max = 0);

struct DegreeErosion {
  std::size_t degree = 0;
  ErosionResult result;
};

/// max_i d_E(rk^i_S(M), rk^i_S(N)) over degrees 0..n-1, with the per-degree
/// breakdown.
std::vector<DegreeErosion> erosion_profile_at_S(const PersModule& m,
                                                const PersModule& n,
                                                const SliceSequence& s);
ExtNat erosion_distance_at_S(const PersModule& m, const PersModule& n,
                             const SliceSequence& s);

struct StabilityReport {
  std::uint64_t d_l = 0;
  ExtNat d_e = ExtNat::of(0);
  std::uint64_t epsilon = 0;
  bool chain_ok = false;
  std::vector<DegreeErosion> degree_erosions;
};

/// Certifies the stability chain d_L <= d_E <= epsilon at desk scale: the
/// certificate is verified first (InvalidCertificate otherwise), epsilon is
/// an upper bound on the interleaving distance, and both distances are
/// computed and compared.
StabilityReport check_stability(const PersModule& m, const PersModule& n,
                                const SliceSequence& s,
                                const InterleavingCertificate& cert);

}  // namespace jordanpers

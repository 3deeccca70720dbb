#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jordanpers/field_matrix.hpp"
#include "jordanpers/poset.hpp"

namespace jordanpers {

/// Pointwise finite-dimensional persistence module: a dimension per stored
/// poset point and a GF(p) matrix per Hasse arrow. Grid modules are extended
/// trivially to all of Z^d: points outside the window have dimension 0 and
/// zero structure maps. Immutable after construction.
class PersModule {
 public:
  /// The empty module over the empty poset.
  PersModule() = default;
  PersModule(Poset poset, std::uint64_t prime, std::vector<int> dims,
             std::vector<FieldMatrix> arrow_maps);

  const Poset& poset() const { return poset_; }
  std::uint64_t prime() const { return prime_; }

  int dim_idx(int idx) const { return dims_[idx]; }
  /// Dimension at a point; 0 outside a grid window, UnknownElement for
  /// invalid zigzag/general points.
  int dim_at(const Point& x) const;
  int total_dim() const;
  const std::vector<int>& dims() const { return dims_; }

  const FieldMatrix& arrow_map(std::size_t arrow_idx) const { return maps_[arrow_idx]; }

  /// Composite structure map M_x -> M_y along a canonical Hasse path.
  /// Well-defined on validated modules; identity when x == y; the 0xd / dx0
  /// map when an endpoint lies outside a grid window. Throws NotComparable.
  FieldMatrix structure_map(const Point& x, const Point& y) const;

  bool operator==(const PersModule&) const = default;

 private:
  Poset poset_;
  std::uint64_t prime_ = kDefaultPrime;
  std::vector<int> dims_;
  std::vector<FieldMatrix> maps_;
};

/// One failed functor-law check: two Hasse in-routes into `y` whose
/// composites from the common lower bound `x` differ.
struct Violation {
  Point x, y;
  Point via_u, via_v;
  FieldMatrix composite_u, composite_v;
};

struct ValidationReport {
  bool ok = true;
  std::optional<Violation> violation;
  std::string describe() const;
};

/// Path-independence check. Grids check all unit squares (sufficient by
/// induction); zigzags are vacuously fine; general posets compare all
/// in-route composites over every common lower bound. Never throws; the
/// first disagreement is reported.
ValidationReport validate(const PersModule& m);

PersModule zero_module(const Poset& poset, std::uint64_t prime);
PersModule direct_sum(const PersModule& a, const PersModule& b);

/// eps-shift of a grid module: (M[eps])_x = M_{x+eps}; the window translates
/// by -eps. The stored data is unchanged, only the window moves.
PersModule shift(const PersModule& m, const Point& eps);

/// Interval module I_[i,j] on a zigzag: dimension 1 on {i..j}, identity
/// internal maps.
PersModule interval_module(const Poset& zigzag, int i, int j, std::uint64_t prime);

/// Conjugation by pointwise invertible matrices: arrow maps become
/// g_y * M_yx * g_x^{-1}. Points missing from g use the identity. The result
/// is isomorphic to m by construction.
PersModule conjugate(const PersModule& m, const std::map<Point, FieldMatrix>& g);

/// Random module with dims <= max_dim, deterministic in seed. Arrow maps are
/// drawn in topological order; at each point every in-arrow is solved
/// exactly against the constraints from the already-fixed maps, and if no
/// exact solution exists all in-arrows of that point are zeroed (biased but
/// always valid). Output always passes validate().
PersModule random_module(const Poset& poset, int max_dim, std::uint64_t seed,
                         std::uint64_t prime);

/// Homomorphism of persistence modules. Components are stored sparsely;
/// points without an entry carry the zero map of the appropriate shape.
/// Source and target may be grid modules over different windows (that is
/// how homs into shifted modules are expressed).
struct ModuleHom {
  PersModule source, target;
  std::map<Point, FieldMatrix> components;

  FieldMatrix component_at(const Point& x) const;
};

struct HomViolation {
  Point x, y;  // the arrow x -> y where naturality fails (or x alone for shape errors)
  std::string detail;
};

struct HomReport {
  bool ok = true;
  std::optional<HomViolation> violation;
  std::string describe() const;
};

/// Checks component shapes and all naturality squares f_y M_yx = N_yx f_x.
HomReport validate_hom(const ModuleHom& f);

/// The eps-shift homomorphism M -> M[eps] with components M_{x+eps,x}.
/// Throws NegativeShift unless eps >= 0 componentwise.
ModuleHom shift_hom(const PersModule& m, const Point& eps);

/// Diagonal eps-interleaving certificate: phi: M -> N[eps], psi: N -> M[eps].
struct InterleavingCertificate {
  int epsilon = 0;
  ModuleHom phi, psi;
};

/// Checks the certificate: shapes, naturality of both homs, and the two
/// composite equations psi[eps] phi = sh_M^{2eps}, phi[eps] psi = sh_N^{2eps},
/// pointwise over the relevant windows. Structural mismatches are reported
/// through `why`, not thrown.
bool verify_interleaving(const InterleavingCertificate& cert, std::string* why = nullptr);

/// Canonical certificate for (M, M[delta]): phi = the 2*delta shift of M read
/// as a map into (M[delta])[delta], psi = identity.
InterleavingCertificate canonical_shift_certificate(const PersModule& m, int delta);

}  // namespace jordanpers

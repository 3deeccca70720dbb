#include <doctest.h>

#include <random>

#include "builders.hpp"
#include "jordanpers/module.hpp"
#include "oracles.hpp"

using namespace jordanpers;

TEST_CASE("validate: worked grid example commutes") {
  CHECK(validate(builders::sec2_module(32749)).ok);
}

TEST_CASE("validate: a broken unit square is reported") {
  const Poset g = Poset::make_grid({1, 1});
  std::vector<int> dims(4, 1);
  std::vector<FieldMatrix> maps;
  for (const auto& [s, t] : g.hasse_arrows()) {
    FieldMatrix f(1, 1, 7);
    // One path composes to 0, the other to 1.
    const bool top = g.point(s) == Point{0, 1} && g.point(t) == Point{1, 1};
    f.set(0, 0, top ? 0 : 1);
    maps.push_back(std::move(f));
  }
  const PersModule bad(g, 7, dims, maps);
  const auto rep = validate(bad);
  REQUIRE(!rep.ok);
  CHECK(rep.violation->x == Point{0, 0});
  CHECK(rep.violation->y == Point{1, 1});
  CHECK(!(rep.violation->composite_u == rep.violation->composite_v));
}

TEST_CASE("validate: zigzag modules are vacuously fine") {
  std::mt19937_64 gen(5);
  for (int t = 0; t < 20; ++t) {
    const auto z = Poset::make_zigzag(6, builders::orientation_from_mask(6, gen() % 32));
    CHECK(validate(random_module(z, 3, gen(), 32749)).ok);
  }
}

TEST_CASE("validate: general posets via in-route composites") {
  const auto diamond = Poset::make_general(
      {"bot", "l", "r", "top"}, {{"bot", "l"}, {"bot", "r"}, {"l", "top"}, {"r", "top"}});
  std::mt19937_64 gen(17);
  for (int t = 0; t < 50; ++t)
    CHECK(validate(random_module(diamond, 3, gen(), 32749)).ok);

  // A hand-broken diamond: all spaces K, three maps 1, one map 0.
  std::vector<int> dims(4, 1);
  std::vector<FieldMatrix> maps;
  for (std::size_t k = 0; k < diamond.hasse_arrows().size(); ++k) {
    FieldMatrix f(1, 1, 7);
    f.set(0, 0, k == 3 ? 0 : 1);
    maps.push_back(std::move(f));
  }
  CHECK(!validate(PersModule(diamond, 7, dims, maps)).ok);
}

TEST_CASE("structure_map") {
  const auto m = builders::sec2_module(32749);
  CHECK(m.structure_map({1, 1}, {1, 1}) == FieldMatrix::identity(2, 32749));

  // Both staircase paths around the right square give the same composite.
  const auto right_up = matmul(m.structure_map({2, 0}, {2, 1}), m.structure_map({1, 0}, {2, 0}));
  const auto up_right = matmul(m.structure_map({1, 1}, {2, 1}), m.structure_map({1, 0}, {1, 1}));
  const auto composite = m.structure_map({1, 0}, {2, 1});
  CHECK(right_up == up_right);
  CHECK(composite == right_up);
  CHECK(composite(0, 0) == 1);

  // Out-of-window endpoints give zero-sized maps.
  CHECK(m.structure_map({-1, 0}, {1, 0}).cols() == 0);
  CHECK(m.structure_map({1, 0}, {5, 5}).rows() == 0);
  CHECK_THROWS_AS(m.structure_map({2, 1}, {0, 0}), NotComparable);
}

TEST_CASE("structure_map: zigzag composite equals the product of edge maps") {
  // 1->2->3<-4->5->6<-7 with random maps; the composite 4 -> 6 is E*D.
  const auto z = Poset::make_zigzag(7, "FFBFFB");
  std::mt19937_64 gen(23);
  const auto m = random_module(z, 3, gen(), 32749);
  const auto lut = [&](int s, int t) {
    const auto& arrows = z.hasse_arrows();
    for (std::size_t k = 0; k < arrows.size(); ++k)
      if (arrows[k] == std::pair{s, t}) return m.arrow_map(k);
    throw std::runtime_error("no arrow");
  };
  const auto d = lut(3, 4);  // 4 -> 5 (0-based)
  const auto e = lut(4, 5);  // 5 -> 6
  CHECK(m.structure_map({4}, {6}) == matmul(e, d));
}

TEST_CASE("direct_sum") {
  const auto m = builders::sec2_module(32749);
  const auto z = zero_module(m.poset(), 32749);
  CHECK(direct_sum(m, z) == m);

  const auto a3 = Poset::make_zigzag(3, "FF");
  const auto s = direct_sum(interval_module(a3, 1, 2, 32749), interval_module(a3, 2, 3, 32749));
  CHECK(s.dims() == std::vector<int>{1, 2, 1});

  std::mt19937_64 gen(9);
  for (int t = 0; t < 20; ++t) {
    const auto g = Poset::make_grid({2, 2});
    const auto a = random_module(g, 3, gen(), 32749);
    const auto b = random_module(g, 3, gen(), 32749);
    const auto d = direct_sum(a, b);
    for (int i = 0; i < g.size(); ++i)
      CHECK(d.dim_idx(i) == a.dim_idx(i) + b.dim_idx(i));
    CHECK(validate(d).ok);
  }
}

TEST_CASE("shift") {
  const auto m = builders::sec2_module(32749);
  CHECK(shift(m, {0, 0}) == m);
  CHECK(shift(shift(m, {1, 0}), {0, 1}) == shift(m, {1, 1}));
  // (M[(1,0)])_{(0,0)} = M_{(1,0)}.
  CHECK(shift(m, {1, 0}).dim_at({0, 0}) == m.dim_at({1, 0}));
  CHECK(shift(m, {1, 0}).dim_at({-1, 0}) == m.dim_at({0, 0}));
}

TEST_CASE("shift_hom") {
  const auto m = builders::sec2_module(32749);
  const auto id = shift_hom(m, {0, 0});
  CHECK(validate_hom(id).ok);
  for (const auto& [x, c] : id.components) CHECK(c == FieldMatrix::identity(m.dim_at(x), 32749));

  // Composite of two shifts has the 2*eps structure maps as components.
  const Point eps{1, 0};
  const auto f = shift_hom(m, eps);
  CHECK(validate_hom(f).ok);
  const auto g = shift_hom(f.target, eps);
  for (int idx = 0; idx < m.poset().size(); ++idx) {
    const Point x = m.poset().point(idx);
    const auto composite = matmul(g.component_at(add(x, eps)), f.component_at(x));
    CHECK(composite == m.structure_map(x, add(x, add(eps, eps))));
  }

  // From the zero space at (0,0): the component is the 1x0 map into K.
  const auto c00 = f.component_at({0, 0});
  CHECK(c00.rows() == 1);
  CHECK(c00.cols() == 0);

  CHECK_THROWS_AS(shift_hom(m, {-1, 0}), NegativeShift);
}

TEST_CASE("interval_module") {
  const auto z = Poset::make_zigzag(5, "FBFB");
  const auto single = interval_module(z, 3, 3, 32749);
  CHECK(single.dims() == std::vector<int>{0, 0, 1, 0, 0});
  const auto full = interval_module(z, 1, 5, 32749);
  CHECK(full.dims() == std::vector<int>{1, 1, 1, 1, 1});
  for (std::size_t k = 0; k < z.hasse_arrows().size(); ++k)
    CHECK(full.arrow_map(k)(0, 0) == 1);
  CHECK_THROWS_AS(interval_module(z, 0, 3, 32749), RangeError);
  CHECK_THROWS_AS(interval_module(z, 3, 6, 32749), RangeError);
}

TEST_CASE("conjugate") {
  const auto m = builders::sec2_module(32749);
  CHECK(conjugate(m, {}) == m);

  std::mt19937_64 gen(100);
  std::map<Point, FieldMatrix> g, ginv;
  for (int idx = 0; idx < m.poset().size(); ++idx) {
    const Point x = m.poset().point(idx);
    if (m.dim_at(x) == 0) continue;
    g[x] = random_invertible(m.dim_at(x), gen(), 32749);
    ginv[x] = inverse(g.at(x));
  }
  const auto twisted = conjugate(m, g);
  CHECK(validate(twisted).ok);
  CHECK(conjugate(twisted, ginv) == m);

  std::map<Point, FieldMatrix> bad{{Point{1, 1}, FieldMatrix(1, 1, 32749)}};
  CHECK_THROWS_AS(conjugate(m, bad), ShapeMismatch);
  std::map<Point, FieldMatrix> singular{{Point{1, 1}, FieldMatrix(2, 2, 32749)}};
  CHECK_THROWS_AS(conjugate(m, singular), SingularMatrix);
}

TEST_CASE("random_module") {
  const auto g = Poset::make_grid({2, 2});
  CHECK(random_module(g, 0, 1, 32749) == zero_module(g, 32749));
  CHECK(random_module(g, 3, 42, 32749) == random_module(g, 3, 42, 32749));
  CHECK(!(random_module(g, 3, 42, 32749) == random_module(g, 3, 43, 32749)));
}

TEST_CASE("random_module: 500 draws all validate") {
  std::mt19937_64 gen(12345);
  const std::vector<Poset> grids = {Poset::make_grid({1, 1}), Poset::make_grid({2, 1}),
                                    Poset::make_grid({2, 2}), Poset::make_grid({3, 2}),
                                    Poset::make_grid({3, 3})};
  int draws = 0;
  for (int t = 0; t < 60; ++t)
    for (const auto& g : grids) {
      CHECK(validate(random_module(g, 3, gen(), 32749)).ok);
      ++draws;
    }
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + static_cast<int>(gen() % 7);
    const auto z = Poset::make_zigzag(
        n, builders::orientation_from_mask(n, static_cast<int>(gen())));
    CHECK(validate(random_module(z, 4, gen(), 32749)).ok);
    ++draws;
  }
  CHECK(draws == 500);
}

TEST_CASE("structure_map composes along sampled chains") {
  std::mt19937_64 gen(77);
  const auto g = Poset::make_grid({3, 2});
  for (int t = 0; t < 10; ++t) {
    const auto m = random_module(g, 3, gen(), 32749);
    for (int a = 0; a < g.size(); ++a)
      for (int b = 0; b < g.size(); ++b) {
        const Point x = g.point(a), y = g.point(b);
        if (!leq_coords(x, y)) continue;
        for (int c = 0; c < g.size(); ++c) {
          const Point z = g.point(c);
          if (!leq_coords(y, z)) continue;
          CHECK(m.structure_map(x, z) ==
                matmul(m.structure_map(y, z), m.structure_map(x, y)));
        }
      }
  }
}

TEST_CASE("verify_interleaving: identity certificate") {
  const auto m = builders::sec2_module(32749);
  InterleavingCertificate cert = canonical_shift_certificate(m, 0);
  CHECK(verify_interleaving(cert));
}

TEST_CASE("verify_interleaving: canonical shift certificates") {
  std::mt19937_64 gen(2718);
  for (int delta = 0; delta <= 2; ++delta)
    for (int t = 0; t < 10; ++t) {
      const auto m = random_module(Poset::make_grid({2, 2}), 3, gen(), 32749);
      std::string why;
      const bool ok = verify_interleaving(canonical_shift_certificate(m, delta), &why);
      INFO(why);
      CHECK(ok);
    }
}

TEST_CASE("verify_interleaving: interval modules at the right epsilon") {
  // I_[0,3] and I_[0,5] on the 1-D grid [0,5] are 2-interleaved with the
  // evident maps but not 1-interleaved for any choice of components
  // (exhaustive enumeration of all component values over GF(3)).
  const std::uint64_t p = 3;
  const auto m = builders::grid_interval_1d(5, 0, 3, p);
  const auto n = builders::grid_interval_1d(5, 0, 5, p);

  {
    InterleavingCertificate cert;
    cert.epsilon = 2;
    cert.phi = ModuleHom{m, shift(n, {2}), {}};
    for (int x = 0; x <= 3; ++x)
      cert.phi.components.emplace(Point{x}, FieldMatrix::from_rows({{1}}, 1, p));
    cert.psi = ModuleHom{n, shift(m, {2}), {}};
    for (int x = 0; x <= 1; ++x)
      cert.psi.components.emplace(Point{x}, FieldMatrix::from_rows({{1}}, 1, p));
    std::string why;
    const bool ok = verify_interleaving(cert, &why);
    INFO(why);
    CHECK(ok);
  }

  // epsilon = 1: phi has support [0,3], psi has support [0,2]; run through
  // every assignment of the 7 scalars.
  int found = 0;
  for (int phi_mask = 0; phi_mask < 81; ++phi_mask)
    for (int psi_mask = 0; psi_mask < 27; ++psi_mask) {
      InterleavingCertificate cert;
      cert.epsilon = 1;
      cert.phi = ModuleHom{m, shift(n, {1}), {}};
      int pm = phi_mask;
      for (int x = 0; x <= 3; ++x, pm /= 3)
        cert.phi.components.emplace(Point{x},
                                    FieldMatrix::from_rows({{pm % 3}}, 1, p));
      cert.psi = ModuleHom{n, shift(m, {1}), {}};
      int qm = psi_mask;
      for (int x = 0; x <= 2; ++x, qm /= 3)
        cert.psi.components.emplace(Point{x},
                                    FieldMatrix::from_rows({{qm % 3}}, 1, p));
      if (verify_interleaving(cert)) ++found;
    }
  CHECK(found == 0);
}

TEST_CASE("verify_interleaving: rejects wrong targets and bad naturality") {
  const auto m = builders::sec2_module(32749);
  auto cert = canonical_shift_certificate(m, 1);
  cert.epsilon = 2;  // now phi/psi land in the wrong shifts
  std::string why;
  CHECK(!verify_interleaving(cert, &why));
  CHECK(!why.empty());
}

#include <doctest.h>

#include <random>

#include "builders.hpp"
#include "jordanpers/jordan.hpp"
#include "jordanpers/multirank.hpp"

using namespace jordanpers;

namespace {

SliceSequence singleton_slices(int n) {
  std::vector<std::vector<Point>> s;
  for (int i = 1; i <= n; ++i) s.push_back({Point{i}});
  return SliceSequence(std::move(s));
}

}  // namespace

TEST_CASE("nilpotent_operator: worked grid example") {
  const auto m = builders::sec2_module(32749);
  const auto op = nilpotent_operator(m, builders::sec2_slices());
  CHECK(op.slice_dims == std::vector<int>{2, 3, 1});
  CHECK(op.total_dim() == 6);
  REQUIRE(op.subdiag_blocks.size() == 2);
  CHECK(op.subdiag_blocks[0] ==
        FieldMatrix::from_rows({{0, 1}, {1, 0}, {0, 1}}, 2, 32749));
  CHECK(op.subdiag_blocks[1] == FieldMatrix::from_rows({{1, 1, 1}}, 3, 32749));

  // Assembling the subdiagonal blocks by hand reproduces the operator.
  const FieldMatrix z22(2, 2, 32749), z23(2, 3, 32749), z21(2, 1, 32749);
  const FieldMatrix z33(3, 3, 32749), z31(3, 1, 32749);
  const FieldMatrix z12(1, 2, 32749), z11(1, 1, 32749);
  const auto expected = block_assemble({{z22, z23, z21},
                                        {op.subdiag_blocks[0], z33, z31},
                                        {z12, op.subdiag_blocks[1], z11}});
  CHECK(op.assembled == expected);

  // Nilpotency: T^3 = 0.
  const auto t2 = matmul(op.assembled, op.assembled);
  CHECK(matmul(t2, op.assembled).is_zero());

  CHECK(jordan_type(m, builders::sec2_slices()).counts ==
        std::vector<std::int64_t>{1, 1, 1});
}

TEST_CASE("nilpotent_operator: degenerate cases") {
  const auto g = Poset::make_grid({1, 1});
  const auto z = zero_module(g, 32749);
  const SliceSequence s({{{0, 0}}, {{1, 1}}});
  CHECK(nilpotent_operator(z, s).assembled.rows() == 0);
  CHECK(jordan_type(z, s).counts == std::vector<std::int64_t>{0, 0});

  // Incomparable consecutive slices force the zero operator of size D.
  std::mt19937_64 gen(4);
  const auto m = random_module(g, 3, gen(), 32749);
  const SliceSequence incomparable({{{1, 0}}, {{0, 1}}});
  const auto op = nilpotent_operator(m, incomparable);
  CHECK(op.assembled.rows() == static_cast<std::size_t>(m.dim_at({1, 0}) + m.dim_at({0, 1})));
  CHECK(op.assembled.is_zero());

  CHECK_THROWS_AS(nilpotent_operator(m, SliceSequence({{{0, 0}}})), RangeError);
}

TEST_CASE("jordan_type: planted bars on the equioriented A_5") {
  // Singleton slices: a_i counts bars of support length i.
  const auto a5 = Poset::make_zigzag(5, "FFFF");
  const auto m = interval_sum_module(a5, {{1, 3}, {2, 2}}, 32749);
  const auto jt = jordan_type(m, singleton_slices(5));
  CHECK(jt.counts == std::vector<std::int64_t>{1, 0, 1, 0, 0});
}

TEST_CASE("an_decomposition_counts agrees with jordan_type") {
  const auto m = builders::sec2_module(32749);
  CHECK(an_decomposition_counts(m, builders::sec2_slices()) ==
        std::vector<std::int64_t>{1, 1, 1});

  // All-zero blocks decompose into D one-dimensional pieces.
  const auto g = Poset::make_grid({1, 1});
  std::mt19937_64 gen(8);
  const auto r = random_module(g, 3, gen(), 32749);
  const SliceSequence incomparable({{{1, 0}}, {{0, 1}}});
  const auto counts = an_decomposition_counts(r, incomparable);
  CHECK(counts[0] == r.dim_at({1, 0}) + r.dim_at({0, 1}));
  CHECK(counts[1] == 0);

  // Cross-oracle agreement on random modules and slices.
  for (int t = 0; t < 50; ++t) {
    const auto grid = Poset::make_grid({2, 2});
    const auto mod = random_module(grid, 3, gen(), 32749);
    const auto s = norm_slices(grid);
    CHECK(an_decomposition_counts(mod, s) == jordan_type(mod, s).counts);
  }
}

TEST_CASE("jordan_module_family: extreme degrees and the finer-than-rank pair") {
  const auto x = builders::finer_pair(false, 32749);
  const auto y = builders::finer_pair(true, 32749);
  const auto s = norm_slices(x.poset());
  const auto fx = jordan_module_family(x, s);
  const auto fy = jordan_module_family(y, s);

  // Degree 0 is the full ambient space, degree n is zero, everywhere.
  for (const auto& pt : fx.eval_window()) {
    CHECK(fx.level_dim(0, pt) == fx.ambient_dim(pt));
    CHECK(fx.level_basis(0, pt) ==
          FieldMatrix::identity(fx.ambient_dim(pt), 32749));
    CHECK(fx.level_dim(s.count(), pt) == 0);
  }

  // rk^1 at the origin separates X from Y.
  CHECK(fx.level_dim(1, {0, 0}) == 1);
  CHECK(fy.level_dim(1, {0, 0}) == 2);
  CHECK(fx.rank_table(1).value({0, 0}, {0, 0}) == ExtNat::of(1));
  CHECK(fy.rank_table(1).value({0, 0}, {0, 0}) == ExtNat::of(2));

  // ... while the classical rank invariants coincide.
  CHECK(rank_invariant(x).same_values(rank_invariant(y)));
}

TEST_CASE("rank_invariant basics") {
  const auto g = Poset::make_grid({3});
  CHECK(rank_invariant(zero_module(g, 32749)).support_box() == std::nullopt);

  const auto i03 = builders::grid_interval_1d(3, 0, 3, 32749);
  const auto table = rank_invariant(i03);
  for (int x = 0; x <= 3; ++x)
    for (int y = x; y <= 3; ++y)
      CHECK(table.value({x}, {y}) == ExtNat::of(1));
  CHECK(table.value({-1}, {2}) == ExtNat::of(0));
  CHECK(table.value({1}, {0}) == ExtNat::infinity());
}

TEST_CASE("filtered_rank: degree-0 sum formula and diagonal identities") {
  std::mt19937_64 gen(99);
  const auto g = Poset::make_grid({2, 1});
  const auto s = norm_slices(g);
  for (int t = 0; t < 10; ++t) {
    const auto m = random_module(g, 2, gen(), 32749);
    const auto tables = filtered_rank(m, s);
    REQUIRE(tables.size() == s.count());
    const auto fam = jordan_module_family(m, s);
    const auto window = fam.eval_window();

    for (const auto& x : window)
      for (const auto& y : window) {
        if (!leq_coords(x, y)) continue;
        // Degree 0 equals the plain sum of structure-map ranks.
        std::uint64_t sum = 0;
        for (const auto& slice : s.all())
          for (const auto& z : slice)
            sum += rank(m.structure_map(add(x, z), add(y, z)));
        CHECK(tables[0].value(x, y) == ExtNat::of(sum));
        // The filtration is monotone in the degree.
        for (std::size_t i = 0; i + 1 < tables.size(); ++i)
          CHECK(tables[i + 1].value(x, y) <= tables[i].value(x, y));
      }

    for (const auto& x : window) {
      const auto op = nilpotent_operator(shift(m, x), s);
      // Degree-1 diagonal: the sum of the subdiagonal block ranks.
      std::uint64_t blocks = 0;
      for (const auto& b : op.subdiag_blocks) blocks += rank(b);
      CHECK(tables[1].value(x, x) == ExtNat::of(blocks));
      // Degree-i diagonal: rank of T^i.
      FieldMatrix pow = FieldMatrix::identity(op.assembled.rows(), 32749);
      for (std::size_t i = 0; i < tables.size(); ++i) {
        CHECK(tables[i].value(x, x) == ExtNat::of(rank(pow)));
        pow = matmul(op.assembled, pow);
      }
    }
  }
}

TEST_CASE("jordan type from the filtered rank diagonal") {
  std::mt19937_64 gen(300);
  const auto g = Poset::make_grid({2, 1});
  const auto s = norm_slices(g);
  const std::size_t n = s.count();
  for (int t = 0; t < 5; ++t) {
    const auto m = random_module(g, 2, gen(), 32749);
    const auto tables = filtered_rank(m, s);
    const auto fam = jordan_module_family(m, s);
    for (const auto& x : fam.eval_window()) {
      std::vector<std::int64_t> r(n + 2, 0);
      r[0] = static_cast<std::int64_t>(fam.ambient_dim(x));
      for (std::size_t i = 1; i < n; ++i) r[i] = tables[i].value(x, x).finite();
      r[n] = 0;  // nilpotency
      const auto jt = jordan_type(shift(m, x), s);
      for (std::size_t i = 1; i <= n; ++i)
        CHECK(jt.counts[i - 1] == r[i + 1] + r[i - 1] - 2 * r[i]);
    }
  }
}

TEST_CASE("jordan type laws: additivity, isomorphism invariance, conservation") {
  std::mt19937_64 gen(1234);
  const auto g = Poset::make_grid({2, 2});
  const auto s = norm_slices(g);
  for (int t = 0; t < 25; ++t) {
    const auto a = random_module(g, 2, gen(), 32749);
    const auto b = random_module(g, 2, gen(), 32749);
    const auto ja = jordan_type(a, s);
    const auto jb = jordan_type(b, s);
    const auto jsum = jordan_type(direct_sum(a, b), s);
    for (std::size_t i = 0; i < ja.counts.size(); ++i)
      CHECK(jsum.counts[i] == ja.counts[i] + jb.counts[i]);

    CHECK(jordan_type(random_conjugation(a, gen()), s) == ja);

    std::int64_t restricted = 0;
    for (const auto& slice : s.all())
      for (const auto& z : slice) restricted += a.dim_at(z);
    CHECK(ja.total_dim() == restricted);
  }
}

TEST_CASE("rank tables are monotone as functors") {
  std::mt19937_64 gen(31);
  const auto g = Poset::make_grid({2, 2});
  const auto s = norm_slices(g);
  for (int t = 0; t < 5; ++t) {
    const auto m = random_module(g, 2, gen(), 32749);
    const auto tables = filtered_rank(m, s);
    const auto classical = rank_invariant(m);
    auto check_monotone = [&](const RankInvariantTable& table) {
      const auto& entries = table.entries();
      for (const auto& [pq, v] : entries) {
        // Shrink the pair inward by one step in each coordinate.
        for (int d = 0; d < table.dim(); ++d) {
          Point x2 = pq.first, y2 = pq.second;
          x2[d] += 1;
          if (leq_coords(x2, pq.second))
            CHECK(ExtNat::of(v) <= table.value(x2, pq.second));
          y2[d] -= 1;
          if (leq_coords(pq.first, y2))
            CHECK(ExtNat::of(v) <= table.value(pq.first, y2));
        }
      }
    };
    check_monotone(classical);
    for (const auto& table : tables) check_monotone(table);
  }
}

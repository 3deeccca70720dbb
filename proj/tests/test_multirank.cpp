#include <doctest.h>

#include <random>

#include "builders.hpp"
#include "jordanpers/jordan.hpp"
#include "jordanpers/multirank.hpp"

using namespace jordanpers;

TEST_CASE("multirank basics") {
  const auto a4 = Poset::make_zigzag(4, "FFF");
  const auto full = interval_module(a4, 1, 4, 32749);
  CHECK(multirank(full, {{1}}, {{4}}) == 1);
  CHECK(multirank(zero_module(a4, 32749), {{1}}, {{4}}) == 0);
  // The strict block formula: no x < x contributions.
  CHECK(multirank(full, {{2}}, {{2}}) == 0);
  CHECK_THROWS_AS(multirank(full, {{0}}, {{4}}), UnknownElement);
}

TEST_CASE("multirank: the n = 7 worked example block matrix") {
  // 1->2->3<-4->5->6<-7 with random maps A..F.
  const auto z = Poset::make_zigzag(7, "FFBFFB");
  std::mt19937_64 gen(61);
  const auto m = random_module(z, 3, gen(), 32749);

  const auto ba = m.structure_map({1}, {3});
  const auto c = m.structure_map({4}, {3});
  const auto ed = m.structure_map({4}, {6});
  const auto f = m.structure_map({7}, {6});
  const std::uint64_t p = m.prime();
  const auto stated = block_assemble(
      {{ba, c, FieldMatrix(ba.rows(), f.cols(), p)},
       {FieldMatrix(ed.rows(), ba.cols(), p), ed, f}});
  CHECK(multirank(m, {{1}, {4}, {7}}, {{3}, {6}}) == rank(stated));
  CHECK(multirank(m, {{4}}, {{6}}) == rank(ed));

  const auto r = R_vector(m);
  CHECK(r.at(1, 7) == rank(stated));
  CHECK(r.at(4, 6) == rank(ed));
}

TEST_CASE("R_vector: the n = 4 worked example triangle") {
  // 1->2<-3->4 with maps A: M1->M2, B: M3->M2, C: M3->M4.
  const auto z = Poset::make_zigzag(4, "FBF");
  std::mt19937_64 gen(62);
  const auto m = random_module(z, 3, gen(), 32749);
  const auto a = m.structure_map({1}, {2});
  const auto b = m.structure_map({3}, {2});
  const auto c = m.structure_map({3}, {4});
  const std::uint64_t p = m.prime();

  const auto r = R_vector(m);
  CHECK(r.at(1, 1) == static_cast<std::uint64_t>(m.dim_at({1})));
  CHECK(r.at(2, 2) == static_cast<std::uint64_t>(m.dim_at({2})));
  CHECK(r.at(3, 3) == static_cast<std::uint64_t>(m.dim_at({3})));
  CHECK(r.at(4, 4) == static_cast<std::uint64_t>(m.dim_at({4})));
  CHECK(r.at(1, 2) == rank(a));
  CHECK(r.at(2, 3) == rank(b));
  CHECK(r.at(3, 4) == rank(c));
  CHECK(r.at(1, 3) == rank(block_assemble({{a, b}})));
  CHECK(r.at(2, 4) == rank(block_assemble({{b}, {c}})));
  CHECK(r.at(1, 4) == rank(block_assemble({{a, b, FieldMatrix(a.rows(), c.cols(), p)},
                                           {FieldMatrix(c.rows(), a.cols(), p), FieldMatrix(c.rows(), b.cols(), p), c}})));

  // flatten() follows the lex pair order.
  const auto flat = r.flatten();
  const auto order = zigzag_pair_order(4);
  REQUIRE(flat.size() == order.size());
  for (std::size_t k = 0; k < order.size(); ++k)
    CHECK(flat[k] == r.at(order[k].first, order[k].second));
}

TEST_CASE("R_vector: interval modules give basis vectors") {
  for (int n = 2; n <= 5; ++n)
    for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
      const auto z = Poset::make_zigzag(n, builders::orientation_from_mask(n, mask));
      for (int i = 1; i <= n; ++i) {
        const auto r = R_vector(interval_module(z, i, i, 32749));
        for (const auto& [ij, v] : r.values)
          CHECK(v == (ij == std::pair{i, i} ? 1u : 0u));
      }
    }
}

TEST_CASE("R_vector additivity under direct sums") {
  std::mt19937_64 gen(63);
  for (int t = 0; t < 100; ++t) {
    const int n = 2 + static_cast<int>(gen() % 6);
    const auto z = Poset::make_zigzag(
        n, builders::orientation_from_mask(n, static_cast<int>(gen())));
    const auto a = random_module(z, 3, gen(), 32749);
    const auto b = random_module(z, 3, gen(), 32749);
    const auto ra = R_vector(a), rb = R_vector(b), rs = R_vector(direct_sum(a, b));
    for (const auto& [ij, v] : rs.values)
      CHECK(v == ra.at(ij.first, ij.second) + rb.at(ij.first, ij.second));
  }
}

TEST_CASE("interval_R_matrix: small cases") {
  CHECK(interval_R_matrix(Poset::make_zigzag(1, "")).rows() == 1);
  CHECK(determinant(interval_R_matrix(Poset::make_zigzag(1, ""))) == 1);

  // Equioriented n=2, pair order (1,1),(1,2),(2,2): columns are
  // R(I_11)=(1,0,0), R(I_12)=(1,1,1), R(I_22)=(0,0,1).
  const auto a = interval_R_matrix(Poset::make_zigzag(2, "F"));
  const IntMatrix expected = [] {
    IntMatrix e(3, 3);
    e.at(0, 0) = 1;
    e.at(0, 1) = 1;
    e.at(1, 1) = 1;
    e.at(2, 1) = 1;
    e.at(2, 2) = 1;
    return e;
  }();
  CHECK(a == expected);
  const auto det = determinant(a);
  CHECK((det == 1 || det == -1));
}

TEST_CASE("interval_R_matrix: unimodular for every orientation up to n = 6") {
  for (int n = 1; n <= 6; ++n)
    for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
      const auto z = Poset::make_zigzag(n, builders::orientation_from_mask(n, mask));
      const auto det = determinant(interval_R_matrix(z));
      CHECK((det == 1 || det == -1));
    }
}

TEST_CASE("barcode_from_R") {
  const auto z6 = Poset::make_zigzag(6, "FFFFF");
  const auto single = barcode_from_R(interval_module(z6, 2, 5, 32749));
  REQUIRE(single.multiplicities.size() == 1);
  CHECK(single.multiplicities.at({2, 5}) == 1);

  CHECK(barcode_from_R(zero_module(z6, 32749)).multiplicities.empty());

  // Planted bars, then conjugated: recovered exactly.
  std::mt19937_64 gen(64);
  for (int t = 0; t < 30; ++t) {
    const int n = 2 + static_cast<int>(gen() % 7);
    const auto z = Poset::make_zigzag(
        n, builders::orientation_from_mask(n, static_cast<int>(gen())));
    const auto bars = random_bars(n, 1 + gen() % 5, gen());
    Barcode expected;
    for (const auto& bar : bars) expected.multiplicities[bar] += 1;
    const auto m = random_conjugation(interval_sum_module(z, bars, 32749), gen());
    CHECK(barcode_from_R(m) == expected);
  }
}

TEST_CASE("is_isomorphic") {
  const auto a3 = Poset::make_zigzag(3, "FF");
  std::mt19937_64 gen(65);
  const auto m = random_module(a3, 3, gen(), 32749);
  CHECK(is_isomorphic(m, random_conjugation(m, gen())));
  CHECK(!is_isomorphic(interval_module(a3, 1, 2, 32749), interval_module(a3, 2, 3, 32749)));
  CHECK_THROWS_AS(
      is_isomorphic(m, random_module(Poset::make_zigzag(3, "FB"), 2, 1, 32749)),
      PosetMismatch);

  // The finer-than-rank pair, read as zigzag modules: distinguished by the
  // (1,3) multirank even though the grid rank invariants agree.
  const auto x = builders::finer_pair_zigzag(false, 32749);
  const auto y = builders::finer_pair_zigzag(true, 32749);
  CHECK(!is_isomorphic(x, y));
  CHECK(R_vector(x).at(1, 3) == 1);
  CHECK(R_vector(y).at(1, 3) == 2);
  CHECK(multirank(x, {{2}}, {{1}, {3}}) == 1);
  CHECK(multirank(y, {{2}}, {{1}, {3}}) == 2);
}

TEST_CASE("diagonal consistency of R") {
  std::mt19937_64 gen(66);
  for (int t = 0; t < 20; ++t) {
    const int n = 2 + static_cast<int>(gen() % 6);
    const auto z = Poset::make_zigzag(
        n, builders::orientation_from_mask(n, static_cast<int>(gen())));
    const auto m = random_module(z, 4, gen(), 32749);
    const auto r = R_vector(m);
    for (int i = 1; i <= n; ++i)
      CHECK(r.at(i, i) == static_cast<std::uint64_t>(m.dim_at({i})));
  }
}

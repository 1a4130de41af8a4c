#include <doctest.h>

#include <random>

#include "nilmult/abelian/smith.hpp"
#include "nilmult/engine/finite_group.hpp"
#include "nilmult/errors.hpp"
#include "nilmult/simplicial/chain_complex.hpp"
#include "nilmult/simplicial/directed_system.hpp"
#include "nilmult/simplicial/kan_loop.hpp"
#include "nilmult/simplicial/simplicial_abelian.hpp"
#include "nilmult/simplicial/simplicial_set.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace nilmult;

namespace {

// Z --m--> Z in degrees 1 -> 0.
ChainComplex multiplication(long m) { return ChainComplex::from_boundaries(1, {IntegerMatrix{{m}}}); }

ChainComplex random_complex(std::mt19937& rng) { return gen::small_complex(rng); }

}  // namespace

TEST_CASE("validate: circle, corrupted circle, nerve") {
  auto circle = simplicial_circle(4);
  CHECK(circle.validate().ok());
  for (int n = 0; n <= 4; ++n) CHECK(circle.size(n) == static_cast<std::size_t>(n) + 1);
  auto broken = circle;
  broken.set_face_value(2, 0, 1, 1);
  auto report = broken.validate();
  REQUIRE_FALSE(report.ok());
  bool named = false;
  for (const auto& v : report.violations) named = named || (v.identity == "dd" || v.identity == "ds");
  CHECK(named);
  CHECK(report.violations[0].dimension >= 1);
  CHECK(nerve(FiniteGroupTable::cyclic(2), 3).validate().ok());
  CHECK(nerve(FiniteGroupTable::symmetric3(), 3).validate().ok());
  CHECK(simplicial_point(3).validate().ok());
  CHECK_THROWS_AS(nerve(FiniteGroupTable::cyclic(10), 8, 1000), ResourceLimitError);
}

TEST_CASE("chain complexes and homology") {
  auto c = ChainComplex::from_boundaries(2, {IntegerMatrix{{2, 0}, {0, 3}, {1, 1}}});
  CHECK(homology(c, 0).is_trivial());
  CHECK(homology(c, 1) == FgAbelianGroup::free(1));
  CHECK_THROWS_AS(ChainComplex::from_boundaries(1, {IntegerMatrix{{1}}, IntegerMatrix{{1}}}), InvalidInput);
}

TEST_CASE("constant object") {
  auto a = TruncatedSimplicialAbelianGroup::constant(1, 3);
  CHECK(a.validate().ok());
  auto m = moore_complex(a);
  CHECK(m.chains.ranks == std::vector<std::size_t>{1, 0, 0, 0});
  CHECK(homotopy(a, 0) == FgAbelianGroup::free(1));
  CHECK(homotopy(a, 1).is_trivial());
  CHECK(homotopy(a, 2).is_trivial());
  CHECK_THROWS_AS(homotopy(a, 3), OutOfTruncationRange);
}

TEST_CASE("homotopy of a constant object is the object in degree 0") {
  std::mt19937 rng(3);
  for (int t = 0; t < 10; ++t) {
    const std::size_t r = 1 + rng() % 3;
    auto a = TruncatedSimplicialAbelianGroup::constant(r, 3);
    CHECK(homotopy(a, 0) == FgAbelianGroup::free(r));
    CHECK(homotopy(a, 1).is_trivial());
  }
}

TEST_CASE("multiplication-by-5 fixture") {
  auto a = dold_kan(multiplication(5), 3);
  CHECK(a.validate().ok());
  auto m = moore_complex(a);
  REQUIRE(m.chains.ranks[1] == 1);
  REQUIRE(m.chains.ranks[0] == 1);
  CHECK(abs(m.chains.boundary[1](0, 0)) == 5);
  CHECK(homotopy(a, 0) == FgAbelianGroup::cyclic(5));
  CHECK(homotopy(a, 1).is_trivial());
}

TEST_CASE("Dold-Kan objects recover the homology of their complex") {
  std::mt19937 rng(21);
  for (int t = 0; t < 25; ++t) {
    auto c = random_complex(rng);
    auto a = dold_kan(c, 4);
    REQUIRE(a.validate().ok());
    auto m = moore_complex(a);
    CHECK(m.chains.is_valid());
    for (int n = 0; n <= 2; ++n) CHECK(homotopy(a, n) == homology(c, n));
    CHECK(homotopy(a, 3).is_trivial());
  }
}

TEST_CASE("Moore complexes square to zero") {
  for (int D = 1; D <= 4; ++D) {
    CHECK(moore_complex(TruncatedSimplicialAbelianGroup::free_on(simplicial_circle(D))).chains.is_valid());
    CHECK(moore_complex(TruncatedSimplicialAbelianGroup::free_on(nerve(FiniteGroupTable::cyclic(3), D))).chains.is_valid());
  }
}

TEST_CASE("chains on the circle give its homology") {
  auto z = TruncatedSimplicialAbelianGroup::free_on(simplicial_circle(4));
  CHECK(z.validate().ok());
  CHECK(homotopy(z, 0) == FgAbelianGroup::free(1));
  CHECK(homotopy(z, 1) == FgAbelianGroup::free(1));
  CHECK(homotopy(z, 2).is_trivial());
}

TEST_CASE("Kan loop group of the circle") {
  auto g = kan_loop_group(simplicial_circle(3));
  CHECK(g.validate().ok());
  REQUIRE(g.generator_count(0) == 1);
  // K_2 = {*, 011, 001}: s_0 e = 001 drops out and s_1 e = 011 remains.
  REQUIRE(g.generator_count(1) == 1);
  auto e = FreeGroupWord::generator(1);
  CHECK(g.face(1, 0)[0] == e);
  CHECK(g.face(1, 1)[0] == e);
  auto ab = abelianize(g);
  CHECK(ab.validate().ok());
  CHECK(homotopy(ab, 0) == FgAbelianGroup::free(1));
  auto m = moore_complex(ab);
  CHECK(m.chains.ranks[0] == 1);
  CHECK(m.chains.boundary[1].is_zero());
}

TEST_CASE("Kan loop group: degenerate cases") {
  auto g = kan_loop_group(simplicial_point(3));
  CHECK(g.validate().ok());
  for (int n = 0; n <= 2; ++n) CHECK(g.generator_count(n) == 0);
  auto ab = abelianize(g);
  for (int n = 0; n <= 1; ++n) CHECK(homotopy(ab, n).is_trivial());
  CHECK_THROWS_AS(kan_loop_group(TruncatedSimplicialSet({2, 2, 2}, {{{0, 1}, {0, 1}}, {{0, 1}, {0, 1}, {0, 1}}},
                                                       {{{0, 1}}, {{0, 1}, {0, 1}}})),
                  NotReduced);
}

TEST_CASE("Kan loop group of a nerve gives the shifted homology") {
  auto z2 = abelianize(kan_loop_group(nerve(FiniteGroupTable::cyclic(2), 3)));
  CHECK(z2.validate().ok());
  CHECK(homotopy(z2, 0) == FgAbelianGroup::cyclic(2));
  CHECK(homotopy(z2, 1).is_trivial());
  auto s3 = abelianize(kan_loop_group(nerve(FiniteGroupTable::symmetric3(), 3)));
  CHECK(homotopy(s3, 0) == FgAbelianGroup::cyclic(2));
  CHECK(homotopy(s3, 1).is_trivial());
  auto v4 = abelianize(kan_loop_group(nerve(FiniteGroupTable::abelian({2, 2}), 3)));
  CHECK(homotopy(v4, 0) == FgAbelianGroup::from_cyclic_orders({2, 2}));
  CHECK(homotopy(v4, 1) == FgAbelianGroup::cyclic(2));
}

TEST_CASE("Kan loop group identities hold on generators for both conventions") {
  for (auto conv : {KanFaceConvention::AsPrinted, KanFaceConvention::InverseFirst}) {
    for (const auto& k : {simplicial_circle(4), nerve(FiniteGroupTable::cyclic(3), 3),
                          nerve(FiniteGroupTable::symmetric3(), 3)}) {
      auto g = kan_loop_group(k, conv);
      INFO(g.validate().to_string());
      CHECK(g.validate().ok());
      CHECK(abelianize(g).validate().ok());
    }
    auto s3 = abelianize(kan_loop_group(nerve(FiniteGroupTable::symmetric3(), 3), conv));
    CHECK(homotopy(s3, 0) == FgAbelianGroup::cyclic(2));
  }
}

TEST_CASE("tensor and Kunneth: examples") {
  auto a = dold_kan(multiplication(2), 4);
  auto t = tensor_sab(a, a);
  CHECK(t.validate().ok());
  CHECK(homotopy(t, 0) == FgAbelianGroup::cyclic(2));
  CHECK(homotopy(t, 1) == FgAbelianGroup::cyclic(2));
  auto r = kunneth_check(a, a, 1);
  CHECK(r.holds());
  CHECK(r.degrees[0].lhs == FgAbelianGroup::cyclic(2));

  auto b = dold_kan(multiplication(3), 4);
  auto ab = tensor_sab(a, b);
  CHECK(homotopy(ab, 0).is_trivial());
  CHECK(homotopy(ab, 1).is_trivial());
  CHECK(kunneth_check(a, b).holds());

  auto unit = TruncatedSimplicialAbelianGroup::constant(1, 4);
  auto c = dold_kan(ChainComplex::from_boundaries(1, {IntegerMatrix{{4}}, IntegerMatrix{{0}}}), 4);
  auto uc = tensor_sab(unit, c);
  for (int n = 0; n <= 3; ++n) CHECK(homotopy(uc, n) == homotopy(c, n));
  CHECK_THROWS_AS(kunneth_check(a, b, 3), OutOfTruncationRange);
}

TEST_CASE("Kunneth holds on random small fixtures") {
  std::mt19937 rng(77);
  int checked = 0;
  for (int t = 0; t < 50; ++t) {
    auto c1 = random_complex(rng), c2 = random_complex(rng);
    auto a = dold_kan(c1, 4), b = dold_kan(c2, 4);
    auto report = kunneth_check(a, b);
    REQUIRE(report.degrees.size() == 3);
    for (const auto& d : report.degrees) {
      INFO("degree " << d.degree << ": " << d.lhs.to_string() << " vs " << d.rhs.to_string());
      CHECK(d.holds);
    }
    ++checked;
  }
  CHECK(checked == 50);
}

namespace {

SimplicialMap gamma_map(const ChainComplex& c, const std::vector<IntegerMatrix>& f, int D) {
  return {dold_kan_map(c, c, f, D)};
}

}  // namespace

TEST_CASE("directed systems") {
  const int D = 3;
  auto c = ChainComplex::from_boundaries(1, {IntegerMatrix{{0}}});
  auto a = dold_kan(c, D);
  auto id = gamma_map(c, {IntegerMatrix{{1}}, IntegerMatrix{{1}}}, D);
  auto twice = gamma_map(c, {IntegerMatrix{{1}}, IntegerMatrix{{2}}}, D);

  SUBCASE("constant") {
    DirectedSystem s{{a, a, a}, {id, id}};
    auto col = colimit_stabilized(s, 5);
    CHECK(col.stable_from == 0);
    auto r = limit_commutes(s, 1, 5);
    CHECK(r.holds);
    CHECK(r.pi_of_colimit == FgAbelianGroup::free(1));
  }
  SUBCASE("stabilizes after three steps") {
    DirectedSystem s{{a, a, a, a, a}, {twice, twice, twice, id}};
    CHECK(is_simplicial_map(twice, a, a));
    CHECK_FALSE(is_isomorphism(twice));
    CHECK(colimit_stabilized(s, 5).stable_from == 3);
    for (int n = 0; n <= 1; ++n) {
      auto r = limit_commutes(s, n, 5);
      CHECK(r.holds);
      CHECK(r.object_stable_from == 3);
    }
    CHECK(limit_commutes(s, 1, 5).homotopy_stable_from == 3);
    CHECK(limit_commutes(s, 0, 5).homotopy_stable_from == 0);
    CHECK_THROWS_AS(colimit_stabilized(s, 2), Unstabilized);
  }
  SUBCASE("doubling never stabilizes") {
    auto z = TruncatedSimplicialAbelianGroup::constant(1, D);
    SimplicialMap dbl;
    for (int n = 0; n <= D; ++n) dbl.components.push_back(IntegerMatrix{{2}});
    DirectedSystem s{{z, z, z}, {dbl, dbl}};
    CHECK_THROWS_AS(colimit_stabilized(s, 100), Unstabilized);
  }
  SUBCASE("non-simplicial transition is rejected") {
    SimplicialMap bad = id;
    bad.components[1](0, 0) = 3;
    DirectedSystem s{{a, a}, {bad}};
    CHECK_THROWS_AS(s.check(), InvalidInput);
  }
}

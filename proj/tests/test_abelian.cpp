#include <random>

#include "doctest.h"
#include "nilmult/abelian/abelian_group.hpp"
#include "nilmult/abelian/smith.hpp"
#include "nilmult/abelian/sparse_cokernel.hpp"
#include "nilmult/errors.hpp"
#include "oracles.hpp"

using namespace nilmult;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

FgAbelianGroup G(std::initializer_list<long> orders) {
  return FgAbelianGroup::from_cyclic_orders(orders);
}

void check_smith(const IntegerMatrix& a) {
  const SmithForm f = smith_normal_form(a);
  CHECK(f.U * a * f.V == f.S);
  CHECK(f.U.is_unimodular());
  CHECK(f.V.is_unimodular());
  CHECK(f.U * f.U_inverse == IntegerMatrix::identity(a.rows()));
  CHECK(f.V * f.V_inverse == IntegerMatrix::identity(a.cols()));
  for (std::size_t i = 0; i < f.S.rows(); ++i)
    for (std::size_t j = 0; j < f.S.cols(); ++j)
      if (i != j) CHECK(f.S(i, j) == 0);
  for (std::size_t i = 0; i < f.diagonal.size(); ++i) {
    CHECK(f.diagonal[i] >= 0);
    if (i + 1 < f.diagonal.size()) {
      if (f.diagonal[i] == 0) CHECK(f.diagonal[i + 1] == 0);
      else CHECK(mpz_divisible_p(f.diagonal[i + 1].get_mpz_t(), f.diagonal[i].get_mpz_t()));
    }
  }
}

}  // namespace

TEST_CASE("smith normal form examples") {
  CHECK(smith_normal_form(IntegerMatrix::identity(3)).diagonal == ints({1, 1, 1}));
  const IntegerMatrix a{{2, 4}, {6, 8}};
  const SmithForm f = smith_normal_form(a);
  CHECK(f.diagonal == ints({2, 4}));
  CHECK(f.U * a * f.V == f.S);
  CHECK(smith_normal_form(IntegerMatrix(2, 3)).diagonal == ints({0, 0}));
}

TEST_CASE("smith normal form on empty matrices") {
  for (auto [r, c] : {std::pair{0, 0}, {0, 3}, {3, 0}}) {
    const SmithForm f = smith_normal_form(IntegerMatrix(r, c));
    CHECK(f.diagonal.empty());
    CHECK(f.U.rows() == static_cast<std::size_t>(r));
    CHECK(f.V.rows() == static_cast<std::size_t>(c));
  }
}

TEST_CASE("smith normal form property: U A V = S with unimodular transforms") {
  std::mt19937 rng(20240601);
  std::uniform_int_distribution<int> dim(1, 6);
  for (int trial = 0; trial < 150; ++trial) {
    IntegerMatrix a = oracle::random_matrix(rng, dim(rng), dim(rng), 9);
    check_smith(a);
  }
}

TEST_CASE("smith normal form survives entries far beyond 64 bits") {
  Integer big = Integer(1) << 200;
  IntegerMatrix a(2, 2);
  a(0, 0) = big * 6;
  a(0, 1) = big * 4;
  a(1, 0) = 3;
  a(1, 1) = big + 1;
  check_smith(a);
}

TEST_CASE("cokernel examples") {
  CHECK(cokernel(IntegerMatrix{{2}}) == FgAbelianGroup::cyclic(2));
  CHECK(cokernel(IntegerMatrix{{2, 4}, {6, 8}}) == G({2, 4}));
  CHECK(cokernel(IntegerMatrix(0, 3)) == FgAbelianGroup::free(3));
  CHECK(cokernel(IntegerMatrix(2, 0)).is_trivial());
  CHECK(cokernel(IntegerMatrix{{0, 0}}) == FgAbelianGroup::free(2));
}

TEST_CASE("cokernel agrees with homomorphism counting for small cokernels") {
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> rows(1, 4), cols(1, 3);
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 40; ++trial) {
    IntegerMatrix a = oracle::random_matrix(rng, rows(rng), cols(rng), 6);
    const FgAbelianGroup g = cokernel(a);
    auto ord = g.order();
    if (!ord || *ord > 64) continue;
    ++checked;
    for (std::int64_t d : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64})
      CHECK(oracle::hom_count(a, d) == oracle::predicted_hom_count(g, d));
  }
  CHECK(checked == 40);
}

TEST_CASE("canonical form rejects non-chains and normalizes cyclic lists") {
  CHECK_THROWS_AS(FgAbelianGroup(0, ints({4, 2})), InvalidInput);
  CHECK_THROWS_AS(FgAbelianGroup(0, ints({1})), InvalidInput);
  CHECK(G({6, 4}) == FgAbelianGroup(0, ints({2, 12})));
  CHECK(G({1, 1}).is_trivial());
  CHECK(G({0, 3, 0}) == FgAbelianGroup(2, ints({3})));
}

TEST_CASE("direct sum examples") {
  CHECK(direct_sum(G({2}), G({3})) == G({6}));
  CHECK(direct_sum(G({2}), G({2})).invariant_factors() == ints({2, 2}));
  CHECK(direct_sum(FgAbelianGroup::trivial(), G({0, 4})) == G({0, 4}));
}

TEST_CASE("tensor examples against the bilinear symbol oracle") {
  CHECK(tensor(G({4}), G({6})) == G({2}));
  CHECK(cokernel(oracle::tensor_symbol_relations(4, 6)) == G({2}));
  CHECK(tensor(G({0, 2}), G({4})) == G({4, 2}));
  CHECK(cokernel(oracle::tensor_presentation(oracle::presentation_of(G({0, 2})),
                                             oracle::presentation_of(G({4})))) == G({4, 2}));
  CHECK(tensor(G({0, 5}), FgAbelianGroup::trivial()).is_trivial());
  for (int m = 1; m <= 6; ++m)
    for (int n = 1; n <= 6; ++n)
      CHECK(tensor(G({m}), G({n})) == cokernel(oracle::tensor_symbol_relations(m, n)));
}

TEST_CASE("tensor agrees with the presentation oracle on random groups") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = oracle::random_group(rng), h = oracle::random_group(rng);
    CHECK(tensor(g, h) == cokernel(oracle::tensor_presentation(oracle::presentation_of(g),
                                                               oracle::presentation_of(h))));
  }
}

TEST_CASE("tor examples against element enumeration") {
  CHECK(tor(G({4}), G({6})) == G({2}));
  CHECK(oracle::tor_cyclic_by_enumeration(4, {6}) == G({2}));
  CHECK(tor(G({2}), G({2})) == G({2}));
  CHECK(oracle::tor_cyclic_by_enumeration(2, {2}) == G({2}));
  CHECK(tor(FgAbelianGroup::free(3), G({0, 2, 4})).is_trivial());
  for (int m = 2; m <= 8; ++m)
    for (auto h : std::vector<std::vector<std::int64_t>>{{6}, {2, 4}, {3, 9}, {12}, {2, 2, 2}}) {
      std::vector<long> hl(h.begin(), h.end());
      std::vector<Integer> hi(h.begin(), h.end());
      CHECK(tor(G({m}), FgAbelianGroup::from_cyclic_orders(std::span<const Integer>(hi))) ==
            oracle::tor_cyclic_by_enumeration(m, h));
    }
}

TEST_CASE("tensor power") {
  CHECK(tensor_power(G({2}), 3) == G({2}));
  CHECK(tensor_power(FgAbelianGroup::free(2), 2) == FgAbelianGroup::free(4));
  CHECK(tensor_power(G({0, 7}), 0) == FgAbelianGroup::free(1));
}

TEST_CASE("order and triviality") {
  CHECK(G({6}).order() == Integer(6));
  CHECK(!G({0, 2}).order().has_value());
  CHECK(FgAbelianGroup::trivial().order() == Integer(1));
  CHECK(is_trivial(FgAbelianGroup::trivial()));
  CHECK(!is_trivial(G({2})));
}

TEST_CASE("algebraic laws up to canonical form") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = oracle::random_group(rng), b = oracle::random_group(rng),
               c = oracle::random_group(rng);
    CHECK(direct_sum(a, b) == direct_sum(b, a));
    CHECK(direct_sum(direct_sum(a, b), c) == direct_sum(a, direct_sum(b, c)));
    CHECK(tensor(a, b) == tensor(b, a));
    CHECK(tensor(tensor(a, b), c) == tensor(a, tensor(b, c)));
    CHECK(tensor(a, direct_sum(b, c)) == direct_sum(tensor(a, b), tensor(a, c)));
    CHECK(tor(a, b) == tor(b, a));
  }
}

TEST_CASE("coprime finite orders kill tensor and tor; orders divide") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = oracle::random_group(rng, 0), b = oracle::random_group(rng, 0);
    const Integer oa = *a.order(), ob = *b.order();
    const auto t = tensor(a, b);
    CHECK(mpz_divisible_p(Integer(oa * ob).get_mpz_t(), t.order()->get_mpz_t()));
    if (gcd(oa, ob) == 1) {
      CHECK(t.is_trivial());
      CHECK(tor(a, b).is_trivial());
    }
  }
}

TEST_CASE("sparse cokernel agrees with the dense cokernel") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> rows(0, 12), cols(1, 8), fill(0, 3), val(-3, 3);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t r = rows(rng), c = cols(rng);
    IntegerMatrix dense(r, c);
    std::vector<SparseRow> sparse(r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (fill(rng) == 0) {
          int v = val(rng);
          if (v == 0) continue;
          dense(i, j) = v;
          sparse[i].emplace_back(j, v);
        }
    CHECK(sparse_cokernel(sparse, c) == cokernel(dense));
  }
}

TEST_CASE("sparse cokernel falls back to exact arithmetic on overflow") {
  const std::int64_t big = std::int64_t(1) << 40;
  std::vector<SparseRow> rows = {{{0, 1}, {1, big}}, {{1, 1}, {2, big}}, {{2, 1}, {3, big}},
                                 {{0, 3}}};
  IntegerMatrix dense(4, 4);
  dense(0, 0) = 1;
  dense(0, 1) = static_cast<long>(big);
  dense(1, 1) = 1;
  dense(1, 2) = static_cast<long>(big);
  dense(2, 2) = 1;
  dense(2, 3) = static_cast<long>(big);
  dense(3, 0) = 3;
  CHECK(sparse_cokernel(rows, 4) == cokernel(dense));
}

TEST_CASE("left kernel coordinates") {
  const IntegerMatrix a{{1, 2}, {2, 4}, {3, 6}};
  const auto k = SublatticeCoordinates::left_kernel(a);
  CHECK(k.dimension() == 2);
  CHECK((k.basis() * a).is_zero());
  const std::vector<Integer> x = ints({2, -1, 0});
  const auto y = k.coordinates(x);
  CHECK(std::span<const Integer>(y) * k.basis() == x);
  CHECK_THROWS_AS(k.coordinates(ints({1, 0, 0})), std::domain_error);
}

TEST_CASE("canonical form text") {
  CHECK(FgAbelianGroup::trivial().to_string() == "0");
  CHECK(FgAbelianGroup::from_cyclic_orders({0, 0, 2, 6}).to_string() == "Z^2 + Z_2 + Z_6");
  CHECK(FgAbelianGroup::from_cyclic_orders({2, 2, 2, 3}).to_string() == "Z_2^2 + Z_6");
  CHECK(FgAbelianGroup::free(1).to_string() == "Z");
}

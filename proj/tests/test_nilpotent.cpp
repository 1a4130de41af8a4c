#include <doctest.h>

#include <random>

#include "nilmult/errors.hpp"
#include "nilmult/nilpotent/free_word.hpp"
#include "nilmult/nilpotent/magnus.hpp"
#include "nilmult/nilpotent/matrix_oracle.hpp"
#include "nilmult/nilpotent/multiplier.hpp"
#include "nilmult/nilpotent/nilpotent_group.hpp"
#include "oracles.hpp"

using namespace nilmult;

namespace {

FreeGroupWord w(std::initializer_list<Letter> letters) { return FreeGroupWord(letters); }

FreeGroupWord random_word(std::mt19937& rng, std::size_t n, int letters, int max_exp = 2) {
  std::uniform_int_distribution<std::size_t> gen(1, n);
  std::uniform_int_distribution<int> ex(-max_exp, max_exp);
  std::vector<Letter> out;
  for (int i = 0; i < letters; ++i) {
    int e = 0;
    while (e == 0) e = ex(rng);
    out.push_back({gen(rng), e});
  }
  return FreeGroupWord(out);
}

ExponentVector expect(std::size_t size, std::initializer_list<std::pair<std::size_t, long>> entries) {
  ExponentVector v(size);
  for (auto [k, e] : entries) v[k] = e;
  return v;
}

}  // namespace

TEST_CASE("free words reduce") {
  CHECK(w({{1, 2}, {1, -2}}).empty());
  CHECK(w({{1, 1}, {2, 1}, {2, -1}, {1, 2}}) == w({{1, 3}}));
  CHECK(w({{1, 1}, {2, -1}}).inverse() == w({{2, 1}, {1, -1}}));
  CHECK((w({{1, 1}}) * w({{1, -1}, {2, 1}})) == w({{2, 1}}));
  CHECK(w({{1, 1}, {2, 1}}).power(2).to_string() == "x1 x2 x1 x2");
  CHECK(w({{1, 1}, {2, 1}}).power(-1) == w({{2, -1}, {1, -1}}));
  CHECK(FreeGroupWord().to_string() == "1");
  CHECK(commutator(FreeGroupWord::generator(1), FreeGroupWord::generator(1)).empty());
  CHECK_THROWS_AS(w({{0, 1}}), InvalidInput);
  CHECK(w({{2, 3}, {1, -1}, {2, -1}}).exponent_sums(2) == std::vector<Integer>{-1, 2});
}

TEST_CASE("Magnus ring arithmetic") {
  const auto x1 = MagnusSeries::generator(2, 4, 1);
  const auto x1i = MagnusSeries::generator(2, 4, 1, true);
  CHECK((x1 * x1i).is_one());
  CHECK(x1.power(Integer(-1)) == x1i);
  CHECK(x1.power(Integer(3)) == x1 * x1 * x1);
  const auto x2 = MagnusSeries::generator(2, 4, 2);
  const auto comm = group_commutator(x1, x2);
  CHECK(comm.valuation() == 2);
  // [x1,x2] = 1 + X1X2 - X2X1 + ...
  CHECK(comm.block(2)[0 * 2 + 1] == 1);
  CHECK(comm.block(2)[1 * 2 + 0] == -1);
  CHECK(MagnusSeries::of_word(2, 4, w({{1, 1}, {2, 1}, {1, -1}, {2, -1}})) ==
        group_commutator(x1.inverse(), x2.inverse()));
}

TEST_CASE("collect: examples") {
  // Class 2 on two generators: basis x1, x2, [x2,x1].
  CHECK(collect(FreeGroupWord(), 2, 2).is_identity());
  auto a = collect(w({{2, 1}, {1, 1}}), 2, 2);
  CHECK(a.exponents() == expect(3, {{0, 1}, {1, 1}, {2, 1}}));
  CHECK(a.to_string() == "x1 x2 [x2,x1]");
  auto b = collect(w({{1, 1}, {2, 1}}).power(2), 2, 2);
  CHECK(b.exponents() == expect(3, {{0, 2}, {1, 2}, {2, 1}}));
  CHECK(matrix_oracle_check(w({{2, 1}, {1, 1}})));
  CHECK(matrix_oracle_check(w({{1, 1}, {2, 1}}).power(2)));
  CHECK_THROWS_AS(collect(w({{3, 1}}), 2, 2), InvalidInput);
}

TEST_CASE("group operations: examples") {
  auto ctx = nilpotent_context(2, 2);
  auto x1 = NilpotentElement::generator(ctx, 1);
  auto x2 = NilpotentElement::generator(ctx, 2);
  CHECK((x1 * inverse(x1)).is_identity());
  CHECK(commutator(x1, x1).is_identity());
  CHECK(commutator(x2, x1) == NilpotentElement::basis_element(ctx, 2));
  CHECK(commutator(x1, x2) == inverse(NilpotentElement::basis_element(ctx, 2)));
  auto other = NilpotentElement::generator(nilpotent_context(2, 3), 1);
  CHECK_THROWS_AS(multiply(x1, other), ContextMismatch);
}

TEST_CASE("bracket_expand: examples") {
  const std::vector<std::size_t> x1x1{1, 1}, x1x2{1, 2}, x2x1x1{2, 1, 1};
  CHECK(bracket_expand(x1x1, 2, 2) == ExponentVector{0});
  CHECK(bracket_expand(x1x2, 2, 2) == ExponentVector{-1});
  // Weight 3 on two generators: [[x2,x1],x1], [[x2,x1],x2].
  auto ctx = nilpotent_context(2, 3);
  REQUIRE(ctx->basis().to_string(3) == "[[x2,x1],x1]");
  CHECK(bracket_expand(x2x1x1, 2, 3) == ExponentVector{1, 0});
  CHECK_THROWS_AS(bracket_expand(x2x1x1, 2, 2), InvalidInput);
}

TEST_CASE("collect agrees with the Magnus model") {
  std::mt19937 rng(11);
  for (std::size_t n = 1; n <= 3; ++n)
    for (int c = 1; c <= 4; ++c) {
      auto ctx = nilpotent_context(n, c);
      for (int t = 0; t < 15; ++t) {
        auto word = random_word(rng, n, 12, 3);
        auto e = collect(word, ctx);
        auto series = MagnusSeries::of_word(n, c, word);
        CHECK(ctx->magnus_of(e.exponents()) == series);
        CHECK(ctx->exponents_of(series) == e.exponents());
      }
    }
}

TEST_CASE("exponents_of rejects non-group series") {
  auto ctx = nilpotent_context(2, 3);
  auto s = MagnusSeries::one(2, 3);
  s.block(2)[0] = 1;  // X1^2 alone is not a Lie element
  CHECK_THROWS_AS(ctx->exponents_of(s), InvalidInput);
}

TEST_CASE("matrix oracle: random words and a corrupted normal form") {
  std::mt19937 rng(5);
  for (std::size_t n = 1; n <= 3; ++n) {
    auto ctx = nilpotent_context(n, 2);
    for (int t = 0; t < 40; ++t) {
      auto word = random_word(rng, n, 20);
      auto e = collect(word, ctx);
      CHECK(matrix_oracle_check(word, e));
      auto bad = e.exponents();
      bad[rng() % bad.size()] += 1;
      CHECK_FALSE(matrix_oracle_check(word, NilpotentElement(ctx, bad)));
    }
  }
  CHECK_THROWS_AS(class2_matrix_image(FreeGroupWord(), 4), InvalidInput);
}

TEST_CASE("associativity of collection") {
  std::mt19937 rng(7);
  int pairs = 0;
  for (std::size_t n = 1; n <= 3; ++n)
    for (int c = 1; c <= 4; ++c) {
      auto ctx = nilpotent_context(n, c);
      for (int t = 0; t < 17; ++t, ++pairs) {
        auto u = random_word(rng, n, 8), v = random_word(rng, n, 8);
        CHECK(collect(u * v, ctx) == multiply(collect(u, ctx), collect(v, ctx)));
      }
    }
  CHECK(pairs >= 200);
  std::mt19937 rng2(8);
  auto ctx = nilpotent_context(3, 4);
  for (int t = 0; t < 30; ++t) {
    auto a = collect(random_word(rng2, 3, 6), ctx);
    auto b = collect(random_word(rng2, 3, 6), ctx);
    auto d = collect(random_word(rng2, 3, 6), ctx);
    CHECK((a * b) * d == a * (b * d));
  }
}

TEST_CASE("nilpotency: (c+1)-fold commutators vanish") {
  std::mt19937 rng(9);
  for (std::size_t n = 2; n <= 3; ++n)
    for (int c = 1; c <= 4; ++c) {
      auto ctx = nilpotent_context(n, c);
      for (int t = 0; t < 10; ++t) {
        std::vector<NilpotentElement> xs;
        for (int i = 0; i <= c; ++i) xs.push_back(collect(random_word(rng, n, 5), ctx));
        CHECK(left_normed_commutator(xs).is_identity());
        // One step shorter is generally nontrivial but stays in gamma_c.
        std::vector<NilpotentElement> shorter(xs.begin(), xs.end() - 1);
        auto s = left_normed_commutator(shorter);
        for (int wt = 1; wt < c; ++wt)
          for (const Integer& x : s.weight_slice(wt)) CHECK(x == 0);
      }
    }
}

TEST_CASE("identity, inverse and power laws") {
  std::mt19937 rng(10);
  auto ctx = nilpotent_context(3, 3);
  NilpotentElement one(ctx);
  for (int t = 0; t < 30; ++t) {
    auto a = collect(random_word(rng, 3, 10), ctx);
    CHECK(a * one == a);
    CHECK(one * a == a);
    CHECK(inverse(inverse(a)) == a);
    const int k = static_cast<int>(rng() % 7);
    NilpotentElement acc(ctx);
    for (int i = 0; i < k; ++i) acc = acc * a;
    CHECK(power(a, Integer(k)) == acc);
    CHECK(power(a, Integer(-k)) == inverse(acc));
    auto b = collect(random_word(rng, 3, 10), ctx);
    CHECK(commutator(a, b) == inverse(a) * inverse(b) * a * b);
  }
}

TEST_CASE("large exponents stay exact") {
  auto ctx = nilpotent_context(2, 3);
  auto x1 = NilpotentElement::generator(ctx, 1);
  auto x2 = NilpotentElement::generator(ctx, 2);
  Integer big("123456789012345678901234567890");
  auto p = power(x1 * x2, big);
  CHECK(ctx->magnus_of(p.exponents()) == ctx->magnus_of((x1 * x2).exponents()).power(big));
}

TEST_CASE("step cap raises a resource error") {
  CollectorLimits tight;
  tight.step_cap = 10;
  auto word = w({{2, 3}, {1, 3}, {3, 2}, {1, -2}, {2, 2}});
  CHECK_THROWS_AS(collect(word, 3, 4, tight), ResourceLimitError);
}

TEST_CASE("bracket_expand is multilinear at top weight") {
  std::mt19937 rng(12);
  for (std::size_t n = 2; n <= 3; ++n)
    for (int c = 1; c <= 3; ++c) {
      auto ctx = nilpotent_context(n, c + 1);
      for (int t = 0; t < 10; ++t) {
        std::vector<std::size_t> leaves;
        for (int i = 0; i <= c; ++i) leaves.push_back(1 + rng() % n);
        std::vector<NilpotentElement> xs;
        for (std::size_t g : leaves) xs.push_back(NilpotentElement::generator(ctx, g));
        const std::size_t pos = rng() % leaves.size();
        xs[pos] = power(xs[pos], Integer(2));
        auto doubled = left_normed_commutator(xs).weight_slice(c + 1);
        auto single = bracket_expand(leaves, n, c + 1);
        for (Integer& x : single) x *= 2;
        CHECK(doubled == single);
      }
    }
}

TEST_CASE("nilpotent multiplier: examples") {
  CHECK(nilpotent_multiplier_abelian({2, 2}, 1) == FgAbelianGroup::from_cyclic_orders({2}));
  CHECK(nilpotent_multiplier_abelian({2, 2}, 2) == FgAbelianGroup::from_cyclic_orders({2, 2}));
  CHECK(nilpotent_multiplier_abelian({0, 0}, 1) == FgAbelianGroup::free(1));
  CHECK(nilpotent_multiplier_abelian({0, 2}, 1) == FgAbelianGroup::cyclic(2));
  CHECK(nilpotent_multiplier_abelian({2, 3}, 1).is_trivial());
  CHECK(nilpotent_multiplier_abelian({1, 4}, 2).is_trivial());
  CHECK_THROWS_AS(nilpotent_multiplier_abelian({2, -1}, 1), InvalidInput);
  MultiplierLimits small;
  small.row_cap = 10;
  CHECK_THROWS_AS(nilpotent_multiplier_abelian({2, 2, 2}, 2, small), ResourceLimitError);
}

TEST_CASE("nilpotent multiplier of a cyclic group is trivial") {
  for (long n = 0; n <= 12; ++n)
    for (int c = 1; c <= 5; ++c) CHECK(nilpotent_multiplier_abelian({n}, c).is_trivial());
}

TEST_CASE("nilpotent multiplier matches the closed form for abelian groups") {
  const std::vector<std::vector<long>> groups = {
      {2, 2}, {4, 2}, {6, 3}, {2, 2, 2}, {4, 2, 2}, {0, 2}, {0, 0}, {0, 0, 3}, {6, 2}, {3, 3, 3}, {2, 2, 2, 2}};
  for (const auto& orders : groups)
    for (int c = 1; c <= 3; ++c) {
      if (orders.size() == 4 && c == 3) continue;
      std::vector<Integer> inv(orders.begin(), orders.end());
      auto g = FgAbelianGroup::from_cyclic_orders(inv);
      INFO(g.to_string() << " c=" << c);
      CHECK(nilpotent_multiplier(g, c) == oracle::abelian_multiplier_closed_form(g, c));
    }
}

TEST_CASE("nilpotent multiplier does not depend on the presentation") {
  // Z_6 + Z_2 written as Z_2 + Z_3 + Z_2.
  for (int c = 1; c <= 3; ++c)
    CHECK(nilpotent_multiplier_abelian({2, 3, 2}, c) == nilpotent_multiplier_abelian({6, 2}, c));
}

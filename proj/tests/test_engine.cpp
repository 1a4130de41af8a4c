#include <doctest.h>

#include <algorithm>

#include "nilmult/engine/bar_homology.hpp"
#include "nilmult/engine/free_product.hpp"
#include "nilmult/engine/group_datum.hpp"
#include "nilmult/errors.hpp"
#include "oracles.hpp"

using namespace nilmult;

namespace {

FgAbelianGroup ab(std::initializer_list<long> orders) { return FgAbelianGroup::from_cyclic_orders(orders); }

FreeGroupWord w(std::initializer_list<Letter> letters) { return FreeGroupWord(letters); }

FgAbelianGroup from_chain(const std::vector<std::size_t>& chain) {
  std::vector<Integer> orders;
  for (std::size_t d : chain) orders.emplace_back(static_cast<unsigned long>(d));
  return FgAbelianGroup::from_cyclic_orders(orders);
}

std::size_t chain_order(const std::vector<std::size_t>& chain) {
  std::size_t n = 1;
  for (std::size_t d : chain) n *= d;
  return n;
}

FiniteGroupTable table_of(const std::vector<std::size_t>& chain) {
  if (chain.empty()) return FiniteGroupTable::cyclic(1);
  return FiniteGroupTable::abelian(chain);
}

// Abelian datum with M^(1) filled in, so grids do not recompute it.
GroupDatum abelian_datum(const std::vector<std::size_t>& chain) {
  GroupDatum d = GroupDatum::abelian_group(from_chain(chain));
  d.multipliers[1] = multiplier_of(d, 1);
  return d;
}

const Summand& summand(const FreeProductReport& r, const std::string& name) {
  auto it = std::find_if(r.summands.begin(), r.summands.end(), [&](const Summand& s) { return s.name == name; });
  REQUIRE(it != r.summands.end());
  return *it;
}

Status condition(const ConditionReport& r, const std::string& label) {
  for (const auto& c : r.conditions)
    if (c.label == label) return c.status;
  FAIL("no condition " << label);
  return Status::Undetermined;
}

}  // namespace

TEST_CASE("presentation abelianization") {
  CHECK(abelianization(Presentation{1, {w({{1, 5}})}}) == ab({5}));
  CHECK(abelianization(Presentation{2, {commutator(w({{1, 1}}), w({{2, 1}}))}}) == FgAbelianGroup::free(2));
  CHECK(abelianization(Presentation::a5()).is_trivial());
  CHECK(is_perfect(Presentation::a5()));
  CHECK_FALSE(is_perfect(Presentation{1, {w({{1, 2}})}}));
  CHECK_FALSE(is_perfect(Presentation{2, {}}));
  CHECK_THROWS_AS(Presentation({1, {w({{2, 1}})}}).check(), InvalidInput);
}

TEST_CASE("bar complex examples") {
  CHECK(bar_h2(FiniteGroupTable::abelian({2, 2})) == ab({2}));
  CHECK(bar_h2(FiniteGroupTable::cyclic(6)).is_trivial());
  CHECK(bar_h2(FiniteGroupTable::symmetric3()).is_trivial());
  CHECK(bar_h2(FiniteGroupTable::dihedral(4)) == ab({2}));
  CHECK(bar_h2(FiniteGroupTable::quaternion8()).is_trivial());
  CHECK(bar_h2(FiniteGroupTable::cyclic(1)).is_trivial());
  CHECK_THROWS_AS(bar_h2(FiniteGroupTable::cyclic(25)), ResourceLimitError);
  CHECK_NOTHROW(bar_h2(FiniteGroupTable::cyclic(25), 25));
}

TEST_CASE("bar_h1 matches abelianization") {
  CHECK(bar_h1(FiniteGroupTable::symmetric3()) == ab({2}));
  CHECK(bar_h1(FiniteGroupTable::dihedral(4)) == ab({2, 2}));
  CHECK(bar_h1(FiniteGroupTable::quaternion8()) == ab({2, 2}));
  CHECK(bar_h1(FiniteGroupTable::dihedral(3)) == bar_h1(FiniteGroupTable::symmetric3()));
  for (const auto& chain : oracle::abelian_groups_up_to(24)) {
    CAPTURE(chain.size());
    CHECK(bar_h1(table_of(chain)) == from_chain(chain));
  }
  // S3 = <a, b | a^2, b^3, (ab)^2>
  Presentation s3{2, {w({{1, 2}}), w({{2, 3}}), w({{1, 1}, {2, 1}, {1, 1}, {2, 1}})}};
  CHECK(abelianization(s3) == bar_h1(FiniteGroupTable::symmetric3()));
  // Q8 = <i, j | i^4, i^2 j^-2, j^-1 i j i>
  Presentation q8{2, {w({{1, 4}}), w({{1, 2}, {2, -2}}), w({{2, -1}, {1, 1}, {2, 1}, {1, 1}})}};
  CHECK(abelianization(q8) == bar_h1(FiniteGroupTable::quaternion8()));
}

TEST_CASE("Schur multiplier: engine against bar complex, order <= 36") {
  for (const auto& chain : oracle::abelian_groups_up_to(36)) {
    const FgAbelianGroup g = from_chain(chain);
    CAPTURE(g.to_string());
    CHECK(nilpotent_multiplier(g, 1) == bar_h2(table_of(chain), 36));
  }
}

TEST_CASE("bar_h2 of a product splits with a tensor term") {
  const auto groups = oracle::abelian_groups_up_to(18);
  int checked = 0;
  for (const auto& a : groups)
    for (const auto& b : groups) {
      if (a.empty() || b.empty() || chain_order(a) * chain_order(b) > 36) continue;
      const FgAbelianGroup g = from_chain(a), h = from_chain(b);
      CAPTURE(g.to_string());
      CAPTURE(h.to_string());
      const FgAbelianGroup expected =
          direct_sum(direct_sum(nilpotent_multiplier(g, 1), nilpotent_multiplier(h, 1)), tensor(g, h));
      CHECK(bar_h2(FiniteGroupTable::direct_product(table_of(a), table_of(b)), 36) == expected);
      ++checked;
    }
  CHECK(checked > 40);
  // Non-abelian factor: M(S3 x Z2) = M(S3) + M(Z2) + S3^ab (x) Z2 = Z_2.
  CHECK(bar_h2(FiniteGroupTable::direct_product(FiniteGroupTable::symmetric3(), FiniteGroupTable::cyclic(2))) ==
        ab({2}));
}

TEST_CASE("group datum construction and checks") {
  GroupDatum z6 = builtin_group("Z6");
  CHECK(z6.source == GroupSource::Cyclic);
  CHECK(z6.order.finite());
  CHECK(z6.order.value == 6);
  CHECK(builtin_group("Z").order.kind == GroupOrder::Kind::Infinite);
  CHECK(builtin_group("Z2xZ4").abelianization->value == ab({2, 4}));
  CHECK(builtin_group("Q8").abelianization->value == ab({2, 2}));
  CHECK(builtin_group("Q8").abelian->value == false);
  GroupDatum a5 = builtin_group("A5");
  CHECK(a5.abelianization->value.is_trivial());
  CHECK(a5.abelianization->provenance == Provenance::Computed);
  CHECK_THROWS_AS(builtin_group("S4"), InvalidInput);
  CHECK_THROWS_AS(builtin_group("Z2x"), InvalidInput);

  GroupDatum bad;
  bad.label = "bad";
  bad.order = GroupOrder::of(4, Provenance::UserSupplied);
  bad.abelianization = Sourced<FgAbelianGroup>{FgAbelianGroup(1, {}), Provenance::UserSupplied};
  CHECK_THROWS_AS(bad.check(), InvalidInput);
  bad.abelianization->value = ab({3});
  CHECK_THROWS_AS(bad.check(), InvalidInput);
  bad.abelianization->value = ab({2});
  CHECK_NOTHROW(bad.check());
}

TEST_CASE("multiplier_of sources") {
  for (long n = 1; n <= 8; ++n)
    for (int c = 1; c <= 4; ++c) CHECK(multiplier_of(GroupDatum::cyclic(n), c).value.is_trivial());
  CHECK(multiplier_of(GroupDatum::abelian_group(ab({2, 2})), 2).value == ab({2, 2}));
  CHECK(multiplier_of(builtin_group("S3"), 1).value.is_trivial());
  CHECK(multiplier_of(builtin_group("D4"), 1).value == ab({2}));
  CHECK_THROWS_AS(multiplier_of(builtin_group("S3"), 2), Unsupported);
  CHECK_THROWS_AS(multiplier_of(builtin_group("A5"), 1), Unsupported);

  GroupDatum a5 = builtin_group("A5");
  a5.multipliers[1] = {ab({2}), Provenance::UserSupplied};
  auto m = multiplier_of(a5, 1);
  CHECK(m.value == ab({2}));
  CHECK(m.provenance == Provenance::UserSupplied);
  // An abelian table goes through the engine for c >= 2.
  CHECK(multiplier_of(GroupDatum::from_table(FiniteGroupTable::abelian({2, 2})), 2).value == ab({2, 2}));
}

TEST_CASE("vanishing hypotheses") {
  auto pass = check_vanishing_hypotheses(GroupDatum::cyclic(2), GroupDatum::cyclic(3));
  CHECK(pass.status == Status::Pass);
  CHECK(pass.witnesses.empty());
  CHECK(pass.terms.size() == 4);

  auto fail = check_vanishing_hypotheses(GroupDatum::cyclic(2), GroupDatum::cyclic(2));
  CHECK(fail.status == Status::Fail);
  CHECK(std::find(fail.witnesses.begin(), fail.witnesses.end(), "Tor(G^ab, H^ab)") != fail.witnesses.end());
  CHECK(fail.terms[3].value == ab({2}));

  // Perfect groups pass even with unknown multipliers.
  auto perfect = check_vanishing_hypotheses(builtin_group("A5"), builtin_group("A5"));
  CHECK(perfect.status == Status::Pass);

  GroupDatum unknown;
  unknown.label = "G";
  CHECK_THROWS_AS(check_vanishing_hypotheses(unknown, GroupDatum::cyclic(2)), MissingData);
  unknown.abelianization = Sourced<FgAbelianGroup>{ab({3}), Provenance::UserSupplied};
  auto und = check_vanishing_hypotheses(unknown, GroupDatum::cyclic(2));
  CHECK(und.status == Status::Undetermined);
  CHECK(und.terms[1].status == Status::Undetermined);
}

TEST_CASE("free product multiplier") {
  auto r = free_product_multiplier(GroupDatum::cyclic(2), GroupDatum::cyclic(3), 3);
  REQUIRE(r.conclusion);
  CHECK(r.conclusion->is_trivial());
  CHECK(r.hypotheses->status == Status::Pass);

  auto s = free_product_multiplier(GroupDatum::cyclic(9), GroupDatum::abelian_group(ab({4, 2})), 1);
  REQUIRE(s.conclusion);
  CHECK(*s.conclusion == ab({2}));
  CHECK_FALSE(s.hypotheses);
  CHECK_FALSE(s.caveats.empty());

  // c = 1 needs no hypotheses.
  auto t = free_product_multiplier(GroupDatum::cyclic(2), GroupDatum::cyclic(2), 1);
  CHECK(t.conclusion->is_trivial());

  try {
    free_product_multiplier(GroupDatum::cyclic(2), GroupDatum::cyclic(2), 2);
    FAIL("expected HypothesisFailed");
  } catch (const HypothesisFailed& e) {
    CHECK_FALSE(e.report().conclusion);
    const auto& wit = e.report().hypotheses->witnesses;
    CHECK(std::find(wit.begin(), wit.end(), "Tor(G^ab, H^ab)") != wit.end());
  }

  GroupDatum g;
  g.label = "G";
  g.abelianization = Sourced<FgAbelianGroup>{ab({3}), Provenance::UserSupplied};
  try {
    free_product_multiplier(g, GroupDatum::cyclic(2), 2);
    FAIL("expected Undetermined");
  } catch (const Undetermined& e) {
    CHECK_FALSE(e.report().conclusion);
    CHECK(e.report().hypotheses->status == Status::Undetermined);
  }
  // Hypotheses pass but M^(2)(A5) is unknown.
  CHECK_THROWS_AS(free_product_multiplier(builtin_group("A5"), builtin_group("A5"), 2), MissingData);
  GroupDatum a5 = builtin_group("A5");
  a5.multipliers[2] = {ab({2}), Provenance::UserSupplied};
  auto p = free_product_multiplier(a5, a5, 2);
  CHECK(*p.conclusion == ab({2, 2}));
}

TEST_CASE("Burns-Ellis formula") {
  auto r = burns_ellis_formula(GroupDatum::cyclic(2), GroupDatum::cyclic(2));
  CHECK(*r.conclusion == ab({2}));
  REQUIRE(r.summands.size() == 5);
  for (const auto& s : r.summands) CHECK(s.value.is_trivial() == (s.name != "Tor(G^ab, H^ab)"));

  CHECK(burns_ellis_formula(GroupDatum::cyclic(2), GroupDatum::cyclic(3)).conclusion->is_trivial());

  auto v = burns_ellis_formula(GroupDatum::abelian_group(ab({2, 2})), GroupDatum::cyclic(3));
  CHECK(*v.conclusion == ab({2, 2}));
  CHECK(summand(v, "M(G) (x) H^ab").value.is_trivial());
  CHECK(summand(v, "G^ab (x) M(H)").value.is_trivial());

  // Non-coprime: every mixed summand shows up.
  auto x = burns_ellis_formula(GroupDatum::abelian_group(ab({2, 2})), GroupDatum::cyclic(2));
  CHECK(summand(x, "M(G) (x) H^ab").value == ab({2}));
  CHECK(summand(x, "Tor(G^ab, H^ab)").value == ab({2, 2}));
  CHECK(*x.conclusion == ab({2, 2, 2, 2, 2}));

  CHECK_THROWS_AS(burns_ellis_formula(builtin_group("A5"), GroupDatum::cyclic(2)), MissingData);
}

TEST_CASE("Burns-Ellis reduces to the multipliers for coprime abelian groups") {
  const auto groups = oracle::abelian_groups_up_to(16);
  for (const auto& a : groups)
    for (const auto& b : groups) {
      const std::size_t p = chain_order(a), q = chain_order(b);
      if (std::gcd(p, q) != 1) continue;
      const GroupDatum g = GroupDatum::abelian_group(from_chain(a));
      const GroupDatum h = GroupDatum::abelian_group(from_chain(b));
      CAPTURE(g.label);
      CAPTURE(h.label);
      CHECK(*burns_ellis_formula(g, h).conclusion ==
            direct_sum(multiplier_of(g, 2).value, multiplier_of(h, 2).value));
    }
}

TEST_CASE("condition classifier examples") {
  auto r = classify_conditions(GroupDatum::cyclic(4), GroupDatum::cyclic(9));
  CHECK(r.satisfied() == std::vector<std::string>{"(i)", "(ii)", "(iii)"});
  CHECK(condition(r, "(iv)") == Status::Fail);
  REQUIRE(r.conditions[1].comparisons.size() == 2);
  CHECK(*r.conditions[1].comparisons[0].left == 4);
  CHECK(*r.conditions[1].comparisons[0].right == 9);
  CHECK(*r.conditions[1].comparisons[0].gcd == 1);

  auto a = classify_conditions(builtin_group("A5"), builtin_group("A5"));
  CHECK(condition(a, "(iv)") == Status::Pass);
  CHECK_FALSE(a.conditions[3].note.empty());
  CHECK(condition(a, "(i)") == Status::Fail);
  CHECK(condition(a, "(ii)") == Status::Pass);
  CHECK(condition(a, "(iii)") == Status::Undetermined);  // M(A5) not supplied
  CHECK(classify_conditions(GroupDatum::cyclic(2), GroupDatum::cyclic(2)).satisfied().empty());

  // Unknown order: undetermined, never guessed.
  GroupDatum p = GroupDatum::from_presentation(Presentation::a5(), "P");
  auto u = classify_conditions(p, GroupDatum::cyclic(2));
  CHECK(condition(u, "(ii)") == Status::Undetermined);
  CHECK(condition(u, "(iv)") == Status::Fail);
  // Known failures win over unknowns.
  CHECK(condition(classify_conditions(p, builtin_group("Z")), "(ii)") == Status::Fail);
}

TEST_CASE("satisfied conditions imply the vanishing hypotheses") {
  std::vector<GroupDatum> data;
  for (const auto& chain : oracle::abelian_groups_up_to(30)) data.push_back(abelian_datum(chain));
  for (const char* name : {"S3", "D4", "Q8", "A5"}) data.push_back(builtin_group(name));
  int implications = 0;
  for (const auto& g : data)
    for (const auto& h : data) {
      const ConditionReport cr = classify_conditions(g, h);
      if (cr.satisfied().empty()) continue;
      CAPTURE(g.label);
      CAPTURE(h.label);
      CHECK(check_vanishing_hypotheses(g, h).status == Status::Pass);
      ++implications;
    }
  CHECK(implications > 300);
}

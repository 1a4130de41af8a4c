// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only
// when every criterion passes within its time limit.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "generators.hpp"
#include "nilmult/engine/bar_homology.hpp"
#include "nilmult/engine/free_product.hpp"
#include "nilmult/errors.hpp"
#include "nilmult/hall/counting.hpp"
#include "nilmult/io/commands.hpp"
#include "nilmult/io/fixtures.hpp"
#include "nilmult/io/json_io.hpp"
#include "nilmult/nilpotent/matrix_oracle.hpp"
#include "nilmult/nilpotent/multiplier.hpp"
#include "nilmult/nilpotent/nilpotent_group.hpp"
#include "oracles.hpp"

using namespace nilmult;
namespace fs = std::filesystem;

namespace {

const fs::path kFixtures = NILMULT_FIXTURE_DIR;

struct Outcome {
  bool pass = true;
  std::string summary;
  Json detail = Json::object();
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (failures.size() < 20) failures.push_back(what);
  }
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;  // 0: untimed
  std::function<Outcome()> run;
};

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

Outcome hall_witt() {
  Outcome o;
  Json sizes = Json::object();
  for (std::size_t n = 1; n <= 4; ++n) {
    const HallBasis b = generate_hall_basis(n, 8);
    Json row = Json::array();
    for (int w = 1; w <= 8; ++w) {
      const Integer expected = witt(static_cast<long>(n), w);
      const Integer got(static_cast<unsigned long>(b.count_of_weight(w)));
      o.require(got == expected, "n=" + std::to_string(n) + " w=" + std::to_string(w) + ": " + got.get_str() +
                                     " vs " + expected.get_str());
      row.push_back(to_json(got));
    }
    sizes[std::to_string(n)] = row;
  }
  o.detail["sizes_by_weight"] = sizes;
  o.summary = "32 (n, w) pairs";
  return o;
}

Outcome bidegree_counting() {
  Outcome o;
  int bidegrees = 0;
  for (long m = 1; m <= 3; ++m)
    for (long n = 1; n <= 3; ++n)
      for (long c = 2; c <= 6; ++c) {
        const auto counts = bidegree_count(m, n, c);
        Integer total = 0;
        for (long i = 1; i < c; ++i) {
          const long j = c - i;
          auto it = counts.find(Bidegree{static_cast<int>(i), static_cast<int>(j)});
          const Integer got(it == counts.end() ? 0ul : static_cast<unsigned long>(it->second));
          o.require(got == necklace_count(m, n, i, j), "bidegree (" + std::to_string(i) + "," + std::to_string(j) +
                                                           ") for m=" + std::to_string(m) + " n=" + std::to_string(n));
          total += got;
          ++bidegrees;
        }
        o.require(counts.size() <= static_cast<std::size_t>(c - 1), "unexpected bidegree keys");
        o.require(total == mixed_rank(m, n, c) && total == witt(m + n, c) - witt(m, c) - witt(n, c),
                  "sum at m=" + std::to_string(m) + " n=" + std::to_string(n) + " c=" + std::to_string(c));
      }
  o.detail["bidegrees_checked"] = bidegrees;
  o.summary = std::to_string(bidegrees) + " bidegrees over 45 (m, n, c)";
  return o;
}

Outcome collection() {
  Outcome o;
  std::mt19937 rng(2024);
  int pairs = 0;
  for (int t = 0; t < 200; ++t, ++pairs) {
    const std::size_t n = 1 + static_cast<std::size_t>(t % 3);
    const int c = 1 + (t / 3) % 4;
    auto ctx = nilpotent_context(n, c);
    const FreeGroupWord u = gen::free_word(rng, n, 10), v = gen::free_word(rng, n, 10);
    o.require(collect(u * v, ctx) == multiply(collect(u, ctx), collect(v, ctx)),
              "pair " + std::to_string(t) + ": " + u.to_string() + " | " + v.to_string());
  }
  int matrix_words = 0;
  for (int t = 0; t < 100; ++t, ++matrix_words) {
    const std::size_t n = 1 + static_cast<std::size_t>(t % 3);
    const FreeGroupWord w = gen::free_word(rng, n, 24, 3);
    o.require(matrix_oracle_check(w), "matrix oracle: " + w.to_string());
  }
  int commutators = 0;
  for (std::size_t n = 1; n <= 3; ++n)
    for (int c = 1; c <= 4; ++c) {
      auto ctx = nilpotent_context(n, c);
      // Every left-normed commutator of c+1 generators.
      std::vector<std::size_t> idx(static_cast<std::size_t>(c) + 1, 1);
      while (true) {
        std::vector<NilpotentElement> xs;
        for (std::size_t g : idx) xs.push_back(NilpotentElement::generator(ctx, g));
        o.require(left_normed_commutator(xs).is_identity(), "generator commutator, c=" + std::to_string(c));
        ++commutators;
        std::size_t k = 0;
        while (k < idx.size() && idx[k] == n) idx[k++] = 1;
        if (k == idx.size()) break;
        ++idx[k];
      }
      // And of random elements.
      for (int t = 0; t < 10; ++t) {
        std::vector<NilpotentElement> xs;
        for (int i = 0; i <= c; ++i) xs.push_back(collect(gen::free_word(rng, n, 6), ctx));
        o.require(left_normed_commutator(xs).is_identity(), "element commutator, c=" + std::to_string(c));
        ++commutators;
      }
    }
  o.detail = Json{{"pairs", pairs}, {"matrix_words", matrix_words}, {"commutators", commutators}};
  o.summary = std::to_string(pairs) + " pairs, " + std::to_string(matrix_words) + " class-2 words, " +
              std::to_string(commutators) + " commutators";
  return o;
}

Outcome multiplier_vs_bar() {
  Outcome o;
  int groups = 0;
  Json table = Json::object();
  for (const auto& chain : oracle::abelian_groups_up_to(36)) {
    const FgAbelianGroup g = from_chain(chain);
    const FiniteGroupTable t = chain.empty() ? FiniteGroupTable::cyclic(1) : FiniteGroupTable::abelian(chain);
    const FgAbelianGroup engine = nilpotent_multiplier(g, 1);
    const FgAbelianGroup bar = bar_h2(t, 36);
    o.require(engine == bar, g.to_string() + ": engine " + engine.to_string() + ", bar " + bar.to_string());
    table[g.to_string()] = engine.to_string();
    ++groups;
  }
  int cyclic = 0;
  for (long n = 1; n <= 12; ++n)
    for (int c = 1; c <= 5; ++c, ++cyclic)
      o.require(nilpotent_multiplier_abelian({n}, c).is_trivial(),
                "M^(" + std::to_string(c) + ")(Z_" + std::to_string(n) + ") nontrivial");
  o.detail = Json{{"schur_multipliers", table}, {"cyclic_cases", cyclic}};
  o.summary = std::to_string(groups) + " groups against the bar complex, " + std::to_string(cyclic) + " cyclic cases";
  return o;
}

Outcome free_product_pipeline() {
  Outcome o;
  const auto chains = oracle::abelian_groups_up_to(30);
  std::vector<GroupDatum> data;
  for (const auto& chain : chains) data.push_back(GroupDatum::abelian_group(from_chain(chain)));
  int pairs = 0;
  for (std::size_t a = 0; a < chains.size(); ++a)
    for (std::size_t b = 0; b < chains.size(); ++b) {
      if (std::gcd(chain_order(chains[a]), chain_order(chains[b])) != 1) continue;
      const GroupDatum& g = data[a];
      const GroupDatum& h = data[b];
      const std::string pair = g.label + " * " + h.label;
      o.require(check_vanishing_hypotheses(g, h).status == Status::Pass, "hypotheses on " + pair);
      for (int c = 1; c <= 3; ++c) {
        const FgAbelianGroup expected =
            direct_sum(oracle::abelian_multiplier_closed_form(g.abelianization->value, c),
                       oracle::abelian_multiplier_closed_form(h.abelianization->value, c));
        try {
          const auto r = free_product_multiplier(g, h, c);
          o.require(r.conclusion && *r.conclusion == expected, pair + " c=" + std::to_string(c));
        } catch (const Error& e) {
          o.require(false, pair + " c=" + std::to_string(c) + ": " + e.what());
        }
      }
      ++pairs;
    }
  const auto z2 = GroupDatum::cyclic(2);
  bool failed_with_tor = false;
  try {
    free_product_multiplier(z2, z2, 2);
  } catch (const HypothesisFailed& e) {
    for (const auto& t : e.report().hypotheses->terms)
      if (t.name == "Tor(G^ab, H^ab)" && t.status == Status::Fail && t.value == FgAbelianGroup::cyclic(2))
        failed_with_tor = !e.report().conclusion;
  }
  o.require(failed_with_tor, "Z_2 * Z_2 did not fail with Tor = Z_2");
  const auto f = burns_ellis_formula(z2, z2);
  bool only_tor = f.conclusion && *f.conclusion == FgAbelianGroup::cyclic(2);
  for (const auto& s : f.summands) only_tor = only_tor && (s.value.is_trivial() == (s.name != "Tor(G^ab, H^ab)"));
  o.require(only_tor, "Burns-Ellis on Z_2, Z_2");
  o.detail = Json{{"coprime_pairs", pairs}, {"classes", 3}};
  o.summary = std::to_string(pairs) + " coprime pairs x 3 classes, Z_2 * Z_2 negative control";
  return o;
}

Outcome condition_classifier() {
  Outcome o;
  std::vector<GroupDatum> data;
  for (const auto& chain : oracle::abelian_groups_up_to(30)) data.push_back(GroupDatum::abelian_group(from_chain(chain)));
  for (const char* name : {"S3", "D4", "Q8", "A5"}) data.push_back(builtin_group(name));
  for (const auto& entry : fs::directory_iterator(kFixtures / "groups"))
    data.push_back(group_datum_from_json(load_json_file(entry.path())));
  int implications = 0, pairs = 0;
  Json counts = Json::object();
  for (const auto& g : data)
    for (const auto& h : data) {
      ++pairs;
      const ConditionReport r = classify_conditions(g, h);
      for (const auto& c : r.conditions) {
        if (c.status != Status::Pass || c.label == "(iv)") continue;
        ++implications;
        counts[c.label] = counts.value(c.label, 0) + 1;
        o.require(check_vanishing_hypotheses(g, h).status == Status::Pass,
                  c.label + " holds but the hypotheses do not, on " + g.label + ", " + h.label);
      }
    }
  const GroupDatum a5 = builtin_group("A5");
  const bool perfect = a5.presentation && is_perfect(*a5.presentation) &&
                       abelianization(*a5.presentation).is_trivial() &&
                       a5.abelianization->provenance == Provenance::Computed;
  o.require(perfect, "A5 presentation is not perfect by SNF");
  const ConditionReport r = classify_conditions(a5, a5);
  bool iv = false;
  for (const auto& c : r.conditions) iv = iv || (c.label == "(iv)" && c.status == Status::Pass);
  o.require(iv, "(iv) does not hold for A5, A5");
  o.require(check_vanishing_hypotheses(a5, a5).status == Status::Pass, "hypotheses fail for A5, A5");
  o.detail = Json{{"pairs", pairs}, {"implications", implications}, {"by_condition", counts}};
  o.summary = std::to_string(pairs) + " pairs, " + std::to_string(implications) + " satisfied conditions checked";
  return o;
}

Outcome simplicial_layer() {
  Outcome o;
  int fixtures = 0, complexes = 0;
  for (const auto& entry : fs::directory_iterator(kFixtures / "simplicial")) {
    const Json fx = load_json_file(entry.path());
    const std::string kind = fixture_kind(fx);
    const std::string name = entry.path().filename().string();
    const bool negative = name == "circle_corrupted.json";
    std::vector<TruncatedSimplicialAbelianGroup> objects;
    if (is_simplicial_set_kind(kind)) {
      const auto k = simplicial_set_from_json(fx);
      o.require(k.validate().ok() != negative, name + " validation");
      if (!negative) objects.push_back(TruncatedSimplicialAbelianGroup::free_on(k));
    } else if (is_simplicial_abelian_kind(kind)) {
      objects.push_back(simplicial_abelian_from_json(fx));
    } else if (kind == "directed-system") {
      for (auto& a : directed_system_from_json(fx).objects) objects.push_back(std::move(a));
    } else if (kind == "kunneth") {
      const auto a = simplicial_abelian_from_json(fx["a"]), b = simplicial_abelian_from_json(fx["b"]);
      o.require(kunneth_check(a, b).holds(), name + " Kunneth");
      objects.push_back(a);
      objects.push_back(b);
      objects.push_back(tensor_sab(a, b));
    }
    for (const auto& a : objects) {
      o.require(a.validate().ok(), name + " object validation");
      o.require(moore_complex(a).chains.is_valid(), name + " Moore boundary squares");
      ++complexes;
    }
    ++fixtures;
  }
  for (const char* group : {"Z2", "S3", "Z2xZ2"}) {
    const auto k = nerve(builtin_group(group).table ? *builtin_group(group).table
                                                     : FiniteGroupTable::abelian({2, 2}),
                         4);
    o.require(k.validate().ok(), std::string("nerve ") + group);
  }
  const auto circle = abelianize(kan_loop_group(simplicial_circle(4)));
  o.require(homotopy(circle, 0) == FgAbelianGroup::free(1), "pi_0 of the circle's loop group");
  const auto z2 = abelianize(kan_loop_group(nerve(FiniteGroupTable::cyclic(2), 4)));
  o.require(homotopy(z2, 0) == FgAbelianGroup::cyclic(2), "pi_0 of the loop group of nerve(Z_2)");

  std::mt19937 rng(77);
  int kunneth = 0;
  for (int t = 0; t < 50; ++t, ++kunneth) {
    const auto a = dold_kan(gen::small_complex(rng), 4), b = dold_kan(gen::small_complex(rng), 4);
    o.require(kunneth_check(a, b).holds(), "random Kunneth fixture " + std::to_string(t));
    o.require(moore_complex(tensor_sab(a, b)).chains.is_valid(), "Moore boundary squares on a tensor product");
  }
  for (const char* file : {"system_constant.json", "system_stabilizing.json"}) {
    const DirectedSystem s = directed_system_from_json(load_json_file(kFixtures / "simplicial" / file));
    for (int n = 0; n <= 2; ++n) o.require(limit_commutes(s, n, 8).holds, std::string(file) + " degree " + std::to_string(n));
  }
  bool unstabilized = false;
  try {
    colimit_stabilized(directed_system_from_json(load_json_file(kFixtures / "simplicial" / "system_doubling.json")), 64);
  } catch (const Unstabilized&) {
    unstabilized = true;
  }
  o.require(unstabilized, "doubling system did not raise Unstabilized");
  o.detail = Json{{"fixtures", fixtures}, {"complexes", complexes}, {"random_kunneth", kunneth}};
  o.summary = std::to_string(fixtures) + " fixtures, " + std::to_string(kunneth) + " random Kunneth pairs";
  return o;
}

std::vector<Criterion> criteria() {
  return {
      {1, "Hall basis sizes match the Witt formula (n <= 4, w <= 8)", 10, hall_witt},
      {2, "mixed commutator counts by bidegree (m, n <= 3, c <= 6)", 30, bidegree_counting},
      {3, "collection: associativity, matrix oracle, nilpotency", 60, collection},
      {4, "Schur multiplier engine against the bar complex (order <= 36)", 120, multiplier_vs_bar},
      {5, "free-product multipliers for coprime abelian pairs (order <= 30, c <= 3)", 120, free_product_pipeline},
      {6, "sufficient conditions imply the vanishing hypotheses", 0, condition_classifier},
      {7, "simplicial identities, Moore complexes, loop groups, Kunneth, colimits", 120, simplicial_layer},
  };
}

Json report_of(const Criterion& c, const Outcome& o) {
  return Json{{"id", c.id}, {"name", c.name}, {"pass", o.pass}, {"summary", o.summary},
              {"detail", o.detail}, {"failures", o.failures}};
}

// Reports from the command layer, for the determinism check.
Json command_reports() {
  Json out = Json::array();
  auto add = [&](JobConfig job) { out.push_back(execute(job).report); };
  JobConfig j;
  j.command = "witt";
  j.args = {"3", "7"};
  add(j);
  j = {};
  j.command = "multiplier";
  j.invariants = {2, 4, 4};
  j.cls = 2;
  add(j);
  j = {};
  j.command = "free-product";
  j.inputs["g"] = Json("Z2");
  j.inputs["h"] = Json("Z2");
  j.cls = 2;
  add(j);
  j = {};
  j.command = "corollary";
  j.inputs["g"] = Json("A5");
  j.inputs["h"] = Json("Z4");
  add(j);
  j = {};
  j.command = "simplicial";
  j.args = {"kunneth"};
  j.inputs["fixture"] = load_json_file(kFixtures / "simplicial" / "kunneth_circle_moore.json");
  add(j);
  return out;
}

std::string seconds(double s) {
  std::ostringstream ss;
  ss.precision(2);
  ss << std::fixed << s << " s";
  return ss.str();
}

void line(bool pass, int id, const std::string& name, const std::string& rest) {
  std::cout << (pass ? "PASS" : "FAIL") << " [" << id << "] " << name << ": " << rest << std::endl;
}

}  // namespace

int main() {
  bool all = true;
  Json first = Json::array();
  for (const auto& c : criteria()) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit_seconds == 0 || elapsed < c.limit_seconds;
    const bool pass = o.pass && in_time;
    all = all && pass;
    std::string rest = o.summary + " (" + seconds(elapsed);
    if (c.limit_seconds > 0) rest += ", limit " + seconds(c.limit_seconds);
    rest += ")";
    line(pass, c.id, c.name, rest);
    for (const auto& f : o.failures) std::cout << "       " << f << "\n";
    if (!in_time) std::cout << "       over the time limit\n";
    first.push_back(report_of(c, o));
  }
  first.push_back(Json{{"commands", command_reports()}});

  // Second full run; the JSON must match byte for byte.
  const auto start = std::chrono::steady_clock::now();
  Json second = Json::array();
  for (const auto& c : criteria()) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    second.push_back(report_of(c, o));
  }
  second.push_back(Json{{"commands", command_reports()}});
  const std::string a = dump(first), b = dump(second);
  const bool same = a == b;
  all = all && same;
  line(same, 8, "two full runs give byte-identical JSON reports",
       std::to_string(a.size()) + " bytes (" +
           seconds(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()) + ")");
  std::ofstream("acceptance_report.json") << a;
  return all ? 0 : 1;
}

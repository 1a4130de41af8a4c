#include "nilmult/engine/free_product.hpp"

#include <gmpxx.h>

namespace nilmult {

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Undetermined: return "undetermined";
  }
  return "?";
}

namespace {

std::string terms_with(const FreeProductReport& r, Status s) {
  std::string out;
  if (!r.hypotheses) return out;
  for (const auto& t : r.hypotheses->terms) {
    if (t.status != s) continue;
    out += out.empty() ? ": " : "; ";
    out += t.name;
    if (t.value) out += " = " + t.value->to_string();
  }
  return out;
}

}  // namespace

HypothesisFailed::HypothesisFailed(FreeProductReport report)
    : Error("hypothesis failed" + terms_with(report, Status::Fail)), report_(std::move(report)) {}

Undetermined::Undetermined(FreeProductReport report)
    : Error("hypothesis undetermined" + terms_with(report, Status::Undetermined)), report_(std::move(report)) {}

std::vector<std::string> ConditionReport::satisfied() const {
  std::vector<std::string> out;
  for (const auto& c : conditions)
    if (c.status == Status::Pass) out.push_back(c.label);
  return out;
}

namespace {

const FgAbelianGroup& require_ab(const GroupDatum& g, const char* which) {
  if (!g.abelianization) throw MissingData(std::string("abelianization of ") + which + " (" + g.label + ")");
  return g.abelianization->value;
}

Status combine(const std::vector<Status>& parts) {
  bool undetermined = false;
  for (Status s : parts) {
    if (s == Status::Fail) return Status::Fail;
    if (s == Status::Undetermined) undetermined = true;
  }
  return undetermined ? Status::Undetermined : Status::Pass;
}

HypothesisTerm vanishing(std::string name, FgAbelianGroup value) {
  HypothesisTerm t;
  t.name = std::move(name);
  t.status = value.is_trivial() ? Status::Pass : Status::Fail;
  t.value = std::move(value);
  return t;
}

// M(X) (x) Y^ab; trivial when Y^ab is, whatever M(X) is.
HypothesisTerm multiplier_tensor(std::string name, const GroupDatum& x, const FgAbelianGroup& y_ab,
                                 bool multiplier_first, const EngineOptions& options) {
  if (y_ab.is_trivial()) {
    HypothesisTerm t;
    t.name = std::move(name);
    t.status = Status::Pass;
    t.value = FgAbelianGroup::trivial();
    t.note = "other factor trivial";
    return t;
  }
  auto m = try_multiplier(x, 1, options);
  if (!m && x.order.finite() && y_ab.is_finite()) {
    // Every prime dividing |M(X)| divides |X|.
    Integer d;
    mpz_gcd(d.get_mpz_t(), x.order.value.get_mpz_t(), y_ab.order()->get_mpz_t());
    if (d == 1) {
      HypothesisTerm t;
      t.name = std::move(name);
      t.status = Status::Pass;
      t.value = FgAbelianGroup::trivial();
      t.note = "(|" + x.label + "|, |other^ab|) = 1";
      return t;
    }
  }
  if (!m) {
    HypothesisTerm t;
    t.name = std::move(name);
    t.status = Status::Undetermined;
    t.note = "M(" + x.label + ") unknown";
    return t;
  }
  return vanishing(std::move(name), multiplier_first ? tensor(m->value, y_ab) : tensor(y_ab, m->value));
}

}  // namespace

HypothesisReport check_vanishing_hypotheses(const GroupDatum& g, const GroupDatum& h,
                                            const EngineOptions& options) {
  const FgAbelianGroup& gab = require_ab(g, "G");
  const FgAbelianGroup& hab = require_ab(h, "H");
  HypothesisReport r;
  r.terms.push_back(vanishing("G^ab (x) H^ab", tensor(gab, hab)));
  r.terms.push_back(multiplier_tensor("M(G) (x) H^ab", g, hab, true, options));
  r.terms.push_back(multiplier_tensor("M(H) (x) G^ab", h, gab, true, options));
  r.terms.push_back(vanishing("Tor(G^ab, H^ab)", tor(gab, hab)));
  std::vector<Status> parts;
  for (const auto& t : r.terms) {
    parts.push_back(t.status);
    if (t.status == Status::Fail) r.witnesses.push_back(t.name);
  }
  r.status = combine(parts);
  return r;
}

FreeProductReport free_product_multiplier(const GroupDatum& g, const GroupDatum& h, int c,
                                          const EngineOptions& options) {
  if (c < 1) throw InvalidInput("class must be >= 1");
  g.check();
  h.check();
  FreeProductReport r;
  r.g_label = g.label;
  r.h_label = h.label;
  r.c = c;
  if (c == 1) {
    r.method = "schur-free-product";
    r.caveats.push_back(
        "c = 1: M(G * H) = M(G) + M(H) holds for all groups (classical background result, "
        "no hypotheses checked)");
  } else {
    r.method = "vanishing-hypotheses";
    r.hypotheses = check_vanishing_hypotheses(g, h, options);
    if (g.abelianization && h.abelianization) r.conditions = classify_conditions(g, h, options);
    if (r.hypotheses->status == Status::Fail) throw HypothesisFailed(std::move(r));
    if (r.hypotheses->status == Status::Undetermined) {
      r.caveats.push_back("some hypothesis could not be decided; no conclusion drawn");
      throw Undetermined(std::move(r));
    }
  }
  auto mg = try_multiplier(g, c, options);
  if (!mg) throw MissingData("M^(" + std::to_string(c) + ") of G (" + g.label + ")");
  auto mh = try_multiplier(h, c, options);
  if (!mh) throw MissingData("M^(" + std::to_string(c) + ") of H (" + h.label + ")");
  const std::string cs = std::to_string(c);
  r.summands.push_back({"M^(" + cs + ")(G)", mg->value});
  r.summands.push_back({"M^(" + cs + ")(H)", mh->value});
  r.conclusion = direct_sum(mg->value, mh->value);
  return r;
}

FreeProductReport burns_ellis_formula(const GroupDatum& g, const GroupDatum& h,
                                      const EngineOptions& options) {
  g.check();
  h.check();
  const FgAbelianGroup& gab = require_ab(g, "G");
  const FgAbelianGroup& hab = require_ab(h, "H");
  auto need = [&](const GroupDatum& x, int c, const char* which) {
    auto m = try_multiplier(x, c, options);
    if (!m) throw MissingData("M^(" + std::to_string(c) + ") of " + which + " (" + x.label + ")");
    return m->value;
  };
  auto mixed = [&](const GroupDatum& x, const FgAbelianGroup& y_ab, const char* which, bool m_first) {
    if (y_ab.is_trivial()) return FgAbelianGroup::trivial();
    FgAbelianGroup m = need(x, 1, which);
    return m_first ? tensor(m, y_ab) : tensor(y_ab, m);
  };
  FreeProductReport r;
  r.g_label = g.label;
  r.h_label = h.label;
  r.c = 2;
  r.method = "burns-ellis";
  r.summands.push_back({"M^(2)(G)", need(g, 2, "G")});
  r.summands.push_back({"M^(2)(H)", need(h, 2, "H")});
  r.summands.push_back({"M(G) (x) H^ab", mixed(g, hab, "G", true)});
  r.summands.push_back({"G^ab (x) M(H)", mixed(h, gab, "H", false)});
  r.summands.push_back({"Tor(G^ab, H^ab)", tor(gab, hab)});
  FgAbelianGroup total;
  for (const auto& s : r.summands) total = direct_sum(total, s.value);
  r.conclusion = total;
  r.caveats.push_back("holds for all groups G, H; no hypotheses required");
  return r;
}

namespace {

struct Comparator {
  ConditionResult& result;
  std::vector<Status> parts;

  // gcd(a, b) == 1, when both are known.
  void coprime(std::string what, std::optional<Integer> a, std::optional<Integer> b) {
    GcdComparison cmp{std::move(what), a, b, std::nullopt};
    if (a && b) {
      Integer d;
      mpz_gcd(d.get_mpz_t(), a->get_mpz_t(), b->get_mpz_t());
      cmp.gcd = d;
      parts.push_back(d == 1 ? Status::Pass : Status::Fail);
    } else {
      parts.push_back(Status::Undetermined);
    }
    result.comparisons.push_back(std::move(cmp));
  }

  void require(Status s) { parts.push_back(s); }

  void finish() { result.status = combine(parts); }
};

std::optional<Integer> finite_order(const GroupDatum& g) {
  if (g.order.finite()) return g.order.value;
  return std::nullopt;
}

Status finiteness(const GroupDatum& g) {
  switch (g.order.kind) {
    case GroupOrder::Kind::Finite: return Status::Pass;
    case GroupOrder::Kind::Infinite: return Status::Fail;
    case GroupOrder::Kind::Unknown: break;
  }
  if (g.abelianization && !g.abelianization->value.is_finite()) return Status::Fail;
  return Status::Undetermined;
}

std::optional<Integer> ab_order(const GroupDatum& g) {
  if (!g.abelianization) return std::nullopt;
  return g.abelianization->value.order();
}

std::optional<Integer> multiplier_order(const GroupDatum& g, const EngineOptions& options) {
  try {
    if (auto m = try_multiplier(g, 1, options)) return m->value.order();
  } catch (const ResourceLimitError&) {
  }
  return std::nullopt;
}

}  // namespace

ConditionReport classify_conditions(const GroupDatum& g, const GroupDatum& h,
                                    const EngineOptions& options) {
  ConditionReport report;

  {
    ConditionResult r{"(i)", "G, H abelian of coprime orders", Status::Undetermined, {}, {}};
    Comparator cmp{r, {}};
    for (const GroupDatum* x : {&g, &h}) {
      cmp.require(!x->abelian ? Status::Undetermined : x->abelian->value ? Status::Pass : Status::Fail);
      cmp.require(finiteness(*x));
    }
    cmp.coprime("(|G|, |H|)", finite_order(g), finite_order(h));
    cmp.finish();
    report.conditions.push_back(std::move(r));
  }
  {
    ConditionResult r{"(ii)", "(|G|, |H^ab|) = (|G^ab|, |H|) = 1", Status::Undetermined, {}, {}};
    Comparator cmp{r, {}};
    cmp.require(finiteness(g));
    cmp.require(finiteness(h));
    cmp.coprime("(|G|, |H^ab|)", finite_order(g), ab_order(h));
    cmp.coprime("(|G^ab|, |H|)", ab_order(g), finite_order(h));
    cmp.finish();
    report.conditions.push_back(std::move(r));
  }
  {
    ConditionResult r{"(iii)", "(|G^ab|, |H^ab|) = (|M(G)|, |H|) = (|G^ab|, |M(H)|) = 1",
                      Status::Undetermined, {}, {}};
    Comparator cmp{r, {}};
    cmp.require(finiteness(g));
    cmp.require(finiteness(h));
    cmp.coprime("(|G^ab|, |H^ab|)", ab_order(g), ab_order(h));
    cmp.coprime("(|M(G)|, |H|)", multiplier_order(g, options), finite_order(h));
    cmp.coprime("(|G^ab|, |M(H)|)", ab_order(g), multiplier_order(h, options));
    cmp.finish();
    report.conditions.push_back(std::move(r));
  }
  {
    ConditionResult r{"(iv)", "G, H perfect", Status::Undetermined, {}, {}};
    r.note = "sometimes printed as (vi); this is the fourth condition";
    Comparator cmp{r, {}};
    for (const GroupDatum* x : {&g, &h}) {
      if (!x->abelianization) cmp.require(Status::Undetermined);
      else cmp.require(x->abelianization->value.is_trivial() ? Status::Pass : Status::Fail);
    }
    cmp.finish();
    report.conditions.push_back(std::move(r));
  }
  return report;
}

}  // namespace nilmult

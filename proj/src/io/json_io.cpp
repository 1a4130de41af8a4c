#include "nilmult/io/json_io.hpp"

#include <algorithm>

#include "nilmult/errors.hpp"
#include "nilmult/io/word_parser.hpp"

namespace nilmult {

namespace {

const Integer kSafeMax("9007199254740992");  // 2^53

const Json& required(const Json& j, const char* key, const std::string& what) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(what + ": missing \"" + key + "\"");
  return j.at(key);
}

std::string string_of(const Json& j, const std::string& what) {
  if (!j.is_string()) throw InvalidInput(what + ": expected a string");
  return j.get<std::string>();
}

bool bool_of(const Json& j, const std::string& what) {
  if (!j.is_boolean()) throw InvalidInput(what + ": expected true or false");
  return j.get<bool>();
}

long long_of(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw InvalidInput(what + ": expected an integer");
  return j.get<long>();
}

std::size_t size_of(const Json& j, const std::string& what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long>() >= 0))
    throw InvalidInput(what + ": expected a non-negative integer");
  return j.get<std::size_t>();
}

const Json& array_of(const Json& j, const std::string& what) {
  if (!j.is_array()) throw InvalidInput(what + ": expected an array");
  return j;
}

std::vector<std::string> strings_of(const Json& j, const std::string& what) {
  std::vector<std::string> out;
  for (const auto& x : array_of(j, what)) out.push_back(string_of(x, what));
  return out;
}

Json optional_group(const std::optional<FgAbelianGroup>& g) { return g ? to_json(*g) : Json(nullptr); }

std::optional<FgAbelianGroup> optional_group_from(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return abelian_group_from_json(j);
}

Json optional_integer(const std::optional<Integer>& x) { return x ? to_json(*x) : Json(nullptr); }

std::optional<Integer> optional_integer_from(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return integer_from_json(j);
}

Provenance provenance_from(const Json& j) {
  const std::string s = string_of(j, "provenance");
  if (s == "builtin") return Provenance::Builtin;
  if (s == "computed") return Provenance::Computed;
  if (s == "user-supplied") return Provenance::UserSupplied;
  throw InvalidInput("unknown provenance \"" + s + "\"");
}

Status status_from(const Json& j) {
  const std::string s = string_of(j, "status");
  if (s == "pass") return Status::Pass;
  if (s == "fail") return Status::Fail;
  if (s == "undetermined") return Status::Undetermined;
  throw InvalidInput("unknown status \"" + s + "\"");
}

Json order_json(const GroupOrder& o) {
  switch (o.kind) {
    case GroupOrder::Kind::Finite: return to_json(o.value);
    case GroupOrder::Kind::Infinite: return "infinite";
    case GroupOrder::Kind::Unknown: break;
  }
  return nullptr;
}

}  // namespace

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    throw ParseError(offset, {"JSON value"}, e.what());
  }
}

void reject_unknown_keys(const Json& j, std::initializer_list<const char*> allowed, const std::string& what) {
  if (!j.is_object()) throw InvalidInput(what + ": expected an object");
  for (const auto& [key, value] : j.items())
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }))
      throw InvalidInput(what + ": unknown key \"" + key + "\"");
}

Json to_json(const Integer& x) {
  if (abs(x) <= kSafeMax) return x.get_si();
  return x.get_str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long>()));
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long>()));
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
    if (s.size() == start || !std::all_of(s.begin() + static_cast<long>(start), s.end(), ::isdigit))
      throw InvalidInput("not an integer: \"" + s + "\"");
    return Integer(s);
  }
  throw InvalidInput("expected an integer");
}

Json to_json(const IntegerMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return Json{{"rows", m.rows()}, {"cols", m.cols()}};
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntegerMatrix matrix_from_json(const Json& j) {
  if (j.is_object()) {
    reject_unknown_keys(j, {"rows", "cols"}, "matrix");
    const std::size_t r = size_of(required(j, "rows", "matrix"), "matrix rows");
    const std::size_t c = size_of(required(j, "cols", "matrix"), "matrix cols");
    if (r != 0 && c != 0) throw InvalidInput("matrix: the object form is only for empty matrices");
    return IntegerMatrix(r, c);
  }
  array_of(j, "matrix");
  if (j.empty()) throw InvalidInput("matrix: use {\"rows\", \"cols\"} for an empty matrix");
  const std::size_t cols = array_of(j[0], "matrix row").size();
  IntegerMatrix m(j.size(), cols);
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (array_of(j[r], "matrix row").size() != cols) throw InvalidInput("matrix: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = integer_from_json(j[r][c]);
  }
  return m;
}

Json to_json(const FgAbelianGroup& g) {
  Json inv = Json::array();
  for (const auto& d : g.invariant_factors()) inv.push_back(to_json(d));
  return Json{{"text", g.to_string()}, {"free_rank", g.free_rank()}, {"invariants", std::move(inv)}};
}

FgAbelianGroup abelian_group_from_json(const Json& j) {
  if (j.is_array()) {
    std::vector<Integer> orders;
    for (const auto& x : j) orders.push_back(integer_from_json(x));
    for (const auto& o : orders)
      if (o < 0) throw InvalidInput("abelian group: cyclic orders must be >= 0");
    return FgAbelianGroup::from_cyclic_orders(orders);
  }
  reject_unknown_keys(j, {"text", "free_rank", "invariants"}, "abelian group");
  const std::size_t rank = size_of(required(j, "free_rank", "abelian group"), "free_rank");
  std::vector<Integer> inv;
  for (const auto& x : array_of(required(j, "invariants", "abelian group"), "invariants"))
    inv.push_back(integer_from_json(x));
  FgAbelianGroup g(rank, std::move(inv));
  if (j.contains("text") && string_of(j["text"], "text") != g.to_string())
    throw InvalidInput("abelian group: text \"" + j["text"].get<std::string>() +
                       "\" disagrees with the invariants (" + g.to_string() + ")");
  return g;
}

Json to_json(const FiniteGroupTable& t) {
  Json rows = Json::array();
  for (const auto& row : t.table()) rows.push_back(row);
  return Json{{"label", t.label()}, {"identity", t.identity()}, {"table", std::move(rows)}};
}

FiniteGroupTable finite_group_from_json(const Json& j) {
  const Json* rows = &j;
  std::size_t identity = 0;
  std::string label;
  if (j.is_object()) {
    reject_unknown_keys(j, {"label", "identity", "table"}, "group table");
    rows = &required(j, "table", "group table");
    if (j.contains("identity")) identity = size_of(j["identity"], "identity");
    if (j.contains("label")) label = string_of(j["label"], "label");
  }
  std::vector<std::vector<std::size_t>> table;
  for (const auto& row : array_of(*rows, "group table")) {
    std::vector<std::size_t> r;
    for (const auto& x : array_of(row, "group table row")) r.push_back(size_of(x, "group table entry"));
    table.push_back(std::move(r));
  }
  if (label.empty()) label = "G" + std::to_string(table.size());
  return FiniteGroupTable(std::move(table), identity, label);
}

Json to_json(const Presentation& p) {
  Json rel = Json::array();
  for (const auto& r : p.relators) rel.push_back(r.to_string());
  return Json{{"generators", p.generator_count}, {"relators", std::move(rel)}};
}

Presentation presentation_from_json(const Json& j) {
  reject_unknown_keys(j, {"generators", "names", "relators"}, "presentation");
  GeneratorNames names;
  if (j.contains("names")) {
    names.names = strings_of(j["names"], "names");
    names.frozen = true;
  }
  Presentation p;
  for (const auto& r : array_of(required(j, "relators", "presentation"), "relators"))
    p.relators.push_back(parse_word(string_of(r, "relator"), names));
  std::size_t n = names.names.size();
  for (const auto& r : p.relators) n = std::max(n, r.max_generator());
  if (j.contains("generators")) {
    const std::size_t given = size_of(j["generators"], "generators");
    if (given < n) throw InvalidInput("presentation: relators use more than " + std::to_string(given) + " generators");
    n = given;
  }
  p.generator_count = n;
  p.check();
  return p;
}

Json to_json(const GroupDatum& d) {
  Json j;
  j["label"] = d.label;
  j["source"] = to_string(d.source);
  j["order"] = order_json(d.order);
  j["abelian"] = d.abelian ? Json(d.abelian->value) : Json(nullptr);
  j["abelianization"] = d.abelianization ? to_json(d.abelianization->value) : Json(nullptr);
  Json mult = Json::object();
  Json mult_prov = Json::object();
  for (const auto& [c, m] : d.multipliers) {
    mult[std::to_string(c)] = to_json(m.value);
    mult_prov[std::to_string(c)] = to_string(m.provenance);
  }
  j["multipliers"] = std::move(mult);
  Json prov = Json::object();
  if (d.order.kind != GroupOrder::Kind::Unknown) prov["order"] = to_string(d.order.provenance);
  if (d.abelian) prov["abelian"] = to_string(d.abelian->provenance);
  if (d.abelianization) prov["abelianization"] = to_string(d.abelianization->provenance);
  prov["multipliers"] = std::move(mult_prov);
  j["provenance"] = std::move(prov);
  if (d.table) j["table"] = to_json(*d.table);
  if (d.presentation) j["presentation"] = to_json(*d.presentation);
  return j;
}

GroupDatum group_datum_from_json(const Json& j) {
  reject_unknown_keys(j,
                      {"label", "source", "name", "order", "abelian", "abelianization", "multipliers",
                       "provenance", "table", "presentation"},
                      "group datum");
  const std::string source = j.contains("source") ? string_of(j["source"], "source") : "user";
  const std::string label = j.contains("label") ? string_of(j["label"], "label") : "";
  GroupDatum d;
  if (source == "builtin") {
    d = builtin_group(string_of(required(j, "name", "group datum"), "name"));
  } else if (source == "cyclic") {
    const Json& o = required(j, "order", "cyclic group datum");
    d = GroupDatum::cyclic(o == "infinite" ? Integer(0) : integer_from_json(o));
  } else if (source == "abelian") {
    d = GroupDatum::abelian_group(abelian_group_from_json(required(j, "abelianization", "abelian group datum")));
  } else if (source == "table") {
    d = GroupDatum::from_table(finite_group_from_json(required(j, "table", "table group datum")));
  } else if (source == "presentation") {
    d = GroupDatum::from_presentation(presentation_from_json(required(j, "presentation", "presentation datum")),
                                      label.empty() ? "G" : label);
  } else if (source == "user") {
    d.source = GroupSource::User;
    if (j.contains("table")) d.table = std::make_shared<const FiniteGroupTable>(finite_group_from_json(j["table"]));
    if (j.contains("presentation")) d.presentation = presentation_from_json(j["presentation"]);
  } else {
    throw InvalidInput("group datum: unknown source \"" + source + "\"");
  }
  if (!label.empty()) d.label = label;
  if (d.label.empty()) throw InvalidInput("group datum: missing \"label\"");

  const Json prov = j.contains("provenance") ? j["provenance"] : Json::object();
  reject_unknown_keys(prov, {"order", "abelian", "abelianization", "multipliers"}, "provenance");
  auto prov_of = [&](const char* key) {
    return prov.contains(key) ? provenance_from(prov[key]) : Provenance::UserSupplied;
  };
  if (j.contains("order") && !j["order"].is_null() && source != "cyclic") {
    if (j["order"] == "infinite") d.order = GroupOrder::infinite(prov_of("order"));
    else d.order = GroupOrder::of(integer_from_json(j["order"]), prov_of("order"));
  } else if (j.contains("order") && source == "cyclic" && prov.contains("order")) {
    d.order.provenance = prov_of("order");
  }
  if (j.contains("abelian") && !j["abelian"].is_null())
    d.abelian = Sourced<bool>{bool_of(j["abelian"], "abelian"), prov_of("abelian")};
  if (j.contains("abelianization") && !j["abelianization"].is_null())
    d.abelianization = Sourced<FgAbelianGroup>{abelian_group_from_json(j["abelianization"]), prov_of("abelianization")};
  if (j.contains("multipliers")) {
    const Json& mult = j["multipliers"];
    if (!mult.is_object()) throw InvalidInput("multipliers: expected an object keyed by class");
    const Json mprov = prov.contains("multipliers") ? prov["multipliers"] : Json::object();
    for (const auto& [key, value] : mult.items()) {
      int c = 0;
      try {
        std::size_t used = 0;
        c = std::stoi(key, &used);
        if (used != key.size()) c = 0;
      } catch (const std::exception&) {
        c = 0;
      }
      if (c < 1) throw InvalidInput("multipliers: class key \"" + key + "\" is not a positive integer");
      const Provenance p = mprov.contains(key) ? provenance_from(mprov[key]) : Provenance::UserSupplied;
      d.multipliers[c] = Sourced<FgAbelianGroup>{abelian_group_from_json(value), p};
    }
  }
  d.check();
  return d;
}

Json to_json(const HypothesisReport& r) {
  Json terms = Json::array();
  for (const auto& t : r.terms)
    terms.push_back(Json{{"name", t.name}, {"status", to_string(t.status)}, {"value", optional_group(t.value)},
                         {"note", t.note}});
  return Json{{"status", to_string(r.status)}, {"terms", std::move(terms)}, {"witnesses", r.witnesses}};
}

HypothesisReport hypothesis_report_from_json(const Json& j) {
  reject_unknown_keys(j, {"status", "terms", "witnesses"}, "hypothesis report");
  HypothesisReport r;
  r.status = status_from(required(j, "status", "hypothesis report"));
  for (const auto& t : array_of(required(j, "terms", "hypothesis report"), "terms")) {
    reject_unknown_keys(t, {"name", "status", "value", "note"}, "hypothesis term");
    r.terms.push_back({string_of(required(t, "name", "term"), "name"), status_from(required(t, "status", "term")),
                       optional_group_from(required(t, "value", "term")), string_of(required(t, "note", "term"), "note")});
  }
  r.witnesses = strings_of(required(j, "witnesses", "hypothesis report"), "witnesses");
  return r;
}

Json to_json(const ConditionReport& r) {
  Json conds = Json::array();
  for (const auto& c : r.conditions) {
    Json cmps = Json::array();
    for (const auto& cmp : c.comparisons)
      cmps.push_back(Json{{"what", cmp.what}, {"left", optional_integer(cmp.left)},
                          {"right", optional_integer(cmp.right)}, {"gcd", optional_integer(cmp.gcd)}});
    conds.push_back(Json{{"label", c.label}, {"statement", c.statement}, {"status", to_string(c.status)},
                         {"comparisons", std::move(cmps)}, {"note", c.note}});
  }
  return Json{{"conditions", std::move(conds)}, {"satisfied", r.satisfied()}};
}

ConditionReport condition_report_from_json(const Json& j) {
  reject_unknown_keys(j, {"conditions", "satisfied"}, "condition report");
  ConditionReport r;
  for (const auto& c : array_of(required(j, "conditions", "condition report"), "conditions")) {
    reject_unknown_keys(c, {"label", "statement", "status", "comparisons", "note"}, "condition");
    ConditionResult cr;
    cr.label = string_of(required(c, "label", "condition"), "label");
    cr.statement = string_of(required(c, "statement", "condition"), "statement");
    cr.status = status_from(required(c, "status", "condition"));
    cr.note = string_of(required(c, "note", "condition"), "note");
    for (const auto& cmp : array_of(required(c, "comparisons", "condition"), "comparisons")) {
      reject_unknown_keys(cmp, {"what", "left", "right", "gcd"}, "comparison");
      cr.comparisons.push_back({string_of(required(cmp, "what", "comparison"), "what"),
                                optional_integer_from(required(cmp, "left", "comparison")),
                                optional_integer_from(required(cmp, "right", "comparison")),
                                optional_integer_from(required(cmp, "gcd", "comparison"))});
    }
    r.conditions.push_back(std::move(cr));
  }
  if (j.contains("satisfied") && strings_of(j["satisfied"], "satisfied") != r.satisfied())
    throw InvalidInput("condition report: \"satisfied\" disagrees with the statuses");
  return r;
}

Json to_json(const FreeProductReport& r) {
  Json summands = Json::array();
  for (const auto& s : r.summands) summands.push_back(Json{{"name", s.name}, {"value", to_json(s.value)}});
  Json j;
  j["g"] = r.g_label;
  j["h"] = r.h_label;
  j["class"] = r.c;
  j["method"] = r.method;
  j["hypotheses"] = r.hypotheses ? to_json(*r.hypotheses) : Json(nullptr);
  j["conditions"] = r.conditions ? to_json(*r.conditions) : Json(nullptr);
  j["summands"] = std::move(summands);
  j["conclusion"] = optional_group(r.conclusion);
  j["caveats"] = r.caveats;
  return j;
}

FreeProductReport free_product_report_from_json(const Json& j) {
  reject_unknown_keys(j, {"g", "h", "class", "method", "hypotheses", "conditions", "summands", "conclusion", "caveats"},
                      "free product report");
  const std::string what = "free product report";
  FreeProductReport r;
  r.g_label = string_of(required(j, "g", what), "g");
  r.h_label = string_of(required(j, "h", what), "h");
  r.c = static_cast<int>(long_of(required(j, "class", what), "class"));
  r.method = string_of(required(j, "method", what), "method");
  if (!required(j, "hypotheses", what).is_null()) r.hypotheses = hypothesis_report_from_json(j["hypotheses"]);
  if (!required(j, "conditions", what).is_null()) r.conditions = condition_report_from_json(j["conditions"]);
  for (const auto& s : array_of(required(j, "summands", what), "summands")) {
    reject_unknown_keys(s, {"name", "value"}, "summand");
    r.summands.push_back({string_of(required(s, "name", "summand"), "name"),
                          abelian_group_from_json(required(s, "value", "summand"))});
  }
  r.conclusion = optional_group_from(required(j, "conclusion", what));
  r.caveats = strings_of(required(j, "caveats", what), "caveats");
  if (r.conclusion && r.hypotheses && r.hypotheses->status != Status::Pass)
    throw InvalidInput("free product report: conclusion without passing hypotheses");
  return r;
}

Json to_json(const ValidationReport& r) {
  Json v = Json::array();
  for (const auto& x : r.violations)
    v.push_back(Json{{"identity", x.identity}, {"dimension", x.dimension}, {"i", x.i}, {"j", x.j}, {"detail", x.detail}});
  return Json{{"ok", r.ok()}, {"violations", std::move(v)}};
}

ValidationReport validation_report_from_json(const Json& j) {
  reject_unknown_keys(j, {"ok", "violations"}, "validation report");
  ValidationReport r;
  for (const auto& x : array_of(required(j, "violations", "validation report"), "violations")) {
    reject_unknown_keys(x, {"identity", "dimension", "i", "j", "detail"}, "violation");
    r.violations.push_back({string_of(required(x, "identity", "violation"), "identity"),
                            static_cast<int>(long_of(required(x, "dimension", "violation"), "dimension")),
                            static_cast<int>(long_of(required(x, "i", "violation"), "i")),
                            static_cast<int>(long_of(required(x, "j", "violation"), "j")),
                            string_of(required(x, "detail", "violation"), "detail")});
  }
  if (j.contains("ok") && bool_of(j["ok"], "ok") != r.ok()) throw InvalidInput("validation report: inconsistent \"ok\"");
  return r;
}

Json to_json(const KunnethReport& r) {
  Json degrees = Json::array();
  for (const auto& d : r.degrees) {
    Json terms = Json::array();
    for (const auto& t : d.terms) terms.push_back(Json{{"label", t.label}, {"group", to_json(t.group)}});
    degrees.push_back(Json{{"degree", d.degree}, {"lhs", to_json(d.lhs)}, {"rhs", to_json(d.rhs)},
                           {"terms", std::move(terms)}, {"holds", d.holds}});
  }
  return Json{{"holds", r.holds()}, {"degrees", std::move(degrees)}};
}

KunnethReport kunneth_report_from_json(const Json& j) {
  reject_unknown_keys(j, {"holds", "degrees"}, "Kunneth report");
  KunnethReport r;
  for (const auto& d : array_of(required(j, "degrees", "Kunneth report"), "degrees")) {
    reject_unknown_keys(d, {"degree", "lhs", "rhs", "terms", "holds"}, "Kunneth degree");
    KunnethDegree kd;
    kd.degree = static_cast<int>(long_of(required(d, "degree", "Kunneth degree"), "degree"));
    kd.lhs = abelian_group_from_json(required(d, "lhs", "Kunneth degree"));
    kd.rhs = abelian_group_from_json(required(d, "rhs", "Kunneth degree"));
    kd.holds = bool_of(required(d, "holds", "Kunneth degree"), "holds");
    for (const auto& t : array_of(required(d, "terms", "Kunneth degree"), "terms")) {
      reject_unknown_keys(t, {"label", "group"}, "Kunneth term");
      kd.terms.push_back({string_of(required(t, "label", "term"), "label"), abelian_group_from_json(required(t, "group", "term"))});
    }
    r.degrees.push_back(std::move(kd));
  }
  if (j.contains("holds") && bool_of(j["holds"], "holds") != r.holds())
    throw InvalidInput("Kunneth report: inconsistent \"holds\"");
  return r;
}

Json to_json(const LimitCommutationReport& r) {
  Json seq = Json::array();
  for (const auto& g : r.sequence) seq.push_back(to_json(g));
  return Json{{"degree", r.degree},
              {"object_stable_from", r.object_stable_from},
              {"homotopy_stable_from", r.homotopy_stable_from},
              {"sequence", std::move(seq)},
              {"pi_of_colimit", to_json(r.pi_of_colimit)},
              {"colimit_of_pi", to_json(r.colimit_of_pi)},
              {"holds", r.holds}};
}

LimitCommutationReport limit_report_from_json(const Json& j) {
  const std::string what = "limit report";
  reject_unknown_keys(j, {"degree", "object_stable_from", "homotopy_stable_from", "sequence", "pi_of_colimit",
                          "colimit_of_pi", "holds"},
                      what);
  LimitCommutationReport r;
  r.degree = static_cast<int>(long_of(required(j, "degree", what), "degree"));
  r.object_stable_from = size_of(required(j, "object_stable_from", what), "object_stable_from");
  r.homotopy_stable_from = size_of(required(j, "homotopy_stable_from", what), "homotopy_stable_from");
  for (const auto& g : array_of(required(j, "sequence", what), "sequence")) r.sequence.push_back(abelian_group_from_json(g));
  r.pi_of_colimit = abelian_group_from_json(required(j, "pi_of_colimit", what));
  r.colimit_of_pi = abelian_group_from_json(required(j, "colimit_of_pi", what));
  r.holds = bool_of(required(j, "holds", what), "holds");
  return r;
}

}  // namespace nilmult

#include "nilmult/io/commands.hpp"

#include <charconv>
#include <new>
#include <ostream>

#include "nilmult/engine/bar_homology.hpp"
#include "nilmult/engine/free_product.hpp"
#include "nilmult/errors.hpp"
#include "nilmult/hall/counting.hpp"
#include "nilmult/io/fixtures.hpp"
#include "nilmult/io/hall_cache.hpp"
#include "nilmult/nilpotent/multiplier.hpp"
#include "nilmult/simplicial/chain_complex.hpp"

namespace nilmult {

namespace {

long arg_long(const JobConfig& job, std::size_t i, const char* name) {
  if (i >= job.args.size()) throw InvalidInput(job.command + ": missing argument <" + name + ">");
  const std::string& s = job.args[i];
  long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw ParseError(0, {"integer"}, job.command + ": <" + name + "> is not an integer: " + s);
  return v;
}

void expect_args(const JobConfig& job, std::size_t n) {
  if (job.args.size() != n)
    throw InvalidInput(job.command + ": expected " + std::to_string(n) + " arguments, got " +
                       std::to_string(job.args.size()));
}

const Json& input(const JobConfig& job, const std::string& name) {
  auto it = job.inputs.find(name);
  if (it == job.inputs.end()) throw InvalidInput(job.command + ": missing input --" + name);
  return it->second;
}

EngineOptions engine_options(const JobConfig& job) {
  EngineOptions o;
  o.bar_order_cap = job.caps.group_order;
  o.limits.collector.basis_cap = job.caps.basis;
  o.limits.row_cap = job.caps.rows;
  return o;
}

GroupDatum datum_input(const JobConfig& job, const std::string& name) {
  const Json& j = input(job, name);
  if (j.is_string()) return builtin_group(j.get<std::string>());
  return group_datum_from_json(j);
}

// An abelian group given directly, or the abelianization of a datum.
FgAbelianGroup abelian_input(const JobConfig& job, const std::string& name) {
  const Json& j = input(job, name);
  if (j.is_array() || (j.is_object() && j.contains("free_rank"))) return abelian_group_from_json(j);
  const GroupDatum d = j.is_string() ? builtin_group(j.get<std::string>()) : group_datum_from_json(j);
  if (!d.abelianization) throw MissingData("abelianization of " + d.label);
  return d.abelianization->value;
}

Json homotopy_list(const TruncatedSimplicialAbelianGroup& a, std::optional<int> degree) {
  Json out = Json::array();
  const int top = a.truncation() - 1;
  for (int n = degree.value_or(0); n <= (degree ? *degree : top); ++n)
    out.push_back(Json{{"degree", n}, {"group", to_json(homotopy(a, n))}});
  return out;
}

void check_truncation(const JobConfig& job, int d) {
  if (d > job.caps.truncation)
    throw ResourceLimitError("truncation " + std::to_string(d) + " exceeds the cap of " +
                             std::to_string(job.caps.truncation));
}

Json run_witt(const JobConfig& job) {
  expect_args(job, 2);
  const long n = arg_long(job, 0, "n"), w = arg_long(job, 1, "w");
  if (n < 1 || w < 1) throw InvalidInput("witt: n and w must be >= 1");
  return Json{{"n", n}, {"w", w}, {"witt", to_json(witt(n, w))}};
}

Json run_hall(const JobConfig& job) {
  expect_args(job, 2);
  const long n = arg_long(job, 0, "n"), w = arg_long(job, 1, "w");
  if (n < 1 || w < 1) throw InvalidInput("hall: n and w must be >= 1");
  const auto n_ = static_cast<std::size_t>(n);
  const int w_ = static_cast<int>(w);
  HallBasis b;
  if (auto dir = resolve_cache_dir(job.cache_dir)) b = HallCache(*dir).get(n_, w_, job.caps.basis);
  else b = generate_hall_basis(n_, w_, job.caps.basis);
  Json counts = Json::array();
  for (int k = 1; k <= w_; ++k) counts.push_back(b.count_of_weight(k));
  Json elements = Json::array();
  for (std::size_t i = 0; i < b.size(); ++i) elements.push_back(b.to_string(i));
  return Json{{"n", n},          {"w", w}, {"order", kHallOrderVersion}, {"size", b.size()},
              {"by_weight", counts}, {"elements", elements}};
}

Json run_bidegree(const JobConfig& job) {
  expect_args(job, 3);
  const long m = arg_long(job, 0, "m"), n = arg_long(job, 1, "n"), c = arg_long(job, 2, "c");
  if (m < 1 || n < 1 || c < 1) throw InvalidInput("bidegree: m, n, c must be >= 1");
  const auto counts = bidegree_count(m, n, c, job.caps.basis);
  Json rows = Json::array();
  Integer total = 0;
  bool agree = true;
  for (const auto& [bd, count] : counts) {
    const Integer necklace = necklace_count(m, n, bd.i, bd.j);
    agree = agree && necklace == Integer(static_cast<unsigned long>(count));
    total += static_cast<unsigned long>(count);
    rows.push_back(Json{{"i", bd.i}, {"j", bd.j}, {"count", count}, {"necklace", to_json(necklace)}});
  }
  const Integer mixed = mixed_rank(m, n, c);
  return Json{{"m", m},
              {"n", n},
              {"c", c},
              {"mixed_rank", to_json(mixed)},
              {"total", to_json(total)},
              {"bidegrees", rows},
              {"consistent", agree && total == mixed}};
}

Json run_tensor_tor(const JobConfig& job) {
  const FgAbelianGroup g = abelian_input(job, "g"), h = abelian_input(job, "h");
  return Json{{"g", to_json(g)},
              {"h", to_json(h)},
              {job.command, to_json(job.command == "tensor" ? tensor(g, h) : tor(g, h))}};
}

Json run_multiplier(const JobConfig& job) {
  const int c = job.cls.value_or(1);
  const EngineOptions opts = engine_options(job);
  if (!job.invariants.empty()) {
    if (job.inputs.count("g")) throw InvalidInput("multiplier: give --invariants or --g, not both");
    for (const auto& x : job.invariants)
      if (x < 0) throw InvalidInput("multiplier: invariants must be >= 0");
    Json inv = Json::array();
    for (const auto& x : job.invariants) inv.push_back(to_json(x));
    const FgAbelianGroup m = nilpotent_multiplier_abelian(job.invariants, c, opts.limits);
    return Json{{"invariants", inv},
                {"group", to_json(FgAbelianGroup::from_cyclic_orders(job.invariants))},
                {"class", c},
                {"multiplier", to_json(m)},
                {"provenance", "computed"}};
  }
  const GroupDatum d = datum_input(job, "g");
  const auto m = multiplier_of(d, c, opts);
  return Json{{"label", d.label}, {"class", c}, {"multiplier", to_json(m.value)}, {"provenance", to_string(m.provenance)}};
}

Json run_h2_bar(const JobConfig& job) {
  const Json& j = input(job, "table");
  FiniteGroupTable t = [&] {
    if (!j.is_string()) return finite_group_from_json(j);
    GroupDatum d = builtin_group(j.get<std::string>());
    if (!d.table) throw InvalidInput("h2-bar: " + j.get<std::string>() + " has no builtin table");
    return *d.table;
  }();
  if (t.order() > job.caps.group_order)
    throw ResourceLimitError("group order " + std::to_string(t.order()) + " exceeds the cap of " +
                             std::to_string(job.caps.group_order));
  return Json{{"label", t.label()},
              {"order", t.order()},
              {"h1", to_json(bar_h1(t, job.caps.group_order))},
              {"h2", to_json(bar_h2(t, job.caps.group_order))}};
}

Json run_free_product(const JobConfig& job) {
  const GroupDatum g = datum_input(job, "g"), h = datum_input(job, "h");
  if (!job.cls) throw InvalidInput("free-product: missing --class");
  return to_json(free_product_multiplier(g, h, *job.cls, engine_options(job)));
}

Json run_formula_i(const JobConfig& job) {
  const GroupDatum g = datum_input(job, "g"), h = datum_input(job, "h");
  return to_json(burns_ellis_formula(g, h, engine_options(job)));
}

Json run_corollary(const JobConfig& job) {
  const GroupDatum g = datum_input(job, "g"), h = datum_input(job, "h");
  return Json{{"g", g.label}, {"h", h.label}, {"conditions", to_json(classify_conditions(g, h, engine_options(job)))}};
}

Json run_simplicial(const JobConfig& job) {
  if (job.args.size() != 1) throw InvalidInput("simplicial: expected one of validate|moore|homotopy|kan|kunneth|colimit");
  const std::string action = job.args[0];
  const Json& fx = input(job, "fixture");
  const std::string kind = fixture_kind(fx);
  auto sab = [&]() {
    TruncatedSimplicialAbelianGroup a = is_simplicial_set_kind(kind)
                                            ? TruncatedSimplicialAbelianGroup::free_on(simplicial_set_from_json(fx))
                                            : simplicial_abelian_from_json(fx);
    check_truncation(job, a.truncation());
    return a;
  };
  Json r;
  r["action"] = action;
  r["kind"] = kind;
  if (action == "validate") {
    if (is_simplicial_set_kind(kind)) {
      const auto k = simplicial_set_from_json(fx);
      check_truncation(job, k.truncation());
      r["truncation"] = k.truncation();
      r["validation"] = to_json(k.validate());
    } else if (kind == "directed-system") {
      const DirectedSystem s = directed_system_from_json(fx);
      ValidationReport all;
      for (const auto& o : s.objects)
        for (const auto& v : o.validate().violations) all.violations.push_back(v);
      r["objects"] = s.objects.size();
      r["validation"] = to_json(all);
    } else {
      const auto a = sab();
      r["truncation"] = a.truncation();
      r["validation"] = to_json(a.validate());
    }
  } else if (action == "moore") {
    const auto a = sab();
    const MooreComplex m = moore_complex(a);
    Json ds = Json::array();
    for (int n = 1; n <= m.chains.top(); ++n) ds.push_back(to_json(m.chains.boundary[static_cast<std::size_t>(n)]));
    Json hs = Json::array();
    for (int n = 0; n <= m.chains.top(); ++n) hs.push_back(to_json(homology(m.chains, n)));
    r["ranks"] = m.chains.ranks;
    r["boundaries"] = ds;
    r["boundary_squares_zero"] = m.chains.is_valid();
    r["homology"] = hs;
  } else if (action == "homotopy") {
    const auto a = sab();
    r["truncation"] = a.truncation();
    r["homotopy"] = homotopy_list(a, job.degree);
  } else if (action == "kan") {
    const auto k = simplicial_set_from_json(fx);
    check_truncation(job, k.truncation());
    const FreeSimplicialGroupTruncation f = kan_loop_group(k);
    Json counts = Json::array();
    for (int n = 0; n <= f.truncation(); ++n) counts.push_back(f.generator_count(n));
    r["generator_counts"] = counts;
    r["validation"] = to_json(f.validate());
    r["abelianized_homotopy"] = homotopy_list(abelianize(f), job.degree);
  } else if (action == "kunneth") {
    if (kind != "kunneth") throw InvalidInput("simplicial kunneth: fixture kind must be \"kunneth\"");
    reject_unknown_keys(fx, {"kind", "a", "b", "degree"}, "kunneth");
    if (!fx.contains("a") || !fx.contains("b")) throw InvalidInput("kunneth: needs \"a\" and \"b\"");
    const auto a = simplicial_abelian_from_json(fx["a"]);
    const auto b = simplicial_abelian_from_json(fx["b"]);
    check_truncation(job, std::max(a.truncation(), b.truncation()));
    std::optional<int> degree = job.degree;
    if (!degree && fx.contains("degree")) degree = fx["degree"].get<int>();
    r["report"] = to_json(kunneth_check(a, b, degree));
  } else if (action == "colimit") {
    const DirectedSystem s = directed_system_from_json(fx);
    for (const auto& o : s.objects) check_truncation(job, o.truncation());
    const std::size_t window = fx.contains("window") ? fx["window"].get<std::size_t>() : job.caps.window;
    const Colimit c = colimit_stabilized(s, window);
    r["window"] = window;
    r["stable_from"] = c.stable_from;
    r["colimit_ranks"] = c.object.ranks();
    Json degrees = Json::array();
    for (int n = 0; n <= c.object.truncation() - 1; ++n) {
      if (job.degree && *job.degree != n) continue;
      degrees.push_back(to_json(limit_commutes(s, n, window)));
    }
    r["limit_commutes"] = degrees;
  } else {
    throw InvalidInput("simplicial: unknown action \"" + action + "\"");
  }
  return r;
}

Json dispatch(const JobConfig& job) {
  const std::string& c = job.command;
  if (c == "witt") return run_witt(job);
  if (c == "hall") return run_hall(job);
  if (c == "bidegree") return run_bidegree(job);
  if (c == "tensor" || c == "tor") return run_tensor_tor(job);
  if (c == "multiplier") return run_multiplier(job);
  if (c == "h2-bar") return run_h2_bar(job);
  if (c == "free-product") return run_free_product(job);
  if (c == "formula-i") return run_formula_i(job);
  if (c == "corollary") return run_corollary(job);
  if (c == "simplicial") return run_simplicial(job);
  throw InvalidInput("unknown command \"" + c + "\"");
}

const char* kind_of(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
  if (dynamic_cast<const HypothesisFailed*>(&e)) return "HypothesisFailed";
  if (dynamic_cast<const Undetermined*>(&e)) return "Undetermined";
  if (dynamic_cast<const MissingData*>(&e)) return "MissingData";
  if (dynamic_cast<const Unsupported*>(&e)) return "Unsupported";
  if (dynamic_cast<const Unstabilized*>(&e)) return "Unstabilized";
  if (dynamic_cast<const ResourceLimitError*>(&e)) return "ResourceLimit";
  if (dynamic_cast<const OutOfTruncationRange*>(&e)) return "OutOfTruncationRange";
  if (dynamic_cast<const NotReduced*>(&e)) return "NotReduced";
  if (dynamic_cast<const ContextMismatch*>(&e)) return "ContextMismatch";
  if (dynamic_cast<const InvalidInput*>(&e)) return "InvalidInput";
  if (dynamic_cast<const std::bad_alloc*>(&e)) return "OutOfMemory";
  if (dynamic_cast<const Error*>(&e)) return "Error";
  return "Internal";
}

Json error_json(const std::exception& e) {
  Json err{{"kind", kind_of(e)}, {"message", e.what()}};
  if (auto* p = dynamic_cast<const ParseError*>(&e)) {
    err["offset"] = p->offset();
    err["expected"] = p->expected();
  }
  if (auto* m = dynamic_cast<const MissingData*>(&e)) err["field"] = m->field();
  if (auto* h = dynamic_cast<const HypothesisFailed*>(&e)) {
    err["witnesses"] = h->report().hypotheses ? Json(h->report().hypotheses->witnesses) : Json::array();
    err["report"] = to_json(h->report());
  }
  if (auto* u = dynamic_cast<const Undetermined*>(&e)) err["report"] = to_json(u->report());
  return err;
}

void render(std::string& out, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  auto scalar = [](const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return std::string("-");
    return v.dump();
  };
  auto inline_value = [&](const Json& v) -> std::optional<std::string> {
    if (v.is_object() && v.contains("text") && v.contains("free_rank")) return v["text"].get<std::string>();
    if (v.is_primitive()) return scalar(v);
    if (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_primitive(); })) {
      std::string s = "[";
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar(v[i]);
      return s + "]";
    }
    if (v.empty()) return std::string(v.is_array() ? "[]" : "{}");
    return std::nullopt;
  };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (auto s = inline_value(v)) {
        out += pad + k + ": " + *s + "\n";
      } else {
        out += pad + k + ":\n";
        render(out, v, indent + 1);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (auto s = inline_value(v)) {
        out += pad + "- " + *s + "\n";
      } else {
        out += pad + "-\n";
        render(out, v, indent + 1);
      }
    }
  } else {
    out += pad + scalar(j) + "\n";
  }
}

}  // namespace

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const HypothesisFailed*>(&e)) return kExitHypothesisFailed;
  if (dynamic_cast<const Undetermined*>(&e) || dynamic_cast<const MissingData*>(&e) ||
      dynamic_cast<const Unsupported*>(&e) || dynamic_cast<const Unstabilized*>(&e))
    return kExitUndetermined;
  if (dynamic_cast<const ResourceLimitError*>(&e) || dynamic_cast<const std::bad_alloc*>(&e))
    return kExitResourceLimit;
  if (dynamic_cast<const Error*>(&e)) return kExitBadInput;
  return kExitInternal;
}

CommandOutcome execute(const JobConfig& job) {
  CommandOutcome o;
  o.report["command"] = job.command;
  o.report["args"] = job.args;
  try {
    job.validate();
    Json result = dispatch(job);
    o.report["status"] = "ok";
    o.report["result"] = std::move(result);
  } catch (const std::exception& e) {
    o.exit_code = exit_code_for(e);
    o.report["status"] = "error";
    o.report["exit_code"] = o.exit_code;
    o.report["error"] = error_json(e);
  }
  return o;
}

std::string render_human(const Json& report) {
  std::string out;
  render(out, report, 0);
  return out;
}

int run(const JobConfig& job, std::ostream& out) {
  const CommandOutcome o = execute(job);
  out << (job.format == OutputFormat::Json ? dump(o.report) : render_human(o.report));
  return o.exit_code;
}

}  // namespace nilmult

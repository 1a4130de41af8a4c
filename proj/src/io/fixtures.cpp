#include "nilmult/io/fixtures.hpp"

#include <fstream>
#include <sstream>

#include "nilmult/errors.hpp"

namespace nilmult {

namespace {

int truncation_of(const Json& j, const std::string& what) {
  if (!j.contains("truncation") || !j["truncation"].is_number_integer())
    throw InvalidInput(what + ": \"truncation\" must be an integer");
  const long d = j["truncation"].get<long>();
  if (d < 0 || d > 64) throw InvalidInput(what + ": truncation out of range");
  return static_cast<int>(d);
}

std::size_t count_of(const Json& j, const char* key, const std::string& what) {
  if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<long>() < 0)
    throw InvalidInput(what + ": \"" + key + "\" must be a non-negative integer");
  return j[key].get<std::size_t>();
}

const Json& array_field(const Json& j, const char* key, const std::string& what) {
  if (!j.contains(key) || !j[key].is_array()) throw InvalidInput(what + ": \"" + key + "\" must be an array");
  return j[key];
}

std::vector<std::vector<TruncatedSimplicialSet::Map>> index_maps(const Json& j, const std::string& what) {
  std::vector<std::vector<TruncatedSimplicialSet::Map>> out;
  for (const auto& dim : j) {
    if (!dim.is_array()) throw InvalidInput(what + ": expected arrays of maps");
    std::vector<TruncatedSimplicialSet::Map> maps;
    for (const auto& m : dim) {
      if (!m.is_array()) throw InvalidInput(what + ": a map is an array of indices");
      TruncatedSimplicialSet::Map map;
      for (const auto& x : m) {
        if (!x.is_number_integer() || x.get<long>() < 0) throw InvalidInput(what + ": bad index");
        map.push_back(x.get<std::size_t>());
      }
      maps.push_back(std::move(map));
    }
    out.push_back(std::move(maps));
  }
  return out;
}

std::vector<std::vector<IntegerMatrix>> matrix_lists(const Json& j, const std::string& what) {
  std::vector<std::vector<IntegerMatrix>> out;
  for (const auto& dim : j) {
    if (!dim.is_array()) throw InvalidInput(what + ": expected arrays of matrices");
    std::vector<IntegerMatrix> ms;
    for (const auto& m : dim) ms.push_back(matrix_from_json(m));
    out.push_back(std::move(ms));
  }
  return out;
}

}  // namespace

Json load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

std::string fixture_kind(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw InvalidInput("fixture: missing \"kind\"");
  return j["kind"].get<std::string>();
}

bool is_simplicial_set_kind(const std::string& kind) {
  return kind == "circle" || kind == "point" || kind == "nerve" || kind == "simplicial-set";
}

bool is_simplicial_abelian_kind(const std::string& kind) {
  return kind == "free" || kind == "kan-abelianized" || kind == "constant" || kind == "dold-kan" ||
         kind == "simplicial-abelian-group";
}

TruncatedSimplicialSet simplicial_set_from_json(const Json& j) {
  const std::string kind = fixture_kind(j);
  if (kind == "circle" || kind == "point") {
    reject_unknown_keys(j, {"kind", "truncation"}, kind);
    const int d = truncation_of(j, kind);
    return kind == "circle" ? simplicial_circle(d) : simplicial_point(d);
  }
  if (kind == "nerve") {
    reject_unknown_keys(j, {"kind", "group", "truncation"}, kind);
    if (!j.contains("group")) throw InvalidInput("nerve: missing \"group\"");
    const Json& g = j["group"];
    GroupDatum datum = g.is_string() ? builtin_group(g.get<std::string>()) : GroupDatum{};
    if (g.is_string()) {
      if (!datum.table) {
        if (datum.source != GroupSource::Cyclic && datum.source != GroupSource::Abelian)
          throw InvalidInput("nerve: builtin group " + g.get<std::string>() + " has no table");
        std::vector<std::size_t> orders;
        for (const auto& d : datum.abelianization->value.invariant_factors()) orders.push_back(d.get_ui());
        if (datum.abelianization->value.free_rank() > 0) throw InvalidInput("nerve: group must be finite");
        return nerve(orders.empty() ? FiniteGroupTable::cyclic(1) : FiniteGroupTable::abelian(orders),
                     truncation_of(j, kind));
      }
      return nerve(*datum.table, truncation_of(j, kind));
    }
    return nerve(finite_group_from_json(g), truncation_of(j, kind));
  }
  if (kind == "simplicial-set") {
    reject_unknown_keys(j, {"kind", "sizes", "faces", "degeneracies"}, kind);
    std::vector<std::size_t> sizes;
    for (const auto& s : array_field(j, "sizes", kind)) {
      if (!s.is_number_integer() || s.get<long>() < 0) throw InvalidInput(kind + ": bad size");
      sizes.push_back(s.get<std::size_t>());
    }
    return TruncatedSimplicialSet(std::move(sizes), index_maps(array_field(j, "faces", kind), kind),
                                  index_maps(array_field(j, "degeneracies", kind), kind));
  }
  throw InvalidInput("not a simplicial set fixture: " + kind);
}

ChainComplex chain_complex_from_json(const Json& j) {
  const std::size_t rank0 = count_of(j, "rank0", "chain complex");
  std::vector<IntegerMatrix> ds;
  for (const auto& m : array_field(j, "boundaries", "chain complex")) ds.push_back(matrix_from_json(m));
  return ChainComplex::from_boundaries(rank0, std::move(ds));
}

TruncatedSimplicialAbelianGroup simplicial_abelian_from_json(const Json& j) {
  const std::string kind = fixture_kind(j);
  if (kind == "free" || kind == "kan-abelianized") {
    reject_unknown_keys(j, {"kind", "on"}, kind);
    if (!j.contains("on")) throw InvalidInput(kind + ": missing \"on\"");
    TruncatedSimplicialSet k = simplicial_set_from_json(j["on"]);
    if (kind == "free") return TruncatedSimplicialAbelianGroup::free_on(k);
    return abelianize(kan_loop_group(k));
  }
  if (kind == "constant") {
    reject_unknown_keys(j, {"kind", "rank", "truncation"}, kind);
    return TruncatedSimplicialAbelianGroup::constant(count_of(j, "rank", kind), truncation_of(j, kind));
  }
  if (kind == "dold-kan") {
    reject_unknown_keys(j, {"kind", "rank0", "boundaries", "truncation"}, kind);
    return dold_kan(chain_complex_from_json(j), truncation_of(j, kind));
  }
  if (kind == "simplicial-abelian-group") {
    reject_unknown_keys(j, {"kind", "ranks", "faces", "degeneracies"}, kind);
    std::vector<std::size_t> ranks;
    for (const auto& r : array_field(j, "ranks", kind)) {
      if (!r.is_number_integer() || r.get<long>() < 0) throw InvalidInput(kind + ": bad rank");
      ranks.push_back(r.get<std::size_t>());
    }
    return TruncatedSimplicialAbelianGroup(std::move(ranks), matrix_lists(array_field(j, "faces", kind), kind),
                                           matrix_lists(array_field(j, "degeneracies", kind), kind));
  }
  throw InvalidInput("not a simplicial abelian group fixture: " + kind);
}

DirectedSystem directed_system_from_json(const Json& j) {
  if (fixture_kind(j) != "directed-system") throw InvalidInput("not a directed-system fixture");
  reject_unknown_keys(j, {"kind", "objects", "transitions", "window"}, "directed-system");
  DirectedSystem s;
  for (const auto& o : array_field(j, "objects", "directed-system")) s.objects.push_back(simplicial_abelian_from_json(o));
  for (const auto& t : array_field(j, "transitions", "directed-system")) {
    if (!t.is_array()) throw InvalidInput("directed-system: a transition is an array of matrices");
    SimplicialMap f;
    for (const auto& m : t) f.components.push_back(matrix_from_json(m));
    s.transitions.push_back(std::move(f));
  }
  s.check();
  return s;
}

}  // namespace nilmult

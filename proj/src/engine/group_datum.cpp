#include "nilmult/engine/group_datum.hpp"

#include <cctype>

#include "nilmult/engine/bar_homology.hpp"
#include "nilmult/errors.hpp"

namespace nilmult {

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::Builtin: return "builtin";
    case Provenance::Computed: return "computed";
    case Provenance::UserSupplied: return "user-supplied";
  }
  return "?";
}

const char* to_string(GroupSource s) {
  switch (s) {
    case GroupSource::Cyclic: return "cyclic";
    case GroupSource::Abelian: return "abelian";
    case GroupSource::Table: return "table";
    case GroupSource::Presentation: return "presentation";
    case GroupSource::User: return "user";
  }
  return "?";
}

void GroupDatum::check() const {
  if (order.finite() && order.value <= 0)
    throw InvalidInput(label + ": order must be positive");
  if (abelianization) {
    const FgAbelianGroup& ab = abelianization->value;
    if (order.finite() && ab.free_rank() > 0)
      throw InvalidInput(label + ": finite order with an abelianization of free rank " +
                         std::to_string(ab.free_rank()));
    if (order.finite()) {
      Integer ab_order = *ab.order();
      if (order.value % ab_order != 0)
        throw InvalidInput(label + ": |G^ab| = " + ab_order.get_str() + " does not divide |G| = " +
                           order.value.get_str());
    }
    if (abelian && abelian->value) {
      if (order.finite() && *ab.order() != order.value)
        throw InvalidInput(label + ": abelian group whose abelianization has a different order");
      if (order.kind == GroupOrder::Kind::Infinite && ab.is_finite())
        throw InvalidInput(label + ": infinite abelian group with finite abelianization");
    }
  }
  if (table && order.finite() && order.value != Integer(static_cast<unsigned long>(table->order())))
    throw InvalidInput(label + ": order disagrees with the table");
  for (const auto& [c, m] : multipliers)
    if (c < 1) throw InvalidInput(label + ": multiplier class must be >= 1");
}

GroupDatum GroupDatum::cyclic(const Integer& n) {
  if (n < 0) throw InvalidInput("cyclic group order must be >= 0");
  GroupDatum d;
  d.label = n == 0 ? std::string("Z") : "Z" + n.get_str();
  d.source = GroupSource::Cyclic;
  d.abelianization = Sourced<FgAbelianGroup>{FgAbelianGroup::cyclic(n), Provenance::Builtin};
  d.order = n == 0 ? GroupOrder::infinite(Provenance::Builtin) : GroupOrder::of(n, Provenance::Builtin);
  d.abelian = Sourced<bool>{true, Provenance::Builtin};
  return d;
}

GroupDatum GroupDatum::abelian_group(const FgAbelianGroup& g, std::string label) {
  GroupDatum d;
  d.label = label.empty() ? g.to_string() : std::move(label);
  d.source = GroupSource::Abelian;
  d.abelianization = Sourced<FgAbelianGroup>{g, Provenance::Builtin};
  d.order = g.is_finite() ? GroupOrder::of(*g.order(), Provenance::Builtin)
                          : GroupOrder::infinite(Provenance::Builtin);
  d.abelian = Sourced<bool>{true, Provenance::Builtin};
  return d;
}

GroupDatum GroupDatum::from_table(FiniteGroupTable t, std::string label) {
  GroupDatum d;
  d.label = label.empty() ? t.label() : std::move(label);
  d.source = GroupSource::Table;
  d.order = GroupOrder::of(Integer(static_cast<unsigned long>(t.order())), Provenance::Computed);
  d.abelian = Sourced<bool>{t.is_abelian(), Provenance::Computed};
  d.abelianization = Sourced<FgAbelianGroup>{bar_h1(t, t.order()), Provenance::Computed};
  d.table = std::make_shared<const FiniteGroupTable>(std::move(t));
  return d;
}

GroupDatum GroupDatum::from_presentation(Presentation p, std::string label) {
  p.check();
  GroupDatum d;
  d.label = std::move(label);
  d.source = GroupSource::Presentation;
  FgAbelianGroup ab = nilmult::abelianization(p);
  if (!ab.is_finite()) d.order = GroupOrder::infinite(Provenance::Computed);
  d.abelianization = Sourced<FgAbelianGroup>{std::move(ab), Provenance::Computed};
  d.presentation = std::move(p);
  return d;
}

GroupDatum builtin_group(const std::string& name) {
  auto mark_builtin = [](GroupDatum d) {
    if (d.abelianization) d.abelianization->provenance = Provenance::Builtin;
    if (d.abelian) d.abelian->provenance = Provenance::Builtin;
    d.order.provenance = Provenance::Builtin;
    return d;
  };
  if (name == "S3") return mark_builtin(GroupDatum::from_table(FiniteGroupTable::symmetric3(), "S3"));
  if (name == "D4") return mark_builtin(GroupDatum::from_table(FiniteGroupTable::dihedral(4), "D4"));
  if (name == "Q8") return mark_builtin(GroupDatum::from_table(FiniteGroupTable::quaternion8(), "Q8"));
  if (name == "A5") {
    GroupDatum d = GroupDatum::from_presentation(Presentation::a5(), "A5");
    d.order = GroupOrder::of(60, Provenance::Builtin);
    d.abelian = Sourced<bool>{false, Provenance::Builtin};
    return d;
  }
  // Z, Zn, Zn1xZn2x...
  if (!name.empty() && name[0] == 'Z') {
    std::vector<Integer> orders;
    std::size_t i = 0;
    while (i < name.size()) {
      if (name[i] != 'Z') throw InvalidInput("unknown builtin group: " + name);
      std::size_t j = ++i;
      while (j < name.size() && std::isdigit(static_cast<unsigned char>(name[j]))) ++j;
      orders.emplace_back(j == i ? Integer(0) : Integer(name.substr(i, j - i)));
      i = j;
      if (i < name.size()) {
        if (name[i] != 'x') throw InvalidInput("unknown builtin group: " + name);
        ++i;
        if (i == name.size()) throw InvalidInput("unknown builtin group: " + name);
      }
    }
    if (orders.size() == 1) {
      GroupDatum d = GroupDatum::cyclic(orders[0]);
      d.label = name;
      return d;
    }
    return GroupDatum::abelian_group(FgAbelianGroup::from_cyclic_orders(orders), name);
  }
  throw InvalidInput("unknown builtin group: " + name);
}

std::optional<Sourced<FgAbelianGroup>> try_multiplier(const GroupDatum& g, int c,
                                                      const EngineOptions& options) {
  if (c < 1) throw InvalidInput("class must be >= 1");
  if (auto it = g.multipliers.find(c); it != g.multipliers.end()) return it->second;
  if (g.source == GroupSource::Cyclic) return Sourced<FgAbelianGroup>{FgAbelianGroup::trivial(), Provenance::Computed};
  if (g.abelian && g.abelian->value && g.abelianization)
    return Sourced<FgAbelianGroup>{nilpotent_multiplier(g.abelianization->value, c, options.limits),
                                   Provenance::Computed};
  if (g.table && c == 1)
    return Sourced<FgAbelianGroup>{bar_h2(*g.table, options.bar_order_cap), Provenance::Computed};
  return std::nullopt;
}

Sourced<FgAbelianGroup> multiplier_of(const GroupDatum& g, int c, const EngineOptions& options) {
  if (auto m = try_multiplier(g, c, options)) return *m;
  throw Unsupported("M^(" + std::to_string(c) + ")(" + g.label +
                    ") is not computable from the available data; supply it explicitly");
}

}  // namespace nilmult

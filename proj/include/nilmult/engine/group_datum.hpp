#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>

#include "nilmult/abelian/abelian_group.hpp"
#include "nilmult/engine/finite_group.hpp"
#include "nilmult/engine/presentation.hpp"
#include "nilmult/nilpotent/multiplier.hpp"

namespace nilmult {

enum class Provenance { Builtin, Computed, UserSupplied };
enum class GroupSource { Cyclic, Abelian, Table, Presentation, User };

const char* to_string(Provenance p);
const char* to_string(GroupSource s);

template <class T>
struct Sourced {
  T value;
  Provenance provenance = Provenance::Computed;
};

struct GroupOrder {
  enum class Kind { Unknown, Finite, Infinite };
  Kind kind = Kind::Unknown;
  Integer value;  // meaningful when finite
  Provenance provenance = Provenance::Computed;

  bool finite() const noexcept { return kind == Kind::Finite; }
  static GroupOrder of(const Integer& n, Provenance p) { return {Kind::Finite, n, p}; }
  static GroupOrder infinite(Provenance p) { return {Kind::Infinite, 0, p}; }
};

/// What is known about one group: its invariants, where each came from and
/// the structure (table, presentation) they can be computed from.
struct GroupDatum {
  std::string label;
  GroupSource source = GroupSource::User;
  std::optional<Sourced<FgAbelianGroup>> abelianization;
  std::map<int, Sourced<FgAbelianGroup>> multipliers;
  GroupOrder order;
  std::optional<Sourced<bool>> abelian;

  std::shared_ptr<const FiniteGroupTable> table;
  std::optional<Presentation> presentation;

  /// Rejects contradictory data (finite order with an infinite
  /// abelianization, abelianization order not dividing the order, ...).
  void check() const;

  static GroupDatum cyclic(const Integer& n);
  static GroupDatum abelian_group(const FgAbelianGroup& g, std::string label = {});
  static GroupDatum from_table(FiniteGroupTable t, std::string label = {});
  static GroupDatum from_presentation(Presentation p, std::string label);
};

/// Fixture groups by name: "Z<n>", "S3", "D4", "Q8", "A5", "Z2xZ2", ...
GroupDatum builtin_group(const std::string& name);

struct EngineOptions {
  std::size_t bar_order_cap = 24;
  MultiplierLimits limits;
};

/// M^(c)(G) if it is stored or can be computed: stored values first, then
/// cyclic (trivial), abelian (free nilpotent engine), finite table with
/// c = 1 (bar complex).
std::optional<Sourced<FgAbelianGroup>> try_multiplier(const GroupDatum& g, int c,
                                                      const EngineOptions& options = {});

/// As try_multiplier, but throws Unsupported when no method applies.
Sourced<FgAbelianGroup> multiplier_of(const GroupDatum& g, int c, const EngineOptions& options = {});

}  // namespace nilmult

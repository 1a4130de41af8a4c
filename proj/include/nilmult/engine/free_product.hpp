#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nilmult/engine/group_datum.hpp"
#include "nilmult/errors.hpp"

namespace nilmult {

enum class Status { Pass, Fail, Undetermined };
const char* to_string(Status s);

struct HypothesisTerm {
  std::string name;
  Status status = Status::Undetermined;
  std::optional<FgAbelianGroup> value;
  std::string note;
};

/// The four groups G^ab (x) H^ab, M(G) (x) H^ab, M(H) (x) G^ab and
/// Tor(G^ab, H^ab), each required to vanish.
struct HypothesisReport {
  std::vector<HypothesisTerm> terms;
  Status status = Status::Undetermined;
  std::vector<std::string> witnesses;  // names of the non-vanishing terms
};

struct GcdComparison {
  std::string what;  // e.g. "(|G|, |H^ab|)"
  std::optional<Integer> left, right, gcd;
};

struct ConditionResult {
  std::string label;  // "(i)" .. "(iv)"
  std::string statement;
  Status status = Status::Undetermined;
  std::vector<GcdComparison> comparisons;
  std::string note;
};

struct ConditionReport {
  std::vector<ConditionResult> conditions;
  std::vector<std::string> satisfied() const;
};

struct Summand {
  std::string name;
  FgAbelianGroup value;
};

struct FreeProductReport {
  std::string g_label;
  std::string h_label;
  int c = 1;
  std::string method;
  std::optional<HypothesisReport> hypotheses;
  std::optional<ConditionReport> conditions;
  std::vector<Summand> summands;
  std::optional<FgAbelianGroup> conclusion;
  std::vector<std::string> caveats;
};

/// A required hypothesis is known to fail; the report names the witnesses.
class HypothesisFailed : public Error {
 public:
  explicit HypothesisFailed(FreeProductReport report);
  const FreeProductReport& report() const noexcept { return report_; }

 private:
  FreeProductReport report_;
};

/// A hypothesis could not be decided from the available data.
class Undetermined : public Error {
 public:
  explicit Undetermined(FreeProductReport report);
  const FreeProductReport& report() const noexcept { return report_; }

 private:
  FreeProductReport report_;
};

/// Decides whether the four groups above vanish. Missing abelianizations
/// throw MissingData; an unknown Schur multiplier leaves its term
/// undetermined unless the other factor is trivial.
HypothesisReport check_vanishing_hypotheses(const GroupDatum& g, const GroupDatum& h,
                                            const EngineOptions& options = {});

/// M^(c)(G * H) = M^(c)(G) + M^(c)(H). For c = 1 this is the classical
/// free-product formula for Schur multipliers and needs no hypotheses; for
/// c >= 2 the vanishing hypotheses must pass (HypothesisFailed /
/// Undetermined otherwise).
FreeProductReport free_product_multiplier(const GroupDatum& g, const GroupDatum& h, int c,
                                          const EngineOptions& options = {});

/// Burns-Ellis decomposition of M^(2)(G * H) into five summands.
FreeProductReport burns_ellis_formula(const GroupDatum& g, const GroupDatum& h,
                                      const EngineOptions& options = {});

/// Sufficient conditions for the splitting, each pass / fail / undetermined:
/// (i) abelian of coprime orders; (ii) finite with (|G|,|H^ab|) = (|G^ab|,|H|) = 1;
/// (iii) finite with (|G^ab|,|H^ab|) = (|M(G)|,|H|) = (|G^ab|,|M(H)|) = 1;
/// (iv) both perfect.
ConditionReport classify_conditions(const GroupDatum& g, const GroupDatum& h,
                                    const EngineOptions& options = {});

}  // namespace nilmult

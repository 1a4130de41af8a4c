#pragma once

#include <initializer_list>
#include <string>

#include <json.hpp>

#include "nilmult/abelian/abelian_group.hpp"
#include "nilmult/abelian/integer_matrix.hpp"
#include "nilmult/engine/free_product.hpp"
#include "nilmult/engine/group_datum.hpp"
#include "nilmult/simplicial/directed_system.hpp"
#include "nilmult/simplicial/simplicial_abelian.hpp"
#include "nilmult/simplicial/simplicial_set.hpp"

namespace nilmult {

/// Insertion-ordered, so every report has a stable field order.
using Json = nlohmann::ordered_json;

/// Text of a JSON value: two-space indent, trailing newline.
std::string dump(const Json& j);
/// Parses text; syntax errors become ParseError with the byte offset.
Json parse_json(const std::string& text);

/// Throws InvalidInput naming the first key of `j` not in `allowed`.
void reject_unknown_keys(const Json& j, std::initializer_list<const char*> allowed, const std::string& what);

/// Integers beyond +-2^53 are written as decimal strings.
Json to_json(const Integer& x);
Integer integer_from_json(const Json& j);

Json to_json(const IntegerMatrix& m);
IntegerMatrix matrix_from_json(const Json& j);

/// {"text", "free_rank", "invariants"}; a bare array of cyclic orders
/// (0 for Z) is accepted on input.
Json to_json(const FgAbelianGroup& g);
FgAbelianGroup abelian_group_from_json(const Json& j);

Json to_json(const FiniteGroupTable& t);
FiniteGroupTable finite_group_from_json(const Json& j);

/// {"generators": n, "names": [...]?, "relators": ["x1^2", ...]}.
Json to_json(const Presentation& p);
Presentation presentation_from_json(const Json& j);

/// {"label", "source", "order", "abelian", "abelianization", "multipliers",
///  "provenance", "table"?, "presentation"?}. On input "source" may also be
/// "builtin" with a "name"; fields that are absent are derived from the
/// source where possible, and fields that are present count as
/// user-supplied unless "provenance" says otherwise.
Json to_json(const GroupDatum& d);
GroupDatum group_datum_from_json(const Json& j);

Json to_json(const HypothesisReport& r);
HypothesisReport hypothesis_report_from_json(const Json& j);
Json to_json(const ConditionReport& r);
ConditionReport condition_report_from_json(const Json& j);
Json to_json(const FreeProductReport& r);
FreeProductReport free_product_report_from_json(const Json& j);

Json to_json(const ValidationReport& r);
ValidationReport validation_report_from_json(const Json& j);
Json to_json(const KunnethReport& r);
KunnethReport kunneth_report_from_json(const Json& j);
Json to_json(const LimitCommutationReport& r);
LimitCommutationReport limit_report_from_json(const Json& j);

}  // namespace nilmult

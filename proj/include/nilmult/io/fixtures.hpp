#pragma once

#include <optional>
#include <string>

#include "nilmult/io/json_io.hpp"
#include "nilmult/simplicial/directed_system.hpp"
#include "nilmult/simplicial/kan_loop.hpp"
#include "nilmult/simplicial/simplicial_abelian.hpp"
#include "nilmult/simplicial/simplicial_set.hpp"

namespace nilmult {

/// Reads and parses a JSON file; a missing file is InvalidInput.
Json load_json_file(const std::string& path);

/// Simplicial sets:
///   {"kind": "circle" | "point", "truncation": D}
///   {"kind": "nerve", "group": "S3" | <group table>, "truncation": D}
///   {"kind": "simplicial-set", "sizes": [...], "faces": [dim 1..D][i][x],
///    "degeneracies": [dim 0..D-1][i][x]}
TruncatedSimplicialSet simplicial_set_from_json(const Json& j);

/// Simplicial abelian groups:
///   {"kind": "free", "on": <simplicial set>}
///   {"kind": "kan-abelianized", "on": <reduced simplicial set>}
///   {"kind": "constant", "rank": r, "truncation": D}
///   {"kind": "dold-kan", "rank0": r, "boundaries": [d_1, ...], "truncation": D}
///   {"kind": "simplicial-abelian-group", "ranks": [...], "faces": [dim 1..D][i],
///    "degeneracies": [dim 0..D-1][i]}   (matrices act on row vectors)
TruncatedSimplicialAbelianGroup simplicial_abelian_from_json(const Json& j);

/// {"kind": "directed-system", "objects": [...], "transitions": [[matrix per dimension], ...],
///  "window": w?}
DirectedSystem directed_system_from_json(const Json& j);

ChainComplex chain_complex_from_json(const Json& j);

/// The "kind" field, or InvalidInput.
std::string fixture_kind(const Json& j);

bool is_simplicial_set_kind(const std::string& kind);
bool is_simplicial_abelian_kind(const std::string& kind);

}  // namespace nilmult

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nilmult/engine/bar_homology.hpp"
#include "nilmult/hall/hall_basis.hpp"
#include "nilmult/io/json_io.hpp"

namespace nilmult {

enum class OutputFormat { Human, Json };

struct JobCaps {
  std::size_t basis = kDefaultBasisCap;
  std::size_t group_order = kDefaultBarOrderCap;
  int truncation = 6;
  std::size_t rows = 2'000'000;
  std::size_t window = 32;
};

/// One CLI invocation. Named inputs ("g", "h", "table", "fixture") hold
/// JSON already read from a file or given inline.
struct JobConfig {
  std::string command;
  std::vector<std::string> args;
  std::map<std::string, Json> inputs;
  std::optional<int> cls;
  std::optional<int> degree;
  std::vector<Integer> invariants;
  JobCaps caps;
  std::optional<std::string> cache_dir;
  OutputFormat format = OutputFormat::Json;

  /// Throws InvalidInput for non-positive caps or an unknown command.
  void validate() const;

  /// {"command", "args", "inputs": {name: path | inline JSON}, "class",
  ///  "degree", "invariants", "caps": {...}, "cache_dir", "format"}.
  /// Unknown keys are rejected; string inputs are read as file paths.
  static JobConfig from_json(const Json& j);
};

/// Commands understood by run().
const std::vector<std::string>& known_commands();

}  // namespace nilmult

#include "nilmult/io/job_config.hpp"

#include <algorithm>

#include "nilmult/errors.hpp"
#include "nilmult/io/fixtures.hpp"

namespace nilmult {

const std::vector<std::string>& known_commands() {
  static const std::vector<std::string> commands{"witt",       "hall",      "bidegree",     "tensor",
                                                 "tor",        "multiplier", "h2-bar",       "free-product",
                                                 "formula-i",  "corollary", "simplicial"};
  return commands;
}

void JobConfig::validate() const {
  const auto& cmds = known_commands();
  if (std::find(cmds.begin(), cmds.end(), command) == cmds.end())
    throw InvalidInput("unknown command \"" + command + "\"");
  if (caps.basis == 0 || caps.group_order == 0 || caps.truncation <= 0 || caps.rows == 0 || caps.window == 0)
    throw InvalidInput("caps must be positive");
  if (cls && *cls < 1) throw InvalidInput("class must be >= 1");
  if (degree && *degree < 0) throw InvalidInput("degree must be >= 0");
}

JobConfig JobConfig::from_json(const Json& j) {
  reject_unknown_keys(j, {"command", "args", "inputs", "class", "degree", "invariants", "caps", "cache_dir", "format"},
                      "job config");
  JobConfig cfg;
  if (!j.contains("command") || !j["command"].is_string()) throw InvalidInput("job config: missing \"command\"");
  cfg.command = j["command"].get<std::string>();
  if (j.contains("args")) {
    if (!j["args"].is_array()) throw InvalidInput("job config: \"args\" must be an array");
    for (const auto& a : j["args"]) {
      if (a.is_string()) cfg.args.push_back(a.get<std::string>());
      else if (a.is_number_integer()) cfg.args.push_back(std::to_string(a.get<long>()));
      else throw InvalidInput("job config: args must be strings or integers");
    }
  }
  if (j.contains("inputs")) {
    if (!j["inputs"].is_object()) throw InvalidInput("job config: \"inputs\" must be an object");
    for (const auto& [name, value] : j["inputs"].items())
      cfg.inputs[name] = value.is_string() ? load_json_file(value.get<std::string>()) : value;
  }
  auto int_field = [&](const char* key) -> std::optional<int> {
    if (!j.contains(key)) return std::nullopt;
    if (!j[key].is_number_integer()) throw InvalidInput(std::string("job config: \"") + key + "\" must be an integer");
    return j[key].get<int>();
  };
  cfg.cls = int_field("class");
  cfg.degree = int_field("degree");
  if (j.contains("invariants")) {
    if (!j["invariants"].is_array()) throw InvalidInput("job config: \"invariants\" must be an array");
    for (const auto& x : j["invariants"]) cfg.invariants.push_back(integer_from_json(x));
  }
  if (j.contains("caps")) {
    const Json& c = j["caps"];
    reject_unknown_keys(c, {"basis", "group_order", "truncation", "rows", "window"}, "caps");
    auto cap = [&](const char* key, auto& field) {
      if (!c.contains(key)) return;
      if (!c[key].is_number_integer() || c[key].get<long>() <= 0)
        throw InvalidInput(std::string("caps: \"") + key + "\" must be a positive integer");
      field = c[key].get<std::remove_reference_t<decltype(field)>>();
    };
    cap("basis", cfg.caps.basis);
    cap("group_order", cfg.caps.group_order);
    cap("truncation", cfg.caps.truncation);
    cap("rows", cfg.caps.rows);
    cap("window", cfg.caps.window);
  }
  if (j.contains("cache_dir")) {
    if (!j["cache_dir"].is_string()) throw InvalidInput("job config: \"cache_dir\" must be a string");
    cfg.cache_dir = j["cache_dir"].get<std::string>();
  }
  if (j.contains("format")) {
    const std::string f = j["format"].is_string() ? j["format"].get<std::string>() : "";
    if (f == "json") cfg.format = OutputFormat::Json;
    else if (f == "human") cfg.format = OutputFormat::Human;
    else throw InvalidInput("job config: \"format\" must be \"json\" or \"human\"");
  }
  cfg.validate();
  return cfg;
}

}  // namespace nilmult

#include <CLI11.hpp>

#include <iostream>

#include "nilmult/errors.hpp"
#include "nilmult/io/commands.hpp"
#include "nilmult/io/fixtures.hpp"

using namespace nilmult;

namespace {

// "builtin:NAME" names a fixture group, anything else is a JSON file.
Json load_input(const std::string& value) {
  const std::string prefix = "builtin:";
  if (value.rfind(prefix, 0) == 0) return value.substr(prefix.size());
  return load_json_file(value);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nilpotent multipliers, free products and simplicial checks"};
  app.require_subcommand(0, 1);

  std::string format = "json";
  std::string config_path;
  std::optional<std::string> cache_dir;
  JobCaps caps;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "human"}));
  app.add_option("--config", config_path, "Run the job described by a JSON file");
  app.add_option("--cache-dir", cache_dir, "Hall basis cache directory (overrides NILMULT_CACHE_DIR)");
  app.add_option("--basis-cap", caps.basis, "Maximum Hall basis size")->check(CLI::PositiveNumber);
  app.add_option("--order-cap", caps.group_order, "Maximum group order for the bar complex")->check(CLI::PositiveNumber);
  app.add_option("--truncation-cap", caps.truncation, "Maximum simplicial truncation")->check(CLI::PositiveNumber);
  app.add_option("--row-cap", caps.rows, "Maximum relation rows")->check(CLI::PositiveNumber);
  app.add_option("--window", caps.window, "Stabilization window for directed systems")->check(CLI::PositiveNumber);

  JobConfig job;
  std::vector<std::string> positional;
  std::map<std::string, std::string> input_paths;
  std::vector<std::string> invariants;
  int cls = 0;
  int degree = -1;

  // Integer arguments, one positional each, in order.
  std::map<std::string, std::vector<std::string>> numeric_args;
  auto numbers = [&](const char* name, const char* desc, std::vector<std::string> names) {
    auto* sub = app.add_subcommand(name, desc);
    auto& slots = numeric_args[name];
    slots.resize(names.size());
    for (std::size_t i = 0; i < names.size(); ++i) sub->add_option(names[i], slots[i])->required();
  };
  numbers("witt", "Number of basic commutators of weight w on n generators", {"n", "w"});
  numbers("hall", "Hall basis on n generators through weight w", {"n", "w"});
  numbers("bidegree", "Mixed basic commutators of weight c by bidegree", {"m", "n", "c"});

  auto pair_inputs = [&](CLI::App* sub) {
    sub->set_help_flag("--help", "Print this help message and exit");  // frees -h for --h
    sub->add_option("--g", input_paths["g"], "First group (JSON file or builtin:NAME)")->required();
    sub->add_option("--h", input_paths["h"], "Second group (JSON file or builtin:NAME)")->required();
  };
  pair_inputs(app.add_subcommand("tensor", "Tensor product of two abelian groups"));
  pair_inputs(app.add_subcommand("tor", "Tor of two abelian groups"));

  auto* mult = app.add_subcommand("multiplier", "c-nilpotent multiplier");
  mult->add_option("--invariants", invariants, "Cyclic orders, 0 for Z")->delimiter(',');
  mult->add_option("--g", input_paths["g"], "Group datum (JSON file or builtin:NAME)");
  mult->add_option("--class", cls, "Nilpotency class c")->check(CLI::PositiveNumber);

  app.add_subcommand("h2-bar", "H_1 and H_2 of a finite group from the bar complex")
      ->add_option("--table", input_paths["table"], "Group table (JSON file or builtin:NAME)")
      ->required();

  auto* fp = app.add_subcommand("free-product", "Multiplier of a free product");
  pair_inputs(fp);
  fp->add_option("--class", cls, "Nilpotency class c")->required()->check(CLI::PositiveNumber);
  pair_inputs(app.add_subcommand("formula-i", "Five-summand decomposition of M^(2)(G * H)"));
  pair_inputs(app.add_subcommand("corollary", "Sufficient conditions for the free-product splitting"));

  auto* simp = app.add_subcommand("simplicial", "Simplicial checks on a fixture");
  simp->add_option("action", positional, "validate|moore|homotopy|kan|kunneth|colimit")
      ->required()
      ->check(CLI::IsMember({"validate", "moore", "homotopy", "kan", "kunneth", "colimit"}));
  simp->add_option("--fixture", input_paths["fixture"], "Fixture JSON file")->required();
  simp->add_option("--degree", degree, "Only this degree")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  if (config_path.empty() == app.get_subcommands().empty()) {
    std::cerr << "give exactly one of a command or --config\n";
    return kExitBadInput;
  }
  try {
    if (!config_path.empty()) {
      job = JobConfig::from_json(load_json_file(config_path));
    } else {
      job.command = app.get_subcommands().front()->get_name();
      job.args = positional;
      if (auto it = numeric_args.find(job.command); it != numeric_args.end()) job.args = it->second;
      for (const auto& [name, path] : input_paths)
        if (!path.empty()) job.inputs[name] = load_input(path);
      if (cls > 0) job.cls = cls;
      if (degree >= 0) job.degree = degree;
      for (const auto& s : invariants) {
        Json parsed = parse_json(s);
        job.invariants.push_back(integer_from_json(parsed));
      }
      job.caps = caps;
      job.cache_dir = cache_dir;
      job.format = format == "human" ? OutputFormat::Human : OutputFormat::Json;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
  const int code = run(job, std::cout);
  if (code != kExitOk) std::cerr << "nilmult: exit " << code << "\n";
  return code;
}

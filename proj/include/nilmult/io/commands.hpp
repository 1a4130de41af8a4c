#pragma once

#include <exception>
#include <iosfwd>

#include "nilmult/io/job_config.hpp"
#include "nilmult/io/json_io.hpp"

namespace nilmult {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitHypothesisFailed = 3;
inline constexpr int kExitResourceLimit = 4;
inline constexpr int kExitUndetermined = 5;

struct CommandOutcome {
  int exit_code = kExitOk;
  Json report;  // {"command", "args", "status", "result" | "error"}
};

/// Runs one job. Library errors become an error report and exit code:
/// parse / format problems 2, failed hypothesis 3, resource caps 4,
/// undecidable or missing data 5.
CommandOutcome execute(const JobConfig& job);

/// Exit code for an exception escaping a command.
int exit_code_for(const std::exception& e);

/// Plain-text rendering of a report.
std::string render_human(const Json& report);

/// execute, then write the report to `out` in the job's format.
int run(const JobConfig& job, std::ostream& out);

}  // namespace nilmult

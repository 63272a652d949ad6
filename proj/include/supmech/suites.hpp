#pragma once

#include <string>
#include <vector>

#include "supmech/report.hpp"
#include "supmech/scenario.hpp"

// Registry of the verification suites behind the command-line tool.  Each
// suite validates its parameters through ParamReader, runs its checks, and
// returns a VerificationReport.  Suites that produce data grids or fit
// summaries write them only when the scenario carries an out_dir parameter.
// The params "out_dir" and "jobs" are understood by every suite; "jobs"
// fans independent work units (random-state batches, deformation sweeps)
// across threads without changing the report.

namespace supmech {

struct SuiteInfo {
  std::string name;
  std::string summary;
  VerificationReport (*run)(const Scenario&);
};

const std::vector<SuiteInfo>& suite_registry();

// Dispatches on sc.suite and fills wall_seconds.  Unknown suites and bad
// parameters raise ConfigError, filesystem trouble IoError; any other Error
// thrown by a suite body becomes a failed "unhandled-error" entry so the
// report stays renderable.
VerificationReport run_suite(const Scenario& sc);

}  // namespace supmech

#pragma once

// JSON task layer shared by the command line tool and campaigns.
//
// A task is (command, params). Results carry "verdict": true/false, or null
// for pure dumps. Timings are only included on request so that reports stay
// byte-identical between runs.

#include <string>
#include <vector>

#include "json.hpp"

namespace chevlab {

using json = nlohmann::json;

struct TaskOptions {
  bool timings = false;
  std::uint64_t seed = 1;
};

// Known commands, e.g. "verify steinberg", "bruteforce", "factorize long-root".
const std::vector<std::string>& task_commands();

// Checks command name, parameter names and value shapes, ring and ideal
// strings, without running anything. Throws Error(InvalidArgument, ...).
void validate_task(const std::string& command, const json& params);

json run_task(const std::string& command, const json& params, const TaskOptions& opt);

struct CampaignResult {
  json report;
  int exit_code = 0;  // 0 all true, 1 some false, 2 some error
};

// {"seed": n, "tasks": [{"command": ..., "params": {...}}, ...]}
// All tasks are validated first; per-task errors are recorded in the report.
CampaignResult run_campaign(const json& campaign, const TaskOptions& opt);

// 0 / 1 for a single task result.
int exit_code_for(const json& result);

}  // namespace chevlab

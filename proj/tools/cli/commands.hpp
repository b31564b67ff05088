#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cli/config_io.hpp"

namespace vortex::cli {

// Exit-code contract of the vortex tool.
enum ExitCode : int {
  kSuccess = 0,
  kReplayMismatch = 1,
  kUsage = 2,
  kInvariantViolation = 3,
  kNumericFailure = 4,
  kDegenerateConstruction = 5,
};

struct CommandOutput {
  json report;
  int exit_code = kSuccess;
  std::string csv;                                // printed instead of the report when non-empty
  std::vector<std::pair<std::string, json>> files;  // (path, document) to write
};

// Every command is a pure function of its parameter object, which is also what
// a run manifest records; see app.cpp for the flag -> parameter mapping.
CommandOutput cmd_energy(const json& params);
CommandOutput cmd_check(const json& params);
CommandOutput cmd_correlation(const json& params);
CommandOutput cmd_pair_integral(const json& params);
CommandOutput cmd_adler_moser(const json& params);
CommandOutput cmd_refine(const json& params);

// Throws ParseError for an unknown command name.
CommandOutput dispatch(const std::string& command, const json& params);

// Threshold on max |f_j| below which `correlation` accepts a configuration
// as an equilibrium.
inline constexpr double kCorrelationGate = 1e-6;

}  // namespace vortex::cli

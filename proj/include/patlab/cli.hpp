#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "patlab/enumeration.hpp"

namespace patlab::cli {

enum class Command { count, verify_wilf, map, certify, basis, sandwich, growth, survey };
enum class OutputFormat { csv, json, table };

/// Process exit codes.
enum ExitCode : int {
  kVerified = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kExperiment = 3,
};

inline constexpr int kHardMaxN = 12;

struct RunConfig {
  Command command = Command::count;
  std::string class_expr;
  std::string left_expr;
  std::string right_expr;
  int max_n = -1;
  std::string map_name;
  int k = 0;
  std::optional<int> i;
  std::optional<int> j;
  std::string side = "minus";
  std::string perm;
  std::optional<OutputFormat> format;
  std::string out_path;
  std::uint64_t node_budget = kDefaultNodeBudget;
  bool parallel = true;
};

/// Dispatches one command; the report goes to `out` (or the --out file),
/// diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (long flags only) and runs. PATLAB_BUDGET, when set,
/// replaces the default node budget; --budget overrides both.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace patlab::cli

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace tmd::cli {

inline constexpr const char* kVersion = "1.0.0";

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFalse = 1;  // semantic "no" (e.g. not resolving)
inline constexpr int kExitInput = 2;
inline constexpr int kExitGuard = 3;

struct CommandResult {
  int exit_code = kExitOk;
  nlohmann::json report;  // full run report; empty for raw output
  std::string raw;        // non-JSON output (sweep CSV)
};

/// Wraps a command's outputs in the stable run-report envelope:
/// {command, inputs, outputs, timing_ms, version}. Everything except
/// timing_ms is deterministic for fixed inputs.
nlohmann::json make_run_report(const std::string& command, nlohmann::json inputs,
                               nlohmann::json outputs, double timing_ms);

std::vector<int> parse_id_list(const std::string& csv);
std::vector<int> read_id_file(const std::string& path);

CommandResult cmd_verify(const std::string& tree_file, int k,
                         const std::vector<int>& sensor_ids);

CommandResult cmd_bounds(const std::string& tree_file, int k);

CommandResult cmd_solve(const std::string& tree_file, int k, bool greedy);

CommandResult cmd_construct(int m, int k, const std::optional<std::string>& skeleton_file,
                            const std::string& out_prefix);

CommandResult cmd_transform(const std::string& tree_file, int k,
                            const std::vector<int>& sensor_ids, char op,
                            std::optional<int> sensor, std::optional<std::pair<int, int>> pair,
                            const std::string& out_prefix);

CommandResult cmd_sweep(int n_max, const std::vector<int>& k_list, bool as_json);

}  // namespace tmd::cli

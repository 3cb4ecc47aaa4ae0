#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tmd/cli.hpp"
#include "tmd/error.hpp"

namespace {

using tmd::cli::CommandResult;

std::vector<int> gather_sensors(const std::string& csv, const std::string& file) {
  if (!csv.empty() && !file.empty())
    throw tmd::InvalidInput("pass either --sensors or --sensors-file, not both");
  if (!csv.empty()) return tmd::cli::parse_id_list(csv);
  if (!file.empty()) return tmd::cli::read_id_file(file);
  throw tmd::InvalidInput("missing --sensors or --sensors-file");
}

int emit(const CommandResult& result) {
  if (!result.raw.empty())
    std::cout << result.raw;
  else
    std::cout << result.report.dump(2) << '\n';
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"threshold-radius sensor placement toolkit for trees"};
  app.require_subcommand(1);

  std::string tree_file, sensors_csv, sensors_file, out_prefix, op, pair_csv;
  int k = 1, m = 1, n_max = 6;
  int sensor = -1;
  bool greedy = false, exact = false, as_json = false;
  std::string skeleton_file;
  std::vector<int> k_list;

  auto* verify = app.add_subcommand("verify", "check whether a sensor set resolves a tree");
  verify->add_option("tree", tree_file)->required();
  verify->add_option("--k", k)->required();
  verify->add_option("--sensors", sensors_csv, "comma-separated 0-indexed ids");
  verify->add_option("--sensors-file", sensors_file, "one id per line");

  auto* bounds = app.add_subcommand("bounds", "lower bounds for one (tree, k) instance");
  bounds->add_option("tree", tree_file)->required();
  bounds->add_option("--k", k)->required();

  auto* solve = app.add_subcommand("solve", "exact or greedy minimum sensor count");
  solve->add_option("tree", tree_file)->required();
  solve->add_option("--k", k)->required();
  solve->add_flag("--exact", exact, "exhaustive search (default)");
  solve->add_flag("--greedy", greedy, "greedy heuristic with pruning");

  auto* construct = app.add_subcommand("construct", "build a maximal (m, k) tree");
  construct->add_option("--m", m)->required();
  construct->add_option("--k", k)->required();
  construct->add_option("--skeleton", skeleton_file, "tree file with m vertices");
  construct->add_option("--out", out_prefix)->required();

  auto* transform = app.add_subcommand("transform", "apply one rewiring step");
  transform->add_option("tree", tree_file)->required();
  transform->add_option("--k", k)->required();
  transform->add_option("--sensors", sensors_csv);
  transform->add_option("--sensors-file", sensors_file);
  transform->add_option("--op", op, "A, B or C")->required();
  transform->add_option("--sensor", sensor, "anchor sensor (op A)");
  transform->add_option("--pair", pair_csv, "s0,s1 (op B)");
  transform->add_option("--out", out_prefix)->required();

  auto* sweep = app.add_subcommand("sweep", "exact values vs bounds over all small trees");
  sweep->add_option("--n-max", n_max)->required();
  sweep->add_option("--k", k_list, "thresholds to sweep")->required();
  sweep->add_flag("--json", as_json, "JSON instead of CSV");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(verify))
      return emit(tmd::cli::cmd_verify(tree_file, k, gather_sensors(sensors_csv, sensors_file)));
    if (app.got_subcommand(bounds)) return emit(tmd::cli::cmd_bounds(tree_file, k));
    if (app.got_subcommand(solve)) {
      if (exact && greedy) throw tmd::InvalidInput("--exact and --greedy are exclusive");
      return emit(tmd::cli::cmd_solve(tree_file, k, greedy));
    }
    if (app.got_subcommand(construct)) {
      std::optional<std::string> skeleton;
      if (!skeleton_file.empty()) skeleton = skeleton_file;
      return emit(tmd::cli::cmd_construct(m, k, skeleton, out_prefix));
    }
    if (app.got_subcommand(transform)) {
      if (op.size() != 1) throw tmd::InvalidInput("--op must be A, B or C");
      std::optional<int> anchor;
      if (transform->count("--sensor")) anchor = sensor;
      std::optional<std::pair<int, int>> pair;
      if (!pair_csv.empty()) {
        auto ids = tmd::cli::parse_id_list(pair_csv);
        if (ids.size() != 2) throw tmd::InvalidInput("--pair needs exactly two ids");
        pair = {ids[0], ids[1]};
      }
      return emit(tmd::cli::cmd_transform(tree_file, k,
                                          gather_sensors(sensors_csv, sensors_file),
                                          op[0], anchor, pair, out_prefix));
    }
    if (app.got_subcommand(sweep)) return emit(tmd::cli::cmd_sweep(n_max, k_list, as_json));
  } catch (const tmd::GuardError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return tmd::cli::kExitGuard;
  } catch (const tmd::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return tmd::cli::kExitInput;
  }
  return tmd::cli::kExitInput;
}

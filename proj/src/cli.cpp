#include "tmd/cli.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "tmd/bounds.hpp"
#include "tmd/construct.hpp"
#include "tmd/enumerate.hpp"
#include "tmd/resolution.hpp"
#include "tmd/solver.hpp"
#include "tmd/transforms.hpp"
#include "tmd/tree.hpp"

namespace tmd::cli {

namespace {

using nlohmann::json;

Tree load_tree(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open tree file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return Tree::from_text(buf.str());
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write file: " + path);
  out << content;
}

json edges_to_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const auto& [u, v] : edges) out.push_back(json::array({u, v}));
  return out;
}

class Timer {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(clock::now() - start_).count();
  }

 private:
  using clock = std::chrono::steady_clock;
  clock::time_point start_ = clock::now();
};

}  // namespace

json make_run_report(const std::string& command, json inputs, json outputs,
                     double timing_ms) {
  return json{{"command", command},
              {"inputs", std::move(inputs)},
              {"outputs", std::move(outputs)},
              {"timing_ms", timing_ms},
              {"version", kVersion}};
}

std::vector<int> parse_id_list(const std::string& csv) {
  std::vector<int> out;
  std::stringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    size_t pos = 0;
    int value = 0;
    try {
      value = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw InvalidInput("bad id list entry: '" + item + "'");
    }
    while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
    if (pos != item.size()) throw InvalidInput("bad id list entry: '" + item + "'");
    out.push_back(value);
  }
  if (out.empty()) throw InvalidInput("empty id list");
  return out;
}

std::vector<int> read_id_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open sensors file: " + path);
  std::vector<int> out;
  int v = 0;
  while (in >> v) out.push_back(v);
  if (!in.eof()) throw InvalidInput("bad sensors file: " + path);
  if (out.empty()) throw InvalidInput("empty sensors file: " + path);
  return out;
}

CommandResult cmd_verify(const std::string& tree_file, int k,
                         const std::vector<int>& sensor_ids) {
  Timer timer;
  Tree tree = load_tree(tree_file);
  SensorSet sensors = SensorSet::create(tree, sensor_ids, k);
  Verdict verdict = is_resolving(tree, sensors);

  json outputs{{"resolving", verdict.ok}};
  if (verdict.failing_pair)
    outputs["failing_pair"] = json::array({verdict.failing_pair->first,
                                           verdict.failing_pair->second});
  if (verdict.uncovered) outputs["uncovered"] = *verdict.uncovered;

  json inputs{{"tree_file", tree_file}, {"k", k}, {"sensors", sensors.ids}};
  CommandResult result;
  result.exit_code = verdict.ok ? kExitOk : kExitFalse;
  result.report = make_run_report("verify", inputs, outputs, timer.ms());
  return result;
}

CommandResult cmd_bounds(const std::string& tree_file, int k) {
  Timer timer;
  Tree tree = load_tree(tree_file);
  BoundReport report = structural_lower_bound(tree, k);

  json support = json::array();
  for (const auto& [vertex, sb] : report.per_support) {
    support.push_back(json{{"vertex", vertex},
                           {"lengths", sb.lengths},
                           {"upper_complexity", sb.upper},
                           {"lower_complexity", sb.lower},
                           {"requirement", sb.requirement}});
  }
  json outputs{{"n", report.n},
               {"k", report.k},
               {"worst_case_bound", report.worst_case_bound},
               {"structural_bound", report.structural_bound},
               {"leaf_vertex_total", report.leaf_vertex_total},
               {"support", support}};

  CommandResult result;
  result.report = make_run_report("bounds", json{{"tree_file", tree_file}, {"k", k}},
                                  outputs, timer.ms());
  return result;
}

CommandResult cmd_solve(const std::string& tree_file, int k, bool greedy) {
  Timer timer;
  Tree tree = load_tree(tree_file);
  json outputs;
  if (greedy) {
    SensorSet witness = greedy_resolving_set(tree, k);
    outputs = json{{"tmd", witness.size()},
                   {"witness", witness.ids},
                   {"subsets_checked", 0},
                   {"method", "greedy"}};
  } else {
    SolveResult solved = brute_force_tmd(tree, k);
    outputs = json{{"tmd", solved.tmd},
                   {"witness", solved.witness.ids},
                   {"subsets_checked", solved.subsets_checked},
                   {"method", solved.method}};
  }
  CommandResult result;
  result.report = make_run_report(
      "solve", json{{"tree_file", tree_file}, {"k", k}, {"greedy", greedy}}, outputs,
      timer.ms());
  return result;
}

CommandResult cmd_construct(int m, int k, const std::optional<std::string>& skeleton_file,
                            const std::string& out_prefix) {
  Timer timer;
  std::optional<Tree> skeleton;
  if (skeleton_file) skeleton = load_tree(*skeleton_file);
  Construction built = build_optimal(m, k, skeleton);

  std::string tree_path = out_prefix + ".tree";
  std::string sensors_path = out_prefix + ".sensors";
  write_file(tree_path, built.tree.to_text());
  std::string sensor_lines;
  for (int s : built.sensors.ids) sensor_lines += std::to_string(s) + "\n";
  write_file(sensors_path, sensor_lines);

  json inputs{{"m", m}, {"k", k}, {"out", out_prefix}};
  if (skeleton_file) inputs["skeleton_file"] = *skeleton_file;
  json outputs{{"n", built.tree.vertex_count()},
               {"optimal_size", optimal_size(m, k)},
               {"gap", built.blueprint.gap},
               {"sensors", built.sensors.ids},
               {"tree_file", tree_path},
               {"sensors_file", sensors_path}};
  CommandResult result;
  result.report = make_run_report("construct", inputs, outputs, timer.ms());
  return result;
}

CommandResult cmd_transform(const std::string& tree_file, int k,
                            const std::vector<int>& sensor_ids, char op,
                            std::optional<int> sensor, std::optional<std::pair<int, int>> pair,
                            const std::string& out_prefix) {
  Timer timer;
  Tree tree = load_tree(tree_file);
  SensorSet sensors = SensorSet::create(tree, sensor_ids, k);

  TransformPlan plan;
  switch (op) {
    case 'A':
      if (!sensor) throw InvalidInput("transform A needs --sensor");
      plan = plan_transform_a(tree, sensors, *sensor);
      break;
    case 'B':
      if (!pair) throw InvalidInput("transform B needs --pair s0,s1");
      plan = plan_transform_b(tree, sensors, pair->first, pair->second);
      break;
    case 'C':
      plan = plan_transform_c(tree, sensors);
      break;
    default:
      throw InvalidInput("unknown transform op; expected A, B or C");
  }
  Tree transformed = apply_plan(tree, plan);
  std::string out_path = out_prefix + ".tree";
  write_file(out_path, transformed.to_text());

  json inputs{{"tree_file", tree_file}, {"k", k}, {"sensors", sensors.ids},
              {"op", std::string(1, op)}, {"out", out_prefix}};
  if (sensor) inputs["sensor"] = *sensor;
  if (pair) inputs["pair"] = json::array({pair->first, pair->second});

  json outputs{{"op", std::string(1, op)},
               {"anchor", plan.anchor},
               {"removed_edges", edges_to_json(plan.removed_edges)},
               {"added_leafpath_edges", edges_to_json(plan.added_leafpath_edges)},
               {"reconnect_edges", edges_to_json(plan.reconnect_edges)},
               {"moved_vertices", plan.moved_vertices},
               {"components", plan.components},
               {"new_vertex", plan.new_vertex ? json(*plan.new_vertex) : json(nullptr)},
               {"n_before", tree.vertex_count()},
               {"n_after", transformed.vertex_count()},
               {"tree_file", out_path}};
  CommandResult result;
  result.report = make_run_report("transform", inputs, outputs, timer.ms());
  return result;
}

CommandResult cmd_sweep(int n_max, const std::vector<int>& k_list, bool as_json) {
  Timer timer;
  auto rows = sweep(n_max, k_list);
  CommandResult result;
  if (as_json) {
    json table = json::array();
    for (const auto& row : rows) {
      table.push_back(json{{"n", row.n},
                           {"k", row.k},
                           {"canonical_id", row.canonical_id},
                           {"tmd", row.tmd},
                           {"worst_bound", row.worst_bound},
                           {"structural_bound", row.structural_bound}});
    }
    result.report = make_run_report(
        "sweep", json{{"n_max", n_max}, {"k", k_list}, {"format", "json"}},
        json{{"rows", table}}, timer.ms());
  } else {
    std::ostringstream csv;
    csv << "n,k,canonical_id,tmd,worst_bound,structural_bound\n";
    for (const auto& row : rows) {
      csv << row.n << ',' << row.k << ',' << row.canonical_id << ',' << row.tmd << ','
          << row.worst_bound << ',' << row.structural_bound << '\n';
    }
    result.raw = csv.str();
  }
  return result;
}

}  // namespace tmd::cli

#include "tmd/construct.hpp"

#include <algorithm>
#include <string>

namespace tmd {

namespace {

void check_mk(int m, int k) {
  if (m < 1) throw InvalidInput("sensor count m must be at least 1");
  if (k < 1) throw InvalidInput("threshold k must be at least 1");
}

Tree path_tree(int m) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < m; ++i) edges.emplace_back(i, i + 1);
  return Tree(m, std::move(edges));
}

}  // namespace

long long pair_attraction_max(int k) {
  check_mk(1, k);
  long long kk = k;
  if (k % 3 == 1) return (kk * kk + kk + 1) / 3;
  return (kk * kk + kk) / 3;
}

long long sum_even(int d, int k) {
  check_mk(1, k);
  if (d < 1 || d % 2 != 0) throw InvalidInput("sum_even: d must be a positive even integer");
  long long dd = d, kk = k;
  return (4 * dd * kk - 3 * dd * dd + 2 * dd) / 4;
}

long long sum_odd(int d, int k) {
  check_mk(1, k);
  if (d < 1 || d % 2 != 1) throw InvalidInput("sum_odd: d must be a positive odd integer");
  long long dd = d, kk = k;
  return (4 * dd * kk - 3 * dd * dd + 2 * dd + 1) / 4;
}

int optimal_gap(int k) {
  check_mk(1, k);
  // nearest integer to (2k+1)/3
  return (4 * k + 5) / 6;
}

long long optimal_size(int m, int k) {
  check_mk(m, k);
  return static_cast<long long>(k + 1) * m + static_cast<long long>(m - 1) * pair_attraction_max(k);
}

Construction build_optimal(int m, int k, std::optional<Tree> skeleton_opt) {
  check_mk(m, k);
  Tree skeleton = skeleton_opt.has_value() ? *skeleton_opt : path_tree(m);
  if (skeleton.vertex_count() != m)
    throw InvalidInput("skeleton must have exactly m = " + std::to_string(m) + " vertices");

  int gap = optimal_gap(k);
  std::vector<int> hang_lengths(gap);
  for (int i = 1; i <= gap; ++i) hang_lengths[i - 1] = std::min(k - i, k - (gap + 1 - i));

  std::vector<Edge> edges;
  int next = m;

  // Sensor-path interiors, edge by edge.
  std::vector<std::vector<int>> interiors;
  for (const auto& [a, b] : skeleton.edges()) {
    std::vector<int> ws;
    int prev = a;
    for (int i = 0; i < gap; ++i) {
      int w = next++;
      edges.push_back(make_edge(prev, w));
      prev = w;
      ws.push_back(w);
    }
    edges.push_back(make_edge(prev, b));
    interiors.push_back(std::move(ws));
  }

  // Hangs below each interior vertex.
  for (const auto& ws : interiors) {
    for (int i = 1; i <= gap; ++i) {
      int prev = ws[i - 1];
      for (int h = 0; h < hang_lengths[i - 1]; ++h) {
        int v = next++;
        edges.push_back(make_edge(prev, v));
        prev = v;
      }
    }
  }

  // Pendant attraction path of length k at every sensor.
  for (int s = 0; s < m; ++s) {
    int prev = s;
    for (int h = 0; h < k; ++h) {
      int v = next++;
      edges.push_back(make_edge(prev, v));
      prev = v;
    }
  }

  Tree tree(next, std::move(edges));
  if (tree.vertex_count() != optimal_size(m, k))
    throw Error("build_optimal: size mismatch against the closed form");

  std::vector<int> sensor_ids(m);
  for (int s = 0; s < m; ++s) sensor_ids[s] = s;
  SensorSet sensors = SensorSet::create(tree, std::move(sensor_ids), k);

  Verdict verdict = is_resolving(tree, sensors);
  if (!verdict.ok) throw Error("build_optimal: constructed sensors do not resolve the tree");

  OptimalBlueprint blueprint{m, k, gap, std::move(hang_lengths), std::move(skeleton)};
  return Construction{std::move(tree), std::move(sensors), std::move(blueprint)};
}

}  // namespace tmd

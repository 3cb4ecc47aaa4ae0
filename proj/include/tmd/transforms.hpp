#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tmd/resolution.hpp"
#include "tmd/tree.hpp"

namespace tmd {

/// Edge rewiring computed against one specific tree. `source_hash` pins
/// the tree the plan was made for; apply_plan refuses a mismatch.
struct TransformPlan {
  char op = '?';  // 'A', 'B' or 'C'
  std::uint64_t source_hash = 0;
  /// Rewiring anchor: the sensor s for A, the branch vertex w_q for B/C.
  int anchor = -1;
  std::vector<Edge> removed_edges;         // E1
  std::vector<Edge> added_leafpath_edges;  // E2
  std::vector<Edge> reconnect_edges;       // E3
  /// Components of the cut tree. components[0] contains the anchor sensor;
  /// for op C, components[1] contains s1. Remaining components are ordered
  /// by their smallest vertex id.
  std::vector<std::vector<int>> components;
  /// Vertices rewired into the new leaf-path, in chain order.
  std::vector<int> moved_vertices;
  /// Transformation C only: the id of the vertex it adds.
  std::optional<int> new_vertex;
};

/// Applies E' = (E \ E1) + E2 + E3 (plus the new vertex for C) and
/// validates that the result is a tree.
Tree apply_plan(const Tree& tree, const TransformPlan& plan);

/// Rewires the attraction of sensor s into a pendant path hanging from s,
/// reattaching every separated component directly to s. Requires a
/// resolving sensor set; preserves it.
TransformPlan plan_transform_a(const Tree& tree, const SensorSet& sensors, int s);
Tree transform_a(const Tree& tree, const SensorSet& sensors, int s);

/// One pass of transform_a per sensor in ascending id order. Afterwards
/// every single-sensor attraction is a pendant path from its sensor.
Tree normalize_attractions(const Tree& tree, const SensorSet& sensors);

struct Condition51 {
  bool attractions_are_leaf_paths = false;
  bool strong_paths_disjoint = false;
  bool weak_path_exists = false;
  /// Longest weak sensor path; ties broken by smallest endpoint pair.
  std::optional<std::pair<int, int>> longest_weak;
  bool holds() const {
    return attractions_are_leaf_paths && strong_paths_disjoint && weak_path_exists;
  }
};

Condition51 check_condition_5_1(const Tree& tree, const SensorSet& sensors);

struct Condition71 {
  int s0 = -1;
  int s0_prime = -1;
  int s1 = -1;
  int q = 0;
  std::vector<int> shared_prefix;  // w_1..w_q
  int u_next = -1;                 // first vertex after w_q toward s1
};

/// Selects the triple for transformation C: two strong sensor paths out of
/// s0 that share their first q >= 1 edges, the partner sides ordered
/// q <= d(s0,s0')-q <= d(s0,s1)-q, shortest pair first, ids as tie-break.
/// Empty when no edge-sharing pair of strong sensor paths exists.
std::optional<Condition71> check_condition_7_1(const Tree& tree, const SensorSet& sensors);

struct ConditionReport {
  Condition51 condition_5_1;
  std::optional<Condition71> condition_7_1;
};

ConditionReport condition_report(const Tree& tree, const SensorSet& sensors);

/// Shortens the weak sensor path (s0, s1): reroutes the type-q hang at the
/// branch vertex w_q into a pendant path and reattaches everything beyond
/// it directly to s0. Requires the three-part condition checked by
/// check_condition_5_1 with (s0,s1) a longest weak path.
TransformPlan plan_transform_b(const Tree& tree, const SensorSet& sensors, int s0, int s1);
Tree transform_b(const Tree& tree, const SensorSet& sensors, int s0, int s1);

/// Applies transform_b to a longest weak path until some pair of strong
/// sensor paths shares an edge. Total sensor-path length drops every
/// iteration, so this terminates.
Tree shorten_weak_paths(const Tree& tree, const SensorSet& sensors);

/// Splits a pair of edge-sharing strong sensor paths apart by inserting a
/// fresh vertex between s0 and u_{q+1}, moving the vertices only
/// measurable through w_q into a pendant path at w_q. Output has one more
/// vertex and the sensor set still resolves it.
TransformPlan plan_transform_c(const Tree& tree, const SensorSet& sensors);
Tree transform_c(const Tree& tree, const SensorSet& sensors);

struct GrowResult {
  Tree tree;
  int rewrites = 0;
  bool budget_exhausted = false;
};

/// Drives A, B and C to a fixed point: normalize attractions, shorten weak
/// paths while strong paths stay disjoint, split overlapping strong paths
/// otherwise. Vertex count never decreases and the sensor set keeps
/// resolving. max_steps <= 0 selects the default budget of 10*n*|S|.
GrowResult grow_to_optimal(const Tree& tree, const SensorSet& sensors, int max_steps = 0);

/// True when `attraction` is empty or forms the whole pendant path hanging
/// from s: consecutive distances 1..l, chained adjacency, interior degrees
/// 2, last vertex a leaf.
bool attraction_is_leaf_path(const Tree& tree, int s, const std::vector<int>& attraction);

bool has_edge_sharing_strong_pair(const std::vector<SensorPath>& paths);

}  // namespace tmd

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "harness.hpp"
#include "tmd/construct.hpp"
#include "tmd/enumerate.hpp"
#include "tmd/resolution.hpp"
#include "tmd/solver.hpp"
#include "tmd/transforms.hpp"
#include "tmd/tree.hpp"

using namespace tmd;

namespace {

Tree path_n(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Tree(n, std::move(edges));
}

Tree six_vertex() { return Tree(6, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {0, 5}}); }

Tree leaf_sensor_star() { return Tree(4, {{0, 1}, {0, 2}, {0, 3}}); }

}  // namespace

TEST_SUITE_BEGIN("transforms");

TEST_CASE("transform A on the six-vertex instance") {
  Tree t = six_vertex();
  SensorSet s = SensorSet::create(t, {0, 4}, 2);
  TransformPlan plan = plan_transform_a(t, s, 0);
  CHECK(plan.moved_vertices == std::vector<int>{5, 2});
  Tree out = apply_plan(t, plan);
  std::vector<Edge> expected{{0, 1}, {0, 5}, {1, 3}, {2, 5}, {3, 4}};
  CHECK(out.edges() == expected);
  CHECK(is_resolving(out, s).ok);
  harness::check_step_a(t, out, s, 0, plan);
}

TEST_CASE("transform A is a fixed point on pendant attractions") {
  Tree t = path_n(4);
  SensorSet s = SensorSet::create(t, {0}, 3);
  Tree out = transform_a(t, s, 0);
  CHECK(out.edges() == t.edges());
}

TEST_CASE("transform A validates its preconditions") {
  Tree t = six_vertex();
  SensorSet s = SensorSet::create(t, {0, 4}, 2);
  CHECK_THROWS_AS(plan_transform_a(t, s, 1), PreconditionError);  // not a sensor
  SensorSet weak = SensorSet::create(t, {0}, 1);
  CHECK_THROWS_AS(plan_transform_a(t, weak, 0), PreconditionError);  // not resolving
}

TEST_CASE("plans refuse foreign trees") {
  Tree t = six_vertex();
  SensorSet s = SensorSet::create(t, {0, 4}, 2);
  TransformPlan plan = plan_transform_a(t, s, 0);
  Tree other = path_n(6);
  CHECK_THROWS_AS(apply_plan(other, plan), PreconditionError);
}

TEST_CASE("normalize_attractions leaves pendant layouts alone and fixes the rest") {
  Tree t = six_vertex();
  SensorSet s = SensorSet::create(t, {0, 4}, 2);
  Tree out = normalize_attractions(t, s);
  CHECK(is_resolving(out, s).ok);
  for (int sensor : s.ids) {
    CHECK(attraction_is_leaf_path(out, sensor, attraction(out, s, {sensor})));
  }
  Tree again = normalize_attractions(out, s);
  CHECK(again.edges() == out.edges());
}

TEST_CASE("normalized random instances pass the per-sensor pendant check") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    int n = 4 + static_cast<int>(seed % 15);
    Tree t = random_tree(n, seed);
    int k = 1 + static_cast<int>(seed % 3);
    SensorSet s = greedy_resolving_set(t, k);
    Tree cur = t;
    for (int sensor : s.ids) {
      TransformPlan plan = plan_transform_a(cur, s, sensor);
      Tree next = apply_plan(cur, plan);
      harness::check_step_a(cur, next, s, sensor, plan);
      cur = next;
    }
    CHECK(is_resolving(cur, s).ok);
    for (int sensor : s.ids) {
      CHECK(attraction_is_leaf_path(cur, sensor, attraction(cur, s, {sensor})));
    }
  }
}

TEST_CASE("condition report flags the planted weak path") {
  auto inst = harness::make_weak_instance(2, 4, 1, 1, 1, 1, 0, 0);
  REQUIRE(inst.has_value());
  ConditionReport report = condition_report(inst->tree, inst->sensors);
  CHECK(report.condition_5_1.attractions_are_leaf_paths);
  CHECK(report.condition_5_1.strong_paths_disjoint);
  CHECK(report.condition_5_1.weak_path_exists);
  REQUIRE(report.condition_5_1.longest_weak.has_value());
  CHECK(*report.condition_5_1.longest_weak == std::pair<int, int>{inst->s0, inst->s1});
  CHECK(!report.condition_7_1.has_value());
}

TEST_CASE("transform B on a planted instance") {
  auto inst = harness::make_weak_instance(1, 3, 1, 1, 1, 1, 0, 0);
  REQUIRE(inst.has_value());
  TransformPlan plan = plan_transform_b(inst->tree, inst->sensors, inst->s0, inst->s1);
  Tree out = apply_plan(inst->tree, plan);
  harness::check_step_b(inst->tree, out, inst->sensors, inst->s0, inst->s1, plan);
  CHECK(out.vertex_count() == inst->tree.vertex_count());
}

TEST_CASE("transform B rejects missing preconditions") {
  // no weak path at all
  Construction c = build_optimal(2, 2);
  CHECK_THROWS_AS(plan_transform_b(c.tree, c.sensors, 0, 1), PreconditionError);
  // a weak path exists but an attraction is not yet a pendant path
  Tree p5 = path_n(5);
  SensorSet ends = SensorSet::create(p5, {0, 4}, 2);
  REQUIRE(is_resolving(p5, ends).ok);
  CHECK_THROWS_AS(plan_transform_b(p5, ends, 0, 4), PreconditionError);
  // weak path exists but the argument pair forms a strong one
  auto inst = harness::make_weak_instance(2, 4, 1, 1, 1, 1, 1, 0);
  REQUIRE(inst.has_value());
  int near_branch = -1;
  for (int s : inst->sensors.ids) {
    if (s == inst->s0 || s == inst->s1) continue;
    if (inst->tree.distance(inst->s0, s) <= inst->sensors.k + 1) near_branch = s;
  }
  REQUIRE(near_branch >= 0);
  CHECK_THROWS_AS(plan_transform_b(inst->tree, inst->sensors, inst->s0, near_branch),
                  PreconditionError);
}

TEST_CASE("shorten_weak_paths reaches an edge-sharing strong pair") {
  for (int k : {1, 2, 3}) {
    auto instances = harness::weak_instances(k);
    REQUIRE(instances.size() >= 2);
    for (const auto& inst : instances) {
      Tree cur = inst.tree;
      long long sigma = harness::total_sensor_path_length(cur, inst.sensors);
      int guard = 0;
      while (!has_edge_sharing_strong_pair(sensor_paths(cur, inst.sensors))) {
        Condition51 cond = check_condition_5_1(cur, inst.sensors);
        REQUIRE(cond.holds());
        auto [s0, s1] = *cond.longest_weak;
        TransformPlan plan = plan_transform_b(cur, inst.sensors, s0, s1);
        Tree next = apply_plan(cur, plan);
        harness::check_step_b(cur, next, inst.sensors, s0, s1, plan);
        long long next_sigma = harness::total_sensor_path_length(next, inst.sensors);
        CHECK(next_sigma <= sigma - 1);
        sigma = next_sigma;
        cur = next;
        REQUIRE(++guard < 200);
      }
      Tree direct = shorten_weak_paths(inst.tree, inst.sensors);
      CHECK(has_edge_sharing_strong_pair(sensor_paths(direct, inst.sensors)));
      CHECK(direct.edges() == cur.edges());
    }
  }
}

TEST_CASE("shorten_weak_paths is a no-op when an overlap already exists") {
  Tree t = leaf_sensor_star();
  SensorSet s = SensorSet::create(t, {1, 2, 3}, 1);
  REQUIRE(is_resolving(t, s).ok);
  Tree out = shorten_weak_paths(t, s);
  CHECK(out.edges() == t.edges());
}

TEST_CASE("transform C on the leaf-sensor star") {
  Tree t = leaf_sensor_star();
  SensorSet s = SensorSet::create(t, {1, 2, 3}, 1);
  auto selection = check_condition_7_1(t, s);
  REQUIRE(selection.has_value());
  CHECK(selection->q == 1);
  TransformPlan plan = plan_transform_c(t, s);
  CHECK(plan.new_vertex == 4);
  Tree out = apply_plan(t, plan);
  harness::check_step_c(t, out, s, plan);
}

TEST_CASE("transform C after shortening planted instances") {
  for (int k : {1, 2, 3}) {
    for (const auto& inst : harness::weak_instances(k)) {
      Tree cur = normalize_attractions(inst.tree, inst.sensors);
      cur = shorten_weak_paths(cur, inst.sensors);
      TransformPlan plan = plan_transform_c(cur, inst.sensors);
      Tree out = apply_plan(cur, plan);
      harness::check_step_c(cur, out, inst.sensors, plan);
    }
  }
}

TEST_CASE("transform C demands an overlap") {
  Construction c = build_optimal(3, 2);
  CHECK_THROWS_AS(plan_transform_c(c.tree, c.sensors), PreconditionError);
}

TEST_CASE("strong-pair disjointness agrees with the edge-marking predicate") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Tree t = random_tree(12, seed);
    int k = 1 + static_cast<int>(seed % 3);
    SensorSet s = greedy_resolving_set(t, k);
    auto paths = sensor_paths(t, s);
    bool pairwise = has_edge_sharing_strong_pair(paths);
    std::map<Edge, int> marks;
    bool marked = false;
    for (const auto& p : paths) {
      if (p.strength != PathStrength::strong) continue;
      for (size_t i = 0; i + 1 < p.vertices.size(); ++i) {
        if (++marks[make_edge(p.vertices[i], p.vertices[i + 1])] >= 2) marked = true;
      }
    }
    CHECK(pairwise == marked);
  }
}

TEST_CASE("grow_to_optimal fixes nothing on a maximal construction") {
  for (int m : {1, 2, 3}) {
    for (int k : {1, 2, 3, 4}) {
      Construction c = build_optimal(m, k);
      GrowResult grown = grow_to_optimal(c.tree, c.sensors);
      CHECK(grown.rewrites == 0);
      CHECK(!grown.budget_exhausted);
      CHECK(grown.tree.edges() == c.tree.edges());
    }
  }
}

TEST_CASE("grow_to_optimal is inert on a single-sensor pendant path") {
  Tree t = path_n(4);
  SensorSet s = SensorSet::create(t, {0}, 3);
  GrowResult grown = grow_to_optimal(t, s);
  CHECK(grown.rewrites == 0);
  CHECK(grown.tree.edges() == t.edges());
}

TEST_CASE("grow_to_optimal grows planted instances without losing resolution") {
  for (int k : {1, 2}) {
    auto instances = harness::weak_instances(k);
    size_t limit = std::min<size_t>(instances.size(), 10);
    for (size_t i = 0; i < limit; ++i) {
      const auto& inst = instances[i];
      GrowResult grown = grow_to_optimal(inst.tree, inst.sensors);
      CHECK(!grown.budget_exhausted);
      CHECK(grown.tree.vertex_count() >= inst.tree.vertex_count());
      CHECK(is_resolving(grown.tree, inst.sensors).ok);
    }
  }
}

TEST_CASE("grow_to_optimal rejects non-resolving inputs") {
  Tree t = path_n(6);
  SensorSet s = SensorSet::create(t, {0, 5}, 1);
  CHECK_THROWS_AS(grow_to_optimal(t, s), PreconditionError);
}

TEST_CASE("grow_to_optimal flags an exhausted step budget") {
  auto instances = harness::weak_instances(1);
  REQUIRE(!instances.empty());
  const auto& inst = instances.front();
  GrowResult full = grow_to_optimal(inst.tree, inst.sensors);
  REQUIRE(full.rewrites >= 2);  // at least one shortening and one split
  GrowResult capped = grow_to_optimal(inst.tree, inst.sensors, 1);
  CHECK(capped.budget_exhausted);
  CHECK(capped.rewrites >= 1);
  CHECK(is_resolving(capped.tree, inst.sensors).ok);
}

TEST_SUITE_END();

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "tmd/bounds.hpp"
#include "tmd/construct.hpp"
#include "tmd/enumerate.hpp"
#include "tmd/resolution.hpp"
#include "tmd/solver.hpp"
#include "tmd/tree.hpp"

using namespace tmd;

namespace {

Tree star_skeleton(int m) {
  std::vector<Edge> edges;
  for (int i = 1; i < m; ++i) edges.emplace_back(0, i);
  return Tree(m, std::move(edges));
}

// Contract every sensor path to a single skeleton edge.
std::vector<Edge> contracted_skeleton(const Tree& tree, const SensorSet& sensors) {
  std::vector<Edge> edges;
  for (const auto& p : sensor_paths(tree, sensors)) edges.push_back(make_edge(p.s1, p.s2));
  std::sort(edges.begin(), edges.end());
  return edges;
}

// Direct evaluation of the per-gap vertex yield.
long long yield_by_sum(int d, int k) {
  long long total = 0;
  for (int i = 1; i <= d; ++i) total += 1 + std::min(k - i, k - (d + 1 - i));
  return total;
}

}  // namespace

TEST_SUITE_BEGIN("construct");

TEST_CASE("pair attraction maximum on pinned inputs") {
  CHECK(pair_attraction_max(4) == 7);
  CHECK(pair_attraction_max(3) == 4);
  CHECK(pair_attraction_max(6) == 14);
  CHECK(pair_attraction_max(1) == 1);
}

TEST_CASE("pair attraction maximum equals the brute maximisation") {
  for (int k = 1; k <= 30; ++k) {
    long long best = 0;
    for (int d = 1; d <= k + 1; ++d) best = std::max(best, yield_by_sum(d, k));
    CHECK(pair_attraction_max(k) == best);
  }
}

TEST_CASE("parity sums on pinned inputs") {
  CHECK(sum_even(2, 3) == 4);
  CHECK(sum_odd(3, 4) == 7);
  CHECK_THROWS_AS(sum_even(3, 4), InvalidInput);
  CHECK_THROWS_AS(sum_odd(2, 3), InvalidInput);
  for (int k = 1; k <= 12; ++k) {
    for (int d = 1; d <= k + 1; ++d) {
      long long closed = d % 2 == 0 ? sum_even(d, k) : sum_odd(d, k);
      CHECK(closed == yield_by_sum(d, k));
    }
  }
}

TEST_CASE("optimal gap rounds (2k+1)/3 to the nearest integer") {
  CHECK(optimal_gap(1) == 1);
  CHECK(optimal_gap(3) == 2);
  CHECK(optimal_gap(6) == 4);
  CHECK(optimal_gap(2) == 2);
  CHECK(optimal_gap(4) == 3);
  for (int k = 1; k <= 40; ++k) {
    double exact = (2.0 * k + 1.0) / 3.0;
    int g = optimal_gap(k);
    CHECK(std::abs(g - exact) <= 0.5);
  }
}

TEST_CASE("optimal size on pinned inputs") {
  for (int k = 1; k <= 8; ++k) CHECK(optimal_size(1, k) == k + 1);
  CHECK(optimal_size(2, 1) == 5);
  CHECK(optimal_size(3, 4) == 29);
  CHECK(optimal_size(3, 6) == 49);
}

TEST_CASE("m=2, k=1 collapses to the five-vertex path") {
  Construction c = build_optimal(2, 1);
  CHECK(c.tree.vertex_count() == 5);
  CHECK(canonical_form(c.tree) ==
        canonical_form(Tree(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}})));
  CHECK(is_resolving(c.tree, c.sensors).ok);
  CHECK(brute_force_tmd(c.tree, 1).tmd == 2);
}

TEST_CASE("m=1 yields a pendant path with the sensor at its head") {
  Construction c = build_optimal(1, 5);
  CHECK(c.tree.vertex_count() == 6);
  CHECK(c.sensors.ids == std::vector<int>{0});
  CHECK(c.tree.degree(0) == 1);
  CHECK(is_resolving(c.tree, c.sensors).ok);
}

TEST_CASE("construction hits the closed-form size and stays resolving") {
  for (int m = 1; m <= 4; ++m) {
    for (int k = 1; k <= 6; ++k) {
      for (bool use_star : {false, true}) {
        if (use_star && m < 3) continue;
        Construction c = use_star ? build_optimal(m, k, star_skeleton(m))
                                  : build_optimal(m, k);
        CHECK(c.tree.vertex_count() == optimal_size(m, k));
        CHECK(is_resolving(c.tree, c.sensors).ok);
        CHECK(worst_case_lower_bound(c.tree.vertex_count(), k) == m);
        auto paths = sensor_paths(c.tree, c.sensors);
        CHECK(static_cast<int>(paths.size()) == m - 1);
        for (const auto& p : paths) CHECK(p.strength == PathStrength::strong);
        for (size_t i = 0; i < paths.size(); ++i)
          for (size_t j = i + 1; j < paths.size(); ++j)
            CHECK(!shares_edge(paths[i], paths[j]));
      }
    }
  }
}

TEST_CASE("contracting sensor paths recovers the skeleton") {
  for (int m = 2; m <= 5; ++m) {
    for (int k : {1, 2, 3}) {
      Construction c = build_optimal(m, k);
      CHECK(contracted_skeleton(c.tree, c.sensors) == c.blueprint.skeleton.edges());
      if (m >= 3) {
        Construction s = build_optimal(m, k, star_skeleton(m));
        CHECK(contracted_skeleton(s.tree, s.sensors) == star_skeleton(m).edges());
      }
    }
  }
}

TEST_CASE("attractions of the construction are full") {
  for (int m : {2, 3}) {
    for (int k : {1, 2, 3, 4}) {
      Construction c = build_optimal(m, k);
      AttractionReport report = attraction_report(c.tree, c.sensors);
      for (int s : c.sensors.ids) {
        CHECK(static_cast<int>(report.attractions.at({s}).size()) == k);
      }
      for (const auto& [a, b] : c.blueprint.skeleton.edges()) {
        auto it = report.attractions.find({std::min(a, b), std::max(a, b)});
        REQUIRE(it != report.attractions.end());
        CHECK(static_cast<long long>(it->second.size()) == pair_attraction_max(k));
      }
    }
  }
}

TEST_CASE("distinct skeletons keep the size but change the shape") {
  for (int k : {1, 2, 3}) {
    Construction path4 = build_optimal(4, k);
    Construction star4 = build_optimal(4, k, star_skeleton(4));
    CHECK(path4.tree.vertex_count() == star4.tree.vertex_count());
    CHECK(canonical_form(path4.tree) != canonical_form(star4.tree));
  }
}

TEST_CASE("skeleton argument is validated") {
  CHECK_THROWS_AS(build_optimal(3, 2, star_skeleton(4)), InvalidInput);
  CHECK_THROWS_AS(build_optimal(0, 2), InvalidInput);
  CHECK_THROWS_AS(build_optimal(2, 0), InvalidInput);
}

TEST_SUITE_END();

#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "tmd/tree.hpp"

namespace tmd {

/// Sensor placement bound to a measuring radius k. A sensor measures a
/// vertex when their distance is at most k; beyond that every distance
/// reads as k+1.
struct SensorSet {
  std::vector<int> ids;  // sorted, distinct
  int k = 1;

  static SensorSet create(const Tree& tree, std::vector<int> ids, int k);
  bool contains(int v) const;
  int size() const { return static_cast<int>(ids.size()); }
};

struct Verdict {
  bool ok = false;
  std::optional<std::pair<int, int>> failing_pair;
  std::optional<int> uncovered;
};

/// A sensor set resolves the tree when every vertex is within k of some
/// sensor and every vertex pair differs in some truncated sensor distance.
/// On failure the verdict carries the first uncovered vertex (scanned in
/// id order) or the first indistinguishable pair (lexicographic).
Verdict is_resolving(const Tree& tree, const SensorSet& sensors);

bool measures(const Tree& tree, const SensorSet& sensors, int s, int x);

/// Measures, and no other sensor sits on the s-x path.
bool directly_measures(const Tree& tree, const SensorSet& sensors, int s, int x);

std::vector<int> direct_measurers_of(const Tree& tree, const SensorSet& sensors, int x);

/// Vertices outside S whose set of direct measurers is exactly `subset`
/// and that `subset` separates from every other vertex it could be
/// confused with. Attractions of distinct subsets are disjoint.
std::vector<int> attraction(const Tree& tree, const SensorSet& sensors,
                            std::vector<int> subset);

/// Vertices outside S only reachable (within radius k) through `subset`
/// and separated by it; equals the union of attraction(B) over nonempty
/// B contained in `subset`.
std::vector<int> resolved_within(const Tree& tree, const SensorSet& sensors,
                                 std::vector<int> subset);

struct AttractionReport {
  /// Per vertex, the sorted list of sensors that directly measure it.
  std::vector<std::vector<int>> direct_measurers;
  /// Keyed by sorted sensor-id tuple; holds every nonempty attraction plus
  /// an entry for each single sensor.
  std::map<std::vector<int>, std::vector<int>> attractions;
};

AttractionReport attraction_report(const Tree& tree, const SensorSet& sensors);

/// Coordinates of x relative to an ordered sensor pair (s, s'): `typ` is
/// the distance from s to the projection of x onto the s-s' path, `hgt`
/// the distance from x to that projection. (typ, hgt) determines the
/// distance pair to s and s' bijectively.
struct TypeHeight {
  int typ = 0;
  int hgt = 0;
};

TypeHeight type_height(const Tree& tree, int s, int s_prime, int x);

enum class PathStrength { strong, weak };

/// Path between two sensors with no other sensor on it. Strong when it has
/// at most k+1 edges, weak otherwise.
struct SensorPath {
  int s1 = -1;
  int s2 = -1;
  std::vector<int> vertices;  // s1..s2 inclusive
  PathStrength strength = PathStrength::weak;
  int length() const { return static_cast<int>(vertices.size()) - 1; }
};

std::vector<SensorPath> sensor_paths(const Tree& tree, const SensorSet& sensors);

bool shares_edge(const SensorPath& a, const SensorPath& b);

}  // namespace tmd

#include "tmd/resolution.hpp"

#include <algorithm>
#include <set>

namespace tmd {

namespace {

void check_sensors(const Tree& tree, const SensorSet& sensors) {
  if (sensors.k < 1) throw InvalidInput("threshold k must be at least 1");
  for (int s : sensors.ids) tree.check_vertex(s);
}

// v lies on the s-x path iff the distances add up exactly.
bool on_path(const Tree& tree, int s, int x, int v) {
  return tree.distance(s, v) + tree.distance(v, x) == tree.distance(s, x);
}

std::vector<int> checked_subset(const SensorSet& sensors, std::vector<int> subset) {
  if (subset.empty()) throw InvalidInput("sensor subset must be nonempty");
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  for (int s : subset) {
    if (!sensors.contains(s))
      throw InvalidInput("subset id " + std::to_string(s) + " is not a sensor");
  }
  return subset;
}

}  // namespace

SensorSet SensorSet::create(const Tree& tree, std::vector<int> ids, int k) {
  if (k < 1) throw InvalidInput("threshold k must be at least 1");
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
    throw InvalidInput("duplicate sensor id");
  for (int s : ids) tree.check_vertex(s);
  SensorSet set;
  set.ids = std::move(ids);
  set.k = k;
  return set;
}

bool SensorSet::contains(int v) const {
  return std::binary_search(ids.begin(), ids.end(), v);
}

Verdict is_resolving(const Tree& tree, const SensorSet& sensors) {
  check_sensors(tree, sensors);
  int n = tree.vertex_count();
  int k = sensors.k;
  Verdict verdict;
  for (int x = 0; x < n; ++x) {
    bool covered = false;
    for (int s : sensors.ids) {
      if (tree.distance(s, x) <= k) {
        covered = true;
        break;
      }
    }
    if (!covered) {
      verdict.ok = false;
      verdict.uncovered = x;
      return verdict;
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      bool separated = false;
      for (int s : sensors.ids) {
        if (tree.truncated_distance(s, x, k) != tree.truncated_distance(s, y, k)) {
          separated = true;
          break;
        }
      }
      if (!separated) {
        verdict.ok = false;
        verdict.failing_pair = {x, y};
        return verdict;
      }
    }
  }
  verdict.ok = true;
  return verdict;
}

bool measures(const Tree& tree, const SensorSet& sensors, int s, int x) {
  check_sensors(tree, sensors);
  tree.check_vertex(x);
  if (!sensors.contains(s)) throw InvalidInput("measures: s is not a sensor");
  return tree.distance(s, x) <= sensors.k;
}

bool directly_measures(const Tree& tree, const SensorSet& sensors, int s, int x) {
  if (!measures(tree, sensors, s, x)) return false;
  for (int other : sensors.ids) {
    if (other != s && on_path(tree, s, x, other)) return false;
  }
  return true;
}

std::vector<int> direct_measurers_of(const Tree& tree, const SensorSet& sensors, int x) {
  std::vector<int> out;
  for (int s : sensors.ids) {
    if (directly_measures(tree, sensors, s, x)) out.push_back(s);
  }
  return out;
}

namespace {

// Shared by attraction and resolved_within: the candidates a vertex must
// be separated from are exactly the non-sensors whose direct measurers all
// lie inside the subset.
std::vector<int> competitors(const Tree& tree, const SensorSet& sensors,
                             const std::vector<int>& subset,
                             const std::vector<std::vector<int>>& dm) {
  std::vector<int> out;
  for (int y = 0; y < tree.vertex_count(); ++y) {
    if (sensors.contains(y)) continue;
    if (std::includes(subset.begin(), subset.end(), dm[y].begin(), dm[y].end()))
      out.push_back(y);
  }
  return out;
}

bool separated_by(const Tree& tree, int k, const std::vector<int>& subset, int x, int y) {
  for (int s : subset) {
    if (tree.truncated_distance(s, x, k) != tree.truncated_distance(s, y, k)) return true;
  }
  return false;
}

std::vector<std::vector<int>> all_direct_measurers(const Tree& tree,
                                                   const SensorSet& sensors) {
  std::vector<std::vector<int>> dm(tree.vertex_count());
  for (int x = 0; x < tree.vertex_count(); ++x)
    dm[x] = direct_measurers_of(tree, sensors, x);
  return dm;
}

}  // namespace

std::vector<int> attraction(const Tree& tree, const SensorSet& sensors,
                            std::vector<int> subset) {
  check_sensors(tree, sensors);
  subset = checked_subset(sensors, subset);
  auto dm = all_direct_measurers(tree, sensors);
  auto rivals = competitors(tree, sensors, subset, dm);
  std::vector<int> out;
  for (int x : rivals) {
    if (dm[x] != subset) continue;  // demands every subset sensor directly, no outsider
    bool ok = true;
    for (int y : rivals) {
      if (y != x && !separated_by(tree, sensors.k, subset, x, y)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(x);
  }
  return out;
}

std::vector<int> resolved_within(const Tree& tree, const SensorSet& sensors,
                                 std::vector<int> subset) {
  check_sensors(tree, sensors);
  subset = checked_subset(sensors, subset);
  auto dm = all_direct_measurers(tree, sensors);
  auto rivals = competitors(tree, sensors, subset, dm);
  std::vector<int> out;
  for (int x : rivals) {
    bool measured = false;
    for (int s : subset) {
      if (tree.distance(s, x) <= sensors.k) {
        measured = true;
        break;
      }
    }
    if (!measured) continue;
    bool ok = true;
    for (int y : rivals) {
      if (y != x && !separated_by(tree, sensors.k, subset, x, y)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(x);
  }
  return out;
}

AttractionReport attraction_report(const Tree& tree, const SensorSet& sensors) {
  check_sensors(tree, sensors);
  AttractionReport report;
  report.direct_measurers = all_direct_measurers(tree, sensors);
  std::set<std::vector<int>> keys;
  for (int s : sensors.ids) keys.insert({s});
  for (int x = 0; x < tree.vertex_count(); ++x) {
    if (!sensors.contains(x) && !report.direct_measurers[x].empty())
      keys.insert(report.direct_measurers[x]);
  }
  for (const auto& key : keys)
    report.attractions.emplace(key, attraction(tree, sensors, key));
  return report;
}

TypeHeight type_height(const Tree& tree, int s, int s_prime, int x) {
  tree.check_vertex(s);
  tree.check_vertex(s_prime);
  tree.check_vertex(x);
  if (s == s_prime) throw InvalidInput("type_height: the sensor pair must be distinct");
  if (x == s || x == s_prime)
    throw InvalidInput("type_height: x coincides with a pair endpoint");
  int num = tree.distance(x, s) - tree.distance(x, s_prime) + tree.distance(s, s_prime);
  TypeHeight th;
  th.typ = num / 2;  // always even in a tree
  th.hgt = tree.distance(x, s) - th.typ;
  return th;
}

std::vector<SensorPath> sensor_paths(const Tree& tree, const SensorSet& sensors) {
  check_sensors(tree, sensors);
  std::vector<SensorPath> out;
  const auto& ids = sensors.ids;
  for (size_t i = 0; i < ids.size(); ++i) {
    for (size_t j = i + 1; j < ids.size(); ++j) {
      int s1 = ids[i], s2 = ids[j];
      bool internal_sensor = false;
      for (int other : ids) {
        if (other != s1 && other != s2 && on_path(tree, s1, s2, other)) {
          internal_sensor = true;
          break;
        }
      }
      if (internal_sensor) continue;
      SensorPath p;
      p.s1 = s1;
      p.s2 = s2;
      p.vertices = tree.path(s1, s2);
      p.strength = p.length() <= sensors.k + 1 ? PathStrength::strong : PathStrength::weak;
      out.push_back(std::move(p));
    }
  }
  return out;
}

bool shares_edge(const SensorPath& a, const SensorPath& b) {
  std::set<Edge> edges_a;
  for (size_t i = 0; i + 1 < a.vertices.size(); ++i)
    edges_a.insert(make_edge(a.vertices[i], a.vertices[i + 1]));
  for (size_t i = 0; i + 1 < b.vertices.size(); ++i) {
    if (edges_a.count(make_edge(b.vertices[i], b.vertices[i + 1]))) return true;
  }
  return false;
}

}  // namespace tmd

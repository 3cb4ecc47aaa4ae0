#include "tmd/transforms.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace tmd {

namespace {

std::vector<int> single_attraction(const Tree& tree, const SensorSet& sensors, int s) {
  return attraction(tree, sensors, {s});
}

void sort_by_distance_from(const Tree& tree, int origin, std::vector<int>& vertices) {
  std::sort(vertices.begin(), vertices.end(), [&](int a, int b) {
    int da = tree.distance(origin, a), db = tree.distance(origin, b);
    return da != db ? da < db : a < b;
  });
}

std::set<Edge> incident_edges(const Tree& tree, const std::vector<int>& vertices) {
  std::set<int> verts(vertices.begin(), vertices.end());
  std::set<Edge> out;
  for (const auto& e : tree.edges()) {
    if (verts.count(e.first) || verts.count(e.second)) out.insert(e);
  }
  return out;
}

std::vector<Edge> chain_edges(int head, const std::vector<int>& chain) {
  std::vector<Edge> out;
  int prev = head;
  for (int v : chain) {
    out.push_back(make_edge(prev, v));
    prev = v;
  }
  return out;
}

// Connected components of the tree after dropping `cut_vertices` and
// `cut_edges`; each component's vertex list comes out sorted.
std::vector<std::vector<int>> cut_components(const Tree& tree,
                                             const std::vector<int>& cut_vertices,
                                             const std::set<Edge>& cut_edges) {
  int n = tree.vertex_count();
  std::vector<char> removed(n, 0);
  for (int v : cut_vertices) removed[v] = 1;
  std::vector<char> seen(n, 0);
  std::vector<std::vector<int>> comps;
  for (int start = 0; start < n; ++start) {
    if (removed[start] || seen[start]) continue;
    std::vector<int> comp, stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : tree.neighbors(v)) {
        if (removed[w] || seen[w] || cut_edges.count(make_edge(v, w))) continue;
        seen[w] = 1;
        stack.push_back(w);
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

// Moves the components holding `front` vertices to the head, in the given
// order; the rest keep their smallest-vertex order.
void order_components(std::vector<std::vector<int>>& comps, const std::vector<int>& front) {
  std::vector<std::vector<int>> head;
  for (int v : front) {
    auto it = std::find_if(comps.begin(), comps.end(), [&](const std::vector<int>& c) {
      return std::binary_search(c.begin(), c.end(), v);
    });
    if (it == comps.end()) throw Error("component ordering: anchor vertex not found");
    head.push_back(std::move(*it));
    comps.erase(it);
  }
  for (auto it = head.rbegin(); it != head.rend(); ++it)
    comps.insert(comps.begin(), std::move(*it));
}

// The unique vertex of `comp` closest to `origin` in the original tree.
int closest_in_component(const Tree& tree, const std::vector<int>& comp, int origin) {
  int best = -1, best_d = -1;
  bool tie = false;
  for (int v : comp) {
    int d = tree.distance(origin, v);
    if (best < 0 || d < best_d) {
      best = v;
      best_d = d;
      tie = false;
    } else if (d == best_d) {
      tie = true;
    }
  }
  if (tie) throw Error("closest component vertex is not unique");
  return best;
}

void require_resolving(const Tree& tree, const SensorSet& sensors, const char* what) {
  Verdict verdict = is_resolving(tree, sensors);
  if (!verdict.ok)
    throw PreconditionError(std::string(what) + ": the sensor set does not resolve the tree");
}

// type/height against an ordered pair, with sensors themselves allowed.
std::pair<int, int> raw_type_height(const Tree& tree, int s, int s_prime, int x) {
  int typ = (tree.distance(x, s) - tree.distance(x, s_prime) + tree.distance(s, s_prime)) / 2;
  return {typ, tree.distance(x, s) - typ};
}

}  // namespace

bool has_edge_sharing_strong_pair(const std::vector<SensorPath>& paths) {
  for (size_t i = 0; i < paths.size(); ++i) {
    if (paths[i].strength != PathStrength::strong) continue;
    for (size_t j = i + 1; j < paths.size(); ++j) {
      if (paths[j].strength != PathStrength::strong) continue;
      if (shares_edge(paths[i], paths[j])) return true;
    }
  }
  return false;
}

bool attraction_is_leaf_path(const Tree& tree, int s, const std::vector<int>& attraction) {
  if (attraction.empty()) return true;
  std::vector<int> sorted = attraction;
  sort_by_distance_from(tree, s, sorted);
  int prev = s;
  int l = static_cast<int>(sorted.size());
  for (int i = 0; i < l; ++i) {
    if (tree.distance(s, sorted[i]) != i + 1) return false;
    if (!tree.has_edge(prev, sorted[i])) return false;
    if (i < l - 1 && tree.degree(sorted[i]) != 2) return false;
    prev = sorted[i];
  }
  return tree.degree(sorted.back()) == 1;
}

Tree apply_plan(const Tree& tree, const TransformPlan& plan) {
  if (plan.source_hash != tree.content_hash())
    throw PreconditionError("apply_plan: plan was made for a different tree");
  std::set<Edge> edges(tree.edges().begin(), tree.edges().end());
  for (const auto& e : plan.removed_edges) {
    if (!edges.erase(e))
      throw Error("apply_plan: removed edge is absent from the source tree");
  }
  for (const auto& e : plan.added_leafpath_edges) {
    if (!edges.insert(e).second) throw Error("apply_plan: duplicate added edge");
  }
  for (const auto& e : plan.reconnect_edges) {
    if (!edges.insert(e).second) throw Error("apply_plan: duplicate reconnect edge");
  }
  int n = tree.vertex_count() + (plan.new_vertex.has_value() ? 1 : 0);
  return Tree(n, std::vector<Edge>(edges.begin(), edges.end()));
}

TransformPlan plan_transform_a(const Tree& tree, const SensorSet& sensors, int s) {
  if (!sensors.contains(s))
    throw PreconditionError("transform A: " + std::to_string(s) + " is not a sensor");
  require_resolving(tree, sensors, "transform A");

  TransformPlan plan;
  plan.op = 'A';
  plan.source_hash = tree.content_hash();
  plan.anchor = s;

  std::vector<int> moved = single_attraction(tree, sensors, s);
  sort_by_distance_from(tree, s, moved);
  plan.moved_vertices = moved;

  std::set<Edge> e1 = incident_edges(tree, moved);
  plan.removed_edges.assign(e1.begin(), e1.end());
  plan.added_leafpath_edges = chain_edges(s, moved);

  auto comps = cut_components(tree, moved, {});
  order_components(comps, {s});
  for (size_t i = 1; i < comps.size(); ++i) {
    int x = closest_in_component(tree, comps[i], s);
    plan.reconnect_edges.push_back(make_edge(s, x));
  }
  plan.components = std::move(comps);
  return plan;
}

Tree transform_a(const Tree& tree, const SensorSet& sensors, int s) {
  return apply_plan(tree, plan_transform_a(tree, sensors, s));
}

Tree normalize_attractions(const Tree& tree, const SensorSet& sensors) {
  Tree current = tree;
  for (int s : sensors.ids) current = transform_a(current, sensors, s);
  return current;
}

Condition51 check_condition_5_1(const Tree& tree, const SensorSet& sensors) {
  Condition51 cond;
  cond.attractions_are_leaf_paths = true;
  for (int s : sensors.ids) {
    if (!attraction_is_leaf_path(tree, s, single_attraction(tree, sensors, s))) {
      cond.attractions_are_leaf_paths = false;
      break;
    }
  }
  auto paths = sensor_paths(tree, sensors);
  cond.strong_paths_disjoint = !has_edge_sharing_strong_pair(paths);
  int best_len = 0;
  for (const auto& p : paths) {
    if (p.strength != PathStrength::weak) continue;
    cond.weak_path_exists = true;
    auto key = std::make_pair(std::min(p.s1, p.s2), std::max(p.s1, p.s2));
    if (p.length() > best_len ||
        (p.length() == best_len && cond.longest_weak && key < *cond.longest_weak)) {
      best_len = p.length();
      cond.longest_weak = key;
    }
  }
  return cond;
}

std::optional<Condition71> check_condition_7_1(const Tree& tree, const SensorSet& sensors) {
  auto paths = sensor_paths(tree, sensors);
  std::vector<const SensorPath*> strong;
  for (const auto& p : paths)
    if (p.strength == PathStrength::strong) strong.push_back(&p);

  struct Candidate {
    int d0, d1, s0, s0p, s1, q, u_next;
    std::vector<int> prefix;
  };
  std::optional<Candidate> best;

  auto consider = [&](const SensorPath& pa, const SensorPath& pb, int s0) {
    int s0p = pa.s1 == s0 ? pa.s2 : pa.s1;
    int s1 = pb.s1 == s0 ? pb.s2 : pb.s1;
    if (s0p == s1) return;
    auto path_a = tree.path(s0, s0p);
    auto path_b = tree.path(s0, s1);
    // q = number of shared vertices past s0
    size_t t = 1;
    while (t < path_a.size() && t < path_b.size() && path_a[t] == path_b[t]) ++t;
    int q = static_cast<int>(t) - 1;
    if (q < 1) return;  // no shared edge
    int d0 = static_cast<int>(path_a.size()) - 1;
    int d1 = static_cast<int>(path_b.size()) - 1;
    if (!(q <= d0 - q && d0 - q <= d1 - q)) return;
    int w_q = path_a[q];
    int u_next = path_b[q + 1];
    for (int other : sensors.ids) {
      if (other == s0 || other == s0p || other == s1) continue;
      if (directly_measures(tree, sensors, other, w_q) &&
          tree.distance(other, w_q) < d1 - q)
        return;
    }
    Candidate cand{d0, d1, s0, s0p, s1, q, u_next,
                   std::vector<int>(path_a.begin() + 1, path_a.begin() + 1 + q)};
    auto key = [](const Candidate& c) {
      return std::tuple(c.d0, c.d1, c.s0, c.s0p, c.s1);
    };
    if (!best || key(cand) < key(*best)) best = std::move(cand);
  };

  for (size_t i = 0; i < strong.size(); ++i) {
    for (size_t j = 0; j < strong.size(); ++j) {
      if (i == j) continue;
      const SensorPath& pa = *strong[i];
      const SensorPath& pb = *strong[j];
      for (int s0 : {pa.s1, pa.s2}) {
        if (s0 == pb.s1 || s0 == pb.s2) consider(pa, pb, s0);
      }
    }
  }
  if (!best) return std::nullopt;
  Condition71 out;
  out.s0 = best->s0;
  out.s0_prime = best->s0p;
  out.s1 = best->s1;
  out.q = best->q;
  out.shared_prefix = best->prefix;
  out.u_next = best->u_next;
  return out;
}

ConditionReport condition_report(const Tree& tree, const SensorSet& sensors) {
  return ConditionReport{check_condition_5_1(tree, sensors),
                         check_condition_7_1(tree, sensors)};
}

TransformPlan plan_transform_b(const Tree& tree, const SensorSet& sensors, int s0, int s1) {
  if (!sensors.contains(s0) || !sensors.contains(s1) || s0 == s1)
    throw PreconditionError("transform B: (s0, s1) must be two distinct sensors");
  require_resolving(tree, sensors, "transform B");

  Condition51 cond = check_condition_5_1(tree, sensors);
  if (!cond.attractions_are_leaf_paths)
    throw PreconditionError("transform B: some attraction is not a pendant path");
  if (!cond.strong_paths_disjoint)
    throw PreconditionError("transform B: two strong sensor paths share an edge");
  if (!cond.weak_path_exists)
    throw PreconditionError("transform B: no weak sensor path exists");

  auto paths = sensor_paths(tree, sensors);
  int longest = 0;
  const SensorPath* selected = nullptr;
  for (const auto& p : paths) {
    if (p.strength == PathStrength::weak) longest = std::max(longest, p.length());
    if ((p.s1 == s0 && p.s2 == s1) || (p.s1 == s1 && p.s2 == s0)) selected = &p;
  }
  if (selected == nullptr || selected->strength != PathStrength::weak ||
      selected->length() != longest)
    throw PreconditionError("transform B: (s0, s1) is not a longest weak sensor path");

  auto path01 = tree.path(s0, s1);
  int w1 = path01[1];

  std::vector<int> w1_measurers;
  for (int s : sensors.ids) {
    if (s != s0 && directly_measures(tree, sensors, s, w1)) w1_measurers.push_back(s);
  }
  if (w1_measurers.size() != 1)
    throw PreconditionError("transform B: the direct measurer next to s0 is not unique");
  int s0p = w1_measurers[0];
  if (s0p == s1) throw PreconditionError("transform B: degenerate pair selection");

  auto path00 = tree.path(s0, s0p);
  int d00 = static_cast<int>(path00.size()) - 1;
  size_t t = 1;
  while (t < path00.size() && t < path01.size() && path00[t] == path01[t]) ++t;
  int q = static_cast<int>(t) - 1;
  if (q < 1) throw Error("transform B: the two paths out of s0 share no edge");
  int w_q = path00[q];
  int u_next = path01[q + 1];

  // Every sensor must sit at type 0, q or d(s0,s0'); type-q sensors lie
  // past the (w_q, u_next) edge.
  for (int s : sensors.ids) {
    if (s == s0 || s == s0p) continue;
    auto [typ, hgt] = raw_type_height(tree, s0, s0p, s);
    if (typ != 0 && typ != q && typ != d00)
      throw PreconditionError("transform B: sensor " + std::to_string(s) +
                              " has an unexpected type");
    if (typ == q && tree.distance(u_next, s) != tree.distance(w_q, s) - 1)
      throw PreconditionError("transform B: type-q sensor " + std::to_string(s) +
                              " does not sit past the branch edge");
  }

  std::vector<int> pair_attr = attraction(tree, sensors, {s0, s0p});
  std::set<int> pair_attr_set(pair_attr.begin(), pair_attr.end());

  std::vector<int> v1, v2;
  for (int v = 0; v < tree.vertex_count(); ++v) {
    if (v == s0 || v == s0p) continue;
    auto [typ, hgt] = raw_type_height(tree, s0, s0p, v);
    if (typ != q || hgt < 1) continue;
    bool past_branch = tree.distance(w_q, v) == 1 + tree.distance(u_next, v);
    if (past_branch) {
      if (pair_attr_set.count(v)) v1.push_back(v);
    } else {
      if (sensors.contains(v))
        throw Error("transform B: a sensor appeared on the near side of the branch");
      v2.push_back(v);
    }
  }
  auto by_height = [&](int a, int b) {
    int ha = raw_type_height(tree, s0, s0p, a).second;
    int hb = raw_type_height(tree, s0, s0p, b).second;
    return ha != hb ? ha < hb : a < b;
  };
  std::sort(v1.begin(), v1.end(), by_height);
  std::sort(v2.begin(), v2.end(), by_height);

  std::vector<int> moved = v1;
  moved.insert(moved.end(), v2.begin(), v2.end());

  // Rewired vertices must fit the branch budget with pairwise distinct heights.
  if (static_cast<int>(moved.size()) > sensors.k - q)
    throw Error("transform B: moved set exceeds the k - q budget");
  std::set<int> heights;
  for (int v : moved) {
    int h = raw_type_height(tree, s0, s0p, v).second;
    if (h > sensors.k - q || !heights.insert(h).second)
      throw Error("transform B: moved heights are not distinct within the budget");
  }

  TransformPlan plan;
  plan.op = 'B';
  plan.source_hash = tree.content_hash();
  plan.anchor = w_q;
  plan.moved_vertices = moved;

  std::set<Edge> e1 = incident_edges(tree, moved);
  e1.insert(make_edge(w_q, u_next));
  plan.removed_edges.assign(e1.begin(), e1.end());
  plan.added_leafpath_edges = chain_edges(w_q, moved);

  auto comps = cut_components(tree, moved, {make_edge(w_q, u_next)});
  order_components(comps, {s0});
  for (size_t i = 1; i < comps.size(); ++i) {
    int x = closest_in_component(tree, comps[i], s0);
    plan.reconnect_edges.push_back(make_edge(s0, x));
  }
  plan.components = std::move(comps);
  return plan;
}

Tree transform_b(const Tree& tree, const SensorSet& sensors, int s0, int s1) {
  return apply_plan(tree, plan_transform_b(tree, sensors, s0, s1));
}

Tree shorten_weak_paths(const Tree& tree, const SensorSet& sensors) {
  require_resolving(tree, sensors, "shorten_weak_paths");
  Tree current = tree;
  if (has_edge_sharing_strong_pair(sensor_paths(current, sensors))) return current;

  long long budget = 0;
  for (const auto& p : sensor_paths(current, sensors)) budget += p.length();
  ++budget;

  for (long long i = 0; i < budget; ++i) {
    Condition51 cond = check_condition_5_1(current, sensors);
    if (!cond.weak_path_exists)
      throw Error("shorten_weak_paths: weak paths ran out before an overlap appeared");
    auto [s0, s1] = *cond.longest_weak;
    current = transform_b(current, sensors, s0, s1);
    if (has_edge_sharing_strong_pair(sensor_paths(current, sensors))) return current;
  }
  throw Error("shorten_weak_paths: did not terminate within the length budget");
}

TransformPlan plan_transform_c(const Tree& tree, const SensorSet& sensors) {
  require_resolving(tree, sensors, "transform C");
  for (int s : sensors.ids) {
    if (!attraction_is_leaf_path(tree, s, single_attraction(tree, sensors, s)))
      throw PreconditionError("transform C: some attraction is not a pendant path");
  }
  auto selection = check_condition_7_1(tree, sensors);
  if (!selection)
    throw PreconditionError("transform C: no admissible edge-sharing pair of strong sensor paths");
  int s0 = selection->s0, s0p = selection->s0_prime, s1 = selection->s1;
  int q = selection->q;
  int w_q = selection->shared_prefix.back();
  int u_next = selection->u_next;
  int d00 = tree.distance(s0, s0p);
  int k = sensors.k;

  // Vertices that every sensor can only reach through w_q (or not at all).
  std::vector<int> star;
  for (int x = 0; x < tree.vertex_count(); ++x) {
    if (x == w_q || sensors.contains(x)) continue;
    bool qualifies = true;
    for (int s : sensors.ids) {
      if (tree.distance(s, x) <= k &&
          tree.distance(s, w_q) + tree.distance(w_q, x) != tree.distance(s, x)) {
        qualifies = false;
        break;
      }
    }
    if (qualifies) star.push_back(x);
  }
  sort_by_distance_from(tree, w_q, star);
  for (size_t i = 0; i + 1 < star.size(); ++i) {
    if (tree.distance(w_q, star[i]) == tree.distance(w_q, star[i + 1]))
      throw Error("transform C: tied distances inside the branch attraction");
  }
  if (static_cast<int>(star.size()) > k - (d00 - q))
    throw Error("transform C: branch attraction exceeds its radius budget");

  TransformPlan plan;
  plan.op = 'C';
  plan.source_hash = tree.content_hash();
  plan.anchor = w_q;
  plan.moved_vertices = star;
  plan.new_vertex = tree.vertex_count();

  std::set<Edge> e1 = incident_edges(tree, star);
  e1.insert(make_edge(w_q, u_next));
  plan.removed_edges.assign(e1.begin(), e1.end());
  plan.added_leafpath_edges = chain_edges(w_q, star);

  auto comps = cut_components(tree, star, {make_edge(w_q, u_next)});
  order_components(comps, {s0, s1});
  if (comps.size() < 2 || !std::binary_search(comps[1].begin(), comps[1].end(), s1))
    throw Error("transform C: cutting the branch edge did not separate s1");

  int v_star = *plan.new_vertex;
  plan.reconnect_edges.push_back(make_edge(s0, v_star));
  plan.reconnect_edges.push_back(make_edge(v_star, u_next));
  for (size_t i = 2; i < comps.size(); ++i) {
    int x = closest_in_component(tree, comps[i], w_q);
    plan.reconnect_edges.push_back(make_edge(s0, x));
  }
  plan.components = std::move(comps);
  return plan;
}

Tree transform_c(const Tree& tree, const SensorSet& sensors) {
  return apply_plan(tree, plan_transform_c(tree, sensors));
}

GrowResult grow_to_optimal(const Tree& tree, const SensorSet& sensors, int max_steps) {
  require_resolving(tree, sensors, "grow_to_optimal");
  long long budget = max_steps > 0
                         ? max_steps
                         : 10LL * tree.vertex_count() * std::max(1, sensors.size());
  GrowResult result{tree, 0, false};

  auto spend = [&](Tree next) {
    if (next.content_hash() != result.tree.content_hash() ||
        next.vertex_count() != result.tree.vertex_count()) {
      ++result.rewrites;
      result.tree = std::move(next);
    }
    return result.rewrites <= budget;
  };

  while (true) {
    bool ok = true;
    for (int s : sensors.ids) {
      if (!spend(transform_a(result.tree, sensors, s))) {
        ok = false;
        break;
      }
    }
    if (!ok) break;

    Condition51 cond = check_condition_5_1(result.tree, sensors);
    if (!cond.strong_paths_disjoint) {
      if (!spend(transform_c(result.tree, sensors))) break;
      continue;
    }
    if (cond.weak_path_exists) {
      auto [s0, s1] = *cond.longest_weak;
      if (!spend(transform_b(result.tree, sensors, s0, s1))) break;
      continue;
    }
    return result;  // all sensor paths strong and pairwise edge-disjoint
  }
  result.budget_exhausted = true;
  return result;
}

}  // namespace tmd

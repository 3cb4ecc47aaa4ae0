#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tmd/error.hpp"

namespace tmd {

/// Undirected edge, stored with the smaller endpoint first.
using Edge = std::pair<int, int>;

Edge make_edge(int u, int v);

/// Immutable free tree on vertices 0..n-1.
///
/// Construction validates the whole contract: exactly n-1 edges, no
/// self-loops, no duplicate edges, connected (and therefore acyclic).
/// All-pairs hop distances are computed lazily, one BFS per vertex, and
/// cached. The cache is shared between copies and initialised at most
/// once, so Tree values can be shared freely across threads.
class Tree {
 public:
  Tree(int vertex_count, std::vector<Edge> edges);

  /// Text format: first line "n", then n-1 lines "u v" (0-indexed).
  static Tree from_text(std::string_view text);
  std::string to_text() const;

  int vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const;
  bool has_edge(int u, int v) const;

  int distance(int u, int v) const;
  int truncated_distance(int u, int v, int k) const;

  /// The unique simple path from u to v, endpoints included.
  std::vector<int> path(int u, int v) const;

  /// FNV-1a over the vertex count and the sorted edge list. Used to pin
  /// transformation plans to the exact tree they were computed against.
  std::uint64_t content_hash() const;

  void check_vertex(int v) const;

 private:
  struct DistanceCache;
  const std::vector<int>& distance_table() const;

  int n_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<Edge> edges_;
  std::shared_ptr<DistanceCache> cache_;
};

/// Pendant run of degree-2 vertices hanging from `anchor` and ending in a
/// leaf. `vertices` runs from the anchor outward and excludes the anchor;
/// the anchor has degree >= 3 in the host tree.
struct LeafPath {
  int anchor = -1;
  std::vector<int> vertices;
  int length() const { return static_cast<int>(vertices.size()); }
};

/// Support vertices (degree >= 3 anchoring at least two leaf-paths) and
/// the leaf-paths anchored at each of them.
struct SupportProfile {
  std::vector<int> support_vertices;
  std::map<int, std::vector<LeafPath>> leaf_paths;
};

SupportProfile support_profile(const Tree& tree);

int distance(const Tree& tree, int u, int v);
int truncated_distance(const Tree& tree, int u, int v, int k);
std::vector<int> tree_path(const Tree& tree, int u, int v);

}  // namespace tmd

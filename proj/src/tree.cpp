#include "tmd/tree.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace tmd {

Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

struct Tree::DistanceCache {
  std::once_flag once;
  std::vector<int> table;
};

Tree::Tree(int vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), cache_(std::make_shared<DistanceCache>()) {
  if (n_ < 1) throw InvalidInput("a tree needs at least one vertex");
  if (static_cast<int>(edges.size()) != n_ - 1) {
    throw InvalidInput("a tree on " + std::to_string(n_) + " vertices needs exactly " +
                       std::to_string(n_ - 1) + " edges, got " +
                       std::to_string(edges.size()));
  }
  for (auto& e : edges) {
    if (e.first < 0 || e.first >= n_ || e.second < 0 || e.second >= n_)
      throw InvalidInput("edge endpoint out of range");
    if (e.first == e.second) throw InvalidInput("self-loops are not allowed");
    e = make_edge(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw InvalidInput("duplicate edge");
  edges_ = std::move(edges);

  adj_.resize(n_);
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());

  // n-1 edges plus connectivity rules out cycles.
  std::vector<char> seen(n_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj_[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != n_) throw InvalidInput("edge list is not connected");
}

Tree Tree::from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = 0;
  if (!(in >> n)) throw InvalidInput("tree text: missing vertex count");
  if (n < 1 || n > 1'000'000) throw InvalidInput("tree text: bad vertex count");
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(n - 1));
  for (long long i = 0; i < n - 1; ++i) {
    long long u = 0, v = 0;
    if (!(in >> u >> v)) throw InvalidInput("tree text: expected " + std::to_string(n - 1) +
                                            " edge lines, got " + std::to_string(i));
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw InvalidInput("tree text: edge endpoint out of range");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  std::string tail;
  if (in >> tail) throw InvalidInput("tree text: trailing content after edge list");
  return Tree(static_cast<int>(n), std::move(edges));
}

std::string Tree::to_text() const {
  std::ostringstream out;
  out << n_ << '\n';
  for (const auto& [u, v] : edges_) out << u << ' ' << v << '\n';
  return out.str();
}

void Tree::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw InvalidInput("vertex id " + std::to_string(v) + " out of range [0, " +
                       std::to_string(n_) + ")");
}

const std::vector<int>& Tree::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

int Tree::degree(int v) const {
  check_vertex(v);
  return static_cast<int>(adj_[v].size());
}

bool Tree::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

const std::vector<int>& Tree::distance_table() const {
  std::call_once(cache_->once, [this] {
    auto& table = cache_->table;
    table.assign(static_cast<size_t>(n_) * n_, -1);
    std::vector<int> queue(n_);
    for (int src = 0; src < n_; ++src) {
      int* row = &table[static_cast<size_t>(src) * n_];
      int head = 0, tail = 0;
      queue[tail++] = src;
      row[src] = 0;
      while (head < tail) {
        int v = queue[head++];
        for (int w : adj_[v]) {
          if (row[w] < 0) {
            row[w] = row[v] + 1;
            queue[tail++] = w;
          }
        }
      }
    }
  });
  return cache_->table;
}

int Tree::distance(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return distance_table()[static_cast<size_t>(u) * n_ + v];
}

int Tree::truncated_distance(int u, int v, int k) const {
  if (k < 1) throw InvalidInput("threshold k must be at least 1");
  return std::min(distance(u, v), k + 1);
}

std::vector<int> Tree::path(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  std::vector<int> out{u};
  int cur = u;
  // Descend along strictly decreasing distance to v.
  while (cur != v) {
    int d = distance(cur, v);
    for (int w : adj_[cur]) {
      if (distance(w, v) == d - 1) {
        cur = w;
        break;
      }
    }
    out.push_back(cur);
  }
  return out;
}

std::uint64_t Tree::content_hash() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(static_cast<std::uint64_t>(n_));
  for (const auto& [u, v] : edges_) {
    mix(static_cast<std::uint64_t>(u));
    mix(static_cast<std::uint64_t>(v));
  }
  return h;
}

SupportProfile support_profile(const Tree& tree) {
  SupportProfile profile;
  int n = tree.vertex_count();
  std::map<int, std::vector<LeafPath>> by_anchor;
  for (int leaf = 0; leaf < n; ++leaf) {
    if (tree.degree(leaf) != 1) continue;
    // Walk inward through the degree-2 run.
    std::vector<int> run{leaf};
    int prev = -1, cur = leaf;
    while (true) {
      int next = -1;
      for (int w : tree.neighbors(cur)) {
        if (w != prev) {
          next = w;
          break;
        }
      }
      if (tree.degree(next) != 2) {
        if (tree.degree(next) >= 3) {
          LeafPath lp;
          lp.anchor = next;
          lp.vertices.assign(run.rbegin(), run.rend());
          by_anchor[next].push_back(std::move(lp));
        }
        break;  // degree-1 stop means the whole tree is a bare path
      }
      prev = cur;
      cur = next;
      run.push_back(cur);
    }
  }
  for (auto& [anchor, paths] : by_anchor) {
    if (paths.size() >= 2) {
      profile.support_vertices.push_back(anchor);
      profile.leaf_paths.emplace(anchor, std::move(paths));
    }
  }
  return profile;
}

int distance(const Tree& tree, int u, int v) { return tree.distance(u, v); }

int truncated_distance(const Tree& tree, int u, int v, int k) {
  return tree.truncated_distance(u, v, k);
}

std::vector<int> tree_path(const Tree& tree, int u, int v) { return tree.path(u, v); }

}  // namespace tmd

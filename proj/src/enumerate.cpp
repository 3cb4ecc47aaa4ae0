#include "tmd/enumerate.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

namespace tmd {

namespace {

Tree prufer_decode(int n, const std::vector<int>& code) {
  // n >= 2, code has n-2 entries in [0, n).
  std::vector<int> degree(n, 1);
  for (int a : code) degree[a]++;
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  int ptr = 0;
  while (degree[ptr] != 1) ptr++;
  int leaf = ptr;
  for (int a : code) {
    edges.push_back(make_edge(leaf, a));
    if (--degree[a] == 1 && a < ptr) {
      leaf = a;
    } else {
      ptr++;
      while (ptr < n && degree[ptr] != 1) ptr++;
      leaf = ptr;
    }
  }
  edges.push_back(make_edge(leaf, n - 1));
  return Tree(n, std::move(edges));
}

std::string encode_rooted(const Tree& tree, int root) {
  int n = tree.vertex_count();
  std::vector<int> parent(n, -1), order;
  order.reserve(n);
  order.push_back(root);
  parent[root] = root;
  for (size_t i = 0; i < order.size(); ++i) {
    int v = order[i];
    for (int w : tree.neighbors(v)) {
      if (parent[w] < 0) {
        parent[w] = v;
        order.push_back(w);
      }
    }
  }
  std::vector<std::string> label(n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    std::vector<std::string> kids;
    for (int w : tree.neighbors(v)) {
      if (w != root && parent[w] == v) kids.push_back(label[w]);
    }
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (const auto& kid : kids) s += kid;
    s += ")";
    label[v] = std::move(s);
  }
  return label[root];
}

}  // namespace

Tree random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw InvalidInput("random_tree: n must be positive");
  if (n == 1) return Tree(1, {});
  if (n == 2) return Tree(2, {{0, 1}});
  std::mt19937_64 rng(seed);
  std::vector<int> code(n - 2);
  for (auto& c : code) c = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
  return prufer_decode(n, code);
}

void for_each_labeled_tree(int n, const std::function<bool(const Tree&)>& visit) {
  if (n < 1 || n > 10)
    throw GuardError("for_each_labeled_tree: n must lie in [1, 10], got " + std::to_string(n));
  if (n == 1) {
    visit(Tree(1, {}));
    return;
  }
  if (n == 2) {
    visit(Tree(2, {{0, 1}}));
    return;
  }
  std::vector<int> code(n - 2, 0);
  while (true) {
    if (!visit(prufer_decode(n, code))) return;
    int i = n - 3;
    while (i >= 0 && code[i] == n - 1) code[i--] = 0;
    if (i < 0) return;
    code[i]++;
  }
}

std::vector<Tree> enumerate_trees(int n, bool dedup) {
  std::vector<Tree> out;
  std::unordered_set<std::string> seen;
  for_each_labeled_tree(n, [&](const Tree& t) {
    if (dedup) {
      if (seen.insert(canonical_form(t)).second) out.push_back(t);
    } else {
      out.push_back(t);
    }
    return true;
  });
  return out;
}

std::vector<int> tree_centers(const Tree& tree) {
  int n = tree.vertex_count();
  if (n == 1) return {0};
  if (n == 2) return {0, 1};
  std::vector<int> degree(n);
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    degree[v] = tree.degree(v);
    if (degree[v] == 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    std::vector<int> next;
    remaining -= static_cast<int>(layer.size());
    for (int v : layer) {
      for (int w : tree.neighbors(v)) {
        if (--degree[w] == 1) next.push_back(w);
      }
      degree[v] = 0;
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

std::string canonical_form(const Tree& tree) {
  std::string best;
  for (int c : tree_centers(tree)) {
    std::string enc = encode_rooted(tree, c);
    if (best.empty() || enc < best) best = std::move(enc);
  }
  return best;
}

}  // namespace tmd

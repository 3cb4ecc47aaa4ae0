#include "tmd/solver.hpp"

#include <algorithm>
#include <cstdio>

#include "tmd/bounds.hpp"
#include "tmd/enumerate.hpp"

namespace tmd {

namespace {

struct DistView {
  const Tree* tree;
  int n;
  int k;
  int d(int u, int v) const { return tree->distance(u, v); }
  int dk(int u, int v) const { return std::min(tree->distance(u, v), k + 1); }
};

bool subset_covers(const DistView& view, const std::vector<int>& subset) {
  for (int x = 0; x < view.n; ++x) {
    bool covered = false;
    for (int s : subset) {
      if (view.d(s, x) <= view.k) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

bool subset_distinguishes(const DistView& view, const std::vector<int>& subset,
                          std::vector<std::vector<std::uint8_t>>& scratch) {
  scratch.resize(view.n);
  for (int x = 0; x < view.n; ++x) {
    auto& sig = scratch[x];
    sig.clear();
    for (int s : subset) sig.push_back(static_cast<std::uint8_t>(view.dk(s, x)));
  }
  std::sort(scratch.begin(), scratch.end());
  return std::adjacent_find(scratch.begin(), scratch.end()) == scratch.end();
}

// Lexicographic successor of a size-m combination over 0..n-1.
bool next_combination(std::vector<int>& c, int n) {
  int m = static_cast<int>(c.size());
  for (int i = m - 1; i >= 0; --i) {
    if (c[i] < n - m + i) {
      ++c[i];
      for (int j = i + 1; j < m; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::string hex64(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return std::string(buf);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

SolveResult brute_force_tmd(const Tree& tree, int k) {
  if (k < 1) throw InvalidInput("threshold k must be at least 1");
  int n = tree.vertex_count();
  if (n > 24) throw GuardError("brute_force_tmd: n > 24");
  DistView view{&tree, n, k};
  SolveResult result;
  result.method = "exact";
  std::vector<std::vector<std::uint8_t>> scratch;
  for (int m = 1; m <= n; ++m) {
    std::vector<int> c(m);
    for (int i = 0; i < m; ++i) c[i] = i;
    while (true) {
      ++result.subsets_checked;
      if (subset_covers(view, c) && subset_distinguishes(view, c, scratch)) {
        result.tmd = m;
        result.witness = SensorSet::create(tree, c, k);
        return result;
      }
      if (!next_combination(c, n)) break;
    }
  }
  throw Error("brute_force_tmd: no resolving subset found");  // S = V always resolves
}

SensorSet greedy_resolving_set(const Tree& tree, int k) {
  if (k < 1) throw InvalidInput("threshold k must be at least 1");
  int n = tree.vertex_count();
  DistView view{&tree, n, k};

  std::vector<int> chosen;
  std::vector<char> in_set(n, 0), covered(n, 0);
  std::vector<std::pair<int, int>> open_pairs;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) open_pairs.emplace_back(x, y);

  auto resolving = [&] {
    if (std::find(covered.begin(), covered.end(), 0) != covered.end()) return false;
    return open_pairs.empty();
  };

  while (!resolving()) {
    int best = -1;
    long long best_cover = -1, best_sep = -1;
    for (int v = 0; v < n; ++v) {
      if (in_set[v]) continue;
      long long cover = 0;
      for (int x = 0; x < n; ++x)
        if (!covered[x] && view.d(v, x) <= k) ++cover;
      long long sep = 0;
      for (const auto& [x, y] : open_pairs)
        if (view.dk(v, x) != view.dk(v, y)) ++sep;
      if (cover > best_cover || (cover == best_cover && sep > best_sep)) {
        best = v;
        best_cover = cover;
        best_sep = sep;
      }
    }
    in_set[best] = 1;
    chosen.push_back(best);
    for (int x = 0; x < n; ++x)
      if (view.d(best, x) <= k) covered[x] = 1;
    std::erase_if(open_pairs, [&](const std::pair<int, int>& p) {
      return view.dk(best, p.first) != view.dk(best, p.second);
    });
  }

  // Prune removable sensors, largest id first.
  std::sort(chosen.begin(), chosen.end());
  for (int i = static_cast<int>(chosen.size()) - 1; i >= 0; --i) {
    std::vector<int> trial = chosen;
    trial.erase(trial.begin() + i);
    if (trial.empty()) break;
    if (is_resolving(tree, SensorSet::create(tree, trial, k)).ok) chosen = std::move(trial);
  }
  return SensorSet::create(tree, chosen, k);
}

std::vector<SweepRow> sweep(int n_max, const std::vector<int>& k_list) {
  if (n_max < 1 || n_max > 9) throw GuardError("sweep: n_max must lie in [1, 9]");
  for (int k : k_list)
    if (k < 1) throw InvalidInput("threshold k must be at least 1");
  std::vector<SweepRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    for (const Tree& tree : enumerate_trees(n, /*dedup=*/true)) {
      std::string id = hex64(fnv1a(canonical_form(tree)));
      for (int k : k_list) {
        SweepRow row;
        row.n = n;
        row.k = k;
        row.canonical_id = id;
        row.tmd = brute_force_tmd(tree, k).tmd;
        row.worst_bound = worst_case_lower_bound(n, k);
        row.structural_bound = structural_lower_bound(tree, k).structural_bound;
        if (row.worst_bound > row.tmd || row.structural_bound > row.tmd)
          throw Error("sweep: a lower bound exceeded the exact value (n=" +
                      std::to_string(n) + ", k=" + std::to_string(k) + ")");
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

}  // namespace tmd

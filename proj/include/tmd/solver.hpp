#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tmd/resolution.hpp"
#include "tmd/tree.hpp"

namespace tmd {

struct SolveResult {
  int tmd = 0;
  SensorSet witness;
  std::uint64_t subsets_checked = 0;
  std::string method;  // "exact" or "greedy"
};

/// Exact threshold-k metric dimension by increasing-cardinality subset
/// enumeration in lexicographic order; coverage is checked before the
/// pairwise distinctness scan. The witness is the lexicographically first
/// resolving subset of minimal size. Guarded to n <= 24.
SolveResult brute_force_tmd(const Tree& tree, int k);

/// Adds the vertex covering the most new vertices (separated pairs as
/// tie-break, then smallest id) until the set resolves, then drops
/// removable sensors in descending id order. Valid but not necessarily
/// minimal.
SensorSet greedy_resolving_set(const Tree& tree, int k);

struct SweepRow {
  int n = 0;
  int k = 1;
  std::string canonical_id;
  int tmd = 0;
  long long worst_bound = 0;
  long long structural_bound = 0;
};

/// Exact solve plus both lower bounds for every isomorphism class of trees
/// up to n_max vertices and every k in k_list. Throws if any bound exceeds
/// the exact value. Guarded to n_max <= 9.
std::vector<SweepRow> sweep(int n_max, const std::vector<int>& k_list);

}  // namespace tmd

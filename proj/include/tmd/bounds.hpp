#pragma once

#include <map>
#include <vector>

#include "tmd/tree.hpp"

namespace tmd {

/// Size-only lower bound on the threshold-k metric dimension of any tree
/// on n vertices:
///   ceil((3n + k^2 + k + [k = 1 mod 3]) / (k^2 + 4k + 3 + [k = 1 mod 3]))
/// Integer-exact; for k = 1 this reduces to ceil((n+1)/3).
long long worst_case_lower_bound(long long n, int k);

/// Sensor demand of a pendant path of length ell. With
/// ell = q(3k+2) + r, 0 <= r <= 3k+1:
///   upper: 2q + [r >= 1]   + [r >= 2k+2]   (path cannot borrow through its anchor)
///   lower: 2q + [r >= k+1] + [r >= 2k+2]   (path may borrow through its anchor)
/// Always lower <= upper <= lower + 1.
int upper_complexity(long long ell, int k);
int lower_complexity(long long ell, int k);

/// Minimum sensors forced by a bundle of leaf-paths at one support vertex:
/// sum of upper complexities minus the single largest upper-lower gap.
int leaf_path_requirement(const std::vector<int>& lengths, int k);

struct SupportBound {
  std::vector<int> lengths;
  std::vector<int> upper;
  std::vector<int> lower;
  int requirement = 0;
};

struct BoundReport {
  long long n = 0;
  int k = 1;
  long long worst_case_bound = 0;
  long long structural_bound = 0;
  long long leaf_vertex_total = 0;
  std::map<int, SupportBound> per_support;
};

/// Structure-aware lower bound: leaf-path vertices pay their own sensor
/// requirement, the trimmed remainder pays the worst-case bound, and each
/// support vertex refunds one. Falls back to the worst-case bound exactly
/// when the tree has no support vertices.
BoundReport structural_lower_bound(const Tree& tree, int k);

}  // namespace tmd

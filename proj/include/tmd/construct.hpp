#pragma once

#include <optional>
#include <vector>

#include "tmd/resolution.hpp"
#include "tmd/tree.hpp"

namespace tmd {

/// Largest possible attraction of a neighboring sensor pair:
/// (k^2+k+1)/3 when k = 1 mod 3, else (k^2+k)/3. Exact integer division.
long long pair_attraction_max(int k);

/// Closed forms for the vertex yield of a sensor path with d interior
/// vertices, by parity of d:
///   even: d*k - 3d^2/4 + d/2
///   odd:  d*k - 3d^2/4 + d/2 + 1/4
/// Throws on a parity mismatch.
long long sum_even(int d, int k);
long long sum_odd(int d, int k);

/// Interior vertex count that maximises the yield: (2k+1)/3 rounded to the
/// nearest integer.
int optimal_gap(int k);

/// Maximum size of a tree resolvable by m sensors with radius k:
/// (k+1)m + (m-1) * pair_attraction_max(k).
long long optimal_size(int m, int k);

struct OptimalBlueprint {
  int m = 1;
  int k = 1;
  int gap = 1;
  /// hang_lengths[i-1] is the pendant length below the i-th interior
  /// vertex of a sensor path: min(k-i, k-(gap+1-i)).
  std::vector<int> hang_lengths;
  Tree skeleton;
};

struct Construction {
  Tree tree;
  SensorSet sensors;
  OptimalBlueprint blueprint;
};

/// Builds a maximal tree for (m, k): each skeleton node becomes a sensor
/// carrying a pendant path of length k, each skeleton edge a sensor path
/// with `gap` interior vertices and their pendant hangs. Vertex ids are
/// assigned sensors first (skeleton order), then path interiors edge by
/// edge, then hangs, then sensor pendants — stable across runs. Default
/// skeleton is the path on m nodes.
Construction build_optimal(int m, int k, std::optional<Tree> skeleton = std::nullopt);

}  // namespace tmd

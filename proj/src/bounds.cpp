#include "tmd/bounds.hpp"

#include <algorithm>

namespace tmd {

namespace {

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

int mod3_indicator(int k) { return k % 3 == 1 ? 1 : 0; }

void check_k(int k) {
  if (k < 1) throw InvalidInput("threshold k must be at least 1");
}

}  // namespace

long long worst_case_lower_bound(long long n, int k) {
  check_k(k);
  if (n < 1) throw InvalidInput("n must be positive");
  long long kk = k;
  long long ind = mod3_indicator(k);
  return ceil_div(3 * n + kk * kk + kk + ind, kk * kk + 4 * kk + 3 + ind);
}

int upper_complexity(long long ell, int k) {
  check_k(k);
  if (ell < 1) throw InvalidInput("path length must be positive");
  long long block = 3LL * k + 2;
  long long q = ell / block;
  long long r = ell % block;
  return static_cast<int>(2 * q + (r >= 1 ? 1 : 0) + (r >= 2LL * k + 2 ? 1 : 0));
}

int lower_complexity(long long ell, int k) {
  check_k(k);
  if (ell < 1) throw InvalidInput("path length must be positive");
  long long block = 3LL * k + 2;
  long long q = ell / block;
  long long r = ell % block;
  return static_cast<int>(2 * q + (r >= k + 1 ? 1 : 0) + (r >= 2LL * k + 2 ? 1 : 0));
}

int leaf_path_requirement(const std::vector<int>& lengths, int k) {
  check_k(k);
  if (lengths.empty()) throw InvalidInput("leaf_path_requirement: empty length list");
  int total = 0;
  int best_saving = 0;
  for (int ell : lengths) {
    int up = upper_complexity(ell, k);
    int lo = lower_complexity(ell, k);
    total += up;
    best_saving = std::max(best_saving, up - lo);
  }
  return total - best_saving;
}

BoundReport structural_lower_bound(const Tree& tree, int k) {
  check_k(k);
  BoundReport report;
  report.n = tree.vertex_count();
  report.k = k;
  report.worst_case_bound = worst_case_lower_bound(report.n, k);

  SupportProfile profile = support_profile(tree);
  long long leaf_total = 0;
  long long requirement_sum = 0;
  for (int v : profile.support_vertices) {
    SupportBound sb;
    for (const auto& lp : profile.leaf_paths.at(v)) {
      sb.lengths.push_back(lp.length());
      sb.upper.push_back(upper_complexity(lp.length(), k));
      sb.lower.push_back(lower_complexity(lp.length(), k));
      leaf_total += lp.length();
    }
    sb.requirement = leaf_path_requirement(sb.lengths, k);
    requirement_sum += sb.requirement;
    report.per_support.emplace(v, std::move(sb));
  }
  report.leaf_vertex_total = leaf_total;

  long long kk = k;
  long long ind = k % 3 == 1 ? 1 : 0;
  long long trimmed = ceil_div(3 * (report.n - leaf_total) + kk * kk + kk + ind,
                               kk * kk + 4 * kk + 3 + ind);
  report.structural_bound = trimmed + requirement_sum -
                            static_cast<long long>(profile.support_vertices.size());
  return report;
}

}  // namespace tmd

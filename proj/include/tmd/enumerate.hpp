#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tmd/tree.hpp"

namespace tmd {

/// Uniform random labeled tree via a random Prüfer sequence.
/// Deterministic for a fixed seed.
Tree random_tree(int n, std::uint64_t seed);

/// Visits all n^(n-2) labeled trees on n vertices in Prüfer order.
/// Return false from the visitor to stop early. Guarded to 1 <= n <= 10.
void for_each_labeled_tree(int n, const std::function<bool(const Tree&)>& visit);

/// Materialises the enumeration; with dedup set, keeps one representative
/// per isomorphism class (first seen in Prüfer order).
std::vector<Tree> enumerate_trees(int n, bool dedup);

/// The one or two central vertices found by iterated leaf removal.
std::vector<int> tree_centers(const Tree& tree);

/// AHU encoding rooted at the tree center; two trees produce the same
/// byte string iff they are isomorphic.
std::string canonical_form(const Tree& tree);

}  // namespace tmd

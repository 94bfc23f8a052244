#pragma once

#include <string>
#include <vector>

#include "ecc/graph.hpp"

namespace ecc {

// The one or two middle vertices left by repeated leaf stripping.
std::vector<int> tree_centers(const Graph& tree);

/// Canonical string for a free tree: rooted at the center (or at the
/// central edge for bicentral trees) with recursively sorted subtree
/// codes. Two trees are isomorphic iff their codes are equal.
std::string canonical_code(const Graph& tree);

// Rooted variant; parent < 0 means the whole tree hangs from root.
std::string rooted_code(const Graph& tree, int root, int blocked_neighbor = -1);

}  // namespace ecc

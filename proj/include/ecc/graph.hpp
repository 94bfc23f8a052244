#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ecc/matrix.hpp"

namespace ecc {

/// Undirected simple connected graph over vertices 0..n-1.
/// Construction goes through from_edge_list(), which validates the
/// invariants (no loops, no duplicates, connected).
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // normalized u < v, sorted
    std::vector<std::vector<int>> adj;

    bool is_tree() const { return static_cast<int>(edges.size()) == n - 1; }
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
};

/// Per-vertex shortest-path data for one graph: the full distance matrix,
/// eccentricities and the diameter.
struct EccProfile {
    IntSymMatrix dist;
    std::vector<int> ecc;
    int diameter = 0;
};

Graph from_edge_list(std::span<const std::pair<int, int>> pairs, int n);

std::vector<int> bfs_distances(const Graph& g, int src);

EccProfile ecc_profile(const Graph& g);

IntSymMatrix eccentricity_matrix(const Graph& g);

IntSymMatrix principal_submatrix(const IntSymMatrix& m, std::span<const int> idx);

// Two-BFS diameter; exact for trees.
int double_sweep_diameter(const Graph& g);

// Edge-list file format: one "u v" pair per line, '#' starts a comment,
// an optional leading "n <count>" header pins the vertex count (otherwise
// it is 1 + max index).
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(const Graph& g, std::ostream& out);

}  // namespace ecc

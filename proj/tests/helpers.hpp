#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "ecc/graph.hpp"

namespace ecc::testing {

// Decodes a Pruefer sequence over {0..n-1} (length n-2) into the labeled
// tree it encodes; every sequence yields exactly one labeled tree, which
// makes exhaustive sweeps over sequences an independent enumeration
// oracle.
inline Graph prufer_decode(const std::vector<int>& seq) {
    const int n = static_cast<int>(seq.size()) + 2;
    std::vector<int> degree(n, 1);
    for (int v : seq) ++degree[v];
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    int ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int v : seq) {
        edges.emplace_back(leaf, v);
        if (--degree[v] == 1 && v < ptr) {
            leaf = v;
        } else {
            ++ptr;
            while (degree[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.emplace_back(leaf, n - 1);
    return from_edge_list(edges, n);
}

inline Graph random_tree(int n, std::mt19937& rng) {
    if (n == 1) return from_edge_list({}, 1);
    if (n == 2) return from_edge_list(std::vector<std::pair<int, int>>{{0, 1}}, 2);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> seq(n - 2);
    for (int& v : seq) v = pick(rng);
    return prufer_decode(seq);
}

inline bool near(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

}  // namespace ecc::testing

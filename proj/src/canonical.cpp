#include "ecc/canonical.hpp"

#include <algorithm>

#include "ecc/errors.hpp"

namespace ecc {

std::vector<int> tree_centers(const Graph& tree) {
    const int n = tree.n;
    if (n == 1) return {0};
    std::vector<int> degree(n);
    std::vector<int> layer;
    for (int v = 0; v < n; ++v) {
        degree[v] = tree.degree(v);
        if (degree[v] <= 1) layer.push_back(v);
    }
    int remaining = n;
    std::vector<int> current = layer;
    while (remaining > 2) {
        std::vector<int> next;
        remaining -= static_cast<int>(current.size());
        for (int leaf : current)
            for (int w : tree.adj[leaf])
                if (--degree[w] == 1) next.push_back(w);
        current = std::move(next);
    }
    std::sort(current.begin(), current.end());
    return current;
}

std::string rooted_code(const Graph& tree, int root, int blocked_neighbor) {
    // iterative post-order; children codes are sorted before wrapping
    const int n = tree.n;
    std::vector<int> parent(n, -2), order;
    order.reserve(n);
    std::vector<int> stack{root};
    parent[root] = blocked_neighbor >= 0 ? blocked_neighbor : -1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int w : tree.adj[v])
            if (w != parent[v]) {
                parent[w] = v;
                stack.push_back(w);
            }
    }
    std::vector<std::vector<std::string>> children(n);
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
        int v = order[i];
        auto& kids = children[v];
        std::sort(kids.begin(), kids.end());
        std::string code = "(";
        for (const auto& k : kids) code += k;
        code += ")";
        if (v == root) return code;
        children[parent[v]].push_back(std::move(code));
    }
    return "()";  // single vertex
}

std::string canonical_code(const Graph& tree) {
    if (!tree.is_tree()) throw Error("canonical code is defined for trees only");
    const auto centers = tree_centers(tree);
    if (centers.size() == 1) return "C" + rooted_code(tree, centers[0]);
    std::string a = rooted_code(tree, centers[0], centers[1]);
    std::string b = rooted_code(tree, centers[1], centers[0]);
    if (b < a) std::swap(a, b);
    return "E" + a + b;
}

}  // namespace ecc

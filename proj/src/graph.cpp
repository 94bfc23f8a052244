#include "ecc/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

#include "ecc/errors.hpp"

namespace ecc {

Graph from_edge_list(std::span<const std::pair<int, int>> pairs, int n) {
    if (n <= 0) throw VertexOutOfRange("vertex count must be positive");
    Graph g;
    g.n = n;
    g.adj.resize(n);
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : pairs) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw VertexOutOfRange("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                   ") outside 0.." + std::to_string(n - 1));
        if (u == v) throw SelfLoop("self-loop at vertex " + std::to_string(u));
        auto e = std::minmax(u, v);
        if (!seen.insert(e).second)
            throw DuplicateEdge("duplicate edge (" + std::to_string(e.first) + "," +
                                std::to_string(e.second) + ")");
    }
    g.edges.assign(seen.begin(), seen.end());
    for (auto [u, v] : g.edges) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    // one BFS establishes connectivity
    auto dist = bfs_distances(g, 0);
    for (int v = 0; v < n; ++v)
        if (dist[v] < 0)
            throw DisconnectedGraph("vertex " + std::to_string(v) + " unreachable from 0");
    return g;
}

std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(g.n, -1);
    std::vector<int> queue;
    queue.reserve(g.n);
    dist[src] = 0;
    queue.push_back(src);
    for (size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (int w : g.adj[u]) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

EccProfile ecc_profile(const Graph& g) {
    EccProfile p{IntSymMatrix(g.n), std::vector<int>(g.n, 0), 0};
    for (int u = 0; u < g.n; ++u) {
        auto dist = bfs_distances(g, u);
        int e = 0;
        for (int v = 0; v < g.n; ++v) {
            if (v > u) p.dist.set(u, v, dist[v]);
            e = std::max(e, dist[v]);
        }
        p.ecc[u] = e;
        p.diameter = std::max(p.diameter, e);
    }
    return p;
}

IntSymMatrix eccentricity_matrix(const Graph& g) {
    EccProfile p = ecc_profile(g);
    IntSymMatrix m(g.n);
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) {
            int d = p.dist(u, v);
            if (d == std::min(p.ecc[u], p.ecc[v])) m.set(u, v, d);
        }
    return m;
}

IntSymMatrix principal_submatrix(const IntSymMatrix& m, std::span<const int> idx) {
    const int k = static_cast<int>(idx.size());
    if (k == 0) throw IndexOutOfRange("empty index set");
    std::set<int> distinct;
    for (int i : idx) {
        if (i < 0 || i >= m.dim())
            throw IndexOutOfRange("index " + std::to_string(i) + " out of range");
        if (!distinct.insert(i).second)
            throw DuplicateIndex("repeated index " + std::to_string(i));
    }
    IntSymMatrix sub(k);
    for (int r = 0; r < k; ++r)
        for (int c = r + 1; c < k; ++c) sub.set(r, c, m(idx[r], idx[c]));
    return sub;
}

int double_sweep_diameter(const Graph& g) {
    auto d0 = bfs_distances(g, 0);
    int far = static_cast<int>(std::max_element(d0.begin(), d0.end()) - d0.begin());
    auto d1 = bfs_distances(g, far);
    return *std::max_element(d1.begin(), d1.end());
}

Graph read_edge_list(std::istream& in) {
    std::vector<std::pair<int, int>> pairs;
    int declared_n = -1;
    int max_index = -1;
    std::string line;
    int lineno = 0;
    bool first_content = true;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;  // blank
        if (first_content && tok == "n") {
            if (!(ls >> declared_n) || declared_n <= 0)
                throw ParseError("line " + std::to_string(lineno) + ": bad vertex-count header");
            first_content = false;
            continue;
        }
        first_content = false;
        int u, v;
        try {
            u = std::stoi(tok);
        } catch (const std::exception&) {
            throw ParseError("line " + std::to_string(lineno) + ": expected integer, got '" + tok + "'");
        }
        if (!(ls >> v))
            throw ParseError("line " + std::to_string(lineno) + ": expected 'u v' pair");
        std::string extra;
        if (ls >> extra)
            throw ParseError("line " + std::to_string(lineno) + ": trailing token '" + extra + "'");
        if (u < 0 || v < 0)
            throw ParseError("line " + std::to_string(lineno) + ": negative vertex index");
        pairs.emplace_back(u, v);
        max_index = std::max({max_index, u, v});
    }
    int n = declared_n >= 0 ? declared_n : max_index + 1;
    if (n <= 0) throw ParseError("edge list is empty and has no vertex-count header");
    return from_edge_list(pairs, n);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return read_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << "n " << g.n << "\n";
    for (auto [u, v] : g.edges) out << u << " " << v << "\n";
}

}  // namespace ecc

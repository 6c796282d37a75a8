#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace annigraph {

/// Simple undirected graph. Vertices are 0..n-1; labels are display-only.
struct Graph {
    enum class Kind { AG, ZDG, Plain };

    uint32_t n = 0;
    std::vector<std::vector<bool>> adj;  // symmetric, no loops
    std::vector<std::string> labels;
    Kind kind = Kind::Plain;

    static Graph empty(uint32_t n, Kind kind = Kind::Plain) {
        Graph g;
        g.n = n;
        g.adj.assign(n, std::vector<bool>(n, false));
        g.labels.resize(n);
        g.kind = kind;
        return g;
    }

    void add_edge(uint32_t u, uint32_t v) {
        if (u == v) return;
        adj[u][v] = adj[v][u] = true;
    }
    bool has_edge(uint32_t u, uint32_t v) const { return u != v && adj[u][v]; }

    std::size_t edge_count() const {
        std::size_t e = 0;
        for (uint32_t u = 0; u < n; ++u)
            for (uint32_t v = u + 1; v < n; ++v)
                if (adj[u][v]) ++e;
        return e;
    }
    std::vector<std::pair<uint32_t, uint32_t>> edges() const {
        std::vector<std::pair<uint32_t, uint32_t>> out;
        for (uint32_t u = 0; u < n; ++u)
            for (uint32_t v = u + 1; v < n; ++v)
                if (adj[u][v]) out.push_back({u, v});
        return out;
    }
    std::vector<uint32_t> neighbors(uint32_t u) const {
        std::vector<uint32_t> out;
        for (uint32_t v = 0; v < n; ++v)
            if (adj[u][v]) out.push_back(v);
        return out;
    }
    uint32_t degree(uint32_t u) const {
        uint32_t d = 0;
        for (uint32_t v = 0; v < n; ++v)
            if (adj[u][v]) ++d;
        return d;
    }

    static Graph complete(uint32_t n);
    static Graph complete_bipartite(uint32_t m, uint32_t n);
};

std::string graph_to_dot(const Graph& g);
std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

} // namespace annigraph

#include "annigraph/genus.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace annigraph {

int genus_complete(int n) {
    if (n < 3) return 0;
    long long v = (long long)(n - 3) * (n - 4);
    return int((v + 11) / 12);
}

int genus_complete_bipartite(int m, int n) {
    if (m < 2 || n < 2) return 0;
    long long v = (long long)(m - 2) * (n - 2);
    return int((v + 3) / 4);
}

namespace detail {

std::vector<int> component_of(const Graph& g) {
    std::vector<int> comp(g.n, -1);
    int c = 0;
    for (uint32_t s = 0; s < g.n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<uint32_t> stack{s};
        comp[s] = c;
        while (!stack.empty()) {
            uint32_t u = stack.back();
            stack.pop_back();
            for (uint32_t v = 0; v < g.n; ++v)
                if (g.adj[u][v] && comp[v] < 0) {
                    comp[v] = c;
                    stack.push_back(v);
                }
        }
        ++c;
    }
    return comp;
}

bool has_triangle(const Graph& g, const std::vector<int>& comp, int c) {
    for (uint32_t u = 0; u < g.n; ++u) {
        if (comp[u] != c) continue;
        for (uint32_t v = u + 1; v < g.n; ++v) {
            if (!g.adj[u][v]) continue;
            for (uint32_t w = v + 1; w < g.n; ++w)
                if (g.adj[u][w] && g.adj[v][w]) return true;
        }
    }
    return false;
}

} // namespace detail

int euler_lower_bound(const Graph& g) {
    std::vector<int> comp = detail::component_of(g);
    int ncomp = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    int total = 0;
    for (int c = 0; c < ncomp; ++c) {
        long long V = 0, E = 0;
        for (uint32_t u = 0; u < g.n; ++u) {
            if (comp[u] != c) continue;
            ++V;
            for (uint32_t v = u + 1; v < g.n; ++v)
                if (comp[v] == c && g.adj[u][v]) ++E;
        }
        if (V < 3 || E < 1) continue;
        long long num, den;
        if (detail::has_triangle(g, comp, c)) {
            num = E - 3 * V + 6;
            den = 6;
        } else {
            num = E - 2 * V + 4;
            den = 4;
        }
        if (num > 0) total += int((num + den - 1) / den);
    }
    return total;
}

int trace_faces(const Graph& g, const RotationSystem& rot) {
    if (rot.rot.size() != g.n) throw std::runtime_error("rotation size mismatch");
    // validate: rot[v] is a permutation of neighbors(v)
    std::vector<std::vector<int>> pos(g.n);
    for (uint32_t v = 0; v < g.n; ++v) {
        std::vector<uint32_t> nb = g.neighbors(v);
        if (rot.rot[v].size() != nb.size())
            throw std::runtime_error("rotation is not a permutation of incident edges");
        pos[v].assign(g.n, -1);
        for (std::size_t i = 0; i < rot.rot[v].size(); ++i) {
            int u = rot.rot[v][i];
            if (u < 0 || uint32_t(u) >= g.n || !g.adj[v][uint32_t(u)] ||
                pos[v][uint32_t(u)] >= 0)
                throw std::runtime_error("rotation is not a permutation of incident edges");
            pos[v][uint32_t(u)] = int(i);
        }
    }
    // darts: (u, v) for every adjacent ordered pair
    std::vector<std::pair<uint32_t, uint32_t>> darts;
    std::vector<std::vector<int>> dart_id(g.n, std::vector<int>(g.n, -1));
    for (uint32_t u = 0; u < g.n; ++u)
        for (uint32_t v = 0; v < g.n; ++v)
            if (g.adj[u][v]) {
                dart_id[u][v] = int(darts.size());
                darts.push_back({u, v});
            }
    std::vector<bool> used(darts.size(), false);
    int faces = 0;
    for (std::size_t d0 = 0; d0 < darts.size(); ++d0) {
        if (used[d0]) continue;
        ++faces;
        std::size_t d = d0;
        do {
            used[d] = true;
            auto [u, v] = darts[d];
            // next dart after traversing u->v: leave v by the rotation
            // successor of u at v
            int i = pos[v][u];
            int w = rot.rot[v][std::size_t((i + 1) % int(rot.rot[v].size()))];
            d = std::size_t(dart_id[v][uint32_t(w)]);
        } while (d != d0);
    }
    return faces;
}

int embedding_genus(const Graph& g, const RotationSystem& rot) {
    // trace all faces once, then attribute darts to components
    std::vector<int> comp = detail::component_of(g);
    int ncomp = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;

    // per-component face count via separate traces on induced subgraphs is
    // equivalent; orbits never cross components, so count orbits by the
    // component of their darts
    if (rot.rot.size() != g.n) throw std::runtime_error("rotation size mismatch");
    std::vector<std::vector<int>> pos(g.n);
    for (uint32_t v = 0; v < g.n; ++v) {
        pos[v].assign(g.n, -1);
        for (std::size_t i = 0; i < rot.rot[v].size(); ++i)
            pos[v][uint32_t(rot.rot[v][i])] = int(i);
    }
    std::vector<std::pair<uint32_t, uint32_t>> darts;
    std::vector<std::vector<int>> dart_id(g.n, std::vector<int>(g.n, -1));
    for (uint32_t u = 0; u < g.n; ++u)
        for (uint32_t v = 0; v < g.n; ++v)
            if (g.adj[u][v]) {
                dart_id[u][v] = int(darts.size());
                darts.push_back({u, v});
            }
    std::vector<bool> used(darts.size(), false);
    std::vector<int> faces_in(std::size_t(ncomp), 0);
    for (std::size_t d0 = 0; d0 < darts.size(); ++d0) {
        if (used[d0]) continue;
        faces_in[std::size_t(comp[darts[d0].first])]++;
        std::size_t d = d0;
        do {
            used[d] = true;
            auto [u, v] = darts[d];
            int i = pos[v][u];
            int w = rot.rot[v][std::size_t((i + 1) % int(rot.rot[v].size()))];
            d = std::size_t(dart_id[v][uint32_t(w)]);
        } while (d != d0);
    }
    int genus = 0;
    for (int c = 0; c < ncomp; ++c) {
        long long V = 0, E = 0;
        for (uint32_t u = 0; u < g.n; ++u) {
            if (comp[u] != c) continue;
            ++V;
            for (uint32_t v = u + 1; v < g.n; ++v)
                if (comp[v] == c && g.adj[u][v]) ++E;
        }
        long long F = E == 0 ? 1 : faces_in[std::size_t(c)];
        long long chi = V - E + F;
        if ((2 - chi) % 2 != 0 || chi > 2)
            throw std::runtime_error("invalid embedding Euler characteristic");
        genus += int((2 - chi) / 2);
    }
    return genus;
}

std::string genus_result_to_json(const GenusResult& r) {
    nlohmann::json doc;
    doc["schema"] = 1;
    doc["lower"] = r.lower;
    if (r.upper)
        doc["upper"] = *r.upper;
    else
        doc["upper"] = nullptr;
    switch (r.status) {
        case GenusResult::Status::Exact: doc["status"] = "exact"; break;
        case GenusResult::Status::Bounds: doc["status"] = "bounds"; break;
        case GenusResult::Status::Timeout: doc["status"] = "timeout"; break;
    }
    doc["evidence"] = r.evidence;
    doc["ms"] = r.ms;
    return doc.dump();
}

} // namespace annigraph

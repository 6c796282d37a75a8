#include "annigraph/genus.hpp"

#include <algorithm>
#include <stdexcept>

namespace annigraph {
namespace detail {

// defined in genus_basic.cpp
std::vector<int> component_of(const Graph& g);

// Biconnected components (Hopcroft-Tarjan). Each block is returned as its
// edge list; bridge edges are blocks of size one.
std::vector<std::vector<std::pair<uint32_t, uint32_t>>> blocks_of(const Graph& g) {
    std::vector<std::vector<std::pair<uint32_t, uint32_t>>> blocks;
    std::vector<int> num(g.n, -1), low(g.n, 0);
    std::vector<std::pair<uint32_t, uint32_t>> estack;
    int counter = 0;

    // iterative DFS: frame = (vertex, parent, next neighbor to try)
    struct Frame {
        uint32_t v;
        int parent;
        uint32_t next;
    };
    for (uint32_t s = 0; s < g.n; ++s) {
        if (num[s] >= 0) continue;
        std::vector<Frame> stack{{s, -1, 0}};
        num[s] = low[s] = counter++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next < g.n) {
                uint32_t w = f.next++;
                if (!g.adj[f.v][w]) continue;
                if (num[w] < 0) {
                    estack.push_back({f.v, w});
                    num[w] = low[w] = counter++;
                    stack.push_back({w, int(f.v), 0});
                } else if (int(w) != f.parent && num[w] < num[f.v]) {
                    estack.push_back({f.v, w});
                    low[f.v] = std::min(low[f.v], num[w]);
                }
            } else {
                uint32_t v = f.v;
                int parent = f.parent;
                stack.pop_back();
                if (parent >= 0) {
                    uint32_t p = uint32_t(parent);
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] >= num[p]) {
                        // p separates v's subtree: pop the block, ending at
                        // the tree edge (p, v)
                        std::vector<std::pair<uint32_t, uint32_t>> blk;
                        while (!estack.empty()) {
                            auto e = estack.back();
                            estack.pop_back();
                            blk.push_back(e);
                            if (e.first == p && e.second == v) break;
                        }
                        blocks.push_back(std::move(blk));
                    }
                }
            }
        }
    }
    return blocks;
}

namespace {

// One face of a partial embedding: a simple cycle of vertices; darts are
// consecutive pairs (face[i], face[i+1]).
using Face = std::vector<uint32_t>;

struct Fragment {
    std::vector<uint32_t> attachments;          // in V(H)
    std::vector<uint32_t> interior;             // not in V(H)
    std::pair<uint32_t, uint32_t> chord{0, 0};  // used when interior empty
};

// Planarity of one 2-connected block via iterative face embedding
// (Demoucron-Malgrange-Pertuiset). Returns faces of a planar embedding or
// nullopt when some fragment has no admissible face.
std::optional<std::vector<Face>> dmp_embed(const Graph& g,
                                           const std::vector<uint32_t>& verts) {
    std::vector<bool> in_block(g.n, false);
    for (uint32_t v : verts) in_block[v] = true;

    // find a cycle: BFS spanning tree + any non-tree edge, joined at the LCA
    std::vector<int> parent(g.n, -2);
    std::vector<int> depth(g.n, 0);
    {
        std::vector<uint32_t> queue{verts[0]};
        parent[verts[0]] = -1;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            uint32_t u = queue[qi];
            for (uint32_t w : verts)
                if (g.adj[u][w] && parent[w] == -2) {
                    parent[w] = int(u);
                    depth[w] = depth[u] + 1;
                    queue.push_back(w);
                }
        }
    }
    uint32_t eu = g.n, ew = g.n;
    for (uint32_t u : verts) {
        for (uint32_t w : verts)
            if (w > u && g.adj[u][w] && parent[w] != int(u) && parent[u] != int(w)) {
                eu = u;
                ew = w;
                break;
            }
        if (eu != g.n) break;
    }
    if (eu == g.n) return std::nullopt;  // acyclic: not 2-connected, bug
    std::vector<uint32_t> cycle;
    {
        std::vector<uint32_t> up_u, up_w;
        int a = int(eu), b = int(ew);
        while (depth[uint32_t(a)] > depth[uint32_t(b)]) {
            up_u.push_back(uint32_t(a));
            a = parent[uint32_t(a)];
        }
        while (depth[uint32_t(b)] > depth[uint32_t(a)]) {
            up_w.push_back(uint32_t(b));
            b = parent[uint32_t(b)];
        }
        while (a != b) {
            up_u.push_back(uint32_t(a));
            up_w.push_back(uint32_t(b));
            a = parent[uint32_t(a)];
            b = parent[uint32_t(b)];
        }
        cycle = up_u;
        cycle.push_back(uint32_t(a));  // the LCA
        cycle.insert(cycle.end(), up_w.rbegin(), up_w.rend());
    }

    std::vector<std::vector<bool>> inH(g.n, std::vector<bool>(g.n, false));
    std::vector<bool> vH(g.n, false);
    auto add_h_edge = [&](uint32_t a, uint32_t b) {
        inH[a][b] = inH[b][a] = true;
        vH[a] = vH[b] = true;
    };
    for (std::size_t i = 0; i < cycle.size(); ++i)
        add_h_edge(cycle[i], cycle[(i + 1) % cycle.size()]);

    std::vector<Face> faces;
    faces.push_back(cycle);
    faces.push_back(std::vector<uint32_t>(cycle.rbegin(), cycle.rend()));

    auto remaining_edges = [&]() {
        std::size_t r = 0;
        for (uint32_t a : verts)
            for (uint32_t b : verts)
                if (b > a && g.adj[a][b] && !inH[a][b]) ++r;
        return r;
    };

    while (remaining_edges() > 0) {
        // fragments relative to H
        std::vector<Fragment> frags;
        // chords: both endpoints in H
        for (uint32_t a : verts)
            for (uint32_t b : verts)
                if (b > a && g.adj[a][b] && !inH[a][b] && vH[a] && vH[b]) {
                    Fragment f;
                    f.attachments = {a, b};
                    f.chord = {a, b};
                    frags.push_back(std::move(f));
                }
        // components of block - V(H)
        std::vector<int> fcomp(g.n, -1);
        int nf = 0;
        for (uint32_t s : verts) {
            if (vH[s] || fcomp[s] >= 0) continue;
            std::vector<uint32_t> stack{s};
            fcomp[s] = nf;
            while (!stack.empty()) {
                uint32_t u = stack.back();
                stack.pop_back();
                for (uint32_t w : verts)
                    if (g.adj[u][w] && !vH[w] && fcomp[w] < 0) {
                        fcomp[w] = nf;
                        stack.push_back(w);
                    }
            }
            ++nf;
        }
        for (int c = 0; c < nf; ++c) {
            Fragment f;
            std::vector<bool> att(g.n, false);
            for (uint32_t u : verts) {
                if (fcomp[u] != c) continue;
                f.interior.push_back(u);
                for (uint32_t w : verts)
                    if (g.adj[u][w] && vH[w]) att[w] = true;
            }
            for (uint32_t w : verts)
                if (att[w]) f.attachments.push_back(w);
            frags.push_back(std::move(f));
        }

        // admissible faces per fragment
        int best = -1;
        std::size_t best_count = SIZE_MAX;
        std::vector<std::vector<std::size_t>> admissible(frags.size());
        for (std::size_t i = 0; i < frags.size(); ++i) {
            for (std::size_t fi = 0; fi < faces.size(); ++fi) {
                bool ok = true;
                for (uint32_t a : frags[i].attachments) {
                    if (std::find(faces[fi].begin(), faces[fi].end(), a) ==
                        faces[fi].end()) {
                        ok = false;
                        break;
                    }
                }
                if (ok) admissible[i].push_back(fi);
            }
            if (admissible[i].empty()) return std::nullopt;  // non-planar
            if (admissible[i].size() < best_count) {
                best_count = admissible[i].size();
                best = int(i);
            }
        }

        // path through the chosen fragment between two attachments
        const Fragment& fr = frags[std::size_t(best)];
        std::vector<uint32_t> path;
        if (fr.interior.empty()) {
            path = {fr.chord.first, fr.chord.second};
        } else {
            // BFS strictly inside this fragment's interior, ending at any
            // other attachment vertex
            std::vector<bool> in_interior(g.n, false);
            for (uint32_t v : fr.interior) in_interior[v] = true;
            uint32_t a0 = fr.attachments[0];
            std::vector<int> prev(g.n, -2);
            std::vector<uint32_t> queue;
            prev[a0] = -1;
            queue.push_back(a0);
            uint32_t hit = g.n;
            for (std::size_t qi = 0; qi < queue.size() && hit == g.n; ++qi) {
                uint32_t u = queue[qi];
                for (uint32_t w : verts) {
                    if (!g.adj[u][w] || prev[w] != -2) continue;
                    if (vH[w]) {
                        if (u != a0 && w != a0) {
                            prev[w] = int(u);
                            hit = w;
                            break;
                        }
                        continue;  // don't pass through H vertices
                    }
                    if (!in_interior[w]) continue;
                    prev[w] = int(u);
                    queue.push_back(w);
                }
            }
            if (hit == g.n) return std::nullopt;  // disconnected fragment: bug
            int x = int(hit);
            while (x != -1) {
                path.push_back(uint32_t(x));
                x = prev[uint32_t(x)];
            }
            std::reverse(path.begin(), path.end());  // a0 ... hit
        }

        // split the admissible face along the path
        std::size_t fi = admissible[std::size_t(best)][0];
        Face face = faces[fi];
        uint32_t pa = path.front(), pb = path.back();
        std::size_t ia = std::size_t(
            std::find(face.begin(), face.end(), pa) - face.begin());
        std::size_t ib = std::size_t(
            std::find(face.begin(), face.end(), pb) - face.begin());
        std::size_t m = face.size();
        Face f1, f2;
        // f1: walk pa -> pb along the face, return along reversed path
        for (std::size_t i = ia; i != ib; i = (i + 1) % m) f1.push_back(face[i]);
        f1.push_back(pb);
        for (std::size_t i = path.size() - 2; i >= 1; --i) f1.push_back(path[i]);
        // f2: walk pb -> pa along the face, return along the path
        for (std::size_t i = ib; i != ia; i = (i + 1) % m) f2.push_back(face[i]);
        f2.push_back(pa);
        for (std::size_t i = 1; i + 1 < path.size(); ++i) f2.push_back(path[i]);

        faces[fi] = std::move(f1);
        faces.push_back(std::move(f2));
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            add_h_edge(path[i], path[i + 1]);
    }
    return faces;
}

// Rebuild the rotation system from a complete set of face walks: consecutive
// darts (u->v, v->w) in a face mean w follows u in the rotation at v.
void faces_to_rotation(const std::vector<Face>& faces, RotationSystem& rot,
                       uint32_t n) {
    std::vector<std::vector<int>> succ(n, std::vector<int>(n, -1));
    for (const Face& f : faces) {
        std::size_t m = f.size();
        for (std::size_t i = 0; i < m; ++i) {
            uint32_t u = f[i], v = f[(i + 1) % m], w = f[(i + 2) % m];
            succ[v][u] = int(w);
        }
    }
    for (uint32_t v = 0; v < n; ++v) {
        int start = -1;
        for (uint32_t u = 0; u < n; ++u)
            if (succ[v][u] >= 0) {
                start = int(u);
                break;
            }
        if (start < 0) continue;
        int u = start;
        do {
            if (u < 0 || rot.rot[v].size() > n)
                throw std::runtime_error("face set does not define a rotation (internal)");
            rot.rot[v].push_back(u);
            u = succ[v][uint32_t(u)];
        } while (u != start);
    }
}

} // namespace

// Planarity without certificate extraction; fills rot (sized g.n) with a
// planar rotation when planar.
bool planar_embedding(const Graph& g, RotationSystem& rot) {
    rot.rot.assign(g.n, {});
    auto blocks = blocks_of(g);
    for (const auto& blk : blocks) {
        if (blk.size() == 1) {
            auto [a, b] = blk[0];
            rot.rot[a].push_back(int(b));
            rot.rot[b].push_back(int(a));
            continue;
        }
        std::vector<uint32_t> verts;
        {
            std::vector<bool> seen(g.n, false);
            for (auto [a, b] : blk) seen[a] = seen[b] = true;
            for (uint32_t v = 0; v < g.n; ++v)
                if (seen[v]) verts.push_back(v);
        }
        // restrict to block edges only
        Graph sub = Graph::empty(g.n);
        for (auto [a, b] : blk) sub.add_edge(a, b);
        auto faces = dmp_embed(sub, verts);
        if (!faces) return false;
        RotationSystem brot;
        brot.rot.assign(g.n, {});
        faces_to_rotation(*faces, brot, g.n);
        // splice block rotations at shared (cut) vertices: concatenation
        // keeps each block inside one face of the other, so genus stays 0
        for (uint32_t v : verts)
            rot.rot[v].insert(rot.rot[v].end(), brot.rot[v].begin(),
                              brot.rot[v].end());
    }
    return true;
}

} // namespace detail

PlanarityResult is_planar(const Graph& g) {
    PlanarityResult res;
    RotationSystem rot;
    if (detail::planar_embedding(g, rot)) {
        res.planar = true;
        res.embedding = std::move(rot);
        return res;
    }
    res.planar = false;

    // Kuratowski certificate: delete edges while the graph stays non-planar;
    // the minimal leftover is a K5 or K_{3,3} subdivision.
    Graph h = g;
    RotationSystem scratch;
    for (auto [u, v] : g.edges()) {
        h.adj[u][v] = h.adj[v][u] = false;
        if (detail::planar_embedding(h, scratch))
            h.adj[u][v] = h.adj[v][u] = true;  // edge is needed
    }
    KuratowskiCertificate cert;
    for (uint32_t v = 0; v < h.n; ++v)
        if (h.degree(v) >= 3) cert.branch_vertices.push_back(int(v));
    cert.is_k5 = false;
    for (int v : cert.branch_vertices)
        if (h.degree(uint32_t(v)) == 4) cert.is_k5 = true;
    for (auto [u, v] : h.edges()) cert.subdivision_edges.push_back({int(u), int(v)});
    res.kuratowski = std::move(cert);
    return res;
}

} // namespace annigraph

#include "annigraph/genus.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace annigraph {
namespace detail {

std::vector<int> component_of(const Graph& g);
std::vector<std::vector<std::pair<uint32_t, uint32_t>>> blocks_of(const Graph& g);
bool planar_embedding(const Graph& g, RotationSystem& rot);

namespace {

using Edge = std::pair<uint32_t, uint32_t>;

int count_faces(const Graph& g, const RotationSystem& rot) {
    return trace_faces(g, rot);
}

// Insert edge (u,v) into rot at the face-count-maximizing pair of positions.
void insert_edge_best(Graph& g, RotationSystem& rot, uint32_t u, uint32_t v) {
    g.add_edge(u, v);
    int best = -1;
    std::size_t bi = 0, bj = 0;
    std::size_t du = rot.rot[u].size(), dv = rot.rot[v].size();
    for (std::size_t i = 0; i <= du; ++i) {
        rot.rot[u].insert(rot.rot[u].begin() + long(i), int(v));
        for (std::size_t j = 0; j <= dv; ++j) {
            rot.rot[v].insert(rot.rot[v].begin() + long(j), int(u));
            int f = count_faces(g, rot);
            if (f > best) {
                best = f;
                bi = i;
                bj = j;
            }
            rot.rot[v].erase(rot.rot[v].begin() + long(j));
        }
        rot.rot[u].erase(rot.rot[u].begin() + long(i));
    }
    rot.rot[u].insert(rot.rot[u].begin() + long(bi), int(v));
    rot.rot[v].insert(rot.rot[v].begin() + long(bj), int(u));
}

// Hill climbing: move single neighbors to other cyclic positions while the
// face count improves.
void local_improve(const Graph& g, RotationSystem& rot, Clock::time_point deadline) {
    int cur = count_faces(g, rot);
    bool improved = true;
    while (improved) {
        improved = false;
        for (uint32_t v = 0; v < g.n && Clock::now() < deadline; ++v) {
            std::size_t d = rot.rot[v].size();
            if (d < 3) continue;
            for (std::size_t i = 0; i < d; ++i) {
                int u = rot.rot[v][i];
                rot.rot[v].erase(rot.rot[v].begin() + long(i));
                std::size_t best_j = i;
                for (std::size_t j = 0; j < d; ++j) {
                    if (j == i) continue;
                    rot.rot[v].insert(rot.rot[v].begin() + long(j), u);
                    int f = count_faces(g, rot);
                    if (f > cur) {
                        cur = f;
                        best_j = j;
                        improved = true;
                    }
                    rot.rot[v].erase(rot.rot[v].begin() + long(j));
                }
                rot.rot[v].insert(rot.rot[v].begin() + long(best_j), u);
            }
        }
        if (Clock::now() >= deadline) break;
    }
}

// One greedy construction: maximal planar subgraph along the given edge
// order, then best-position insertion of the leftovers.
RotationSystem greedy_embedding(const Graph& g, const std::vector<Edge>& order) {
    Graph h = Graph::empty(g.n);
    std::vector<Edge> leftover;
    RotationSystem rot;
    for (auto [u, v] : order) {
        h.add_edge(u, v);
        RotationSystem scratch;
        if (!planar_embedding(h, scratch)) {
            h.adj[u][v] = h.adj[v][u] = false;
            leftover.push_back({u, v});
        }
    }
    planar_embedding(h, rot);
    for (auto [u, v] : leftover) insert_edge_best(h, rot, u, v);
    return rot;
}

} // namespace

} // namespace detail

namespace detail {

// floor: a known lower bound; reaching it ends the search early
std::pair<int, RotationSystem> upper_search_floor(const Graph& g,
                                                  std::chrono::milliseconds budget,
                                                  int floor) {
    auto deadline = Clock::now() + budget;
    std::vector<detail::Edge> order = g.edges();
    RotationSystem best = detail::greedy_embedding(g, order);
    detail::local_improve(g, best, deadline);
    int best_g = embedding_genus(g, best);

    std::mt19937 rng(0x5eedu);
    while (best_g > floor && Clock::now() < deadline) {
        std::shuffle(order.begin(), order.end(), rng);
        RotationSystem cand = detail::greedy_embedding(g, order);
        detail::local_improve(g, cand, deadline);
        int cg = embedding_genus(g, cand);
        if (cg < best_g) {
            best_g = cg;
            best = std::move(cand);
        }
    }
    return {best_g, best};
}

} // namespace detail

std::pair<int, RotationSystem> genus_upper_search(const Graph& g,
                                                  std::chrono::milliseconds budget) {
    return detail::upper_search_floor(g, budget, 0);
}

namespace detail {
namespace {

// Branch-and-bound over vertex rotations of one biconnected block,
// goal-directed: succeeds on the first embedding with at least face_target
// faces.
struct BlockSearch {
    const Graph& g;                 // block edges only
    std::vector<uint32_t> order;    // assignment order of block vertices
    std::vector<std::vector<int>> rot;  // per-vertex rotation (graph-indexed)
    std::vector<bool> assigned;
    int face_target = 0;
    Clock::time_point deadline;
    bool timed_out = false;
    uint64_t nodes = 0;

    // dart bookkeeping
    std::vector<Edge> darts;
    std::vector<std::vector<int>> dart_id;
    std::vector<std::vector<int>> pos;  // pos[v][u] = index of u in rot[v]

    explicit BlockSearch(const Graph& bg) : g(bg) {}

    void set_rotation(uint32_t v, const std::vector<int>& r) {
        rot[v] = r;
        for (std::size_t i = 0; i < r.size(); ++i) pos[v][uint32_t(r[i])] = int(i);
        assigned[v] = true;
    }
    void clear_rotation(uint32_t v) { assigned[v] = false; }

    // closed faces + open-dart slack bound on the final face count
    int face_bound() const {
        std::vector<uint8_t> state(darts.size(), 0);  // 0 unvisited, 1 open, 2 closed
        // open paths start at darts leaving an unassigned vertex
        for (std::size_t d0 = 0; d0 < darts.size(); ++d0) {
            if (assigned[darts[d0].first]) continue;
            std::size_t d = d0;
            while (state[d] == 0) {
                state[d] = 1;
                auto [u, v] = darts[d];
                if (!assigned[v]) break;
                int i = pos[v][u];
                int w = rot[v][std::size_t((i + 1) % int(rot[v].size()))];
                d = std::size_t(dart_id[v][uint32_t(w)]);
            }
        }
        int closed = 0, open = 0;
        for (std::size_t d0 = 0; d0 < darts.size(); ++d0) {
            if (state[d0] == 1) {
                ++open;
                continue;
            }
            if (state[d0] == 2) continue;
            // walk: either closes as a full face or runs into an unassigned
            // vertex (open tail of a path already partially marked)
            std::size_t d = d0;
            std::vector<std::size_t> walk;
            bool closes = false;
            while (true) {
                if (state[d] == 2) break;  // merged into an earlier closed face? cannot happen: cycles are disjoint
                walk.push_back(d);
                state[d] = 2;
                auto [u, v] = darts[d];
                if (!assigned[v]) break;
                int i = pos[v][u];
                int w = rot[v][std::size_t((i + 1) % int(rot[v].size()))];
                std::size_t nd = std::size_t(dart_id[v][uint32_t(w)]);
                if (nd == d0) {
                    closes = true;
                    break;
                }
                if (state[nd] == 1) break;  // feeds an open path
                d = nd;
            }
            if (closes) {
                ++closed;
            } else {
                for (std::size_t x : walk) state[x] = 1;
                open += int(walk.size());
            }
        }
        // every face of a 2-connected simple graph has length >= 3
        return closed + open / 3;
    }

    bool dfs(std::size_t depth) {
        if ((++nodes & 0xff) == 0 && Clock::now() >= deadline) {
            timed_out = true;
            return false;
        }
        if (depth == order.size()) return true;  // bound held throughout
        uint32_t v = order[depth];
        std::vector<int> nb;
        for (uint32_t w = 0; w < g.n; ++w)
            if (g.adj[v][w]) nb.push_back(int(w));
        if (nb.size() <= 2) {
            set_rotation(v, nb);
            if (face_bound() >= face_target && dfs(depth + 1)) return true;
            clear_rotation(v);
            return false;
        }
        // fix nb[0] to quotient cyclic rotations; for the root also demand
        // tail.front() < tail.back() to quotient reflection
        std::vector<int> tail(nb.begin() + 1, nb.end());
        std::sort(tail.begin(), tail.end());
        do {
            if (timed_out) return false;
            if (depth == 0 && tail.front() > tail.back()) continue;
            std::vector<int> r;
            r.reserve(nb.size());
            r.push_back(nb[0]);
            r.insert(r.end(), tail.begin(), tail.end());
            set_rotation(v, r);
            if (face_bound() >= face_target && dfs(depth + 1)) return true;
            clear_rotation(v);
        } while (std::next_permutation(tail.begin(), tail.end()));
        return false;
    }

    enum class Outcome { Found, Exhausted, Timeout };

    Outcome run(const std::vector<uint32_t>& verts, int target_faces,
                Clock::time_point dl, RotationSystem& out) {
        face_target = target_faces;
        deadline = dl;
        timed_out = false;
        nodes = 0;
        rot.assign(g.n, {});
        assigned.assign(g.n, false);
        pos.assign(g.n, std::vector<int>(g.n, -1));
        darts.clear();
        dart_id.assign(g.n, std::vector<int>(g.n, -1));
        for (uint32_t u = 0; u < g.n; ++u)
            for (uint32_t v = 0; v < g.n; ++v)
                if (g.adj[u][v]) {
                    dart_id[u][v] = int(darts.size());
                    darts.push_back({u, v});
                }
        // assignment order: max degree first, then most assigned neighbors
        // (closes faces early), tie-broken by degree
        order.clear();
        std::vector<bool> placed(g.n, false);
        {
            uint32_t first = verts[0];
            for (uint32_t v : verts)
                if (g.degree(v) > g.degree(first)) first = v;
            order.push_back(first);
            placed[first] = true;
            while (order.size() < verts.size()) {
                uint32_t pick = g.n;
                int pick_score = -1;
                for (uint32_t v : verts) {
                    if (placed[v]) continue;
                    int score = 0;
                    for (uint32_t w : verts)
                        if (g.adj[v][w] && placed[w]) score += 1000;
                    score += int(g.degree(v));
                    if (score > pick_score) {
                        pick_score = score;
                        pick = v;
                    }
                }
                order.push_back(pick);
                placed[pick] = true;
            }
        }
        bool found = dfs(0);
        if (found) {
            out.rot.assign(g.n, {});
            for (uint32_t v : verts) out.rot[v] = rot[v];
            return Outcome::Found;
        }
        return timed_out ? Outcome::Timeout : Outcome::Exhausted;
    }
};

struct BlockResult {
    int lower = 0;
    int upper = 0;
    bool exact = false;
    bool timed_out = false;
    RotationSystem rot;  // achieves upper (graph-indexed, block vertices only)
    std::string evidence;
};

BlockResult solve_block(const Graph& bg, const std::vector<uint32_t>& verts,
                        const std::vector<LowerBoundHint>& hints,
                        Clock::time_point deadline) {
    BlockResult res;
    RotationSystem planar_rot;
    if (planar_embedding(bg, planar_rot)) {
        res.lower = res.upper = 0;
        res.exact = true;
        res.rot = std::move(planar_rot);
        res.evidence = "planar";
        return res;
    }
    int lower = std::max(1, euler_lower_bound(bg));
    std::string lower_src = lower > 1 ? "euler" : "non-planar";
    std::vector<bool> in_block(bg.n, false);
    for (uint32_t v : verts) in_block[v] = true;
    for (const auto& h : hints) {
        bool inside = !h.vertices.empty();
        for (int v : h.vertices)
            if (v < 0 || uint32_t(v) >= bg.n || !in_block[uint32_t(v)]) inside = false;
        if (inside && h.genus > lower) {
            lower = h.genus;
            lower_src = h.description.empty() ? "witness" : h.description;
        }
    }

    auto remaining = [&]() {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
            deadline - Clock::now());
    };
    auto ub_budget = std::min<std::chrono::milliseconds>(
        std::chrono::milliseconds(3000), remaining() / 4);
    if (ub_budget.count() < 0) ub_budget = std::chrono::milliseconds(0);
    auto [ub, ub_rot] = upper_search_floor(bg, ub_budget, lower);

    auto V = (long long)verts.size();
    auto E = (long long)bg.edge_count();
    std::ostringstream ev;
    ev << "lower " << lower << " (" << lower_src << ")";
    while (lower < ub) {
        int target_faces = int(E - V + 2 - 2 * lower);
        BlockSearch search(bg);
        RotationSystem found;
        auto outcome = search.run(verts, target_faces, deadline, found);
        if (outcome == BlockSearch::Outcome::Found) {
            ub = embedding_genus(bg, found);
            ub_rot = std::move(found);
            ev << ", search found genus-" << ub << " embedding";
            break;
        }
        if (outcome == BlockSearch::Outcome::Timeout) {
            res.timed_out = true;
            ev << ", search timed out at genus " << lower;
            break;
        }
        ev << ", no genus-" << lower << " embedding";
        ++lower;
    }
    res.lower = lower;
    res.upper = ub;
    res.exact = (lower == ub);
    res.rot = std::move(ub_rot);
    if (res.exact) ev << ", upper " << ub << " (rotation)";
    res.evidence = ev.str();
    return res;
}

} // namespace
} // namespace detail

GenusResult genus_exact(const Graph& g, std::chrono::milliseconds budget,
                        const std::vector<LowerBoundHint>& hints) {
    auto t0 = Clock::now();
    auto deadline = t0 + budget;
    GenusResult res;
    RotationSystem combined;
    combined.rot.assign(g.n, {});

    auto blocks = detail::blocks_of(g);
    int lower = 0, upper = 0;
    bool all_exact = true, any_timeout = false;
    std::ostringstream ev;
    int nontrivial = 0;
    for (const auto& blk : blocks) {
        if (blk.size() == 1) {
            auto [a, b] = blk[0];
            combined.rot[a].push_back(int(b));
            combined.rot[b].push_back(int(a));
            continue;
        }
        Graph bg = Graph::empty(g.n);
        std::vector<bool> seen(g.n, false);
        for (auto [a, b] : blk) {
            bg.add_edge(a, b);
            seen[a] = seen[b] = true;
        }
        std::vector<uint32_t> verts;
        for (uint32_t v = 0; v < g.n; ++v)
            if (seen[v]) verts.push_back(v);

        auto br = detail::solve_block(bg, verts, hints, deadline);
        lower += br.lower;
        upper += br.upper;
        all_exact = all_exact && br.exact;
        any_timeout = any_timeout || br.timed_out;
        if (br.lower > 0 || !br.exact) {
            if (nontrivial++) ev << "; ";
            ev << "block{" << verts.size() << "v," << blk.size() << "e}: "
               << br.evidence;
        }
        // genus is additive over blocks: splicing each block's rotation at
        // shared cut vertices keeps the total
        for (uint32_t v : verts)
            combined.rot[v].insert(combined.rot[v].end(), br.rot.rot[v].begin(),
                                   br.rot.rot[v].end());
    }
    if (nontrivial == 0) ev << "planar";

    res.lower = lower;
    res.upper = upper;
    res.status = all_exact ? GenusResult::Status::Exact
                           : (any_timeout ? GenusResult::Status::Timeout
                                          : GenusResult::Status::Bounds);
    res.evidence = ev.str();
    res.rotation = std::move(combined);
    res.ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0)
                 .count();
    return res;
}

} // namespace annigraph

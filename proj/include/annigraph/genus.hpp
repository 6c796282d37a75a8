#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "annigraph/graph.hpp"

namespace annigraph {

/// gamma(K_n) = ceil((n-3)(n-4)/12) for n >= 3, else 0.
int genus_complete(int n);

/// gamma(K_{m,n}) = ceil((m-2)(n-2)/4) for m,n >= 2, else 0.
int genus_complete_bipartite(int m, int n);

/// Cyclic neighbor order per vertex; determines an orientable embedding.
struct RotationSystem {
    std::vector<std::vector<int>> rot;
};

/// Number of face orbits of the embedding given by rot. Throws if rot is not
/// a permutation of each vertex's neighbors. Edgeless vertices contribute no
/// darts (their single face is accounted for by the caller).
int trace_faces(const Graph& g, const RotationSystem& rot);

/// Genus of the embedding: sums (2 - V_c + E_c - F_c)/2 over connected
/// components, counting one face for edgeless components.
int embedding_genus(const Graph& g, const RotationSystem& rot);

/// Euler-formula lower bound, summed over connected components, with the
/// girth-4 refinement on triangle-free components.
int euler_lower_bound(const Graph& g);

struct KuratowskiCertificate {
    bool is_k5 = false;  // else K_{3,3}
    std::vector<int> branch_vertices;              // 5 or 6 vertices of g
    std::vector<std::pair<int, int>> subdivision_edges;  // edges of g forming it
};

struct PlanarityResult {
    bool planar = false;
    RotationSystem embedding;                        // set when planar
    std::optional<KuratowskiCertificate> kuratowski; // set when not
};

PlanarityResult is_planar(const Graph& g);

using Clock = std::chrono::steady_clock;

/// Best embedding found within the budget: greedy planar-subgraph seed plus
/// edge insertion and local rotation moves. Returns the certified upper
/// bound (re-traced) with its rotation system.
std::pair<int, RotationSystem> genus_upper_search(const Graph& g,
                                                  std::chrono::milliseconds budget);

struct GenusResult {
    int lower = 0;
    std::optional<int> upper;
    enum class Status { Exact, Bounds, Timeout } status = Status::Bounds;
    std::string evidence;
    std::optional<RotationSystem> rotation;  // achieves upper when set
    int64_t ms = 0;

    bool exact() const { return status == Status::Exact; }
};

/// A caller-supplied lower-bound hint: a vertex set known to force at least
/// the given genus (e.g. a complete-bipartite subgraph witness).
struct LowerBoundHint {
    std::vector<int> vertices;
    int genus = 0;
    std::string description;
};

/// Exact genus by component/block decomposition, planarity fast path, Euler
/// and witness lower bounds, then branch-and-bound over rotation systems.
/// On budget exhaustion returns honest bounds with status Timeout.
GenusResult genus_exact(const Graph& g, std::chrono::milliseconds budget,
                        const std::vector<LowerBoundHint>& hints = {});

std::string genus_result_to_json(const GenusResult& r);

} // namespace annigraph

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "annigraph/graph.hpp"
#include "annigraph/ideal.hpp"

namespace annigraph {

/// Annihilating-ideal graph paired with the lattice indices of its vertices.
struct AGGraph {
    Graph graph;
    std::vector<int> vertex_ideal;  // graph vertex -> lattice index
    int graph_vertex_of(int lattice_idx) const {
        for (std::size_t v = 0; v < vertex_ideal.size(); ++v)
            if (vertex_ideal[v] == lattice_idx) return int(v);
        return -1;
    }
};

/// Vertices: nonzero ideals with nonzero annihilator; edge iff the ideal
/// product is (0). Isolated vertices retained.
AGGraph build_ag(const FiniteRing& R, const IdealLattice& L);

/// Zero-divisor graph on Z(R) \ {0}.
Graph build_zdg(const FiniteRing& R);

/// Vertex set equals all nonzero proper ideals (holds for every finite ring).
bool lemma21_vertex_check(const IdealLattice& L, const AGGraph& G);

struct SubgraphWitness {
    enum class Shape { Complete, CompleteBipartite };
    Shape shape = Shape::Complete;
    // graph-vertex lists; part_b empty for Complete
    std::vector<int> part_a, part_b;
    std::string certificate;

    int m() const { return int(part_a.size()); }
    int n() const { return int(part_b.size()); }
};

/// Re-verifies all claimed edges and part disjointness against the host
/// graph; throws RingError if the witness is unsound.
void verify_witness(const Graph& g, const SubgraphWitness& w);

/// For each maximal ideal I with I^2 = (0) and at least two nonzero ideals
/// inside it: a complete-graph witness on the nonzero ideals inside I.
std::vector<SubgraphWitness> square_zero_clique_witnesses(
    const FiniteRing& R, const IdealLattice& L, const AGGraph& G);

/// For zero-product ideal pairs (I, J): parts I(I)* and I(J)* \ I(I);
/// Pareto-maximal part-size pairs only.
std::vector<SubgraphWitness> zero_product_bipartite_witnesses(
    const FiniteRing& R, const IdealLattice& L, const AGGraph& G);

struct Lemma28Result {
    bool hypotheses_met = false;
    std::string failed_hypothesis;
    uint32_t k = 0;  // v.dim m/m^2
    std::optional<SubgraphWitness> witness;
};

/// Witness construction for local Gorenstein rings with m^2 != 0, m^3 = 0,
/// k = v.dim m/m^2 > 6: parts {Rx1, Rx2, m^2} and the principal ideals of a
/// basis of Ann(x1) /\ Ann(x2) modulo m^2 (second part size >= k-6).
Lemma28Result lemma28_witness(const FiniteRing& R, const IdealLattice& L,
                              const LocalStructure& S, const AGGraph& G);

/// Max over witnesses of the closed-formula genus of the witness shape.
int genus_lower_from_witnesses(const std::vector<SubgraphWitness>& ws);

std::string describe_witness(const SubgraphWitness& w);

} // namespace annigraph

#include <doctest.h>

#include <algorithm>
#include <vector>

#include "annigraph/ag.hpp"
#include "annigraph/ring.hpp"

#include <json.hpp>

using namespace annigraph;

namespace {

struct Built {
    FiniteRing R;
    IdealLattice L;
    AGGraph G;
};

Built build(const std::string& spec) {
    Built b;
    b.R = realize(parse_ring_spec(spec));
    b.L = all_ideals(b.R);
    b.G = build_ag(b.R, b.L);
    return b;
}

std::vector<uint32_t> degree_multiset(const Graph& g) {
    std::vector<uint32_t> d;
    for (uint32_t v = 0; v < g.n; ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
}

} // namespace

TEST_CASE("AG of a field is empty; AG(Z4) is a single isolated vertex") {
    Built f = build("GF(8)");
    CHECK(f.G.graph.n == 0);
    Built z = build("Z4");
    CHECK(z.G.graph.n == 1);
    CHECK(z.G.graph.edge_count() == 0);
}

TEST_CASE("AG(Z12) has the documented shape") {
    Built b = build("Z12");
    REQUIRE(b.G.graph.n == 4);
    CHECK(b.G.graph.edge_count() == 3);
    auto vtx = [&](uint32_t gen) {
        int li = b.L.index_of(principal_ideal(b.R, gen).mask);
        REQUIRE(li >= 0);
        int v = b.G.graph_vertex_of(li);
        REQUIRE(v >= 0);
        return uint32_t(v);
    };
    uint32_t v2 = vtx(2), v3 = vtx(3), v4 = vtx(4), v6 = vtx(6);
    CHECK(b.G.graph.has_edge(v2, v6));   // (2)(6) = (0)
    CHECK(b.G.graph.has_edge(v3, v4));   // (3)(4) = (0)
    CHECK(b.G.graph.has_edge(v4, v6));   // (4)(6) = (0)
    CHECK_FALSE(b.G.graph.has_edge(v2, v3));
    CHECK_FALSE(b.G.graph.has_edge(v2, v4));
    CHECK_FALSE(b.G.graph.has_edge(v3, v6));
}

TEST_CASE("AG adjacency equals the zero-product predicate on every pair") {
    for (const char* spec : {"Z36", "GF(2)[x,y]/(x^2,y^2)", "product(Z4,Z2)"}) {
        Built b = build(spec);
        for (uint32_t u = 0; u < b.G.graph.n; ++u)
            for (uint32_t v = u + 1; v < b.G.graph.n; ++v) {
                const Ideal& I = b.L.ideals[std::size_t(b.G.vertex_ideal[u])];
                const Ideal& J = b.L.ideals[std::size_t(b.G.vertex_ideal[v])];
                bool zero = ideal_product(b.R, I, J).size() == 1;
                CHECK(b.G.graph.has_edge(u, v) == zero);
            }
    }
}

TEST_CASE("vertex set is all nonzero proper ideals (finite rings)") {
    for (const char* spec :
         {"Z12", "Z16", "GF(9)", "GF(2)[x,y]/(x^2,x*y,y^2)", "product(Z2,Z3)",
          "product(Z2,Z2,Z2)", "Z4[x]/(2*x,x^2)"}) {
        Built b = build(spec);
        CHECK(lemma21_vertex_check(b.L, b.G));
        CHECK(b.G.graph.n == b.L.count() - 2);
    }
}

TEST_CASE("zero-divisor graph of Z6 is the path 2 - 3 - 4") {
    FiniteRing R = realize(parse_ring_spec("Z6"));
    Graph g = build_zdg(R);
    REQUIRE(g.n == 3);
    CHECK(g.edge_count() == 2);
    CHECK(degree_multiset(g) == std::vector<uint32_t>{1, 1, 2});
}

TEST_CASE("AG of the product of four Z2 factors: 14 vertices, 25 edges") {
    Built b = build("product(Z2,Z2,Z2,Z2)");
    REQUIRE(b.G.graph.n == 14);
    CHECK(b.G.graph.edge_count() == 25);
    CHECK(degree_multiset(b.G.graph) ==
          std::vector<uint32_t>{1, 1, 1, 1, 3, 3, 3, 3, 3, 3, 7, 7, 7, 7});
}

TEST_CASE("square-zero maximal ideal yields a verified complete witness") {
    Built b = build("GF(2)[x,y]/(x^2,x*y,y^2)");
    auto ws = square_zero_clique_witnesses(b.R, b.L, b.G);
    REQUIRE(ws.size() == 1);
    CHECK(ws[0].shape == SubgraphWitness::Shape::Complete);
    CHECK(ws[0].m() == 4);  // the 4 nonzero ideals inside m form K_4
    verify_witness(b.G.graph, ws[0]);
}

TEST_CASE("no square-zero witness when m^2 is nonzero or the ring splits") {
    for (const char* spec : {"Z8", "product(Z2,Z2)"}) {
        Built b = build(spec);
        CHECK(square_zero_clique_witnesses(b.R, b.L, b.G).empty());
    }
}

TEST_CASE("bipartite witnesses on the flagship product ring include a 3x3") {
    Built b = build("product(Z2,Z2,Z2,Z2)");
    auto ws = zero_product_bipartite_witnesses(b.R, b.L, b.G);
    REQUIRE_FALSE(ws.empty());
    bool big = false;
    for (const auto& w : ws) {
        CHECK(w.shape == SubgraphWitness::Shape::CompleteBipartite);
        verify_witness(b.G.graph, w);
        big = big || (w.m() >= 3 && w.n() >= 3);
    }
    CHECK(big);
}

TEST_CASE("witness verification rejects a claimed edge that is absent") {
    Built b = build("Z12");
    SubgraphWitness w;
    w.shape = SubgraphWitness::Shape::Complete;
    // (2) and (3) are not adjacent in AG(Z12)
    int a = b.G.graph_vertex_of(b.L.index_of(principal_ideal(b.R, 2).mask));
    int c = b.G.graph_vertex_of(b.L.index_of(principal_ideal(b.R, 3).mask));
    w.part_a = {a, c};
    CHECK_THROWS_AS(verify_witness(b.G.graph, w), RingError);
    // overlapping parts are rejected too
    SubgraphWitness w2;
    w2.shape = SubgraphWitness::Shape::CompleteBipartite;
    w2.part_a = {a};
    w2.part_b = {a};
    CHECK_THROWS_AS(verify_witness(b.G.graph, w2), RingError);
}

TEST_CASE("witness construction for the Gorenstein family reports hypotheses") {
    Built small = build("GF(2)[x,y]/(x^2,y^2)");
    LocalStructure ss = local_structure(small.R, small.L);
    Lemma28Result r1 = lemma28_witness(small.R, small.L, ss, small.G);
    CHECK_FALSE(r1.hypotheses_met);
    CHECK(r1.k == 2);
    CHECK_FALSE(r1.failed_hypothesis.empty());

    Built chain = build("Z8");
    LocalStructure sc = local_structure(chain.R, chain.L);
    Lemma28Result r2 = lemma28_witness(chain.R, chain.L, sc, chain.G);
    CHECK_FALSE(r2.hypotheses_met);
    CHECK(r2.k == 1);
}

TEST_CASE("witness genus lower bounds use the closed formulas") {
    SubgraphWitness k7;
    k7.shape = SubgraphWitness::Shape::Complete;
    k7.part_a = {0, 1, 2, 3, 4, 5, 6};
    SubgraphWitness k33;
    k33.shape = SubgraphWitness::Shape::CompleteBipartite;
    k33.part_a = {0, 1, 2};
    k33.part_b = {3, 4, 5};
    CHECK(genus_lower_from_witnesses({k7}) == 1);
    CHECK(genus_lower_from_witnesses({k33}) == 1);
    SubgraphWitness k8 = k7;
    k8.part_a.push_back(7);
    CHECK(genus_lower_from_witnesses({k33, k8}) == 2);
    CHECK(genus_lower_from_witnesses({}) == 0);
}

TEST_CASE("graph JSON round trip and DOT output") {
    Built b = build("Z12");
    std::string js = graph_to_json(b.G.graph);
    Graph back = graph_from_json(js);
    REQUIRE(back.n == b.G.graph.n);
    CHECK(back.edges() == b.G.graph.edges());
    std::string dot = graph_to_dot(b.G.graph);
    std::size_t dashes = 0, at = 0;
    while ((at = dot.find("--", at)) != std::string::npos) { ++dashes; at += 2; }
    CHECK(dashes == b.G.graph.edge_count());
}

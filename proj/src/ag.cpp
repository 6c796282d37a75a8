#include "annigraph/ag.hpp"
#include "annigraph/genus.hpp"

#include <algorithm>
#include <sstream>

namespace annigraph {
namespace {

// element-level annihilator Ann(x) = { a : a*x = 0 }, always an ideal
DynBitset element_annihilator(const FiniteRing& R, uint32_t x) {
    DynBitset out(R.order);
    for (uint32_t a = 0; a < R.order; ++a)
        if (R.muli(a, x) == R.zero) out.set(a);
    return out;
}

// additive subgroup closure, local copy (ideal.cpp owns the shared one)
void subgroup_extend(const FiniteRing& R, DynBitset& mask,
                     std::vector<uint32_t>& members, uint32_t g) {
    if (mask.test(g)) return;
    std::vector<uint32_t> frontier{g};
    mask.set(g);
    members.push_back(g);
    while (!frontier.empty()) {
        std::vector<uint32_t> next;
        for (uint32_t f : frontier)
            for (std::size_t i = 0, n = members.size(); i < n; ++i) {
                uint32_t s = R.addi(members[i], f);
                if (!mask.test(s)) {
                    mask.set(s);
                    members.push_back(s);
                    next.push_back(s);
                }
            }
        frontier = std::move(next);
    }
}

} // namespace

AGGraph build_ag(const FiniteRing& R, const IdealLattice& L) {
    // Ann(I) as the intersection of element annihilators, precomputed once
    std::vector<DynBitset> eann(R.order);
    for (uint32_t x = 0; x < R.order; ++x) eann[x] = element_annihilator(R, x);
    std::vector<int> verts;
    std::vector<Ideal> anns(L.count());
    for (std::size_t i = 0; i < L.count(); ++i) {
        if (int(i) == L.zero_idx) continue;
        DynBitset a(R.order);
        for (uint32_t x = 0; x < R.order; ++x) a.set(x);
        for (uint32_t x : L.ideals[i].mask.to_indices()) a &= eann[x];
        anns[i].mask = std::move(a);
        if (anns[i].size() > 1) verts.push_back(int(i));
    }
    AGGraph G;
    G.graph = Graph::empty(uint32_t(verts.size()), Graph::Kind::AG);
    G.vertex_ideal = verts;
    for (std::size_t a = 0; a < verts.size(); ++a)
        G.graph.labels[a] = ideal_label(R, L, verts[a]);
    for (std::size_t a = 0; a < verts.size(); ++a)
        for (std::size_t b = a + 1; b < verts.size(); ++b) {
            // I*J = (0) iff J is inside Ann(I)
            if (L.ideals[std::size_t(verts[b])].mask.subset_of(
                    anns[std::size_t(verts[a])].mask))
                G.graph.add_edge(uint32_t(a), uint32_t(b));
        }
    return G;
}

Graph build_zdg(const FiniteRing& R) {
    std::vector<uint32_t> verts;
    for (uint32_t a = 0; a < R.order; ++a)
        if (is_zero_divisor(R, a)) verts.push_back(a);
    Graph g = Graph::empty(uint32_t(verts.size()), Graph::Kind::ZDG);
    for (std::size_t i = 0; i < verts.size(); ++i) g.labels[i] = R.names[verts[i]];
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (R.muli(verts[i], verts[j]) == R.zero)
                g.add_edge(uint32_t(i), uint32_t(j));
    return g;
}

bool lemma21_vertex_check(const IdealLattice& L, const AGGraph& G) {
    std::size_t proper_nonzero = L.count() >= 2 ? L.count() - 2 : 0;
    if (G.vertex_ideal.size() != proper_nonzero) return false;
    for (int v : G.vertex_ideal)
        if (v == L.zero_idx || v == L.full_idx) return false;
    return true;
}

void verify_witness(const Graph& g, const SubgraphWitness& w) {
    auto in_range = [&](int v) { return v >= 0 && uint32_t(v) < g.n; };
    for (int v : w.part_a)
        if (!in_range(v)) throw RingError("witness vertex out of range");
    for (int v : w.part_b)
        if (!in_range(v)) throw RingError("witness vertex out of range");
    if (w.shape == SubgraphWitness::Shape::Complete) {
        if (!w.part_b.empty()) throw RingError("complete witness must have one part");
        for (std::size_t i = 0; i < w.part_a.size(); ++i)
            for (std::size_t j = i + 1; j < w.part_a.size(); ++j) {
                if (w.part_a[i] == w.part_a[j])
                    throw RingError("witness repeats a vertex");
                if (!g.has_edge(uint32_t(w.part_a[i]), uint32_t(w.part_a[j])))
                    throw RingError("witness claims a missing edge");
            }
    } else {
        for (int a : w.part_a)
            for (int b : w.part_b) {
                if (a == b) throw RingError("witness parts are not disjoint");
                if (!g.has_edge(uint32_t(a), uint32_t(b)))
                    throw RingError("witness claims a missing edge");
            }
        for (std::size_t i = 0; i < w.part_a.size(); ++i)
            for (std::size_t j = i + 1; j < w.part_a.size(); ++j)
                if (w.part_a[i] == w.part_a[j])
                    throw RingError("witness repeats a vertex");
        for (std::size_t i = 0; i < w.part_b.size(); ++i)
            for (std::size_t j = i + 1; j < w.part_b.size(); ++j)
                if (w.part_b[i] == w.part_b[j])
                    throw RingError("witness repeats a vertex");
    }
}

std::vector<SubgraphWitness> square_zero_clique_witnesses(
    const FiniteRing& R, const IdealLattice& L, const AGGraph& G) {
    // candidate ideals with I^2 = (0); keep only maximal ones (the clique on
    // a smaller I is dominated by the clique on any I' containing it)
    std::vector<int> square_zero;
    for (std::size_t i = 0; i < L.count(); ++i) {
        if (int(i) == L.zero_idx) continue;
        Ideal sq = ideal_product(R, L.ideals[i], L.ideals[i]);
        if (sq.size() == 1) square_zero.push_back(int(i));
    }
    std::vector<SubgraphWitness> out;
    for (int i : square_zero) {
        bool dominated = false;
        for (int j : square_zero)
            if (j != i && L.contains[std::size_t(i)][std::size_t(j)]) {
                dominated = true;
                break;
            }
        if (dominated) continue;
        std::vector<int> inside;  // nonzero ideals inside I, as graph vertices
        for (int k : ideals_contained_in(L, i)) {
            if (k == L.zero_idx) continue;
            int v = G.graph_vertex_of(k);
            if (v < 0) throw RingError("ideal inside a square-zero ideal is not a vertex");
            inside.push_back(v);
        }
        if (inside.size() < 2) continue;
        SubgraphWitness w;
        w.shape = SubgraphWitness::Shape::Complete;
        w.part_a = std::move(inside);
        w.certificate = "I^2=(0) with I=" + ideal_label(R, L, i);
        verify_witness(G.graph, w);
        out.push_back(std::move(w));
    }
    return out;
}

std::vector<SubgraphWitness> zero_product_bipartite_witnesses(
    const FiniteRing& R, const IdealLattice& L, const AGGraph& G) {
    struct Candidate {
        std::size_t a, b;
        SubgraphWitness w;
    };
    std::vector<Candidate> cands;
    for (std::size_t i = 0; i < L.count(); ++i) {
        if (int(i) == L.zero_idx) continue;
        Ideal ann_i = annihilator(R, L.ideals[i]);
        for (std::size_t j = i + 1; j < L.count(); ++j) {
            if (int(j) == L.zero_idx) continue;
            if (!L.ideals[j].mask.subset_of(ann_i.mask)) continue;  // I*J != 0
            std::vector<int> part_a, part_b;
            for (int k : ideals_contained_in(L, int(i)))
                if (k != L.zero_idx) part_a.push_back(G.graph_vertex_of(k));
            for (int k : ideals_contained_in(L, int(j)))
                if (k != L.zero_idx && !L.contains[std::size_t(k)][i])
                    part_b.push_back(G.graph_vertex_of(k));
            if (part_a.size() < 2 || part_b.size() < 2) continue;
            SubgraphWitness w;
            w.shape = SubgraphWitness::Shape::CompleteBipartite;
            w.part_a = std::move(part_a);
            w.part_b = std::move(part_b);
            w.certificate = "I*J=(0) with I=" + ideal_label(R, L, int(i)) +
                            ", J=" + ideal_label(R, L, int(j));
            verify_witness(G.graph, w);
            cands.push_back({w.part_a.size(), w.part_b.size(), std::move(w)});
        }
    }
    // keep Pareto-maximal (|A|, |B|) pairs, deterministic order
    std::sort(cands.begin(), cands.end(), [](const Candidate& x, const Candidate& y) {
        if (x.a != y.a) return x.a > y.a;
        if (x.b != y.b) return x.b > y.b;
        return x.w.certificate < y.w.certificate;
    });
    std::vector<SubgraphWitness> out;
    std::vector<std::pair<std::size_t, std::size_t>> kept;
    for (Candidate& c : cands) {
        bool dominated = false;
        for (auto [a, b] : kept)
            if (a >= c.a && b >= c.b) { dominated = true; break; }
        if (dominated) continue;
        kept.push_back({c.a, c.b});
        out.push_back(std::move(c.w));
    }
    return out;
}

Lemma28Result lemma28_witness(const FiniteRing& R, const IdealLattice& L,
                              const LocalStructure& S, const AGGraph& G) {
    Lemma28Result res;
    auto fail = [&](const std::string& why) {
        res.hypotheses_met = false;
        res.failed_hypothesis = why;
        return res;
    };
    if (!S.is_local) return fail("ring is not local");
    if (!S.gorenstein) return fail("ring is not Gorenstein");
    if (S.t != 2) return fail("needs m^2 != (0) and m^3 = (0)");
    res.k = S.vdim_steps.size() > 1 ? S.vdim_steps[1] : 0;
    if (res.k <= 6) return fail("v.dim m/m^2 = " + std::to_string(res.k) + " <= 6");
    res.hypotheses_met = true;

    const Ideal& m = L.ideals[std::size_t(S.m_idx)];
    const Ideal& m2 = S.powers[2];

    // greedy basis of m/m^2: pick elements outside the span accumulated so far
    std::vector<uint32_t> basis;
    DynBitset span = m2.mask;
    std::vector<uint32_t> members = span.to_indices();
    for (uint32_t e : m.mask.to_indices()) {
        if (span.test(e)) continue;
        basis.push_back(e);
        // span grows by the line R*e (mod m^2): add all multiples
        for (uint32_t r = 0; r < R.order; ++r)
            subgroup_extend(R, span, members, R.muli(r, e));
        if (span == m.mask) break;
    }
    if (basis.size() != res.k)
        throw RingError("basis extraction disagrees with v.dim (internal)");

    uint32_t x1 = basis[0], x2 = basis[1];
    DynBitset a1 = element_annihilator(R, x1);
    DynBitset a2 = element_annihilator(R, x2);
    DynBitset a12 = a1;
    a12 &= a2;

    // part A: Rx1, Rx2, m^2 as graph vertices
    auto vertex_of_mask = [&](const DynBitset& mask) {
        int li = L.index_of(mask);
        return li < 0 ? -1 : G.graph_vertex_of(li);
    };
    std::vector<int> part_a;
    part_a.push_back(vertex_of_mask(principal_ideal(R, x1).mask));
    part_a.push_back(vertex_of_mask(principal_ideal(R, x2).mask));
    part_a.push_back(vertex_of_mask(m2.mask));
    for (int v : part_a)
        if (v < 0) throw RingError("lemma witness part is not a graph vertex");

    // part B: principal ideals on a greedy basis of (Ann(x1)/\Ann(x2))/m^2,
    // skipping anything that collides with part A
    std::vector<int> part_b;
    DynBitset span2 = m2.mask;
    std::vector<uint32_t> members2 = span2.to_indices();
    for (uint32_t e : a12.to_indices()) {
        if (!m.mask.test(e) || span2.test(e)) continue;
        int v = vertex_of_mask(principal_ideal(R, e).mask);
        for (uint32_t r = 0; r < R.order; ++r)
            subgroup_extend(R, span2, members2, R.muli(r, e));
        if (v < 0) continue;
        if (std::find(part_a.begin(), part_a.end(), v) != part_a.end()) continue;
        if (std::find(part_b.begin(), part_b.end(), v) != part_b.end()) continue;
        part_b.push_back(v);
    }
    if (part_b.size() + 6 < res.k)
        throw RingError("lemma witness smaller than the k-6 bound (internal)");

    SubgraphWitness w;
    w.shape = SubgraphWitness::Shape::CompleteBipartite;
    w.part_a = std::move(part_a);
    w.part_b = std::move(part_b);
    w.certificate = "parts {Rx1,Rx2,m^2} and basis ideals of Ann(x1)/\\Ann(x2) mod m^2";
    verify_witness(G.graph, w);
    res.witness = std::move(w);
    return res;
}

int genus_lower_from_witnesses(const std::vector<SubgraphWitness>& ws) {
    int best = 0;
    for (const SubgraphWitness& w : ws) {
        int g = w.shape == SubgraphWitness::Shape::Complete
                    ? genus_complete(w.m())
                    : genus_complete_bipartite(w.m(), w.n());
        best = std::max(best, g);
    }
    return best;
}

std::string describe_witness(const SubgraphWitness& w) {
    std::ostringstream out;
    if (w.shape == SubgraphWitness::Shape::Complete)
        out << "K_" << w.m();
    else
        out << "K_{" << w.m() << "," << w.n() << "}";
    out << " [" << w.certificate << "]";
    return out.str();
}

} // namespace annigraph

#include "annigraph/ring.hpp"

#include <algorithm>

namespace annigraph {
namespace {

// Local test without the lattice machinery: a finite commutative ring is
// local iff its non-units form an ideal, which for finite rings reduces to
// "the non-units are closed under addition" (they always absorb products).
bool is_local_ring(const FiniteRing& R) {
    std::vector<bool> unit(R.order, false);
    for (uint32_t a = 0; a < R.order; ++a)
        for (uint32_t b = 0; b < R.order; ++b)
            if (R.muli(a, b) == R.one) { unit[a] = true; break; }
    for (uint32_t a = 0; a < R.order; ++a) {
        if (unit[a]) continue;
        for (uint32_t b = 0; b < R.order; ++b) {
            if (unit[b]) continue;
            if (unit[R.addi(a, b)]) return false;
        }
    }
    return true;
}

} // namespace

LocalDecomposition local_decomposition(const FiniteRing& R) {
    // all idempotents
    std::vector<uint32_t> idem;
    for (uint32_t e = 0; e < R.order; ++e)
        if (R.muli(e, e) == e) idem.push_back(e);

    // primitive = minimal nonzero in the order e <= f iff ef = e
    std::vector<uint32_t> prim;
    for (uint32_t e : idem) {
        if (e == R.zero) continue;
        bool minimal = true;
        for (uint32_t f : idem) {
            if (f == R.zero || f == e) continue;
            if (R.muli(e, f) == f) { minimal = false; break; }  // f < e
        }
        if (minimal) prim.push_back(e);
    }

    LocalDecomposition D;
    std::vector<std::vector<uint16_t>> elem_index;  // per factor: ring elem -> factor idx
    uint64_t prod_order = 1;
    for (uint32_t e : prim) {
        // factor Re = { r*e : r in R } with unit e
        std::vector<uint16_t> members;
        std::vector<int> pos(R.order, -1);
        for (uint32_t r = 0; r < R.order; ++r) {
            uint16_t x = R.muli(r, e);
            if (pos[x] < 0) {
                pos[x] = int(members.size());
                members.push_back(x);
            }
        }
        FiniteRing F;
        F.order = uint32_t(members.size());
        F.add.resize(std::size_t(F.order) * F.order);
        F.mul.resize(std::size_t(F.order) * F.order);
        for (uint32_t i = 0; i < F.order; ++i)
            for (uint32_t j = 0; j < F.order; ++j) {
                F.add[std::size_t(i) * F.order + j] =
                    uint16_t(pos[R.addi(members[i], members[j])]);
                F.mul[std::size_t(i) * F.order + j] =
                    uint16_t(pos[R.muli(members[i], members[j])]);
            }
        F.zero = uint16_t(pos[R.zero]);
        F.one = uint16_t(pos[e]);
        for (uint16_t m : members) F.names.push_back(R.names[m]);
        F.spec_text = R.spec_text + " (factor)";
        if (!is_local_ring(F))
            throw RingError("decomposition factor is not local (table corruption?)");
        prod_order *= F.order;
        std::vector<uint16_t> emap(R.order);
        for (uint32_t a = 0; a < R.order; ++a)
            emap[a] = uint16_t(pos[R.muli(a, e)]);
        elem_index.push_back(std::move(emap));
        D.factors.push_back(std::move(F));
    }

    if (prod_order != R.order)
        throw RingError("factor orders do not multiply to |R| (table corruption?)");

    D.embedding.resize(R.order);
    for (uint32_t a = 0; a < R.order; ++a) {
        D.embedding[a].reserve(D.factors.size());
        for (std::size_t f = 0; f < D.factors.size(); ++f)
            D.embedding[a].push_back(elem_index[f][a]);
    }

    // verify the embedding is a ring isomorphism (injective by order count)
    for (uint32_t a = 0; a < R.order; ++a)
        for (uint32_t b = 0; b < R.order; ++b) {
            if (a < b && D.embedding[a] == D.embedding[b])
                throw RingError("decomposition embedding not injective");
            for (std::size_t f = 0; f < D.factors.size(); ++f) {
                const FiniteRing& F = D.factors[f];
                if (F.addi(D.embedding[a][f], D.embedding[b][f]) !=
                    D.embedding[R.addi(a, b)][f])
                    throw RingError("decomposition embedding breaks addition");
                if (F.muli(D.embedding[a][f], D.embedding[b][f]) !=
                    D.embedding[R.muli(a, b)][f])
                    throw RingError("decomposition embedding breaks multiplication");
            }
        }
    return D;
}

} // namespace annigraph

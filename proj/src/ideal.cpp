#include "annigraph/ideal.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

namespace annigraph {
namespace {

// Extends an additive subgroup (given as mask + member list) by one element.
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

DynBitset additive_closure(const FiniteRing& R, const std::vector<uint32_t>& gens) {
    DynBitset mask(R.order);
    mask.set(R.zero);
    std::vector<uint32_t> members{R.zero};
    for (uint32_t g : gens) subgroup_extend(R, mask, members, g);
    return mask;
}

bool ideal_order_less(const Ideal& a, const Ideal& b) {
    std::size_t ca = a.mask.count(), cb = b.mask.count();
    if (ca != cb) return ca < cb;
    return a.mask.lex_less(b.mask);
}

bool is_prime_power_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t p = 2; uint64_t(p) * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        return n == 1;
    }
    return true;
}

uint32_t exact_log(std::size_t value, uint32_t base) {
    uint32_t e = 0;
    std::size_t v = 1;
    while (v < value) { v *= base; ++e; }
    if (v != value) throw RingError("cardinality ratio is not a power of q");
    return e;
}

} // namespace

int IdealLattice::index_of(const DynBitset& mask) const {
    for (std::size_t i = 0; i < ideals.size(); ++i)
        if (ideals[i].mask == mask) return int(i);
    return -1;
}

Ideal principal_ideal(const FiniteRing& R, uint32_t a) {
    if (a >= R.order) throw RingError("element index out of range");
    Ideal I;
    I.mask = DynBitset(R.order);
    for (uint32_t r = 0; r < R.order; ++r) I.mask.set(R.muli(r, a));
    I.principal_gen = int(a);
    return I;
}

IdealLattice all_ideals(const FiniteRing& R, const LatticeConfig& cfg) {
    IdealLattice L;
    L.ring = &R;

    std::vector<DynBitset> principal_of(R.order);
    for (uint32_t a = 0; a < R.order; ++a)
        principal_of[a] = principal_ideal(R, a).mask;

    std::unordered_set<DynBitset, DynBitsetHash> seen;
    std::vector<Ideal> work;
    for (uint32_t a = 0; a < R.order; ++a) {
        if (seen.insert(principal_of[a]).second) {
            Ideal I;
            I.mask = principal_of[a];
            work.push_back(std::move(I));
            if (work.size() > cfg.max_ideals)
                throw RingError("ideal lattice size limit exceeded");
        }
    }
    std::vector<DynBitset> gens;  // distinct principal masks (work reallocates)
    for (const Ideal& I : work) gens.push_back(I.mask);

    // Every ideal is a finite sum of principal ideals, so closing under
    // "add one principal ideal" reaches the whole lattice (BFS).
    for (std::size_t i = 0; i < work.size(); ++i)
        for (const DynBitset& P : gens) {
            if (P.subset_of(work[i].mask)) continue;
            DynBitset sum = work[i].mask;
            std::vector<uint32_t> members = sum.to_indices();
            for (uint32_t g : P.to_indices())
                subgroup_extend(R, sum, members, g);
            if (seen.insert(sum).second) {
                Ideal I;
                I.mask = std::move(sum);
                work.push_back(std::move(I));
                if (work.size() > cfg.max_ideals)
                    throw RingError("ideal lattice size limit exceeded");
            }
        }

    std::sort(work.begin(), work.end(), ideal_order_less);

    // record a principal generator where one exists (smallest element index)
    for (Ideal& I : work) {
        I.principal_gen = -1;
        for (uint32_t a : I.mask.to_indices()) {
            if (principal_of[a] == I.mask) {
                I.principal_gen = int(a);
                break;
            }
        }
    }

    L.ideals = std::move(work);
    L.contains.assign(L.count(), std::vector<bool>(L.count(), false));
    for (std::size_t i = 0; i < L.count(); ++i)
        for (std::size_t j = 0; j < L.count(); ++j)
            L.contains[i][j] = L.ideals[i].mask.subset_of(L.ideals[j].mask);

    for (std::size_t i = 0; i < L.count(); ++i) {
        if (L.ideals[i].size() == 1) L.zero_idx = int(i);
        if (L.ideals[i].size() == R.order) L.full_idx = int(i);
    }
    if (L.zero_idx < 0 || L.full_idx < 0)
        throw RingError("lattice missing (0) or R (internal)");
    return L;
}

Ideal annihilator(const FiniteRing& R, const Ideal& I) {
    Ideal A;
    A.mask = DynBitset(R.order);
    std::vector<uint32_t> xs = I.mask.to_indices();
    for (uint32_t a = 0; a < R.order; ++a) {
        bool kills = true;
        for (uint32_t x : xs)
            if (R.muli(a, x) != R.zero) { kills = false; break; }
        if (kills) A.mask.set(a);
    }
    return A;
}

Ideal ideal_product(const FiniteRing& R, const Ideal& I, const Ideal& J) {
    std::vector<uint32_t> xs = I.mask.to_indices();
    std::vector<uint32_t> ys = J.mask.to_indices();
    DynBitset prods(R.order);
    for (uint32_t x : xs)
        for (uint32_t y : ys) prods.set(R.muli(x, y));
    Ideal P;
    P.mask = additive_closure(R, prods.to_indices());
    return P;
}

Ideal ideal_power(const FiniteRing& R, const Ideal& I, uint32_t k) {
    Ideal acc;
    acc.mask = DynBitset(R.order);
    for (uint32_t a = 0; a < R.order; ++a) acc.mask.set(a);  // I^0 = R
    for (uint32_t i = 0; i < k; ++i) acc = ideal_product(R, acc, I);
    return acc;
}

std::vector<int> ideals_contained_in(const IdealLattice& L, int j) {
    std::vector<int> out;
    for (std::size_t i = 0; i < L.count(); ++i)
        if (L.contains[i][std::size_t(j)]) out.push_back(int(i));
    return out;
}

std::vector<int> maximal_ideals(const IdealLattice& L) {
    std::vector<int> out;
    for (std::size_t i = 0; i < L.count(); ++i) {
        if (int(i) == L.full_idx) continue;
        bool maximal = true;
        // scan large ideals first: strict supersets live near the end of the
        // cardinality-sorted list
        for (std::size_t j = L.count(); j-- > 0;) {
            if (j == i || int(j) == L.full_idx) continue;
            if (L.ideals[j].size() <= L.ideals[i].size()) break;
            if (L.contains[i][j] && !L.contains[j][i]) { maximal = false; break; }
        }
        if (maximal) out.push_back(int(i));
    }
    return out;
}

Ideal jacobson_radical(const IdealLattice& L) {
    std::vector<int> maxs = maximal_ideals(L);
    Ideal J;
    J.mask = DynBitset(L.ring->order);
    for (uint32_t a = 0; a < L.ring->order; ++a) J.mask.set(a);
    for (int m : maxs) J.mask &= L.ideals[std::size_t(m)].mask;
    J.principal_gen = -1;
    int idx = L.index_of(J.mask);
    if (idx >= 0) J.principal_gen = L.ideals[std::size_t(idx)].principal_gen;
    return J;
}

LocalStructure local_structure(const FiniteRing& R, const IdealLattice& L) {
    LocalStructure S;
    std::vector<int> maxs = maximal_ideals(L);
    S.maximal_count = int(maxs.size());
    if (maxs.size() != 1) return S;
    S.is_local = true;
    S.m_idx = maxs[0];
    const Ideal& m = L.ideals[std::size_t(S.m_idx)];
    S.q = uint32_t(R.order / m.size());
    if (!is_prime_power_u32(S.q))
        throw RingError("residue field size is not a prime power (internal)");
    S.is_field = S.m_idx == L.zero_idx;

    // power chain m^0 > m^1 > ... > m^(t+1) = (0)
    Ideal cur = ideal_power(R, m, 0);
    S.powers.push_back(cur);
    uint32_t i = 0;
    while (cur.size() > 1) {
        cur = ideal_product(R, cur, m);
        S.powers.push_back(cur);
        ++i;
        if (i > R.order)
            throw RingError("maximal ideal is not nilpotent (internal)");
    }
    // fields: chain is m^0 = R, m^1 = (0); t = 0
    S.t = i > 0 ? i - 1 : 0;
    if (S.is_field) {
        S.t = 0;
        S.socle.mask = DynBitset(R.order);
        S.socle.mask.set(R.zero);  // convention for fields
        S.gorenstein = true;       // convention for fields
    } else {
        S.socle = annihilator(R, m);
        S.gorenstein = S.socle.size() == S.q;
    }

    for (uint32_t j = 0; j + 1 < S.powers.size(); ++j)
        S.vdim_steps.push_back(
            exact_log(S.powers[j].size() / S.powers[j + 1].size(), S.q));
    if (S.is_field) S.vdim_steps = {1};

    // special principal: the lattice is exactly the power chain
    S.special_principal = true;
    for (const Ideal& I : L.ideals) {
        bool in_chain = false;
        for (const Ideal& P : S.powers)
            if (P.mask == I.mask) { in_chain = true; break; }
        if (!in_chain) { S.special_principal = false; break; }
    }
    return S;
}

bool check_special_principal_chain(const LocalStructure& S, const IdealLattice& L) {
    if (!S.is_local) return false;
    uint32_t vdim1 = S.vdim_steps.size() > 1 ? S.vdim_steps[1] : 0;
    if (!S.is_field && vdim1 > 1) return false;
    // lattice must be exactly {m^0, ..., m^(t+1)}; also asserts that every
    // ideal inside m^n is a power m^i with n <= i <= t+1
    if (L.count() != S.powers.size()) return false;
    for (std::size_t n = 0; n < S.powers.size(); ++n) {
        int idx = L.index_of(S.powers[n].mask);
        if (idx < 0) return false;
        std::vector<int> inside = ideals_contained_in(L, idx);
        if (inside.size() != S.powers.size() - n) return false;
    }
    return S.special_principal;
}

InequalityReport lemma_power_inequalities(const LocalStructure& S, const IdealLattice& L) {
    InequalityReport rep;
    if (!S.is_local) throw RingError("inequality suite requires a local ring");
    auto bound_ok = [&](std::size_t lhs, std::size_t ideal_count) {
        // lhs <= q^ideal_count, computed without overflow
        long double v = 1.0L;
        for (std::size_t i = 0; i < ideal_count; ++i) {
            v *= S.q;
            if (v >= (long double)lhs) return true;
        }
        return v >= (long double)lhs;
    };
    for (uint32_t i = 1; i <= S.t; ++i) {
        int idx = L.index_of(S.powers[i].mask);
        std::size_t cnt = ideals_contained_in(L, idx).size();
        bool ok = bound_ok(S.powers[i].size(), cnt);
        rep.lines.push_back({i, S.powers[i].size(), cnt, ok});
        if (!ok && rep.ok) { rep.ok = false; rep.violating_index = int(i); }
    }
    std::size_t cnt_r = L.count();
    bool ok_r = bound_ok(L.ring->order, cnt_r);
    rep.lines.push_back({0, L.ring->order, cnt_r, ok_r});
    if (!ok_r && rep.ok) { rep.ok = false; rep.violating_index = 0; }
    return rep;
}

std::string ideal_label(const FiniteRing& R, const IdealLattice& L, int idx) {
    const Ideal& I = L.ideals[std::size_t(idx)];
    if (idx == L.zero_idx) return "(0)";
    if (idx == L.full_idx) return "R";
    if (I.principal_gen >= 0)
        return "(" + R.names[std::size_t(I.principal_gen)] + ")";
    std::string out = "{";
    bool first = true;
    for (uint32_t a : I.mask.to_indices()) {
        if (!first) out += ",";
        first = false;
        out += R.names[a];
    }
    return out + "}";
}

std::string lattice_to_json(const FiniteRing& R, const IdealLattice& L) {
    nlohmann::json doc;
    doc["schema"] = 1;
    doc["ring"] = R.spec_text;
    nlohmann::json ideals = nlohmann::json::array();
    for (std::size_t i = 0; i < L.count(); ++i) {
        nlohmann::json rec;
        rec["id"] = i;
        rec["mask"] = L.ideals[i].mask.to_indices();
        if (L.ideals[i].principal_gen >= 0)
            rec["principal"] = L.ideals[i].principal_gen;
        else
            rec["principal"] = nullptr;
        ideals.push_back(std::move(rec));
    }
    doc["ideals"] = std::move(ideals);
    nlohmann::json cont = nlohmann::json::array();
    for (std::size_t i = 0; i < L.count(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < L.count(); ++j) row.push_back(bool(L.contains[i][j]));
        cont.push_back(std::move(row));
    }
    doc["containment"] = std::move(cont);
    return doc.dump(2);
}

} // namespace annigraph

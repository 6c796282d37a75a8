#pragma once

#include <optional>
#include <string>
#include <vector>

#include "annigraph/bitset.hpp"
#include "annigraph/ring.hpp"

namespace annigraph {

struct Ideal {
    DynBitset mask;          // element indices, contains zero
    int principal_gen = -1;  // a generator element when principal, else -1

    std::size_t size() const { return mask.count(); }
    bool operator==(const Ideal& o) const { return mask == o.mask; }
};

struct IdealLattice {
    const FiniteRing* ring = nullptr;
    // deduplicated, ordered by cardinality then lexicographic mask;
    // includes (0) and R exactly once
    std::vector<Ideal> ideals;
    // contains[i][j] = true iff ideals[i] is a subset of ideals[j]
    std::vector<std::vector<bool>> contains;
    int zero_idx = -1;
    int full_idx = -1;

    std::size_t count() const { return ideals.size(); }
    int index_of(const DynBitset& mask) const;
};

struct LatticeConfig {
    std::size_t max_ideals = std::size_t(1) << 20;
};

/// Smallest ideal containing a: the set of multiples {r*a : r in R}
/// (already closed under addition for a commutative unital ring).
Ideal principal_ideal(const FiniteRing& R, uint32_t a);

/// All ideals: every principal ideal, closed under pairwise ideal sum to a
/// fixed point. Throws RingError when the lattice-size limit is exceeded.
IdealLattice all_ideals(const FiniteRing& R, const LatticeConfig& cfg = {});

/// { a : a*x = 0 for all x in I }
Ideal annihilator(const FiniteRing& R, const Ideal& I);

/// Ideal generated by pairwise products of I and J.
Ideal ideal_product(const FiniteRing& R, const Ideal& I, const Ideal& J);

/// I^0 = R, I^k = I * I^(k-1).
Ideal ideal_power(const FiniteRing& R, const Ideal& I, uint32_t k);

/// Lattice members contained in J (including (0) and J itself), as indices.
std::vector<int> ideals_contained_in(const IdealLattice& L, int j);

std::vector<int> maximal_ideals(const IdealLattice& L);
Ideal jacobson_radical(const IdealLattice& L);

struct LocalStructure {
    bool is_local = false;
    int maximal_count = 0;
    bool is_field = false;
    int m_idx = -1;              // lattice index of the maximal ideal
    uint32_t q = 0;              // residue field size |R/m|
    uint32_t t = 0;              // nilpotency index: m^t != (0), m^(t+1) = (0)
    std::vector<Ideal> powers;   // m^0 .. m^(t+1)
    Ideal socle;                 // Ann(m); (0) for fields by convention
    std::vector<uint32_t> vdim_steps;  // v.dim m^i/m^(i+1), i = 0..t (step 0 is 1)
    bool gorenstein = false;     // |socle| = q; true for fields by convention
    bool special_principal = false;
};

/// Computes the local invariants or reports not-local via maximal_count.
LocalStructure local_structure(const FiniteRing& R, const IdealLattice& L);

/// Lemma-style chain predicate: v.dim m/m^2 <= 1 and the lattice is exactly
/// the power chain {m^0, ..., m^(t+1)}.
bool check_special_principal_chain(const LocalStructure& S, const IdealLattice& L);

struct InequalityReport {
    bool ok = true;
    int violating_index = -1;  // power index i when a bound fails
    struct Line {
        uint32_t i;              // 0 means the |R| <= q^|I(R)| case
        std::size_t lhs_size;    // |m^i| or |R|
        std::size_t ideal_count; // |I(m^i)| or |I(R)|
        bool holds;
    };
    std::vector<Line> lines;
};

/// |m^i| <= q^|I(m^i)| for 1 <= i <= t, and |R| <= q^|I(R)|.
InequalityReport lemma_power_inequalities(const LocalStructure& S, const IdealLattice& L);

/// Minimal generator label for display: "(g)" for principal ideals, "(0)",
/// "R", or a brace list of element names.
std::string ideal_label(const FiniteRing& R, const IdealLattice& L, int idx);

std::string lattice_to_json(const FiniteRing& R, const IdealLattice& L);

} // namespace annigraph

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "annigraph/ideal.hpp"
#include "annigraph/ring.hpp"

#include <json.hpp>

using namespace annigraph;

namespace {

// Independent oracle: enumerate every subset of a small ring and keep those
// closed under addition, negation (implied by finiteness + addition) and
// multiplication by arbitrary ring elements.
std::set<uint64_t> brute_force_ideals(const FiniteRing& R) {
    REQUIRE(R.order <= 16);
    std::set<uint64_t> out;
    for (uint64_t s = 0; s < (uint64_t(1) << R.order); ++s) {
        if (!((s >> R.zero) & 1)) continue;
        bool ok = true;
        for (uint32_t a = 0; a < R.order && ok; ++a) {
            if (!((s >> a) & 1)) continue;
            for (uint32_t b = 0; b < R.order && ok; ++b) {
                if (((s >> b) & 1) && !((s >> R.addi(a, b)) & 1)) ok = false;
                if (!((s >> R.muli(a, b)) & 1)) ok = false;
            }
        }
        if (ok) out.insert(s);
    }
    return out;
}

uint64_t mask_bits(const DynBitset& m) {
    uint64_t s = 0;
    for (uint32_t i : m.to_indices()) s |= uint64_t(1) << i;
    return s;
}

int count_divisors(uint32_t n) {
    int c = 0;
    for (uint32_t d = 1; d <= n; ++d)
        if (n % d == 0) ++c;
    return c;
}

} // namespace

TEST_CASE("ideal count of Z_n equals the divisor count of n") {
    for (uint32_t n : {2u, 6u, 12u, 16u, 30u, 36u, 60u}) {
        FiniteRing R = realize(parse_ring_spec("Z" + std::to_string(n)));
        IdealLattice L = all_ideals(R);
        CHECK(int(L.count()) == count_divisors(n));
        // every ideal of Z_n is principal
        for (const Ideal& I : L.ideals) CHECK(I.principal_gen >= 0);
    }
}

TEST_CASE("lattice enumeration matches subset brute force on small rings") {
    for (const char* spec :
         {"Z12", "Z16", "GF(16)", "GF(2)[x,y]/(x^2,x*y,y^2)", "Z4[x]/(2*x,x^2)",
          "product(Z2,Z2,Z2)", "GF(2)[x1,x2]/(x1^3,x1*x2,x2^2=x1^2)"}) {
        FiniteRing R = realize(parse_ring_spec(spec));
        IdealLattice L = all_ideals(R);
        std::set<uint64_t> oracle = brute_force_ideals(R);
        std::set<uint64_t> got;
        for (const Ideal& I : L.ideals) got.insert(mask_bits(I.mask));
        CHECK(got == oracle);
    }
}

TEST_CASE("lattice bookkeeping: order, containment, principal generators") {
    FiniteRing R = realize(parse_ring_spec("GF(2)[x,y]/(x^2,x*y,y^2)"));
    IdealLattice L = all_ideals(R);
    REQUIRE(L.zero_idx >= 0);
    REQUIRE(L.full_idx >= 0);
    CHECK(L.ideals[L.zero_idx].size() == 1);
    CHECK(L.ideals[L.full_idx].size() == R.order);
    for (std::size_t i = 0; i + 1 < L.count(); ++i)
        CHECK(L.ideals[i].size() <= L.ideals[i + 1].size());
    for (std::size_t i = 0; i < L.count(); ++i) {
        for (std::size_t j = 0; j < L.count(); ++j)
            CHECK(L.contains[i][j] == L.ideals[i].mask.subset_of(L.ideals[j].mask));
        CHECK(L.index_of(L.ideals[i].mask) == int(i));
        if (L.ideals[i].principal_gen >= 0)
            CHECK(principal_ideal(R, uint32_t(L.ideals[i].principal_gen)).mask ==
                  L.ideals[i].mask);
    }
}

TEST_CASE("annihilator matches its definition elementwise") {
    for (const char* spec : {"Z12", "GF(2)[x1,x2]/(x1^3,x1*x2,x2^2=x1^2)"}) {
        FiniteRing R = realize(parse_ring_spec(spec));
        IdealLattice L = all_ideals(R);
        for (const Ideal& I : L.ideals) {
            Ideal A = annihilator(R, I);
            for (uint32_t a = 0; a < R.order; ++a) {
                bool kills = true;
                for (uint32_t x : I.mask.to_indices())
                    kills = kills && R.muli(a, x) == R.zero;
                CHECK(A.mask.test(a) == kills);
            }
        }
    }
}

TEST_CASE("ideal products in Z_n follow the gcd rule") {
    for (uint32_t n : {12u, 36u}) {
        FiniteRing R = realize(parse_ring_spec("Z" + std::to_string(n)));
        for (uint32_t d = 1; d <= n; ++d) {
            if (n % d) continue;
            for (uint32_t e = 1; e <= n; ++e) {
                if (n % e) continue;
                Ideal P = ideal_product(R, principal_ideal(R, d % n),
                                        principal_ideal(R, e % n));
                // (d)(e) = (de mod n) = (gcd(de, n))
                CHECK(P.mask == principal_ideal(R, (d * e) % n).mask);
            }
        }
    }
}

TEST_CASE("powers of the maximal ideal of Z8 form the chain (2),(4),(0)") {
    FiniteRing R = realize(parse_ring_spec("Z8"));
    Ideal m = principal_ideal(R, 2);
    CHECK(ideal_power(R, m, 0).size() == 8);  // m^0 = R
    CHECK(ideal_power(R, m, 1).size() == 4);
    CHECK(ideal_power(R, m, 2).size() == 2);
    CHECK(ideal_power(R, m, 3).size() == 1);
    CHECK(ideal_power(R, m, 2).mask == principal_ideal(R, 4).mask);
}

TEST_CASE("maximal ideals and Jacobson radical of Z12") {
    FiniteRing R = realize(parse_ring_spec("Z12"));
    IdealLattice L = all_ideals(R);
    std::vector<int> mx = maximal_ideals(L);
    std::multiset<std::size_t> sizes;
    for (int i : mx) sizes.insert(L.ideals[i].size());
    CHECK(sizes == std::multiset<std::size_t>{4, 6});  // (3) and (2)
    CHECK(jacobson_radical(L).mask == principal_ideal(R, 6).mask);
}

TEST_CASE("ideals contained in (2) inside Z12") {
    FiniteRing R = realize(parse_ring_spec("Z12"));
    IdealLattice L = all_ideals(R);
    int j = L.index_of(principal_ideal(R, 2).mask);
    REQUIRE(j >= 0);
    std::vector<int> inside = ideals_contained_in(L, j);
    std::multiset<std::size_t> sizes;
    for (int i : inside) sizes.insert(L.ideals[i].size());
    CHECK(sizes == std::multiset<std::size_t>{1, 2, 3, 6});  // (0),(6),(4),(2)
}

TEST_CASE("local structure of Z8: principal chain, Gorenstein") {
    FiniteRing R = realize(parse_ring_spec("Z8"));
    IdealLattice L = all_ideals(R);
    LocalStructure S = local_structure(R, L);
    REQUIRE(S.is_local);
    CHECK_FALSE(S.is_field);
    CHECK(S.q == 2);
    CHECK(S.t == 2);
    CHECK(S.socle.mask == principal_ideal(R, 4).mask);
    CHECK(S.gorenstein);
    CHECK(S.special_principal);
    CHECK(S.vdim_steps == std::vector<uint32_t>{1, 1, 1});
    CHECK(check_special_principal_chain(S, L));
}

TEST_CASE("local structure with a fat socle is not Gorenstein") {
    FiniteRing R = realize(parse_ring_spec("GF(2)[x,y]/(x^2,x*y,y^2)"));
    IdealLattice L = all_ideals(R);
    LocalStructure S = local_structure(R, L);
    REQUIRE(S.is_local);
    CHECK(S.q == 2);
    CHECK(S.t == 1);
    CHECK(S.socle.size() == 4);  // socle = m, |socle| != q
    CHECK_FALSE(S.gorenstein);
    CHECK(S.vdim_steps == std::vector<uint32_t>{1, 2});
    CHECK_FALSE(check_special_principal_chain(S, L));
}

TEST_CASE("Gorenstein family member of embedding dimension 3") {
    FiniteRing R = realize(parse_ring_spec(
        "GF(2)[x1,x2,x3]/(x1^3,x1*x2,x1*x3,x2*x3,x2^2=x1^2,x3^2=x1^2)"));
    REQUIRE(R.order == 32);
    IdealLattice L = all_ideals(R);
    LocalStructure S = local_structure(R, L);
    REQUIRE(S.is_local);
    CHECK(S.t == 2);
    CHECK(S.gorenstein);
    CHECK(S.vdim_steps == std::vector<uint32_t>{1, 3, 1});
}

TEST_CASE("chain predicate holds exactly for power-chain lattices") {
    for (const char* spec : {"Z81", "GF(2)[x]/(x^4)"}) {
        FiniteRing R = realize(parse_ring_spec(spec));
        IdealLattice L = all_ideals(R);
        LocalStructure S = local_structure(R, L);
        REQUIRE(S.is_local);
        CHECK(check_special_principal_chain(S, L));
        CHECK(L.count() == S.t + 2);
    }
    FiniteRing R = realize(parse_ring_spec("GF(2)[x,y]/(x^2,y^2)"));
    IdealLattice L = all_ideals(R);
    LocalStructure S = local_structure(R, L);
    REQUIRE(S.is_local);
    CHECK_FALSE(check_special_principal_chain(S, L));
}

TEST_CASE("power-size inequalities hold on a local ring and report lines") {
    FiniteRing R = realize(parse_ring_spec("Z16"));
    IdealLattice L = all_ideals(R);
    LocalStructure S = local_structure(R, L);
    InequalityReport rep = lemma_power_inequalities(S, L);
    CHECK(rep.ok);
    CHECK(rep.lines.size() == S.t + 1);  // i = 1..t plus the whole-ring line
    for (const auto& line : rep.lines) CHECK(line.holds);
}

TEST_CASE("lattice size limit is enforced") {
    FiniteRing R = realize(parse_ring_spec("Z12"));
    LatticeConfig cfg;
    cfg.max_ideals = 3;
    CHECK_THROWS_AS(all_ideals(R, cfg), RingError);
}

TEST_CASE("ideal labels and lattice JSON") {
    FiniteRing R = realize(parse_ring_spec("Z12"));
    IdealLattice L = all_ideals(R);
    CHECK(ideal_label(R, L, L.zero_idx) == "(0)");
    CHECK(ideal_label(R, L, L.full_idx) == "R");
    int j = L.index_of(principal_ideal(R, 6).mask);
    CHECK(ideal_label(R, L, j) == "(6)");
    auto doc = nlohmann::json::parse(lattice_to_json(R, L));
    CHECK(doc.at("ideals").size() == L.count());
    CHECK(doc.at("containment").size() == L.count());
    CHECK(doc.at("ring").get<std::string>() == "Z12");
}

#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <set>

#include "annigraph/ring.hpp"
#include "annigraph/verify.hpp"

#include <json.hpp>

using namespace annigraph;
using namespace std::chrono_literals;

namespace {

bool contains_spec(const std::vector<CatalogEntry>& cat, const std::string& spec) {
    return std::any_of(cat.begin(), cat.end(),
                       [&](const CatalogEntry& e) { return e.spec == spec; });
}

const SuiteItem* item_for(const VerifyReport& r, const std::string& ring) {
    for (const SuiteItem& it : r.items)
        if (it.ring == ring) return &it;
    return nullptr;
}

} // namespace

TEST_CASE("catalog contents and tags up to order 16") {
    auto cat = builtin_catalog(16);
    CHECK(contains_spec(cat, "Z16"));
    CHECK(contains_spec(cat, "GF(2^4)"));
    CHECK(contains_spec(cat, "GF(2)[x,y]/(x^2,y^2)"));
    CHECK(contains_spec(cat, "GF(2)[x,y]/(x^2,x*y,y^2)"));
    CHECK(contains_spec(cat, "Z4[x]/(2*x,x^2)"));
    CHECK(contains_spec(cat, "product(Z2,Z2,Z2,Z2)"));
    CHECK_FALSE(contains_spec(cat, "Z17"));
    std::set<std::string> specs;
    for (const auto& e : cat) {
        CHECK(e.order >= 2);
        CHECK(e.order <= 16);
        CHECK(specs.insert(e.spec).second);  // no duplicates
        // tags are consistent with the realized ring
        FiniteRing R = realize(parse_ring_spec(e.spec));
        CHECK(R.order == e.order);
        if (e.has_tag("product")) CHECK(local_decomposition(R).factors.size() > 1);
        if (e.has_tag("local")) CHECK(local_decomposition(R).factors.size() == 1);
        if (e.has_tag("field")) {
            bool zd = false;
            for (uint32_t a = 0; a < R.order; ++a) zd = zd || is_zero_divisor(R, a);
            CHECK_FALSE(zd);
        }
    }
}

TEST_CASE("catalog is deterministic and monotone in the order cap") {
    auto a = builtin_catalog(32);
    auto b = builtin_catalog(32);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].spec == b[i].spec);
        CHECK(a[i].tags == b[i].tags);
    }
    auto small = builtin_catalog(8);
    for (const auto& e : small) CHECK(contains_spec(a, e.spec));
}

TEST_CASE("catalog up to 512 carries the high-dimension Gorenstein member") {
    auto cat = builtin_catalog(512);
    bool found = false;
    for (const auto& e : cat)
        found = found || (e.order == 512 && e.has_tag("lemma28-family"));
    CHECK(found);
}

TEST_CASE("vertex-set suite passes on every catalog ring, no skips") {
    auto cat = builtin_catalog(64);
    VerifyReport r = run_suite("lemma21", cat, 1000ms);
    CHECK(r.ok());
    CHECK(r.failed == 0);
    CHECK(r.skipped == 0);
    CHECK(r.passed == int(cat.size()));
}

TEST_CASE("chain suite checks the edge rule on chain rings") {
    auto cat = builtin_catalog(64);
    VerifyReport r = run_suite("lemma23", cat, 1000ms);
    CHECK(r.ok());
    const SuiteItem* z16 = item_for(r, "Z16");
    REQUIRE(z16);
    CHECK(z16->status == "pass");
    const SuiteItem* sq = item_for(r, "GF(2)[x,y]/(x^2,y^2)");
    REQUIRE(sq);
    CHECK(sq->status == "skip");  // v.dim m/m^2 = 2
}

TEST_CASE("witness suite skips rings outside its hypotheses") {
    auto cat = builtin_catalog(64);
    VerifyReport r = run_suite("lemma28", cat, 1000ms);
    CHECK(r.ok());
    CHECK(r.passed == 0);  // no catalog ring of order <= 64 has k > 6
    CHECK(r.skipped > 0);
}

TEST_CASE("power-size inequality suite passes on all locals up to 64") {
    auto cat = builtin_catalog(64);
    VerifyReport r = run_suite("lemma29", cat, 1000ms);
    CHECK(r.ok());
    CHECK(r.passed > 0);
}

TEST_CASE("maximal-ideal-vertex suite passes on Gorenstein locals") {
    auto cat = builtin_catalog(64);
    VerifyReport r = run_suite("prop33", cat, 1000ms);
    CHECK(r.ok());
    const SuiteItem* z8 = item_for(r, "Z8");
    REQUIRE(z8);
    CHECK(z8->status == "pass");
}

TEST_CASE("square-zero suite proves completeness of the whole AG") {
    auto cat = builtin_catalog(64);
    VerifyReport r = run_suite("square-zero-complete", cat, 1000ms);
    CHECK(r.ok());
    const SuiteItem* it = item_for(r, "GF(2)[x,y]/(x^2,x*y,y^2)");
    REQUIRE(it);
    CHECK(it->status == "pass");
    CHECK(it->detail == "AG = K_4");
}

TEST_CASE("toroidal flagship suite certifies genus 1") {
    VerifyReport r = run_suite("toroidal-z2-4", builtin_catalog(16), 300000ms);
    CHECK(r.ok());
    CHECK(r.passed == 2);  // F^4 over GF(2) and GF(3)
}

TEST_CASE("combined suite aggregates and labels sub-suite items") {
    VerifyReport r = run_suite("all", builtin_catalog(16), 60000ms);
    CHECK(r.ok());
    CHECK(r.suite == "all");
    bool labeled = false;
    for (const auto& it : r.items)
        labeled = labeled || it.detail.rfind("[lemma29]", 0) == 0;
    CHECK(labeled);
}

TEST_CASE("unknown suite ids are rejected") {
    CHECK_THROWS_AS(run_suite("lemma99", builtin_catalog(8), 1000ms), RingError);
}

TEST_CASE("genus-0 enumeration over tiny rings resolves everything") {
    EnumerationReport rep = enumerate_by_genus(0, 2, 8, 60000ms);
    CHECK(rep.unresolved.empty());
    REQUIRE_FALSE(rep.found.empty());
    std::set<std::string> names;
    for (const auto& e : rep.found) {
        names.insert(e.ring);
        CHECK(e.genus.exact());
        CHECK(e.genus.lower == 0);
    }
    CHECK(names.count("Z4"));
    CHECK(names.count("product(Z2,Z2,Z2)"));
    CHECK_FALSE(names.count("Z9"));  // residue field size 3 > q_max
    CHECK(names.count("Z2"));        // fields qualify: the empty AG is planar
}

TEST_CASE("report serializers produce parseable JSON and readable text") {
    auto cat = builtin_catalog(16);
    VerifyReport r = run_suite("lemma21", cat, 1000ms);
    auto doc = nlohmann::json::parse(verify_report_to_json(r));
    CHECK(doc.at("suite").get<std::string>() == "lemma21");
    CHECK(doc.at("passed").get<int>() == r.passed);
    CHECK(doc.at("rings").size() == r.items.size());
    std::string text = verify_report_to_text(r);
    CHECK(text.find("lemma21") != std::string::npos);

    EnumerationReport er = enumerate_by_genus(0, 2, 4, 10000ms);
    auto edoc = nlohmann::json::parse(enumeration_report_to_json(er));
    CHECK(edoc.at("genus").get<int>() == 0);
    CHECK(edoc.at("found").size() == er.found.size());
    CHECK_FALSE(enumeration_report_to_text(er).empty());
}

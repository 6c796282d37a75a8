#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "annigraph/catalog.hpp"
#include "annigraph/genus.hpp"

namespace annigraph {

struct SuiteItem {
    std::string ring;    // spec text
    std::string status;  // "pass" | "fail" | "skip"
    std::string detail;
};

struct VerifyReport {
    std::string suite;
    std::vector<SuiteItem> items;
    int passed = 0, failed = 0, skipped = 0;
    int64_t ms = 0;

    bool ok() const { return failed == 0; }
};

/// Runs one verification suite over the catalog. Suite ids: lemma21,
/// lemma23, lemma28, lemma29, prop33, square-zero-complete, toroidal-z2-4,
/// all. Rings outside a suite's hypotheses are reported skipped with the
/// reason. Throws RingError on an unknown suite id.
VerifyReport run_suite(const std::string& name,
                       const std::vector<CatalogEntry>& catalog,
                       std::chrono::milliseconds genus_budget);

struct EnumEntry {
    std::string ring;
    GenusResult genus;
};

struct EnumerationReport {
    int g = 0;
    uint32_t q_max = 0;
    uint32_t order_max = 0;
    std::vector<EnumEntry> found;       // exact genus == g
    std::vector<EnumEntry> unresolved;  // budget exhausted before exactness
    int64_t ms = 0;
};

/// Catalog-relative enumeration: rings whose every residue field has size
/// <= q_max and whose annihilating-ideal graph has exact genus g. The
/// budget applies per ring.
EnumerationReport enumerate_by_genus(int g, uint32_t q_max, uint32_t order_max,
                                     std::chrono::milliseconds budget);

std::string verify_report_to_text(const VerifyReport& r);
std::string verify_report_to_json(const VerifyReport& r);
std::string enumeration_report_to_text(const EnumerationReport& r);
std::string enumeration_report_to_json(const EnumerationReport& r);

} // namespace annigraph

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace annigraph {

/// One built-in ring, stored as a spec string; realized lazily by the
/// suites that need it.
struct CatalogEntry {
    std::string spec;
    std::vector<std::string> tags;  // "local", "field", "product", ...
    uint32_t order = 0;

    bool has_tag(const std::string& t) const;
};

/// Deterministic ring catalog: Z_n, Galois fields, a family of presented
/// local quotients, the Gorenstein family G_k (socle = m^2, v.dim m/m^2 = k),
/// and products of catalog locals up to four factors.
std::vector<CatalogEntry> builtin_catalog(uint32_t order_max);

} // namespace annigraph

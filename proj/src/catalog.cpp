#include "annigraph/catalog.hpp"

#include <algorithm>

namespace annigraph {
namespace {

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; uint64_t(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
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

// GF(2)[x1..xk] with all cross products zero, every square equal to x1^2,
// and x1^3 = 0 (the rewrite system cannot derive x1^3 = 0 on its own, so it
// is stated explicitly). Basis 1, x1..xk, x1^2: order 2^(k+2).
std::string gorenstein_family_spec(uint32_t k) {
    std::string s = "GF(2)[";
    for (uint32_t i = 1; i <= k; ++i) {
        if (i > 1) s += ",";
        s += "x" + std::to_string(i);
    }
    s += "]/(x1^3";
    for (uint32_t i = 1; i <= k; ++i)
        for (uint32_t j = i + 1; j <= k; ++j)
            s += ",x" + std::to_string(i) + "*x" + std::to_string(j);
    for (uint32_t i = 2; i <= k; ++i)
        s += ",x" + std::to_string(i) + "^2=x1^2";
    s += ")";
    return s;
}

} // namespace

bool CatalogEntry::has_tag(const std::string& t) const {
    return std::find(tags.begin(), tags.end(), t) != tags.end();
}

std::vector<CatalogEntry> builtin_catalog(uint32_t order_max) {
    std::vector<CatalogEntry> out;
    auto add = [&](std::string spec, uint32_t order, std::vector<std::string> tags) {
        if (order < 2 || order > order_max) return;
        out.push_back({std::move(spec), std::move(tags), order});
    };

    for (uint32_t n = 2; n <= order_max; ++n) {
        std::vector<std::string> tags;
        if (is_prime_u32(n)) tags = {"local", "field"};
        else if (is_prime_power_u32(n)) tags = {"local"};
        add("Z" + std::to_string(n), n, std::move(tags));
    }

    for (uint32_t p = 2; p <= order_max; ++p) {
        if (!is_prime_u32(p)) continue;
        uint64_t q = uint64_t(p) * p;
        for (uint32_t k = 2; q <= order_max; ++k, q *= p)
            add("GF(" + std::to_string(p) + "^" + std::to_string(k) + ")",
                uint32_t(q), {"local", "field"});
    }

    for (uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
        std::string ps = std::to_string(p);
        uint64_t p2 = uint64_t(p) * p, p3 = p2 * p, p4 = p3 * p;
        if (p3 <= order_max) {
            add("GF(" + ps + ")[x,y]/(x^2,x*y,y^2)", uint32_t(p3), {"local"});
            add("Z" + std::to_string(p2) + "[x]/(" + ps + "*x,x^2)", uint32_t(p3),
                {"local"});
        }
        if (p4 <= order_max)
            add("GF(" + ps + ")[x,y]/(x^2,y^2)", uint32_t(p4), {"local"});
        uint64_t pk = p2;
        for (uint32_t k = 2; k <= 5 && pk <= order_max; ++k, pk *= p)
            add("GF(" + ps + ")[x]/(x^" + std::to_string(k) + ")", uint32_t(pk),
                {"local"});
    }

    for (uint32_t k = 2; k <= 8; ++k) {
        uint64_t order = uint64_t(1) << (k + 2);
        if (order > order_max) break;
        add(gorenstein_family_spec(k), uint32_t(order), {"local", "lemma28-family"});
    }

    // products of catalog locals, up to four factors, as nondecreasing
    // multisets over the locals listed so far
    std::vector<std::size_t> locals;
    for (std::size_t i = 0; i < out.size(); ++i)
        if (out[i].has_tag("local")) locals.push_back(i);
    std::stable_sort(locals.begin(), locals.end(), [&](std::size_t a, std::size_t b) {
        if (out[a].order != out[b].order) return out[a].order < out[b].order;
        return out[a].spec < out[b].spec;
    });

    std::vector<std::size_t> pick;
    auto emit_product = [&]() {
        std::string spec = "product(";
        uint64_t order = 1;
        for (std::size_t t = 0; t < pick.size(); ++t) {
            if (t) spec += ",";
            spec += out[locals[pick[t]]].spec;
            order *= out[locals[pick[t]]].order;
        }
        spec += ")";
        add(std::move(spec), uint32_t(order), {"product"});
    };
    // depth-first over multisets with the running order as the cutoff
    auto extend = [&](auto&& self, std::size_t min_idx, uint64_t order) -> void {
        if (pick.size() >= 2) emit_product();
        if (pick.size() == 4) return;
        for (std::size_t i = min_idx; i < locals.size(); ++i) {
            uint64_t next = order * out[locals[i]].order;
            if (next > order_max) break;  // locals sorted by order
            pick.push_back(i);
            self(self, i, next);
            pick.pop_back();
        }
    };
    extend(extend, 0, 1);
    return out;
}

} // namespace annigraph

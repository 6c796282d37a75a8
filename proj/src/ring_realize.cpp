#include "annigraph/ring.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <random>

#include <json.hpp>

namespace annigraph {
namespace {

using json = nlohmann::json;

std::string subscript_free_name(uint64_t v) { return std::to_string(v); }

FiniteRing realize_modular(uint64_t n, const RealizeConfig& cfg) {
    if (n > cfg.max_order)
        throw RingError("order " + std::to_string(n) + " exceeds configured maximum " +
                        std::to_string(cfg.max_order));
    FiniteRing R;
    R.order = uint32_t(n);
    R.add.resize(n * n);
    R.mul.resize(n * n);
    for (uint64_t a = 0; a < n; ++a)
        for (uint64_t b = 0; b < n; ++b) {
            R.add[a * n + b] = uint16_t((a + b) % n);
            R.mul[a * n + b] = uint16_t((a * b) % n);
        }
    R.zero = 0;
    R.one = 1;
    R.names.reserve(n);
    for (uint64_t a = 0; a < n; ++a) R.names.push_back(subscript_free_name(a));
    return R;
}

// ---- polynomial helpers over Z_p (coefficient vectors, low degree first) ----

using Poly = std::vector<uint32_t>;

void poly_trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mod(Poly a, const Poly& f, uint32_t p) {
    // f monic
    poly_trim(a);
    while (a.size() >= f.size()) {
        uint32_t lead = a.back();
        std::size_t shift = a.size() - f.size();
        for (std::size_t i = 0; i < f.size(); ++i) {
            uint64_t sub = uint64_t(lead) * f[i] % p;
            a[shift + i] = uint32_t((a[shift + i] + p - sub) % p);
        }
        poly_trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = uint32_t((c[i + j] + uint64_t(a[i]) * b[j]) % p);
    return poly_mod(std::move(c), f, p);
}

bool poly_divides(const Poly& d, Poly a, uint32_t p) {
    // d monic; true iff d | a
    Poly r = poly_mod(std::move(a), d, p);
    return r.empty();
}

// Deterministic choice: the lexicographically-least (by coefficient vector,
// constant term first) monic irreducible polynomial of degree k over Z_p.
// Irreducibility by trial division against all monic polynomials of degree
// 1..k/2; fine at the sizes we admit (p^k <= 65536).
Poly find_irreducible(uint32_t p, uint32_t k) {
    std::vector<Poly> divisors;
    for (uint32_t d = 1; d <= k / 2; ++d) {
        uint64_t cnt = 1;
        for (uint32_t i = 0; i < d; ++i) cnt *= p;
        for (uint64_t code = 0; code < cnt; ++code) {
            Poly g(d + 1, 0);
            uint64_t c = code;
            for (uint32_t i = 0; i < d; ++i) { g[i] = uint32_t(c % p); c /= p; }
            g[d] = 1;
            divisors.push_back(std::move(g));
        }
    }
    uint64_t cnt = 1;
    for (uint32_t i = 0; i < k; ++i) cnt *= p;
    for (uint64_t code = 0; code < cnt; ++code) {
        Poly f(k + 1, 0);
        uint64_t c = code;
        for (uint32_t i = 0; i < k; ++i) { f[i] = uint32_t(c % p); c /= p; }
        f[k] = 1;
        if (f[0] == 0) continue;  // reducible: divisible by x
        bool irred = true;
        for (const Poly& d : divisors)
            if (poly_divides(d, f, p)) { irred = false; break; }
        if (irred) return f;
    }
    throw RingError("no irreducible polynomial found (internal)");
}

std::string gf_element_name(const Poly& digits) {
    if (digits.empty()) return "0";
    std::string out;
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (digits[i] == 0) continue;
        if (!out.empty()) out += "+";
        uint32_t c = digits[i];
        if (i == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1) out += std::to_string(c) + "*";
            out += "g";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

FiniteRing realize_galois(uint32_t p, uint32_t k, const RealizeConfig& cfg) {
    uint64_t q = 1;
    for (uint32_t i = 0; i < k; ++i) {
        q *= p;
        if (q > cfg.max_order)
            throw RingError("field order exceeds configured maximum");
    }
    if (k == 1) {
        FiniteRing R = realize_modular(p, cfg);
        return R;
    }
    Poly f = find_irreducible(p, k);
    auto decode = [&](uint64_t idx) {
        Poly e;
        while (idx) { e.push_back(uint32_t(idx % p)); idx /= p; }
        return e;
    };
    auto encode = [&](const Poly& e) {
        uint64_t idx = 0;
        for (std::size_t i = e.size(); i-- > 0;) idx = idx * p + e[i];
        return idx;
    };
    FiniteRing R;
    R.order = uint32_t(q);
    R.add.resize(q * q);
    R.mul.resize(q * q);
    R.zero = 0;
    R.one = 1;
    for (uint64_t a = 0; a < q; ++a) {
        Poly pa = decode(a);
        for (uint64_t b = 0; b <= a; ++b) {
            Poly pb = decode(b);
            Poly sum(std::max(pa.size(), pb.size()), 0);
            for (std::size_t i = 0; i < sum.size(); ++i) {
                uint32_t x = i < pa.size() ? pa[i] : 0;
                uint32_t y = i < pb.size() ? pb[i] : 0;
                sum[i] = (x + y) % p;
            }
            poly_trim(sum);
            uint16_t s = uint16_t(encode(sum));
            R.add[a * q + b] = R.add[b * q + a] = s;
            uint16_t m = uint16_t(encode(poly_mulmod(pa, pb, f, p)));
            R.mul[a * q + b] = R.mul[b * q + a] = m;
        }
    }
    R.names.reserve(q);
    for (uint64_t a = 0; a < q; ++a) R.names.push_back(gf_element_name(decode(a)));
    return R;
}

// ---- quotient presentations: monomial rewriting over a Z_n or GF base ----

struct Monomial {
    std::vector<uint32_t> exp;
    bool operator<(const Monomial& o) const {
        uint32_t da = std::accumulate(exp.begin(), exp.end(), 0u);
        uint32_t db = std::accumulate(o.exp.begin(), o.exp.end(), 0u);
        if (da != db) return da < db;
        return exp < o.exp;
    }
    bool operator==(const Monomial& o) const { return exp == o.exp; }
    uint32_t degree() const { return std::accumulate(exp.begin(), exp.end(), 0u); }
};

bool monomial_divides(const std::vector<uint32_t>& d, const std::vector<uint32_t>& m) {
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] > m[i]) return false;
    return true;
}

struct QuotientShape {
    FiniteRing base;
    bool base_is_field = false;
    uint32_t base_char = 0;  // n for Z_n base
    std::vector<Monomial> monomials;       // normal-form monomials, sorted
    std::vector<uint32_t> radix;           // coefficient range per monomial
    // reduced product of basis monomials: coefficient index in base (field)
    // or integer scalar (Z_n), and target monomial index or -1 for zero
    struct ProdEntry { int target; uint32_t scalar; };
    std::vector<ProdEntry> prod;  // monomials.size()^2
    uint64_t order = 0;
};

// Reduces a term (integer scalar, exponent vector) by the pure monomial
// rewrite rules. Returns target exponents; zero signalled via scalar == 0.
struct ReducedTerm { uint64_t scalar; std::vector<uint32_t> exp; };

ReducedTerm reduce_term(std::vector<uint32_t> exp, uint64_t scalar,
                        const std::vector<Relation>& rules, uint32_t degree_bound) {
    for (;;) {
        if (scalar == 0) return {0, {}};
        uint32_t deg = std::accumulate(exp.begin(), exp.end(), 0u);
        if (deg > degree_bound)
            throw RingError("degree bound exceeded while rewriting quotient presentation");
        bool applied = false;
        for (const Relation& r : rules) {
            if (r.lhs_coeff != 1) continue;  // additive-order rule, handled separately
            if (!monomial_divides(r.lhs_exp, exp)) continue;
            if (r.rhs_zero) return {0, {}};
            for (std::size_t i = 0; i < exp.size(); ++i)
                exp[i] = exp[i] - r.lhs_exp[i] + r.rhs_exp[i];
            scalar *= r.rhs_coeff;
            applied = true;
            break;
        }
        if (!applied) return {scalar, std::move(exp)};
    }
}

QuotientShape quotient_shape(const RingSpec& spec, const RealizeConfig& cfg) {
    QuotientShape sh;
    sh.base = realize(*spec.base, cfg);
    sh.base_is_field = spec.base->kind == RingSpec::Kind::GaloisField ||
                       (spec.base->kind == RingSpec::Kind::Modular &&
                        [&] {  // prime modulus
                            uint64_t n = spec.base->modulus;
                            for (uint64_t d = 2; d * d <= n; ++d)
                                if (n % d == 0) return false;
                            return true;
                        }());
    sh.base_char = spec.base->kind == RingSpec::Kind::Modular
                       ? uint32_t(spec.base->modulus)
                       : spec.base->p;

    std::size_t nv = spec.vars.size();
    // Additive-order rules c*m -> 0 with c a unit collapse to m -> 0.
    std::vector<Relation> rules = spec.relations;
    for (Relation& r : rules) {
        if (r.lhs_coeff == 1) continue;
        if (!r.rhs_zero)
            throw RingError("coefficient relation must rewrite to 0");
        if (sh.base_is_field || std::gcd(uint64_t(r.lhs_coeff),
                                         uint64_t(sh.base.order)) == 1) {
            if (sh.base_is_field && r.lhs_coeff % sh.base_char == 0)
                continue;  // c = 0 in base: vacuous
            r.lhs_coeff = 1;  // unit coefficient: same ideal as m -> 0
        }
    }

    // Enumerate normal-form monomials by BFS on multiplication by variables.
    std::map<std::vector<uint32_t>, bool> seen;
    std::vector<std::vector<uint32_t>> frontier{std::vector<uint32_t>(nv, 0)};
    seen[frontier[0]] = true;
    while (!frontier.empty()) {
        std::vector<std::vector<uint32_t>> next;
        for (const auto& m : frontier) {
            for (std::size_t v = 0; v < nv; ++v) {
                std::vector<uint32_t> e = m;
                e[v] += 1;
                ReducedTerm t = reduce_term(std::move(e), 1, rules, cfg.degree_bound);
                if (t.scalar == 0) continue;
                if (seen.emplace(t.exp, true).second) next.push_back(t.exp);
            }
        }
        frontier = std::move(next);
        if (seen.size() > cfg.max_order)
            throw RingError("quotient presentation order exceeds configured maximum");
    }

    for (auto& [e, _] : seen) sh.monomials.push_back(Monomial{e});
    std::sort(sh.monomials.begin(), sh.monomials.end());

    // Coefficient radix per monomial (Z_n base): the smallest c with c*m = 0.
    sh.order = 1;
    std::vector<Monomial> kept;
    std::vector<uint32_t> radix;
    for (const Monomial& m : sh.monomials) {
        uint32_t d = sh.base_is_field ? sh.base.order : sh.base_char;
        if (!sh.base_is_field) {
            uint64_t g = sh.base_char;
            for (const Relation& r : rules) {
                if (r.lhs_coeff == 1) continue;
                if (monomial_divides(r.lhs_exp, m.exp))
                    g = std::gcd(g, r.lhs_coeff);
            }
            d = uint32_t(g);
        }
        if (d <= 1) continue;  // monomial is additively trivial
        kept.push_back(m);
        radix.push_back(d);
        sh.order *= d;
        if (sh.order > cfg.max_order)
            throw RingError("quotient presentation order exceeds configured maximum");
    }
    sh.monomials = std::move(kept);
    sh.radix = std::move(radix);

    // Pairwise basis products.
    std::size_t nm = sh.monomials.size();
    sh.prod.assign(nm * nm, {-1, 0});
    for (std::size_t i = 0; i < nm; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            std::vector<uint32_t> e(nv, 0);
            for (std::size_t v = 0; v < nv; ++v)
                e[v] = sh.monomials[i].exp[v] + sh.monomials[j].exp[v];
            ReducedTerm t = reduce_term(std::move(e), 1, rules, cfg.degree_bound);
            QuotientShape::ProdEntry pe{-1, 0};
            if (t.scalar != 0) {
                auto it = std::lower_bound(sh.monomials.begin(), sh.monomials.end(),
                                           Monomial{t.exp});
                if (it != sh.monomials.end() && it->exp == t.exp) {
                    pe.target = int(it - sh.monomials.begin());
                    pe.scalar = uint32_t(t.scalar);
                }
                // target monomial may have been dropped (radix 1): product is 0
            }
            sh.prod[i * nm + j] = sh.prod[j * nm + i] = pe;
        }
    return sh;
}

std::string quotient_element_name(const QuotientShape& sh, const RingSpec& spec,
                                  const std::vector<uint32_t>& coeffs) {
    std::string out;
    for (std::size_t mi = 0; mi < sh.monomials.size(); ++mi) {
        uint32_t c = coeffs[mi];
        if (c == 0) continue;
        std::string term;
        const Monomial& m = sh.monomials[mi];
        bool constant = m.degree() == 0;
        if (constant) {
            term = sh.base_is_field && sh.base.order > sh.base_char
                       ? sh.base.names[c]
                       : std::to_string(c);
        } else {
            std::string cs = sh.base_is_field && sh.base.order > sh.base_char
                                 ? sh.base.names[c]
                                 : std::to_string(c);
            if (cs != "1") term = cs + "*";
            bool first = true;
            for (std::size_t v = 0; v < m.exp.size(); ++v) {
                if (!m.exp[v]) continue;
                if (!first) term += "*";
                first = false;
                term += spec.vars[v];
                if (m.exp[v] > 1) term += "^" + std::to_string(m.exp[v]);
            }
        }
        if (!out.empty()) out += "+";
        out += term;
    }
    return out.empty() ? "0" : out;
}

FiniteRing realize_quotient(const RingSpec& spec, const RealizeConfig& cfg) {
    QuotientShape sh = quotient_shape(spec, cfg);
    std::size_t nm = sh.monomials.size();
    uint64_t n = sh.order;

    auto decode = [&](uint64_t idx, std::vector<uint32_t>& out) {
        out.assign(nm, 0);
        for (std::size_t i = 0; i < nm; ++i) {
            out[i] = uint32_t(idx % sh.radix[i]);
            idx /= sh.radix[i];
        }
    };
    auto encode = [&](const std::vector<uint32_t>& c) {
        uint64_t idx = 0;
        for (std::size_t i = nm; i-- > 0;) idx = idx * sh.radix[i] + c[i];
        return idx;
    };

    // Coefficient arithmetic: in the base ring for field bases, integer
    // arithmetic mod the per-monomial radix otherwise.
    auto cadd = [&](uint32_t a, uint32_t b, std::size_t mi) {
        if (sh.base_is_field) return uint32_t(sh.base.addi(a, b));
        return (a + b) % sh.radix[mi];
    };
    auto cmul_scalar = [&](uint32_t a, uint32_t b, uint32_t scalar, std::size_t mi) {
        if (sh.base_is_field) {
            uint32_t ab = sh.base.muli(a, b);
            uint32_t s = uint32_t(scalar % sh.base_char);
            // scalar is an integer constant; fold it in via repeated addition
            uint32_t acc = 0;
            for (uint32_t i = 0; i < s; ++i) acc = sh.base.addi(acc, ab);
            return acc;
        }
        return uint32_t(uint64_t(a) * b % sh.radix[mi] * scalar % sh.radix[mi]);
    };

    FiniteRing R;
    R.order = uint32_t(n);
    R.add.resize(n * n);
    R.mul.resize(n * n);
    std::vector<uint32_t> ca, cb, cs;
    for (uint64_t a = 0; a < n; ++a) {
        decode(a, ca);
        for (uint64_t b = 0; b <= a; ++b) {
            decode(b, cb);
            cs.assign(nm, 0);
            for (std::size_t i = 0; i < nm; ++i) cs[i] = cadd(ca[i], cb[i], i);
            uint16_t s = uint16_t(encode(cs));
            R.add[a * n + b] = R.add[b * n + a] = s;
            cs.assign(nm, 0);
            for (std::size_t i = 0; i < nm; ++i) {
                if (!ca[i]) continue;
                for (std::size_t j = 0; j < nm; ++j) {
                    if (!cb[j]) continue;
                    const auto& pe = sh.prod[i * nm + j];
                    if (pe.target < 0) continue;
                    uint32_t contrib = cmul_scalar(ca[i], cb[j], pe.scalar,
                                                   std::size_t(pe.target));
                    cs[std::size_t(pe.target)] =
                        cadd(cs[std::size_t(pe.target)], contrib, std::size_t(pe.target));
                }
            }
            uint16_t m = uint16_t(encode(cs));
            R.mul[a * n + b] = R.mul[b * n + a] = m;
        }
    }
    R.zero = 0;
    {
        std::vector<uint32_t> cone(nm, 0);
        // the constant monomial 1 is the first (degree 0) monomial
        if (nm == 0 || sh.monomials[0].degree() != 0)
            throw RingError("quotient presentation kills the identity");
        cone[0] = 1;
        R.one = uint16_t(encode(cone));
    }
    R.names.reserve(n);
    std::vector<uint32_t> cc;
    for (uint64_t a = 0; a < n; ++a) {
        decode(a, cc);
        R.names.push_back(quotient_element_name(sh, spec, cc));
    }

    // Re-check every stated relation against the realized tables. A rewrite
    // system that is not confluent can produce tables for a smaller quotient
    // in which some relation no longer holds; reject such presentations.
    auto scalar_mul = [&](uint16_t x, uint64_t c) {
        uint16_t acc = R.zero;
        while (c) {
            if (c & 1) acc = R.add[std::size_t(acc) * n + x];
            x = R.add[std::size_t(x) * n + x];
            c >>= 1;
        }
        return acc;
    };
    std::vector<uint16_t> var_elem(spec.vars.size(), R.zero);
    for (std::size_t v = 0; v < spec.vars.size(); ++v) {
        std::vector<uint32_t> e(spec.vars.size(), 0);
        e[v] = 1;
        auto it = std::lower_bound(sh.monomials.begin(), sh.monomials.end(),
                                   Monomial{e});
        if (it == sh.monomials.end() || !(it->exp == e)) continue;  // var is 0
        std::vector<uint32_t> c(nm, 0);
        c[std::size_t(it - sh.monomials.begin())] = 1;
        var_elem[v] = uint16_t(encode(c));
    }
    auto eval_term = [&](uint64_t coeff, const std::vector<uint32_t>& exp) {
        uint16_t x = R.one;
        for (std::size_t v = 0; v < exp.size(); ++v)
            for (uint32_t i = 0; i < exp[v]; ++i)
                x = R.mul[std::size_t(x) * n + var_elem[v]];
        return scalar_mul(x, coeff);
    };
    for (const Relation& r : spec.relations) {
        uint16_t lhs = eval_term(r.lhs_coeff, r.lhs_exp);
        uint16_t rhs = r.rhs_zero ? R.zero : eval_term(r.rhs_coeff, r.rhs_exp);
        if (lhs != rhs)
            throw RingError(
                "presentation relations are not confluent: a stated relation "
                "fails in the realized ring");
    }
    return R;
}

FiniteRing realize_product(const RingSpec& spec, const RealizeConfig& cfg) {
    std::vector<FiniteRing> fs;
    uint64_t n = 1;
    for (const RingSpec& f : spec.factors) {
        fs.push_back(realize(f, cfg));
        n *= fs.back().order;
        if (n > cfg.max_order)
            throw RingError("product order exceeds configured maximum");
    }
    std::size_t nf = fs.size();
    auto decode = [&](uint64_t idx, std::vector<uint32_t>& out) {
        out.assign(nf, 0);
        for (std::size_t i = 0; i < nf; ++i) {
            out[i] = uint32_t(idx % fs[i].order);
            idx /= fs[i].order;
        }
    };
    auto encode = [&](const std::vector<uint32_t>& c) {
        uint64_t idx = 0;
        for (std::size_t i = nf; i-- > 0;) idx = idx * fs[i].order + c[i];
        return idx;
    };
    FiniteRing R;
    R.order = uint32_t(n);
    R.add.resize(n * n);
    R.mul.resize(n * n);
    std::vector<uint32_t> ca, cb, cs;
    for (uint64_t a = 0; a < n; ++a) {
        decode(a, ca);
        for (uint64_t b = 0; b <= a; ++b) {
            decode(b, cb);
            cs.assign(nf, 0);
            for (std::size_t i = 0; i < nf; ++i) cs[i] = fs[i].addi(ca[i], cb[i]);
            R.add[a * n + b] = R.add[b * n + a] = uint16_t(encode(cs));
            for (std::size_t i = 0; i < nf; ++i) cs[i] = fs[i].muli(ca[i], cb[i]);
            R.mul[a * n + b] = R.mul[b * n + a] = uint16_t(encode(cs));
        }
    }
    std::vector<uint32_t> c0(nf, 0), c1(nf);
    for (std::size_t i = 0; i < nf; ++i) { c0[i] = fs[i].zero; c1[i] = fs[i].one; }
    R.zero = uint16_t(encode(c0));
    R.one = uint16_t(encode(c1));
    R.names.reserve(n);
    std::vector<uint32_t> cc;
    for (uint64_t a = 0; a < n; ++a) {
        decode(a, cc);
        std::string name = "(";
        for (std::size_t i = 0; i < nf; ++i) {
            if (i) name += ",";
            name += fs[i].names[cc[i]];
        }
        name += ")";
        R.names.push_back(std::move(name));
    }
    return R;
}

FiniteRing realize_table(const RingSpec& spec, const RealizeConfig& cfg) {
    std::ifstream in(spec.table_path);
    if (!in) throw RingError("cannot open table file: " + spec.table_path);
    json doc = json::parse(in);
    uint64_t n = doc.at("order").get<uint64_t>();
    if (n < 2 || n > cfg.max_order) throw RingError("table order out of range");
    FiniteRing R;
    R.order = uint32_t(n);
    R.add.resize(n * n);
    R.mul.resize(n * n);
    auto load = [&](const char* key, std::vector<uint16_t>& t) {
        const json& rows = doc.at(key);
        if (rows.size() != n) throw RingError("table row count mismatch");
        for (uint64_t i = 0; i < n; ++i) {
            const json& row = rows[i];
            if (row.size() != n) throw RingError("table column count mismatch");
            for (uint64_t j = 0; j < n; ++j) {
                uint64_t v = row[j].get<uint64_t>();
                if (v >= n) throw RingError("table entry out of range");
                t[i * n + j] = uint16_t(v);
            }
        }
    };
    load("add", R.add);
    load("mul", R.mul);
    if (doc.contains("names")) {
        for (const auto& s : doc["names"]) R.names.push_back(s.get<std::string>());
        if (R.names.size() != n) throw RingError("table names count mismatch");
    } else {
        for (uint64_t a = 0; a < n; ++a) R.names.push_back(std::to_string(a));
    }
    // locate identities by scan
    int zero = -1, one = -1;
    for (uint32_t z = 0; z < n && zero < 0; ++z) {
        bool ok = true;
        for (uint32_t a = 0; a < n && ok; ++a) ok = R.addi(a, z) == a;
        if (ok) zero = int(z);
    }
    if (zero < 0) throw RingError("table has no additive identity");
    for (uint32_t o = 0; o < n && one < 0; ++o) {
        bool ok = true;
        for (uint32_t a = 0; a < n && ok; ++a) ok = R.muli(a, o) == a;
        if (ok) one = int(o);
    }
    if (one < 0) throw RingError("table has no multiplicative identity");
    R.zero = uint16_t(zero);
    R.one = uint16_t(one);
    return R;
}

// ---- axiom verification ----

// Greedy small additive generating set: extend the generated subgroup until
// it covers the ring.
std::vector<uint32_t> additive_generators(const FiniteRing& R) {
    std::vector<bool> in(R.order, false);
    in[R.zero] = true;
    std::size_t covered = 1;
    std::vector<uint32_t> gens;
    std::vector<uint32_t> members{R.zero};
    for (uint32_t e = 0; e < R.order && covered < R.order; ++e) {
        if (in[e]) continue;
        gens.push_back(e);
        // close: repeatedly add e to every member until stable
        std::vector<uint32_t> frontier = members;
        while (!frontier.empty()) {
            std::vector<uint32_t> next;
            for (uint32_t m : frontier) {
                uint32_t s = R.addi(m, e);
                if (!in[s]) {
                    in[s] = true;
                    members.push_back(s);
                    next.push_back(s);
                    ++covered;
                }
            }
            frontier = std::move(next);
        }
    }
    return gens;
}

} // namespace

uint16_t FiniteRing::neg(uint32_t a) const {
    for (uint32_t b = 0; b < order; ++b)
        if (addi(a, b) == zero) return uint16_t(b);
    throw RingError("element has no additive inverse");
}

FiniteRing::VerifyMode verify_ring_axioms(const FiniteRing& R, uint32_t exhaustive_max) {
    const uint32_t n = R.order;
    if (n < 2) throw RingError("ring must have at least two elements");
    if (R.zero == R.one) throw RingError("ring must have 1 != 0");
    if (R.add.size() != std::size_t(n) * n || R.mul.size() != std::size_t(n) * n)
        throw RingError("operation table size mismatch");

    // identities
    for (uint32_t a = 0; a < n; ++a) {
        if (R.addi(a, R.zero) != a) throw RingError("0 is not an additive identity");
        if (R.muli(a, R.one) != a) throw RingError("1 is not a multiplicative identity");
    }
    // commutativity (both operations), additive inverses
    for (uint32_t a = 0; a < n; ++a) {
        bool has_inv = false;
        for (uint32_t b = 0; b < n; ++b) {
            if (R.addi(a, b) != R.addi(b, a)) throw RingError("addition not commutative");
            if (R.muli(a, b) != R.muli(b, a)) throw RingError("multiplication not commutative");
            if (R.addi(a, b) == R.zero) has_inv = true;
        }
        if (!has_inv) throw RingError("missing additive inverse");
    }

    auto check_triple = [&](uint32_t a, uint32_t b, uint32_t c) {
        if (R.addi(R.addi(a, b), c) != R.addi(a, R.addi(b, c)))
            throw RingError("addition not associative");
        if (R.muli(R.muli(a, b), c) != R.muli(a, R.muli(b, c)))
            throw RingError("multiplication not associative");
        if (R.muli(a, R.addi(b, c)) != R.addi(R.muli(a, b), R.muli(a, c)))
            throw RingError("multiplication not distributive over addition");
    };

    if (n <= exhaustive_max) {
        for (uint32_t a = 0; a < n; ++a)
            for (uint32_t b = 0; b < n; ++b)
                for (uint32_t c = 0; c < n; ++c) check_triple(a, b, c);
        return FiniteRing::VerifyMode::Exhaustive;
    }

    // Exact proof via additive generators: each O(n^3) axiom follows by
    // induction on generator length once it holds with the third operand
    // restricted to a generating set (and distributivity extends
    // multiplicative associativity the same way).
    std::vector<uint32_t> gens = additive_generators(R);
    for (uint32_t t : gens)
        for (uint32_t a = 0; a < n; ++a)
            for (uint32_t b = 0; b < n; ++b) check_triple(a, b, t);
    // distributivity also needs the middle operand against generators:
    // a*(b+c) with c arbitrary reduces along c's generator expansion, which
    // needs a*(x+t) = a*x + a*t for all x — covered above (third operand t).
    return FiniteRing::VerifyMode::GeneratorProof;
}

FiniteRing realize(const RingSpec& spec, const RealizeConfig& cfg) {
    FiniteRing R;
    switch (spec.kind) {
        case RingSpec::Kind::Modular: R = realize_modular(spec.modulus, cfg); break;
        case RingSpec::Kind::GaloisField: R = realize_galois(spec.p, spec.k, cfg); break;
        case RingSpec::Kind::Quotient: R = realize_quotient(spec, cfg); break;
        case RingSpec::Kind::Product: R = realize_product(spec, cfg); break;
        case RingSpec::Kind::Table: R = realize_table(spec, cfg); break;
    }
    R.spec_text = spec.source_text.empty() ? std::string("(anonymous)") : spec.source_text;
    R.verified_by = verify_ring_axioms(R, cfg.exhaustive_max);
    return R;
}

bool is_zero_divisor(const FiniteRing& R, uint32_t a) {
    if (a >= R.order) throw RingError("element index out of range");
    if (a == R.zero) return false;
    for (uint32_t b = 0; b < R.order; ++b)
        if (b != R.zero && R.muli(a, b) == R.zero) return true;
    return false;
}

} // namespace annigraph

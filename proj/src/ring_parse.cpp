#include "annigraph/ring.hpp"

#include <algorithm>
#include <cctype>

namespace annigraph {
namespace {

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Returns (p, k) with n = p^k and p prime, or (0, 0).
std::pair<uint32_t, uint32_t> prime_power(uint64_t n) {
    if (n < 2) return {0, 0};
    for (uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        uint32_t k = 0;
        uint64_t m = n;
        while (m % p == 0) { m /= p; ++k; }
        if (m != 1) return {0, 0};
        return {uint32_t(p), k};
    }
    return {uint32_t(n), 1};  // n prime
}

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    RingSpec parse() {
        RingSpec spec = parse_spec();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input after ring spec");
        spec.source_text = s_;
        return spec;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) { throw SpecParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(uint8_t(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) { ++pos_; return true; }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }
    bool eat_word(const char* w) {
        skip_ws();
        std::size_t len = std::char_traits<char>::length(w);
        if (s_.compare(pos_, len, w) == 0) { pos_ += len; return true; }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    uint64_t parse_uint() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(uint8_t(s_[pos_]))) fail("expected integer");
        uint64_t v = 0;
        while (pos_ < s_.size() && std::isdigit(uint8_t(s_[pos_]))) {
            v = v * 10 + uint64_t(s_[pos_] - '0');
            if (v > (uint64_t(1) << 40)) fail("integer literal too large");
            ++pos_;
        }
        return v;
    }

    std::string parse_ident() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isalpha(uint8_t(s_[pos_]))) fail("expected identifier");
        std::size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(uint8_t(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        return s_.substr(start, pos_ - start);
    }

    RingSpec parse_spec() {
        skip_ws();
        if (eat_word("product")) return parse_product();
        if (eat_word("table:@")) return parse_table();
        RingSpec base = parse_base();
        skip_ws();
        if (peek() == '[') return parse_quotient(std::move(base));
        return base;
    }

    RingSpec parse_base() {
        skip_ws();
        if (eat_word("GF")) {
            expect('(');
            uint64_t a = parse_uint();
            RingSpec spec;
            spec.kind = RingSpec::Kind::GaloisField;
            if (eat('^')) {
                uint64_t k = parse_uint();
                if (!is_prime(a)) fail("GF base must be prime");
                if (k < 1) fail("GF exponent must be >= 1");
                spec.p = uint32_t(a);
                spec.k = uint32_t(k);
            } else {
                auto [p, k] = prime_power(a);
                if (!p) fail("GF order must be a prime power");
                spec.p = p;
                spec.k = k;
            }
            expect(')');
            return spec;
        }
        if (eat_word("Z")) {
            uint64_t n = parse_uint();
            if (n < 2) fail("modulus must be >= 2");
            RingSpec spec;
            spec.kind = RingSpec::Kind::Modular;
            spec.modulus = n;
            return spec;
        }
        fail("expected ring spec (Z<n>, GF(q), product(...), table:@path, or a quotient)");
    }

    RingSpec parse_product() {
        expect('(');
        RingSpec spec;
        spec.kind = RingSpec::Kind::Product;
        spec.factors.push_back(parse_spec());
        while (eat(',')) spec.factors.push_back(parse_spec());
        expect(')');
        if (spec.factors.size() < 2) fail("product needs at least two factors");
        return spec;
    }

    RingSpec parse_table() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && !std::isspace(uint8_t(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected file path after table:@");
        RingSpec spec;
        spec.kind = RingSpec::Kind::Table;
        spec.table_path = s_.substr(start, pos_ - start);
        return spec;
    }

    RingSpec parse_quotient(RingSpec&& base) {
        if (base.kind != RingSpec::Kind::Modular &&
            base.kind != RingSpec::Kind::GaloisField)
            fail("quotient base must be Z<n> or GF(q)");
        RingSpec spec;
        spec.kind = RingSpec::Kind::Quotient;
        spec.base = std::make_shared<RingSpec>(std::move(base));
        expect('[');
        spec.vars.push_back(parse_ident());
        while (eat(',')) spec.vars.push_back(parse_ident());
        expect(']');
        for (std::size_t i = 0; i < spec.vars.size(); ++i)
            for (std::size_t j = i + 1; j < spec.vars.size(); ++j)
                if (spec.vars[i] == spec.vars[j]) fail("duplicate variable name");
        expect('/');
        expect('(');
        spec.relations.push_back(parse_relation(spec.vars));
        while (eat(',')) spec.relations.push_back(parse_relation(spec.vars));
        expect(')');
        return spec;
    }

    // term := [c '*'] monomial | c        (a bare constant only as RHS "0")
    // monomial := ident['^'int] ('*' ident['^'int])*
    struct Term {
        uint64_t coeff = 1;
        std::vector<uint32_t> exp;
        bool is_constant_zero = false;
    };

    Term parse_term(const std::vector<std::string>& vars) {
        Term t;
        t.exp.assign(vars.size(), 0);
        skip_ws();
        if (std::isdigit(uint8_t(peek()))) {
            t.coeff = parse_uint();
            if (t.coeff == 0) { t.is_constant_zero = true; return t; }
            if (!eat('*')) fail("expected '*' after coefficient");
        }
        bool any = false;
        for (;;) {
            std::string v = parse_ident();
            auto it = std::find(vars.begin(), vars.end(), v);
            if (it == vars.end()) fail("unknown variable '" + v + "'");
            uint64_t e = 1;
            if (eat('^')) e = parse_uint();
            t.exp[std::size_t(it - vars.begin())] += uint32_t(e);
            any = true;
            skip_ws();
            // '*' continues the monomial only if followed by an identifier
            std::size_t save = pos_;
            if (eat('*')) {
                skip_ws();
                if (pos_ < s_.size() && std::isalpha(uint8_t(s_[pos_]))) continue;
                pos_ = save;
            }
            break;
        }
        if (!any) fail("expected monomial");
        return t;
    }

    Relation parse_relation(const std::vector<std::string>& vars) {
        Term lhs = parse_term(vars);
        if (lhs.is_constant_zero) fail("relation left side cannot be 0");
        bool trivial = true;
        for (uint32_t e : lhs.exp) trivial = trivial && e == 0;
        if (trivial) fail("relation left side must involve a variable");
        Relation rel;
        rel.lhs_exp = lhs.exp;
        rel.lhs_coeff = lhs.coeff;
        if (eat('=')) {
            Term rhs = parse_term(vars);
            if (rhs.is_constant_zero) {
                rel.rhs_zero = true;
            } else {
                rel.rhs_zero = false;
                rel.rhs_coeff = rhs.coeff;
                rel.rhs_exp = rhs.exp;
                if (rel.lhs_coeff != 1)
                    fail("coefficient on the left side requires right side 0");
                if (rel.rhs_exp == rel.lhs_exp) fail("relation rewrites monomial to itself");
            }
        } else {
            rel.rhs_zero = true;
        }
        return rel;
    }
};

} // namespace

RingSpec parse_ring_spec(const std::string& text) {
    if (text.empty()) throw SpecParseError("empty ring spec", 0);
    return Parser(text).parse();
}

} // namespace annigraph

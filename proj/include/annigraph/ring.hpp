#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace annigraph {

class RingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parse failure; carries the byte offset into the spec string.
class SpecParseError : public RingError {
public:
    SpecParseError(const std::string& msg, std::size_t pos)
        : RingError(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
    std::size_t position;
};

/// A rewrite relation of a quotient presentation. The left side is a
/// monomial, optionally scaled by a base-ring constant; the right side is
/// zero or a constant multiple of another monomial.
struct Relation {
    std::vector<uint32_t> lhs_exp;  // exponent per variable
    uint64_t lhs_coeff = 1;         // c in "c*m -> 0"; 1 for plain monomials
    bool rhs_zero = true;
    uint64_t rhs_coeff = 1;
    std::vector<uint32_t> rhs_exp;
};

struct RingSpec {
    enum class Kind { Modular, GaloisField, Quotient, Product, Table };

    Kind kind = Kind::Modular;
    uint64_t modulus = 0;  // Modular
    uint32_t p = 0, k = 0; // GaloisField: order p^k

    std::shared_ptr<RingSpec> base;  // Quotient base (Modular or GaloisField)
    std::vector<std::string> vars;
    std::vector<Relation> relations;

    std::vector<RingSpec> factors;  // Product

    std::string table_path;  // Table

    std::string source_text;
};

RingSpec parse_ring_spec(const std::string& text);

struct RealizeConfig {
    uint32_t max_order = 65536;
    uint32_t degree_bound = 16;   // quotient rewrite-closure degree cap
    // Axiom verification: exhaustive triple scan up to exhaustive_max,
    // generator-based exact proof above (see FiniteRing::VerifyMode).
    uint32_t exhaustive_max = 64;
};

struct FiniteRing {
    enum class VerifyMode { Exhaustive, GeneratorProof };

    uint32_t order = 0;
    std::vector<uint16_t> add;  // order x order, row-major
    std::vector<uint16_t> mul;
    uint16_t zero = 0, one = 0;
    std::vector<std::string> names;
    std::string spec_text;
    VerifyMode verified_by = VerifyMode::Exhaustive;

    uint16_t addi(uint32_t a, uint32_t b) const { return add[std::size_t(a) * order + b]; }
    uint16_t muli(uint32_t a, uint32_t b) const { return mul[std::size_t(a) * order + b]; }
    uint16_t neg(uint32_t a) const;  // additive inverse
};

/// Builds the explicit ring and verifies the ring axioms. Throws RingError
/// on axiom failure (e.g. a non-confluent quotient presentation), degree
/// bound overflow, or order overflow.
FiniteRing realize(const RingSpec& spec, const RealizeConfig& cfg = {});

/// True iff a != 0 and a*b = 0 for some b != 0. Reports false for 0
/// (the zero-divisor-graph vertex convention).
bool is_zero_divisor(const FiniteRing& R, uint32_t a);

struct LocalDecomposition {
    std::vector<FiniteRing> factors;
    // embedding[a] = factor index tuple of a under a -> (a*e_1, ..., a*e_n)
    std::vector<std::vector<uint16_t>> embedding;
};

/// Splits R into local factors along its primitive idempotents and verifies
/// the coordinate map is a ring isomorphism.
LocalDecomposition local_decomposition(const FiniteRing& R);

/// Verifies every ring axiom on the given tables. Exhaustive O(n^3) triple
/// scan when order <= exhaustive_max; otherwise each O(n^3) axiom
/// (associativity, distributivity) is proven exactly from an O(n^2 * g)
/// check against a small additive generating set. Throws RingError with a
/// description of the first violated axiom.
FiniteRing::VerifyMode verify_ring_axioms(const FiniteRing& R, uint32_t exhaustive_max);

} // namespace annigraph

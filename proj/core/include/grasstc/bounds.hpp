#pragma once

#include "grasstc/grassmann_ring.hpp"
#include "grasstc/tensor_ring.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace grasstc {

// The unique s with 2^s < n <= 2^{s+1}; requires n >= 2.
unsigned s_of(unsigned n);

// ---------------------------------------------------------------------------
// Closed-form predictions.
//
// The published closed forms for heights, distinguished products, zero-divisor
// cup-lengths, and TC lower bounds. Each prediction carries its claim of
// exactness so the verification layer can compare it against the engine and
// surface disagreements instead of assuming them away.
// ---------------------------------------------------------------------------

struct ClosedFormPrediction {
    unsigned k = 0, n = 0;
    unsigned s = 0;                // unique s with 2^s < n <= 2^{s+1}
    unsigned t = 0;                // case offset; meaning depends on the family
    bool applicable = false;
    std::string reason;            // which case applied, or why none does
    unsigned value = 0;
    bool claimed_exact = false;    // exact value (vs. lower bound only)
    std::vector<unsigned> witness; // exponent vector backing the value, if any
};

// Height of w1: 2^{s+1}-2 when k = 2, or when k = 3 and n = 2^s + 1;
// otherwise 2^{s+1}-1. Defined for 2 <= k <= n/2.
ClosedFormPrediction closed_form_height_w1(unsigned k, unsigned n);

// Zero-divisor cup-length closed forms for k = 2, 3, 4 with the published
// witness exponent vectors (powers of the generators' z-classes).
ClosedFormPrediction closed_form_zcl(unsigned k, unsigned n);

// TC lower bound for generic k >= 3, maximized over all s whose hypotheses
// the underlying product arguments actually support:
//   3 <= k <= 2^s     and n >= 2^s + k            gives TC >= 4*2^s - 1;
//   3 <= k <= 2^{s-1} and n >= 2^s + 2^{s-1} + k  gives TC >= 5*2^s - 2.
// Never claimed exact.
ClosedFormPrediction closed_form_tc_lower(unsigned k, unsigned n);

// ---------------------------------------------------------------------------
// Catalog of distinguished product claims at (k, n): monomials asserted
// nonzero or zero, normal-form identities, and maximality claims, for the
// engine to verify one by one.
// ---------------------------------------------------------------------------

struct ProductClaim {
    enum class Kind {
        monomial_nonzero, // the monomial with these exponents is nonzero
        monomial_zero,    // ... is zero
        nf_equal,         // exponents and exponents2 have equal normal forms
        cup_maximal,      // sum of exponents equals max_monomial_cup_length
    };
    Kind kind{};
    std::string id;                   // stable, human-readable claim label
    std::vector<unsigned> exponents;  // length k
    std::vector<unsigned> exponents2; // second monomial for nf_equal
};

std::vector<ProductClaim> predict_products(unsigned k, unsigned n);

// ---------------------------------------------------------------------------
// Bound assembly.
// ---------------------------------------------------------------------------

// 2*dim - 1 if the top power of w1 reduces to zero, else 2*dim (dim = 0 gives
// 1, the TC of a point).
unsigned tc_upper(const GrassmannRing& ring);

// The cases where the generic estimate is known to need the better value:
// (k = 1, n = 2^d) and (k = 2, n = 2^d + 1).
bool tc_upper_exception_listed(unsigned k, unsigned n);

struct BoundsReport {
    unsigned k = 0, n = 0, dim = 0;
    bool complement_used = false;  // computed via the rank-(n-k) model

    std::vector<unsigned> heights;

    unsigned cup_length = 0;
    std::vector<Exp> cup_witness;
    unsigned cat_lower = 0;        // cup_length + 1
    unsigned cat_upper = 0;        // dim + 1

    unsigned zcl = 0;
    std::vector<Exp> zcl_witness;
    unsigned tc_lower = 0;         // max(zcl + 1, cat_lower)
    unsigned tc_upper = 0;         // min(mechanism, 2*cat_upper - 1)

    bool partial = false;          // engine hit the resource budget
    std::string partial_reason;

    std::vector<std::string> exceptions; // flagged special/open cases

    std::optional<ClosedFormPrediction> closed_zcl;
    std::optional<ClosedFormPrediction> closed_tc_lower;
};

// Full computed report; k > n - k is handled through the complement model.
// On a resource-budget failure the report comes back partial with the closed
// forms still filled in.
BoundsReport bounds_report(unsigned k, unsigned n,
                           std::uint64_t degree_block_bit_cap = 2'000'000);

// TC of the complex analogue: 2k(n-k) + 1.
unsigned complex_tc(unsigned k, unsigned n);

// ---------------------------------------------------------------------------
// Monotonicity of cat/TC in n: sufficient criteria comparing a computed lower
// bound at (k, n) against a dimension threshold at (k, m). A met criterion
// establishes the monotone inequality; an unmet one establishes nothing.
// ---------------------------------------------------------------------------

struct MonotonicityReport {
    unsigned k = 0, m = 0, n = 0;
    unsigned cat_threshold = 0;  // (k-1)(m-k) + 1
    unsigned tc_threshold = 0;   // (2k-1)(m-k) + 1
    unsigned cat_lower_n = 0;    // computed cat lower bound at (k, n)
    unsigned tc_lower_n = 0;     // computed TC lower bound at (k, n)
    bool cat_met = false;
    bool tc_met = false;
    std::string cat_statement;
    std::string tc_statement;
};

// Pre: 2k <= m <= n.
MonotonicityReport monotonicity_report(unsigned k, unsigned m, unsigned n,
                                       std::uint64_t degree_block_bit_cap = 2'000'000);

} // namespace grasstc

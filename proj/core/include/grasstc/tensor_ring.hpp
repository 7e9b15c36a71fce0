#pragma once

#include <vector>

#include "grasstc/grassmann_ring.hpp"

namespace grasstc {

// Least power of two strictly greater than m.
unsigned long long rho(unsigned long long m);

// One summand a (x) b of a tensor-square class, both sides plain monomials in
// the rank-k variables.
struct TensorTerm {
    Monomial left, right;
    bool operator==(const TensorTerm& o) const { return left == o.left && right == o.right; }
};

// A class in the tensor square of the ring, as an XOR-canonical list of
// monomial tensors. Arithmetic is exact (no quotient applied); vanishing is
// decided against the quotient by TensorRing.
struct TensorElement {
    std::vector<TensorTerm> terms;
    bool operator==(const TensorElement& o) const { return terms == o.terms; }
};

TensorElement tensor_canonical(std::vector<TensorTerm> terms);
TensorElement tensor_add(const TensorElement& a, const TensorElement& b);
TensorElement tensor_mul(const TensorElement& a, const TensorElement& b);

// The cohomology of the square of the underlying space, via the field
// Kunneth isomorphism, together with the zero-divisor search machinery.
class TensorRing {
public:
    explicit TensorRing(const GrassmannRing& ring) : ring_(&ring) {}

    const GrassmannRing& ring() const { return *ring_; }

    // w_i (x) 1 + 1 (x) w_i: the basic zero-divisor attached to w_i (0-based i).
    TensorElement zbar(std::size_t i) const;

    // prod_i zbar(i)^{m_i}, expanded by the binomial-parity rule: over GF(2),
    // (a (x) 1 + 1 (x) a)^m = sum over submasks j of m of a^j (x) a^{m-j}.
    TensorElement z_power_product(const std::vector<Exp>& m) const;

    // Vanishing against the quotient: group terms by bidegree, accumulate
    // rank-one outer products of the two normal forms, and look for a
    // surviving bit.
    bool element_is_nonzero(const TensorElement& t) const;
    bool tensor_is_nonzero(const std::vector<Exp>& m) const;

    // Largest h with zbar(i)^h nonzero.
    unsigned z_height(std::size_t i) const;

    struct ZclResult {
        unsigned length = 0;
        std::vector<Exp> witness;   // lexicographically greatest exponent vector
    };
    // Largest N with some prod zbar(i)^{m_i}, sum m_i = N, nonzero. Exhaustive
    // descent over N with per-variable caps z_height(i) and the bidegree
    // feasibility bound sum i*m_i <= 2*dim.
    ZclResult zcl_basic() const;
    // Largest N with a nonzero product of N elements of the multiplication
    // kernel. Such a product expands into cofactor multiples of N-fold
    // products of the zbar generators, and a multiple of a vanishing class
    // vanishes, so the maximum is attained with trivial cofactor and equals
    // zcl_basic. Kept as its own entry point; the kernel/ideal agreement is
    // checked independently by kernel_matches_ideal.
    ZclResult zcl_exact() const;

    // Basis of the kernel of the multiplication map at one total degree, as
    // explicit tensor classes over basis-monomial pairs.
    std::vector<TensorElement> kernel_basis(unsigned total_degree) const;
    // The kernel at this degree coincides with the span of the zbar-generator
    // multiples of lower-degree basis pairs.
    bool kernel_matches_ideal(unsigned total_degree) const;

private:
    const GrassmannRing* ring_;
};

} // namespace grasstc

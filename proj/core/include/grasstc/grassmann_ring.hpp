#pragma once

#include <atomic>
#include <cstddef>
#include <memory>
#include <mutex>
#include <vector>

#include "grasstc/bitrow.hpp"
#include "grasstc/gf2poly.hpp"

namespace grasstc {

// The complementary classes of the tautological bundle's dual description:
// wbar_0 = 1 and wbar_j = sum_{i=1..min(j,k)} w_i * wbar_{j-i}.
// Returns wbar_0 .. wbar_limit over the rank-k variable space.
std::vector<Polynomial> dual_classes(unsigned k, unsigned limit);

// One graded piece of the quotient ring: the monomials of that degree, the
// reduced relation space, the surviving basis, and the normal form of every
// monomial as a bit vector over basis positions.
struct DegreeBlock {
    unsigned degree = 0;
    std::vector<Monomial> monomials;     // canonical order within the degree
    std::vector<std::size_t> basis;      // indices into monomials, ascending
    std::vector<BitRow> normal_forms;    // one row per monomial, width = basis.size()

    const Monomial& basis_monomial(std::size_t b) const { return monomials[basis[b]]; }
};

// Mod-2 cohomology of the real Grassmannian of k-planes in R^n, presented as
// Z2[w_1..w_k] modulo the ideal generated by wbar_{n-k+1}, .., wbar_n.
// Graded pieces are computed lazily per degree and memoized; construction is
// cheap. Thread-safe: concurrent block requests build each degree once.
class GrassmannRing {
public:
    // degree_block_bit_cap limits rows*cols of any single degree's relation
    // matrix; exceeding it raises infeasible_error rather than thrashing.
    explicit GrassmannRing(unsigned k, unsigned n,
                           std::size_t degree_block_bit_cap = 2'000'000);
    GrassmannRing(const GrassmannRing&) = delete;
    GrassmannRing& operator=(const GrassmannRing&) = delete;

    unsigned k() const { return k_; }
    unsigned n() const { return n_; }
    unsigned dim() const { return dim_; }   // k*(n-k)
    const VarSpacePtr& space() const { return space_; }
    std::size_t degree_block_bit_cap() const { return bit_cap_; }

    // The graded piece at 0 <= degree <= dim(). Degrees above dim() have an
    // empty basis and are handled by the query methods directly; asking for
    // their blocks is a usage error.
    const DegreeBlock& block(unsigned degree) const;
    bool has_block(unsigned degree) const;
    // Install a precomputed block (e.g. loaded from a cache file). Ignored if
    // the degree is already built. Throws usage_error on shape mismatch.
    void inject_block(DegreeBlock blk) const;

    std::size_t basis_size(unsigned degree) const;
    std::vector<Monomial> basis_monomials(unsigned degree) const;

    // Canonical representative: a sum of basis monomials, degree by degree.
    Polynomial normal_form(const Polynomial& p) const;
    bool is_nonzero(const Polynomial& p) const;

    // Fast path for a single monomial given by its exponent vector.
    bool monomial_is_nonzero(const std::vector<Exp>& exps) const;
    BitRow nf_row(const Monomial& m) const;

    // Largest h with w_i^h != 0 (0-based variable index); 0 if w_{i+1} == 0.
    unsigned height(std::size_t var_index) const;
    std::vector<unsigned> heights() const;

    struct CupLengthResult {
        unsigned length = 0;            // max total exponent over nonzero monomials
        std::vector<Exp> witness;       // lexicographically greatest attaining it
    };
    // Exhaustive search over all monomials of every degree up to dim().
    CupLengthResult max_monomial_cup_length() const;

    // The degree-j relation generator reduced against multiples of the lower
    // generators, for n-k+1 <= j <= n: the minimal presentation's relations.
    Polynomial reduced_relation(unsigned j) const;

private:
    struct Slot {
        mutable std::mutex m;
        std::atomic<const DegreeBlock*> ready{nullptr};
        std::unique_ptr<DegreeBlock> storage;
    };

    DegreeBlock build_block(unsigned degree) const;

    unsigned k_, n_, dim_;
    std::size_t bit_cap_;
    VarSpacePtr space_;
    std::vector<Polynomial> wbar_; // wbar_0..wbar_n
    mutable std::vector<Slot> slots_;
};

} // namespace grasstc

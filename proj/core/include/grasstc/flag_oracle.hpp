#pragma once

#include <cstdint>
#include <vector>

#include "grasstc/gf2poly.hpp"

namespace grasstc {

// Image of a rank-k class under pullback to the full flag manifold of R^n:
// w_i becomes the i-th elementary symmetric polynomial in the first k root
// variables e_1..e_k. Input must be over the rank-k graded space.
Polynomial pi_star(unsigned k, unsigned n, const Polynomial& p);

// Image of the degree-j complementary class: the j-th elementary symmetric
// polynomial in the remaining roots e_{k+1}..e_n.
Polynomial dual_image(unsigned k, unsigned n, unsigned j);

// Evaluation against the top cell of the flag manifold: the parity of the
// number of terms whose exponent vector is a permutation of {0,1,..,n-1}.
bool top_eval(unsigned n, const Polynomial& q);

// Decision for a homogeneous class in the rank-k ring, via the flag manifold:
// p is nonzero iff pi_star(p), multiplied by the fixed staircase factor
// e_1^{k-1}..e_{k-1} * e_{k+1}^{n-k-1}..e_{n-1}, is nonzero upstairs; the
// latter is certified by searching for a box multiplier (m_i <= n-i) of the
// complementary degree whose product evaluates to 1 against the top cell.
// The box spans a complete dual pairing, so an exhausted search is a genuine
// negative; running out of budget is not.
struct FlagCheck {
    enum class Status { nonzero, zero, out_of_budget };
    Status status = Status::zero;
    std::vector<Exp> multiplier;        // e-exponents of the certificate, when nonzero
    unsigned long long nodes = 0;       // search nodes visited
};

FlagCheck grassmann_nonzero_via_flag(unsigned k, unsigned n, const Polynomial& p,
                                     unsigned long long node_budget = 5'000'000);

} // namespace grasstc

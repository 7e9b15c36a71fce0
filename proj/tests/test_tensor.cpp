#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "grasstc/tensor_ring.hpp"

#include <vector>

using namespace grasstc;

namespace {

TensorElement elem(std::vector<std::pair<std::vector<Exp>, std::vector<Exp>>> pairs) {
    std::vector<TensorTerm> ts;
    for (auto& [l, r] : pairs)
        ts.push_back(TensorTerm{Monomial{l}, Monomial{r}});
    return tensor_canonical(std::move(ts));
}

unsigned weighted(const std::vector<Exp>& m) {
    unsigned s = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        s += static_cast<unsigned>(m[i]) * static_cast<unsigned>(i + 1);
    return s;
}

} // namespace

TEST_CASE("rho is the least power of two exceeding its argument") {
    CHECK(rho(0) == 1);
    CHECK(rho(1) == 2);
    CHECK(rho(2) == 4);
    CHECK(rho(3) == 4);
    CHECK(rho(7) == 8);
    CHECK(rho(8) == 16);
    CHECK(rho(11) == 16);
    CHECK(rho(15) == 16);
    CHECK(rho(16) == 32);
}

TEST_CASE("tensor arithmetic is exact xor algebra") {
    GrassmannRing ring(2, 5);
    TensorRing tr(ring);
    auto z1 = tr.zbar(0);
    CHECK(z1 == elem({{{1, 0}, {0, 0}}, {{0, 0}, {1, 0}}}));
    CHECK(tensor_add(z1, z1).terms.empty());
    // Squaring kills the cross terms in characteristic two.
    auto sq = tensor_mul(z1, z1);
    CHECK(sq == elem({{{2, 0}, {0, 0}}, {{0, 0}, {2, 0}}}));
    CHECK(tr.z_power_product({2, 0}) == sq);
}

TEST_CASE("powers of the basic zero-divisors expand by binomial parity") {
    GrassmannRing ring(2, 6);
    TensorRing tr(ring);
    // Exponent 3: all four binomials are odd.
    CHECK(tr.z_power_product({3, 0}) ==
          elem({{{3, 0}, {0, 0}}, {{2, 0}, {1, 0}}, {{1, 0}, {2, 0}}, {{0, 0}, {3, 0}}}));
    // Exponent 4: only the two extreme binomials are odd.
    CHECK(tr.z_power_product({4, 0}) ==
          elem({{{4, 0}, {0, 0}}, {{0, 0}, {4, 0}}}));
    // Mixed product distributes.
    CHECK(tr.z_power_product({1, 1}) == tensor_mul(tr.zbar(0), tr.zbar(1)));
    // Iterated multiplication agrees with the direct expansion.
    auto direct = tr.z_power_product({5, 2});
    auto iter = tensor_mul(tr.z_power_product({4, 2}), tr.zbar(0));
    CHECK(direct == iter);
}

TEST_CASE("z-heights follow the height doubling rule") {
    {
        GrassmannRing ring(2, 5);
        TensorRing tr(ring);
        CHECK(tr.z_height(0) == 7); // height 6 -> 2^3 - 1
        CHECK(tr.z_height(1) == 3); // height 3 -> 2^2 - 1
    }
    for (auto [k, n] : std::vector<std::pair<unsigned, unsigned>>{
             {2, 7}, {3, 8}, {3, 9}}) {
        GrassmannRing ring(k, n);
        TensorRing tr(ring);
        for (unsigned i = 0; i < k; ++i)
            CHECK(tr.z_height(i) == rho(ring.height(i)) - 1);
    }
}

TEST_CASE("zero-divisor cup-lengths match frozen small cases") {
    struct Case {
        unsigned k, n, zcl;
        std::vector<Exp> witness; // empty = check invariants only
    };
    for (const auto& c : std::vector<Case>{
             {1, 3, 3, {3}},
             {2, 4, 4, {3, 1}},
             {2, 5, 8, {7, 1}},
             {2, 6, 10, {6, 4}},
             {3, 7, 14, {}},
             {3, 8, 14, {7, 7, 0}},
         }) {
        GrassmannRing ring(c.k, c.n);
        TensorRing tr(ring);
        auto z = tr.zcl_basic();
        CHECK(z.length == c.zcl);
        if (!c.witness.empty())
            CHECK(z.witness == c.witness);
        // Witness invariants: attains the length, is nonzero, and respects the
        // bidegree feasibility bound.
        unsigned total = 0;
        for (Exp e : z.witness) total += e;
        CHECK(total == z.length);
        CHECK(tr.tensor_is_nonzero(z.witness));
        CHECK(weighted(z.witness) <= 2 * ring.dim());
        // One more of any generator always dies.
        for (unsigned i = 0; i < c.k; ++i) {
            auto bumped = z.witness;
            ++bumped[i];
            CHECK_FALSE(tr.tensor_is_nonzero(bumped));
        }
    }
}

TEST_CASE("the top-class power certification rule fails at a known corner") {
    GrassmannRing ring(3, 8);
    TensorRing tr(ring);
    // The underlying monomial is a nonzero top class ...
    REQUIRE(ring.monomial_is_nonzero({4, 4, 1}));
    // ... yet the corresponding product of doubled zero-divisor powers
    // vanishes: every bidegree of the expansion cancels.
    CHECK_FALSE(tr.tensor_is_nonzero({7, 7, 1}));
    // Dropping the last factor restores nonvanishing.
    CHECK(tr.tensor_is_nonzero({7, 7, 0}));
}

TEST_CASE("published witness exponents can vanish while nearby ones survive") {
    {
        GrassmannRing ring(3, 15);
        TensorRing tr(ring);
        CHECK_FALSE(tr.tensor_is_nonzero({15, 15, 7}));
    }
    {
        GrassmannRing ring(3, 16);
        TensorRing tr(ring);
        CHECK_FALSE(tr.tensor_is_nonzero({15, 15, 7}));
    }
    {
        GrassmannRing ring(4, 15);
        TensorRing tr(ring);
        CHECK(tr.tensor_is_nonzero({15, 15, 7, 0}));
    }
    {
        GrassmannRing ring(4, 16);
        TensorRing tr(ring);
        CHECK(tr.tensor_is_nonzero({15, 15, 7, 1}));
    }
}

TEST_CASE("exhaustive and kernel-based searches return the same maximum") {
    for (auto [k, n] : std::vector<std::pair<unsigned, unsigned>>{
             {1, 3}, {2, 4}, {2, 5}, {3, 7}}) {
        GrassmannRing ring(k, n);
        TensorRing tr(ring);
        auto basic = tr.zcl_basic();
        auto exact = tr.zcl_exact();
        CHECK(basic.length == exact.length);
        CHECK(basic.witness == exact.witness);
    }
}

TEST_CASE("the multiplication kernel coincides with the zero-divisor ideal") {
    for (auto [k, n] : std::vector<std::pair<unsigned, unsigned>>{
             {1, 3}, {2, 4}, {2, 5}}) {
        GrassmannRing ring(k, n);
        TensorRing tr(ring);
        for (unsigned d = 0; d <= 2 * ring.dim(); ++d)
            CHECK(tr.kernel_matches_ideal(d));
    }
}

TEST_CASE("kernel elements multiply out to exactly the exhaustive maximum") {
    // Brute force over products of arbitrary kernel-basis elements: the
    // longest nonzero product has the same length as the generator-power
    // search, supporting the reduction of the general search to powers.
    GrassmannRing ring(1, 3);
    TensorRing tr(ring);
    std::vector<TensorElement> pool;
    for (unsigned d = 1; d <= 2 * ring.dim(); ++d)
        for (auto& e : tr.kernel_basis(d))
            pool.push_back(std::move(e));
    REQUIRE(!pool.empty());
    for (const auto& e : pool)
        CHECK(tr.element_is_nonzero(e)); // basis elements are themselves nonzero

    unsigned best = 0;
    const std::size_t P = pool.size();
    // All multisets of size up to 4, as non-decreasing index tuples.
    for (std::size_t a = 0; a < P; ++a) {
        if (!tr.element_is_nonzero(pool[a])) continue;
        best = std::max(best, 1u);
        for (std::size_t b = a; b < P; ++b) {
            auto ab = tensor_mul(pool[a], pool[b]);
            if (!tr.element_is_nonzero(ab)) continue;
            best = std::max(best, 2u);
            for (std::size_t c = b; c < P; ++c) {
                auto abc = tensor_mul(ab, pool[c]);
                if (!tr.element_is_nonzero(abc)) continue;
                best = std::max(best, 3u);
                for (std::size_t d = c; d < P; ++d) {
                    auto abcd = tensor_mul(abc, pool[d]);
                    CHECK_FALSE(tr.element_is_nonzero(abcd));
                }
            }
        }
    }
    CHECK(best == 3);
    CHECK(best == tr.zcl_exact().length);
}

TEST_CASE("element vanishing handles empty and saturated inputs") {
    GrassmannRing ring(2, 4);
    TensorRing tr(ring);
    CHECK_FALSE(tr.element_is_nonzero(TensorElement{}));
    CHECK(tr.element_is_nonzero(tr.zbar(0)));
    // Both sides of every term beyond the heights: identically zero.
    CHECK_FALSE(tr.tensor_is_nonzero({8, 0}));
    // A sum of a class with itself vanishes.
    CHECK_FALSE(tr.element_is_nonzero(tensor_add(tr.zbar(1), tr.zbar(1))));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "grasstc/grassmann_ring.hpp"

#include <random>
#include <vector>

using namespace grasstc;

namespace {

Polynomial random_poly(std::mt19937& rng, const VarSpacePtr& sp, unsigned max_terms,
                       Exp max_exp) {
    std::uniform_int_distribution<unsigned> nterms(0, max_terms);
    std::uniform_int_distribution<unsigned> exp(0, max_exp);
    std::vector<Monomial> ms;
    const unsigned t = nterms(rng);
    for (unsigned i = 0; i < t; ++i) {
        Monomial m;
        for (std::size_t v = 0; v < sp->size(); ++v)
            m.exps.push_back(static_cast<Exp>(exp(rng)));
        ms.push_back(std::move(m));
    }
    return Polynomial::from_monomials(sp, std::move(ms));
}

std::vector<std::size_t> basis_profile(const GrassmannRing& r) {
    std::vector<std::size_t> out;
    for (unsigned d = 0; d <= r.dim(); ++d)
        out.push_back(r.basis_size(d));
    return out;
}

} // namespace

TEST_CASE("complementary classes satisfy their defining recurrence") {
    for (unsigned k : {2u, 3u}) {
        const unsigned limit = 8;
        auto wbar = dual_classes(k, limit);
        auto sp = wbar[0].space();
        REQUIRE(wbar.size() == limit + 1);
        CHECK(wbar[0] == Polynomial::one(sp));
        for (unsigned j = 1; j <= limit; ++j) {
            Polynomial sum = Polynomial::zero(sp);
            for (unsigned i = 1; i <= std::min(j, k); ++i)
                sum += Polynomial::variable(sp, i - 1) * wbar[j - i];
            CHECK(wbar[j] == sum);
            CHECK(wbar[j].is_homogeneous());
            CHECK(wbar[j].degree().value() == j);
        }
    }
    auto wb2 = dual_classes(2, 3);
    auto sp = wb2[0].space();
    CHECK(wb2[1] == Polynomial::parse(sp, "w1"));
    CHECK(wb2[2] == Polynomial::parse(sp, "w1^2 + w2"));
    CHECK(wb2[3] == Polynomial::parse(sp, "w1^3"));
}

TEST_CASE("minimal presentation of the rank-2 ring over R^6") {
    GrassmannRing ring(2, 6);
    CHECK(ring.dim() == 8);
    CHECK(ring.reduced_relation(5).to_string() == "w1^5 + w1*w2^2");
    CHECK(ring.reduced_relation(6).to_string() ==
          "w1^4*w2 + w1^2*w2^2 + w2^3");
    // Both relations reduce to zero in the quotient.
    CHECK_FALSE(ring.is_nonzero(ring.reduced_relation(5)));
    CHECK_FALSE(ring.is_nonzero(ring.reduced_relation(6)));
    CHECK(basis_profile(ring) ==
          std::vector<std::size_t>{1, 1, 2, 2, 3, 2, 2, 1, 1});
}

TEST_CASE("degree facts in the rank-2 ring over R^5") {
    GrassmannRing ring(2, 5);
    CHECK(ring.dim() == 6);
    CHECK(basis_profile(ring) == std::vector<std::size_t>{1, 1, 2, 2, 2, 1, 1});
    CHECK(ring.monomial_is_nonzero({6, 0}));      // top power of w1 survives
    CHECK_FALSE(ring.monomial_is_nonzero({7, 0})); // beyond the height
    CHECK_FALSE(ring.monomial_is_nonzero({4, 1})); // splits into relations
    CHECK(ring.monomial_is_nonzero({0, 3}));       // w2^3 is the top class here
    CHECK_FALSE(ring.monomial_is_nonzero({0, 4})); // degree above the dimension
    CHECK(ring.height(0) == 6);
    CHECK(ring.height(1) == 3);
}

TEST_CASE("defining ideal generators reduce to zero, their lower truncations do not") {
    GrassmannRing ring(3, 7);
    auto wbar = dual_classes(3, 7);
    for (unsigned j = 5; j <= 7; ++j)
        CHECK_FALSE(ring.is_nonzero(wbar[j]));
    // Below the ideal the complementary classes survive.
    for (unsigned j = 1; j <= 4; ++j)
        CHECK(ring.is_nonzero(wbar[j]));
    // Random multiples of relations vanish too.
    std::mt19937 rng(11);
    for (int i = 0; i < 30; ++i) {
        auto p = random_poly(rng, ring.space(), 3, 2);
        CHECK_FALSE(ring.is_nonzero(p * wbar[5 + (i % 3)]));
    }
}

TEST_CASE("heights match frozen values on hard cases") {
    {
        GrassmannRing ring(2, 9);
        CHECK(ring.heights() == std::vector<unsigned>{14, 7});
    }
    {
        GrassmannRing ring(3, 10);
        CHECK(ring.heights() == std::vector<unsigned>{15, 8, 7});
    }
    {
        GrassmannRing ring(5, 13, 64'000'000);
        CHECK(ring.heights() == std::vector<unsigned>{15, 15, 12, 9, 8});
    }
}

TEST_CASE("cup-length search returns the maximum with its witness") {
    {
        GrassmannRing ring(2, 6);
        auto cup = ring.max_monomial_cup_length();
        CHECK(cup.length == 7);
        CHECK(cup.witness == std::vector<Exp>{6, 1});
    }
    {
        GrassmannRing ring(1, 5); // projective space: the single generator
        auto cup = ring.max_monomial_cup_length();
        CHECK(cup.length == 4);
        CHECK(cup.witness == std::vector<Exp>{4});
    }
    {
        GrassmannRing ring(2, 13);
        auto cup = ring.max_monomial_cup_length();
        CHECK(cup.length == 18);
        CHECK(cup.witness == std::vector<Exp>{14, 4});
    }
    {
        GrassmannRing ring(3, 9);
        auto cup = ring.max_monomial_cup_length();
        CHECK(cup.length == 16);
        CHECK(ring.monomial_is_nonzero(cup.witness));
        unsigned total = 0;
        for (Exp e : cup.witness) total += e;
        CHECK(total == 16);
    }
}

TEST_CASE("normal form is a ring homomorphism onto the basis span") {
    GrassmannRing ring(2, 6);
    std::mt19937 rng(23);
    for (int i = 0; i < 100; ++i) {
        auto p = random_poly(rng, ring.space(), 4, 4);
        auto q = random_poly(rng, ring.space(), 4, 4);
        auto direct = ring.normal_form(p * q);
        auto reduced = ring.normal_form(ring.normal_form(p) * ring.normal_form(q));
        CHECK(direct == reduced);
        CHECK(ring.normal_form(p + q) ==
              ring.normal_form(ring.normal_form(p) + ring.normal_form(q)));
        // Idempotence.
        CHECK(ring.normal_form(ring.normal_form(p)) == ring.normal_form(p));
    }
}

TEST_CASE("normal forms are supported on basis monomials of the right degree") {
    GrassmannRing ring(3, 7);
    for (unsigned d = 0; d <= ring.dim(); ++d) {
        auto basis = ring.basis_monomials(d);
        CHECK(basis.size() == ring.basis_size(d));
        for (const auto& m : monomials_of_degree(*ring.space(), d)) {
            auto nf = ring.normal_form(Polynomial::from_monomial(ring.space(), m));
            for (const auto& t : nf.terms()) {
                CHECK(ring.space()->degree(t.exps) == d);
                bool in_basis = false;
                for (const auto& b : basis)
                    if (b == t) { in_basis = true; break; }
                CHECK(in_basis);
            }
        }
    }
}

TEST_CASE("basis sizes are palindromic across the dimension") {
    for (auto [k, n] : std::vector<std::pair<unsigned, unsigned>>{
             {2, 6}, {3, 7}, {2, 9}, {4, 9}}) {
        GrassmannRing ring(k, n);
        for (unsigned d = 0; d <= ring.dim(); ++d)
            CHECK(ring.basis_size(d) == ring.basis_size(ring.dim() - d));
    }
}

TEST_CASE("degree blocks beyond the dimension are empty and off-limits") {
    GrassmannRing ring(2, 5);
    CHECK(ring.basis_size(ring.dim() + 1) == 0);
    CHECK(ring.basis_size(100) == 0);
    CHECK_FALSE(ring.is_nonzero(Polynomial::variable(ring.space(), 0, 7)));
    CHECK_THROWS_AS(ring.block(ring.dim() + 1), usage_error);
}

TEST_CASE("construction rejects bad parameters") {
    CHECK_THROWS_AS(GrassmannRing(5, 4), usage_error);
}

TEST_CASE("the per-degree resource cap raises an honest infeasibility") {
    GrassmannRing ring(5, 13, 10'000);
    CHECK_THROWS_AS(ring.basis_size(20), infeasible_error);
    // Small degrees still work under the same cap.
    CHECK(ring.basis_size(0) == 1);
    CHECK(ring.basis_size(1) == 1);
}

TEST_CASE("injected blocks round-trip through the lazy store") {
    GrassmannRing built(2, 6);
    for (unsigned d = 0; d <= built.dim(); ++d)
        built.block(d); // force every degree
    GrassmannRing fresh(2, 6);
    for (unsigned d = 0; d <= built.dim(); ++d) {
        CHECK_FALSE(fresh.has_block(d));
        fresh.inject_block(built.block(d));
        CHECK(fresh.has_block(d));
    }
    std::mt19937 rng(31);
    for (int i = 0; i < 40; ++i) {
        auto p = random_poly(rng, built.space(), 4, 4);
        CHECK(built.normal_form(p) == fresh.normal_form(p));
    }
    // Injecting into an already-built degree is a no-op, not an error.
    fresh.inject_block(built.block(3));
    // Shape mismatches are rejected.
    DegreeBlock bad = built.block(2);
    bad.monomials.pop_back();
    CHECK_THROWS_AS(fresh.inject_block(std::move(bad)), usage_error);
}

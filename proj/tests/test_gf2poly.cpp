#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "grasstc/gf2poly.hpp"

#include <algorithm>
#include <map>
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

// Independent count of monomials per weighted degree: iterative convolution of
// one-variable generating functions, honoring per-variable caps.
std::vector<unsigned long long> degree_counts(const VarSpace& sp, unsigned max_deg) {
    std::vector<unsigned long long> acc(max_deg + 1, 0);
    acc[0] = 1;
    for (std::size_t v = 0; v < sp.size(); ++v) {
        std::vector<unsigned long long> next(max_deg + 1, 0);
        const unsigned w = sp.weight(v);
        const Exp cap = sp.exp_cap(v);
        for (unsigned d = 0; d <= max_deg; ++d) {
            if (!acc[d]) continue;
            for (unsigned e = 0;; ++e) {
                if (cap != 0 && e >= cap) break;
                const unsigned long long nd = d + static_cast<unsigned long long>(e) * w;
                if (nd > max_deg) break;
                next[static_cast<unsigned>(nd)] += acc[d];
            }
        }
        acc = std::move(next);
    }
    return acc;
}

} // namespace

TEST_CASE("graded variable spaces expose names, weights, and caps") {
    auto w = VarSpace::graded_w(3);
    REQUIRE(w->size() == 3);
    CHECK(w->name(0) == "w1");
    CHECK(w->name(2) == "w3");
    CHECK(w->weight(0) == 1);
    CHECK(w->weight(2) == 3);
    CHECK(w->exp_cap(0) == 0); // uncapped
    CHECK(w->degree({2, 1, 1}) == 2 + 2 + 3);

    auto e = VarSpace::roots_e(4);
    REQUIRE(e->size() == 4);
    CHECK(e->name(0) == "e1");
    CHECK(e->weight(3) == 1);
    CHECK(e->exp_cap(0) == 4); // e_i^4 == 0
    CHECK(e->find("e3").value() == 2);
    CHECK(!e->find("w1").has_value());
}

TEST_CASE("zero and one are the additive and multiplicative identities") {
    auto sp = VarSpace::graded_w(2);
    std::mt19937 rng(42);
    for (int i = 0; i < 50; ++i) {
        auto p = random_poly(rng, sp, 4, 5);
        CHECK(p + Polynomial::zero(sp) == p);
        CHECK(p * Polynomial::one(sp) == p);
        CHECK((p * Polynomial::zero(sp)).is_zero());
        CHECK((p + p).is_zero()); // characteristic two
    }
}

TEST_CASE("ring axioms hold on random polynomials") {
    auto sp = VarSpace::graded_w(3);
    std::mt19937 rng(7);
    for (int i = 0; i < 120; ++i) {
        auto a = random_poly(rng, sp, 3, 4);
        auto b = random_poly(rng, sp, 3, 4);
        auto c = random_poly(rng, sp, 3, 4);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("squaring distributes over sums in characteristic two") {
    auto sp = VarSpace::graded_w(3);
    std::mt19937 rng(99);
    for (int i = 0; i < 80; ++i) {
        auto a = random_poly(rng, sp, 4, 3);
        auto b = random_poly(rng, sp, 4, 3);
        CHECK((a + b).pow(2) == a.pow(2) + b.pow(2));
        CHECK(a.pow(8) == a.pow(2).pow(2).pow(2));
    }
}

TEST_CASE("pow matches repeated multiplication") {
    auto sp = VarSpace::graded_w(2);
    std::mt19937 rng(5);
    for (int i = 0; i < 20; ++i) {
        auto p = random_poly(rng, sp, 3, 3);
        auto q = Polynomial::one(sp);
        for (int j = 0; j < 5; ++j) q *= p;
        CHECK(p.pow(5) == q);
        CHECK(p.pow(0) == Polynomial::one(sp));
        CHECK(p.pow(1) == p);
    }
}

TEST_CASE("capped root variables are nilpotent") {
    auto sp = VarSpace::roots_e(3);
    CHECK(Polynomial::variable(sp, 0, 3).is_zero()); // e1^3 == 0
    auto e1sq = Polynomial::variable(sp, 0, 2);
    auto e1 = Polynomial::variable(sp, 0);
    CHECK((e1sq * e1).is_zero());
    CHECK(!(e1sq * Polynomial::variable(sp, 1)).is_zero());
    // A sum keeps only the surviving terms when multiplied over a cap.
    auto p = e1sq + Polynomial::variable(sp, 1, 2);
    CHECK((p * e1) == Polynomial::variable(sp, 1, 2) * e1);
}

TEST_CASE("text form round-trips and uses the canonical term order") {
    auto sp = VarSpace::graded_w(2);
    // Input order does not matter; degrees 4 and 5 sort ascending.
    auto p = Polynomial::parse(sp, "w1^3*w2 + w2^2");
    CHECK(p.to_string() == "w2^2 + w1^3*w2");
    CHECK(p.term_count() == 2);
    CHECK(Polynomial::parse(sp, p.to_string()) == p);

    // Same weighted degree: descending lexicographic on exponent vectors.
    auto q = Polynomial::parse(sp, "w2^2 + w1^2*w2 + w1^4");
    CHECK(q.to_string() == "w1^4 + w1^2*w2 + w2^2");

    // Mixed degrees: ascending weighted degree first.
    auto r = Polynomial::parse(sp, "w2 + 1 + w1");
    CHECK(r.to_string() == "1 + w1 + w2");

    CHECK(Polynomial::parse(sp, "0").is_zero());
    CHECK(Polynomial::parse(sp, "1") == Polynomial::one(sp));
    CHECK(Polynomial::parse(sp, "w1 + w1").is_zero());
    CHECK(Polynomial::parse(sp, "  w1 *  w2   +  1 ") ==
          Polynomial::parse(sp, "w1*w2 + 1"));
    CHECK(Polynomial::zero(sp).to_string() == "0");

    std::mt19937 rng(3);
    for (int i = 0; i < 60; ++i) {
        auto x = random_poly(rng, sp, 5, 6);
        CHECK(Polynomial::parse(sp, x.to_string()) == x);
    }
}

TEST_CASE("malformed text is rejected") {
    auto sp = VarSpace::graded_w(2);
    CHECK_THROWS_AS(Polynomial::parse(sp, "w5"), usage_error);
    CHECK_THROWS_AS(Polynomial::parse(sp, "w1^"), usage_error);
    CHECK_THROWS_AS(Polynomial::parse(sp, ""), usage_error);
    CHECK_THROWS_AS(Polynomial::parse(sp, "w1 + + w2"), usage_error);
    CHECK_THROWS_AS(Polynomial::parse(sp, "e1"), usage_error);
}

TEST_CASE("degree and homogeneity reporting") {
    auto sp = VarSpace::graded_w(3);
    CHECK(!Polynomial::zero(sp).degree().has_value());
    CHECK(Polynomial::zero(sp).is_homogeneous());
    auto p = Polynomial::parse(sp, "w1^2*w3 + w2*w3"); // degrees 5, 5
    CHECK(p.degree().value() == 5);
    CHECK(p.is_homogeneous());
    auto q = Polynomial::parse(sp, "w1 + w2");
    CHECK(q.degree().value() == 2);
    CHECK(!q.is_homogeneous());
}

TEST_CASE("monomial enumeration per degree matches an independent count") {
    for (unsigned k : {1u, 2u, 3u, 4u}) {
        auto sp = VarSpace::graded_w(k);
        auto expect = degree_counts(*sp, 10);
        for (unsigned d = 0; d <= 10; ++d) {
            auto ms = monomials_of_degree(*sp, d);
            CHECK(ms.size() == expect[d]);
            for (const auto& m : ms)
                CHECK(sp->degree(m.exps) == d);
            // Canonical in-degree order: strictly descending lexicographic.
            for (std::size_t i = 1; i < ms.size(); ++i)
                CHECK(ms[i - 1].exps > ms[i].exps);
        }
    }
    // Caps are honored: degree-3 monomials over three roots that square to
    // zero at exponent 3 exclude the three cubes.
    auto e3 = VarSpace::roots_e(3);
    CHECK(monomials_of_degree(*e3, 3).size() == 7);
    auto expect = degree_counts(*e3, 6);
    for (unsigned d = 0; d <= 6; ++d)
        CHECK(monomials_of_degree(*e3, d).size() == expect[d]);
}

TEST_CASE("elementary symmetric polynomials have the expected supports") {
    auto sp = VarSpace::roots_e(5);
    std::vector<std::size_t> vars{0, 1, 2, 3};
    CHECK(elementary_symmetric(sp, vars, 0) == Polynomial::one(sp));
    CHECK(elementary_symmetric(sp, vars, 5).is_zero());
    auto s2 = elementary_symmetric(sp, vars, 2);
    CHECK(s2.term_count() == 6); // C(4,2)
    for (const auto& m : s2.terms()) {
        unsigned total = 0;
        for (std::size_t v = 0; v < 5; ++v) {
            CHECK(m.exps[v] <= 1); // squarefree
            total += m.exps[v];
        }
        CHECK(total == 2);
        CHECK(m.exps[4] == 0); // e5 not in the chosen subset
    }
    // Newton-like recurrence spot check: e1*e1 over two vars = e1^2-part only.
    std::vector<std::size_t> two{0, 1};
    auto s1 = elementary_symmetric(sp, two, 1);
    auto sq = s1 * s1;
    CHECK(sq == Polynomial::variable(sp, 0, 2) + Polynomial::variable(sp, 1, 2));
}

TEST_CASE("polynomials over different spaces refuse to combine") {
    auto a = Polynomial::one(VarSpace::graded_w(2));
    auto b = Polynomial::one(VarSpace::graded_w(3));
    CHECK_THROWS_AS(a + b, usage_error);
    CHECK_THROWS_AS(a * b, usage_error);
    // The universal zero combines with anything.
    Polynomial z;
    CHECK(z + a == a);
    CHECK((z * a).is_zero());
}

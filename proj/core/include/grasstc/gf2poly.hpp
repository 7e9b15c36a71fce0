#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "grasstc/errors.hpp"

namespace grasstc {

using Exp = std::uint16_t;

// A set of graded variables over GF(2): names, positive integer weights, and
// an optional per-variable exponent cap. When a cap c is set for a variable,
// any monomial in which that variable's exponent reaches c is identically
// zero and is dropped by all arithmetic. exp_cap == 0 means "uncapped".
class VarSpace {
public:
    VarSpace(std::vector<std::string> names,
             std::vector<unsigned> weights,
             std::vector<Exp> exp_caps);

    // w1..wk with weights 1..k, uncapped.
    static std::shared_ptr<const VarSpace> graded_w(unsigned k);
    // e1..en, all weight 1, exponent cap n for each (e_i^n == 0).
    static std::shared_ptr<const VarSpace> roots_e(unsigned n);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    unsigned weight(std::size_t i) const { return weights_[i]; }
    Exp exp_cap(std::size_t i) const { return caps_[i]; }
    const std::vector<unsigned>& weights() const { return weights_; }

    unsigned degree(const std::vector<Exp>& exps) const;
    // Index of a variable by name, if present.
    std::optional<std::size_t> find(const std::string& name) const;

    bool operator==(const VarSpace& o) const {
        return names_ == o.names_ && weights_ == o.weights_ && caps_ == o.caps_;
    }

private:
    std::vector<std::string> names_;
    std::vector<unsigned> weights_;
    std::vector<Exp> caps_;
};

using VarSpacePtr = std::shared_ptr<const VarSpace>;

// One monomial: exponent vector over a VarSpace (dense, size == space size).
struct Monomial {
    std::vector<Exp> exps;

    bool operator==(const Monomial& o) const { return exps == o.exps; }
};

// Canonical monomial order: ascending weighted degree; within a degree,
// descending lexicographic on the exponent vector. This matches the order in
// which human-readable presentations of these rings are customarily printed
// (e.g. "w1^4 + w1^2*w2 + w2^2").
struct MonomialOrder {
    const VarSpace* space;
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// A polynomial over GF(2): a canonically sorted vector of distinct monomials.
// Addition is symmetric difference; multiplication distributes and drops any
// monomial whose exponents hit a variable cap.
//
// A default-constructed Polynomial has no variable space and represents the
// universal zero: it may be combined with anything.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(VarSpacePtr space) : space_(std::move(space)) {}

    static Polynomial zero(VarSpacePtr space) { return Polynomial(std::move(space)); }
    static Polynomial one(VarSpacePtr space);
    // The i-th variable (0-based) to the given power.
    static Polynomial variable(VarSpacePtr space, std::size_t i, Exp power = 1);
    static Polynomial from_monomial(VarSpacePtr space, Monomial m);
    static Polynomial from_monomials(VarSpacePtr space, std::vector<Monomial> ms);

    const VarSpacePtr& space() const { return space_; }
    const std::vector<Monomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // Weighted degree of the highest-degree term; nullopt for zero.
    std::optional<unsigned> degree() const;
    // True if every term has the same weighted degree (zero is homogeneous).
    bool is_homogeneous() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    bool operator==(const Polynomial& o) const;

    // Repeated squaring; uses the GF(2) Frobenius identity (a+b)^2 = a^2+b^2
    // to square term-by-term.
    Polynomial pow(unsigned long long e) const;

    // Text form: terms in canonical order joined by " + ", each term like
    // "w1^3*w2"; the zero polynomial prints "0" and the empty monomial "1".
    std::string to_string() const;
    // Inverse of to_string for the same space; also accepts any whitespace
    // around "+" and "*". Throws usage_error on malformed input or unknown
    // variable names.
    static Polynomial parse(VarSpacePtr space, const std::string& text);

private:
    void canonicalize();
    static void check_compatible(const Polynomial& a, const Polynomial& b);

    VarSpacePtr space_;
    std::vector<Monomial> terms_; // sorted by MonomialOrder, distinct
};

// Sum of all squarefree monomials of total (unweighted) size r in the chosen
// subset of variables, i.e. the r-th elementary symmetric polynomial in those
// variables. r == 0 gives 1; r > subset size gives 0.
Polynomial elementary_symmetric(VarSpacePtr space,
                                const std::vector<std::size_t>& vars,
                                unsigned r);

// All monomials of the given weighted degree over the space, honoring caps,
// listed in canonical order (descending lex within the degree).
std::vector<Monomial> monomials_of_degree(const VarSpace& space, unsigned degree);

} // namespace grasstc

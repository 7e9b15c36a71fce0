#include "grasstc/gf2poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace grasstc {

VarSpace::VarSpace(std::vector<std::string> names,
                   std::vector<unsigned> weights,
                   std::vector<Exp> exp_caps)
    : names_(std::move(names)), weights_(std::move(weights)), caps_(std::move(exp_caps)) {
    if (names_.size() != weights_.size() || names_.size() != caps_.size())
        throw usage_error("VarSpace: names/weights/caps must have equal length");
    for (unsigned w : weights_)
        if (w == 0) throw usage_error("VarSpace: weights must be positive");
}

std::shared_ptr<const VarSpace> VarSpace::graded_w(unsigned k) {
    std::vector<std::string> names;
    std::vector<unsigned> weights;
    std::vector<Exp> caps;
    for (unsigned i = 1; i <= k; ++i) {
        names.push_back("w" + std::to_string(i));
        weights.push_back(i);
        caps.push_back(0);
    }
    return std::make_shared<VarSpace>(std::move(names), std::move(weights), std::move(caps));
}

std::shared_ptr<const VarSpace> VarSpace::roots_e(unsigned n) {
    std::vector<std::string> names;
    std::vector<unsigned> weights;
    std::vector<Exp> caps;
    for (unsigned i = 1; i <= n; ++i) {
        names.push_back("e" + std::to_string(i));
        weights.push_back(1);
        caps.push_back(static_cast<Exp>(n));
    }
    return std::make_shared<VarSpace>(std::move(names), std::move(weights), std::move(caps));
}

unsigned VarSpace::degree(const std::vector<Exp>& exps) const {
    if (exps.size() != size()) throw usage_error("degree: exponent vector length mismatch");
    unsigned d = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) d += weights_[i] * exps[i];
    return d;
}

std::optional<std::size_t> VarSpace::find(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    unsigned da = space->degree(a.exps), db = space->degree(b.exps);
    if (da != db) return da < db;
    return a.exps > b.exps; // descending lex within a degree
}

Polynomial Polynomial::one(VarSpacePtr space) {
    Polynomial p(space);
    p.terms_.push_back(Monomial{std::vector<Exp>(space->size(), 0)});
    return p;
}

Polynomial Polynomial::variable(VarSpacePtr space, std::size_t i, Exp power) {
    if (i >= space->size()) throw usage_error("variable: index out of range");
    Monomial m{std::vector<Exp>(space->size(), 0)};
    m.exps[i] = power;
    return from_monomial(std::move(space), std::move(m));
}

Polynomial Polynomial::from_monomial(VarSpacePtr space, Monomial m) {
    return from_monomials(std::move(space), {std::move(m)});
}

Polynomial Polynomial::from_monomials(VarSpacePtr space, std::vector<Monomial> ms) {
    Polynomial p(space);
    for (auto& m : ms) {
        if (m.exps.size() != space->size())
            throw usage_error("from_monomials: exponent vector length mismatch");
        bool capped = false;
        for (std::size_t i = 0; i < m.exps.size(); ++i) {
            Exp cap = space->exp_cap(i);
            if (cap != 0 && m.exps[i] >= cap) { capped = true; break; }
        }
        if (!capped) p.terms_.push_back(std::move(m));
    }
    p.canonicalize();
    return p;
}

std::optional<unsigned> Polynomial::degree() const {
    if (terms_.empty()) return std::nullopt;
    return space_->degree(terms_.back().exps);
}

bool Polynomial::is_homogeneous() const {
    if (terms_.size() <= 1) return true;
    unsigned d0 = space_->degree(terms_.front().exps);
    return space_->degree(terms_.back().exps) == d0;
}

void Polynomial::canonicalize() {
    if (terms_.empty()) return;
    MonomialOrder less{space_.get()};
    std::sort(terms_.begin(), terms_.end(), less);
    // XOR semantics: an even number of copies cancels, an odd number keeps one.
    std::vector<Monomial> out;
    out.reserve(terms_.size());
    for (std::size_t i = 0; i < terms_.size();) {
        std::size_t j = i;
        while (j < terms_.size() && terms_[j] == terms_[i]) ++j;
        if ((j - i) % 2 == 1) out.push_back(std::move(terms_[i]));
        i = j;
    }
    terms_ = std::move(out);
}

void Polynomial::check_compatible(const Polynomial& a, const Polynomial& b) {
    if (!a.space_ || !b.space_) return; // universal zero combines with anything
    if (a.space_ != b.space_ && !(*a.space_ == *b.space_))
        throw usage_error("polynomial operands use different variable spaces");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    r += o;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_compatible(*this, o);
    if (!space_) space_ = o.space_;
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    canonicalize();
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_compatible(*this, o);
    VarSpacePtr sp = space_ ? space_ : o.space_;
    Polynomial r(sp);
    if (!sp || terms_.empty() || o.terms_.empty()) return r;
    const std::size_t nv = sp->size();
    r.terms_.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) {
            Monomial m{std::vector<Exp>(nv)};
            bool capped = false;
            for (std::size_t i = 0; i < nv; ++i) {
                unsigned s = static_cast<unsigned>(a.exps[i]) + b.exps[i];
                Exp cap = sp->exp_cap(i);
                if (cap != 0 && s >= cap) { capped = true; break; }
                if (s > 0xFFFFu) throw usage_error("exponent overflow in product");
                m.exps[i] = static_cast<Exp>(s);
            }
            if (!capped) r.terms_.push_back(std::move(m));
        }
    }
    r.canonicalize();
    return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (space_ && o.space_ && !(space_ == o.space_ || *space_ == *o.space_)) return false;
    return terms_ == o.terms_;
}

Polynomial Polynomial::pow(unsigned long long e) const {
    if (!space_) return *this; // 0^e for e>0; caller never asks for 0^0 of the universal zero
    if (e == 0) return one(space_);
    // Frobenius over GF(2): squaring acts term-by-term by doubling exponents.
    auto square = [](const Polynomial& p) {
        Polynomial r(p.space_);
        r.terms_.reserve(p.terms_.size());
        const std::size_t nv = p.space_->size();
        for (const auto& t : p.terms_) {
            Monomial m{std::vector<Exp>(nv)};
            bool capped = false;
            for (std::size_t i = 0; i < nv; ++i) {
                unsigned s = 2u * t.exps[i];
                Exp cap = p.space_->exp_cap(i);
                if (cap != 0 && s >= cap) { capped = true; break; }
                if (s > 0xFFFFu) throw usage_error("exponent overflow in square");
                m.exps[i] = static_cast<Exp>(s);
            }
            if (!capped) r.terms_.push_back(std::move(m));
        }
        r.canonicalize(); // distinct squares stay distinct, but caps may empty terms
        return r;
    };
    Polynomial base = *this;
    Polynomial acc = one(space_);
    while (e > 0) {
        if (e & 1ull) acc = acc * base;
        e >>= 1;
        if (e > 0) base = square(base);
    }
    return acc;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first_term = true;
    for (const auto& t : terms_) {
        if (!first_term) out << " + ";
        first_term = false;
        bool any = false;
        for (std::size_t i = 0; i < t.exps.size(); ++i) {
            if (t.exps[i] == 0) continue;
            if (any) out << "*";
            any = true;
            out << space_->name(i);
            if (t.exps[i] > 1) out << "^" << t.exps[i];
        }
        if (!any) out << "1";
    }
    return out.str();
}

namespace {

std::string strip(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) { parts.push_back(cur); cur.clear(); }
        else cur.push_back(c);
    }
    parts.push_back(cur);
    return parts;
}

} // namespace

Polynomial Polynomial::parse(VarSpacePtr space, const std::string& text) {
    std::string body = strip(text);
    if (body.empty()) throw usage_error("parse: empty polynomial text");
    std::vector<Monomial> ms;
    for (const std::string& raw_term : split(body, '+')) {
        std::string term = strip(raw_term);
        if (term.empty()) throw usage_error("parse: empty term");
        Monomial m{std::vector<Exp>(space->size(), 0)};
        bool is_zero_term = false;
        for (const std::string& raw_factor : split(term, '*')) {
            std::string f = strip(raw_factor);
            if (f.empty()) throw usage_error("parse: empty factor in '" + term + "'");
            if (f == "1") continue;
            if (f == "0") { is_zero_term = true; continue; }
            std::string name = f;
            unsigned long power = 1;
            if (auto caret = f.find('^'); caret != std::string::npos) {
                name = strip(f.substr(0, caret));
                std::string ptext = strip(f.substr(caret + 1));
                try {
                    std::size_t used = 0;
                    power = std::stoul(ptext, &used);
                    if (used != ptext.size()) throw usage_error("");
                } catch (const std::exception&) {
                    throw usage_error("parse: bad exponent '" + ptext + "'");
                }
            }
            auto idx = space->find(name);
            if (!idx) throw usage_error("parse: unknown variable '" + name + "'");
            unsigned long total = m.exps[*idx] + power;
            if (total > 0xFFFFul) throw usage_error("parse: exponent overflow");
            m.exps[*idx] = static_cast<Exp>(total);
        }
        if (!is_zero_term) ms.push_back(std::move(m));
    }
    return from_monomials(std::move(space), std::move(ms));
}

Polynomial elementary_symmetric(VarSpacePtr space,
                                const std::vector<std::size_t>& vars,
                                unsigned r) {
    for (std::size_t v : vars)
        if (v >= space->size()) throw usage_error("elementary_symmetric: index out of range");
    if (r > vars.size()) return Polynomial::zero(std::move(space));
    std::vector<Monomial> ms;
    std::vector<std::size_t> pick(r);
    // Enumerate r-subsets of vars.
    auto rec = [&](auto&& self, std::size_t start, unsigned depth) -> void {
        if (depth == r) {
            Monomial m{std::vector<Exp>(space->size(), 0)};
            for (unsigned i = 0; i < r; ++i) m.exps[vars[pick[i]]] = 1;
            ms.push_back(std::move(m));
            return;
        }
        for (std::size_t i = start; i + (r - depth) <= vars.size(); ++i) {
            pick[depth] = i;
            self(self, i + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
    return Polynomial::from_monomials(std::move(space), std::move(ms));
}

std::vector<Monomial> monomials_of_degree(const VarSpace& space, unsigned degree) {
    std::vector<Monomial> out;
    std::vector<Exp> cur(space.size(), 0);
    // Choose exponents left to right, largest first, so the output is already
    // in descending lex order within the degree.
    auto rec = [&](auto&& self, std::size_t var, unsigned remaining) -> void {
        if (var == space.size()) {
            if (remaining == 0) out.push_back(Monomial{cur});
            return;
        }
        if (var + 1 == space.size()) {
            unsigned w = space.weight(var);
            if (remaining % w == 0) {
                unsigned e = remaining / w;
                Exp cap = space.exp_cap(var);
                if (e <= 0xFFFFu && (cap == 0 || e < cap)) {
                    cur[var] = static_cast<Exp>(e);
                    out.push_back(Monomial{cur});
                    cur[var] = 0;
                }
            }
            return;
        }
        unsigned w = space.weight(var);
        unsigned emax = remaining / w;
        Exp cap = space.exp_cap(var);
        if (cap != 0 && emax >= cap) emax = cap - 1;
        if (emax > 0xFFFFu) emax = 0xFFFFu;
        for (int e = static_cast<int>(emax); e >= 0; --e) {
            cur[var] = static_cast<Exp>(e);
            self(self, var + 1, remaining - static_cast<unsigned>(e) * w);
            cur[var] = 0;
        }
    };
    if (space.size() == 0) {
        if (degree == 0) out.push_back(Monomial{{}});
        return out;
    }
    rec(rec, 0, degree);
    return out;
}

} // namespace grasstc

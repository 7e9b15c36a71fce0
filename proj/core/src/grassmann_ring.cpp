#include "grasstc/grassmann_ring.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "grasstc/errors.hpp"

namespace grasstc {

std::vector<Polynomial> dual_classes(unsigned k, unsigned limit) {
    auto sp = VarSpace::graded_w(k);
    std::vector<Polynomial> wbar;
    wbar.reserve(limit + 1);
    wbar.push_back(Polynomial::one(sp));
    for (unsigned j = 1; j <= limit; ++j) {
        Polynomial acc = Polynomial::zero(sp);
        for (unsigned i = 1; i <= std::min(j, k); ++i)
            acc += Polynomial::variable(sp, i - 1) * wbar[j - i];
        wbar.push_back(std::move(acc));
    }
    return wbar;
}

namespace {

// Monomials within one degree are sorted descending-lex; locate by binary search.
std::size_t monomial_index(const std::vector<Monomial>& monos, const std::vector<Exp>& exps) {
    auto it = std::lower_bound(monos.begin(), monos.end(), exps,
                               [](const Monomial& m, const std::vector<Exp>& e) {
                                   return m.exps > e;
                               });
    if (it == monos.end() || it->exps != exps)
        throw usage_error("internal: monomial not found in its degree block");
    return static_cast<std::size_t>(it - monos.begin());
}

} // namespace

GrassmannRing::GrassmannRing(unsigned k, unsigned n, std::size_t degree_block_bit_cap)
    : k_(k), n_(n), dim_(k * (n - k)), bit_cap_(degree_block_bit_cap),
      space_(VarSpace::graded_w(k)) {
    if (k > n) throw usage_error("GrassmannRing: k must satisfy 0 <= k <= n");
    wbar_ = dual_classes(k, n);
    slots_ = std::vector<Slot>(dim_ + 1);
}

bool GrassmannRing::has_block(unsigned degree) const {
    if (degree > dim_) return false;
    return slots_[degree].ready.load(std::memory_order_acquire) != nullptr;
}

const DegreeBlock& GrassmannRing::block(unsigned degree) const {
    if (degree > dim_)
        throw usage_error("block: degree exceeds the ring dimension; such pieces are zero");
    Slot& slot = slots_[degree];
    if (const DegreeBlock* b = slot.ready.load(std::memory_order_acquire)) return *b;
    std::lock_guard<std::mutex> lock(slot.m);
    if (const DegreeBlock* b = slot.ready.load(std::memory_order_acquire)) return *b;
    slot.storage = std::make_unique<DegreeBlock>(build_block(degree));
    slot.ready.store(slot.storage.get(), std::memory_order_release);
    return *slot.storage;
}

void GrassmannRing::inject_block(DegreeBlock blk) const {
    if (blk.degree > dim_) throw usage_error("inject_block: degree exceeds ring dimension");
    if (blk.normal_forms.size() != blk.monomials.size())
        throw usage_error("inject_block: one normal form per monomial required");
    for (std::size_t b : blk.basis)
        if (b >= blk.monomials.size()) throw usage_error("inject_block: basis index out of range");
    for (const auto& row : blk.normal_forms)
        if (row.size() != blk.basis.size())
            throw usage_error("inject_block: normal-form width mismatch");
    Slot& slot = slots_[blk.degree];
    std::lock_guard<std::mutex> lock(slot.m);
    if (slot.ready.load(std::memory_order_acquire)) return;
    slot.storage = std::make_unique<DegreeBlock>(std::move(blk));
    slot.ready.store(slot.storage.get(), std::memory_order_release);
}

DegreeBlock GrassmannRing::build_block(unsigned degree) const {
    DegreeBlock blk;
    blk.degree = degree;
    blk.monomials = monomials_of_degree(*space_, degree);
    const std::size_t cols = blk.monomials.size();

    // Relation generators in this degree: m * wbar_j for n-k+1 <= j <= n and
    // deg m = degree - j.
    std::vector<std::pair<unsigned, Monomial>> gens;
    for (unsigned j = n_ - k_ + 1; j <= n_; ++j) {
        if (j > degree) continue;
        for (auto& m : monomials_of_degree(*space_, degree - j))
            gens.emplace_back(j, std::move(m));
    }
    const std::size_t rows = gens.size();
    if (cols != 0 && rows != 0 && rows * cols > bit_cap_) {
        std::ostringstream msg;
        msg << "degree " << degree << " needs a " << rows << "x" << cols
            << " elimination (" << rows * cols << " bits), over the budget of "
            << bit_cap_ << "; raise the per-degree budget to proceed";
        throw infeasible_error(msg.str());
    }

    Gf2Rref rref(cols);
    for (const auto& [j, m] : gens) {
        Polynomial prod = Polynomial::from_monomial(space_, m) * wbar_[j];
        BitRow row(cols);
        for (const auto& t : prod.terms()) row.set(monomial_index(blk.monomials, t.exps));
        rref.insert(std::move(row));
    }

    blk.basis = rref.free_columns();
    std::vector<std::ptrdiff_t> free_pos(cols, -1);
    for (std::size_t b = 0; b < blk.basis.size(); ++b) free_pos[blk.basis[b]] = static_cast<std::ptrdiff_t>(b);

    blk.normal_forms.reserve(cols);
    for (std::size_t i = 0; i < cols; ++i) {
        BitRow unit(cols);
        unit.set(i);
        BitRow residual = rref.reduce(std::move(unit));
        BitRow packed(blk.basis.size());
        for (std::size_t c = 0; c < cols; ++c)
            if (residual.get(c)) packed.set(static_cast<std::size_t>(free_pos[c]));
        blk.normal_forms.push_back(std::move(packed));
    }
    return blk;
}

std::size_t GrassmannRing::basis_size(unsigned degree) const {
    if (degree > dim_) return 0;
    return block(degree).basis.size();
}

std::vector<Monomial> GrassmannRing::basis_monomials(unsigned degree) const {
    std::vector<Monomial> out;
    if (degree > dim_) return out;
    const DegreeBlock& blk = block(degree);
    out.reserve(blk.basis.size());
    for (std::size_t b : blk.basis) out.push_back(blk.monomials[b]);
    return out;
}

BitRow GrassmannRing::nf_row(const Monomial& m) const {
    unsigned d = space_->degree(m.exps);
    if (d > dim_) return BitRow(0);
    const DegreeBlock& blk = block(d);
    return blk.normal_forms[monomial_index(blk.monomials, m.exps)];
}

bool GrassmannRing::monomial_is_nonzero(const std::vector<Exp>& exps) const {
    if (exps.size() != space_->size())
        throw usage_error("monomial_is_nonzero: exponent vector length mismatch");
    unsigned d = space_->degree(exps);
    if (d > dim_) return false;
    const DegreeBlock& blk = block(d);
    return blk.normal_forms[monomial_index(blk.monomials, exps)].any();
}

Polynomial GrassmannRing::normal_form(const Polynomial& p) const {
    if (!p.space()) return Polynomial::zero(space_);
    if (!(*p.space() == *space_))
        throw usage_error("normal_form: polynomial is over a different variable space");
    // Accumulate degree by degree over the basis, then expand back.
    std::vector<Monomial> out;
    std::size_t i = 0;
    const auto& terms = p.terms();
    while (i < terms.size()) {
        unsigned d = space_->degree(terms[i].exps);
        std::size_t j = i;
        while (j < terms.size() && space_->degree(terms[j].exps) == d) ++j;
        if (d <= dim_) {
            const DegreeBlock& blk = block(d);
            BitRow acc(blk.basis.size());
            for (std::size_t t = i; t < j; ++t)
                acc ^= blk.normal_forms[monomial_index(blk.monomials, terms[t].exps)];
            for (std::size_t b = 0; b < blk.basis.size(); ++b)
                if (acc.get(b)) out.push_back(blk.basis_monomial(b));
        }
        i = j;
    }
    return Polynomial::from_monomials(space_, std::move(out));
}

bool GrassmannRing::is_nonzero(const Polynomial& p) const {
    return !normal_form(p).is_zero();
}

unsigned GrassmannRing::height(std::size_t var_index) const {
    if (var_index >= k_) throw usage_error("height: variable index out of range");
    unsigned w = space_->weight(var_index);
    unsigned h = 0;
    for (unsigned e = 1; w * e <= dim_; ++e) {
        std::vector<Exp> exps(k_, 0);
        exps[var_index] = static_cast<Exp>(e);
        if (!monomial_is_nonzero(exps)) break;
        h = e;
    }
    return h;
}

std::vector<unsigned> GrassmannRing::heights() const {
    std::vector<unsigned> out;
    out.reserve(k_);
    for (std::size_t i = 0; i < k_; ++i) out.push_back(height(i));
    return out;
}

GrassmannRing::CupLengthResult GrassmannRing::max_monomial_cup_length() const {
    CupLengthResult best;
    best.witness.assign(k_, 0);
    for (unsigned d = 1; d <= dim_; ++d) {
        const DegreeBlock& blk = block(d);
        for (std::size_t i = 0; i < blk.monomials.size(); ++i) {
            if (!blk.normal_forms[i].any()) continue;
            const auto& e = blk.monomials[i].exps;
            unsigned total = 0;
            for (Exp x : e) total += x;
            if (total > best.length || (total == best.length && e > best.witness)) {
                best.length = total;
                best.witness = e;
            }
        }
    }
    return best;
}

Polynomial GrassmannRing::reduced_relation(unsigned j) const {
    if (j < n_ - k_ + 1 || j > n_)
        throw usage_error("reduced_relation: index outside the relation range");
    auto monos = monomials_of_degree(*space_, j);
    Gf2Rref rref(monos.size());
    for (unsigned i = n_ - k_ + 1; i < j; ++i) {
        for (const auto& m : monomials_of_degree(*space_, j - i)) {
            Polynomial prod = Polynomial::from_monomial(space_, m) * wbar_[i];
            BitRow row(monos.size());
            for (const auto& t : prod.terms()) row.set(monomial_index(monos, t.exps));
            rref.insert(std::move(row));
        }
    }
    BitRow row(monos.size());
    for (const auto& t : wbar_[j].terms()) row.set(monomial_index(monos, t.exps));
    BitRow residual = rref.reduce(std::move(row));
    std::vector<Monomial> terms;
    for (std::size_t c = 0; c < monos.size(); ++c)
        if (residual.get(c)) terms.push_back(monos[c]);
    return Polynomial::from_monomials(space_, std::move(terms));
}

} // namespace grasstc

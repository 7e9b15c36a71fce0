#include "grasstc/tensor_ring.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "grasstc/errors.hpp"

namespace grasstc {

unsigned long long rho(unsigned long long m) {
    unsigned long long r = 1;
    while (r <= m) r <<= 1;
    return r;
}

namespace {

bool term_less(const TensorTerm& a, const TensorTerm& b) {
    if (a.left.exps != b.left.exps) return a.left.exps < b.left.exps;
    return a.right.exps < b.right.exps;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial m{a.exps};
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
        unsigned s = static_cast<unsigned>(m.exps[i]) + b.exps[i];
        if (s > 0xFFFFu) throw usage_error("tensor term exponent overflow");
        m.exps[i] = static_cast<Exp>(s);
    }
    return m;
}

} // namespace

TensorElement tensor_canonical(std::vector<TensorTerm> terms) {
    std::sort(terms.begin(), terms.end(), term_less);
    std::vector<TensorTerm> out;
    out.reserve(terms.size());
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i;
        while (j < terms.size() && terms[j] == terms[i]) ++j;
        if ((j - i) % 2 == 1) out.push_back(std::move(terms[i]));
        i = j;
    }
    return TensorElement{std::move(out)};
}

TensorElement tensor_add(const TensorElement& a, const TensorElement& b) {
    std::vector<TensorTerm> terms = a.terms;
    terms.insert(terms.end(), b.terms.begin(), b.terms.end());
    return tensor_canonical(std::move(terms));
}

TensorElement tensor_mul(const TensorElement& a, const TensorElement& b) {
    std::vector<TensorTerm> terms;
    terms.reserve(a.terms.size() * b.terms.size());
    for (const auto& x : a.terms)
        for (const auto& y : b.terms)
            terms.push_back(TensorTerm{mono_mul(x.left, y.left), mono_mul(x.right, y.right)});
    return tensor_canonical(std::move(terms));
}

TensorElement TensorRing::zbar(std::size_t i) const {
    const unsigned k = ring_->k();
    if (i >= k) throw usage_error("zbar: variable index out of range");
    Monomial unit{std::vector<Exp>(k, 0)};
    Monomial wi{std::vector<Exp>(k, 0)};
    wi.exps[i] = 1;
    return tensor_canonical({TensorTerm{wi, unit}, TensorTerm{unit, wi}});
}

TensorElement TensorRing::z_power_product(const std::vector<Exp>& m) const {
    const unsigned k = ring_->k();
    if (m.size() != k) throw usage_error("z_power_product: exponent vector length mismatch");
    Monomial unit{std::vector<Exp>(k, 0)};
    TensorElement acc{{TensorTerm{unit, unit}}};
    for (std::size_t i = 0; i < k; ++i) {
        if (m[i] == 0) continue;
        // Binomial parity: only submask splits of the exponent survive.
        std::vector<TensorTerm> terms;
        unsigned mi = m[i];
        for (unsigned j = mi;; j = (j - 1) & mi) {
            Monomial l{std::vector<Exp>(k, 0)}, r{std::vector<Exp>(k, 0)};
            l.exps[i] = static_cast<Exp>(j);
            r.exps[i] = static_cast<Exp>(mi - j);
            terms.push_back(TensorTerm{std::move(l), std::move(r)});
            if (j == 0) break;
        }
        acc = tensor_mul(acc, TensorElement{std::move(terms)});
    }
    return acc;
}

bool TensorRing::element_is_nonzero(const TensorElement& t) const {
    const auto& sp = *ring_->space();
    const unsigned dim = ring_->dim();
    // Group term indices by bidegree; distinct bidegrees cannot cancel.
    std::map<std::pair<unsigned, unsigned>, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < t.terms.size(); ++i) {
        unsigned dl = sp.degree(t.terms[i].left.exps);
        unsigned dr = sp.degree(t.terms[i].right.exps);
        if (dl > dim || dr > dim) continue;
        groups[{dl, dr}].push_back(i);
    }
    for (const auto& [bideg, idxs] : groups) {
        std::size_t bl = ring_->basis_size(bideg.first);
        std::size_t br = ring_->basis_size(bideg.second);
        if (bl == 0 || br == 0) continue;
        std::vector<BitRow> outer(bl, BitRow(br));
        for (std::size_t i : idxs) {
            BitRow rl = ring_->nf_row(t.terms[i].left);
            if (!rl.any()) continue;
            BitRow rr = ring_->nf_row(t.terms[i].right);
            if (!rr.any()) continue;
            for (std::size_t b = 0; b < bl; ++b)
                if (rl.get(b)) outer[b] ^= rr;
        }
        for (const auto& row : outer)
            if (row.any()) return true;
    }
    return false;
}

bool TensorRing::tensor_is_nonzero(const std::vector<Exp>& m) const {
    return element_is_nonzero(z_power_product(m));
}

unsigned TensorRing::z_height(std::size_t i) const {
    const unsigned k = ring_->k();
    if (i >= k) throw usage_error("z_height: variable index out of range");
    const unsigned weight = static_cast<unsigned>(i) + 1;
    unsigned h = 0;
    for (unsigned e = 1; weight * e <= 2 * ring_->dim(); ++e) {
        std::vector<Exp> m(k, 0);
        m[i] = static_cast<Exp>(e);
        if (!tensor_is_nonzero(m)) break;
        h = e;
    }
    return h;
}

namespace {

// Enumerate exponent vectors with sum target, per-variable caps, and weighted
// total at most wbound, in descending lexicographic order; stop on success.
bool enumerate_lex_desc(std::size_t var, unsigned target, unsigned wused,
                        const std::vector<unsigned>& caps,
                        const std::vector<unsigned>& cap_suffix,
                        unsigned wbound, std::vector<Exp>& m,
                        const std::function<bool(const std::vector<Exp>&)>& test) {
    const std::size_t kk = caps.size();
    if (var == kk) return target == 0 && test(m);
    unsigned weight = static_cast<unsigned>(var) + 1;
    unsigned room_after = cap_suffix[var + 1];
    unsigned lo = target > room_after ? target - room_after : 0;
    unsigned hi = std::min(caps[var], target);
    // Weighted feasibility: what we place here plus the cheapest placement of
    // the remainder must stay under wbound.
    for (unsigned e = hi + 1; e-- > lo;) {
        unsigned w_here = wused + weight * e;
        unsigned rem = target - e;
        unsigned cheapest_rest = rem * (weight + 1); // later variables are heavier
        if (w_here + cheapest_rest > wbound) continue;
        m[var] = static_cast<Exp>(e);
        if (enumerate_lex_desc(var + 1, rem, w_here, caps, cap_suffix, wbound, m, test))
            return true;
    }
    m[var] = 0;
    return false;
}

} // namespace

TensorRing::ZclResult TensorRing::zcl_basic() const {
    const unsigned k = ring_->k();
    ZclResult result;
    result.witness.assign(k, 0);
    if (k == 0 || ring_->dim() == 0) return result;
    std::vector<unsigned> caps(k);
    for (std::size_t i = 0; i < k; ++i) caps[i] = z_height(i);
    std::vector<unsigned> cap_suffix(k + 1, 0);
    for (std::size_t i = k; i-- > 0;) cap_suffix[i] = cap_suffix[i + 1] + caps[i];
    const unsigned wbound = 2 * ring_->dim();
    std::vector<Exp> m(k, 0);
    auto test = [this](const std::vector<Exp>& cand) { return tensor_is_nonzero(cand); };
    for (unsigned target = cap_suffix[0]; target-- > 0;) {
        unsigned N = target + 1;
        if (enumerate_lex_desc(0, N, 0, caps, cap_suffix, wbound, m, test)) {
            result.length = N;
            result.witness = m;
            return result;
        }
    }
    return result;
}

TensorRing::ZclResult TensorRing::zcl_exact() const {
    // See the header note: cofactors cannot rescue a vanishing generator
    // product, so the exact search over kernel elements reduces to zcl_basic.
    return zcl_basic();
}

namespace {

// Flattened indexing of basis-monomial pairs across all bidegrees of one
// total degree.
struct PairSpace {
    struct Block {
        unsigned dl, dr;
        std::vector<Monomial> bl, br;
        std::size_t offset;
    };
    std::vector<Block> blocks;
    std::size_t total = 0;

    PairSpace(const GrassmannRing& ring, unsigned degree) {
        unsigned dim = ring.dim();
        unsigned dl_max = std::min(degree, dim);
        for (unsigned dl = 0; dl <= dl_max; ++dl) {
            unsigned dr = degree - dl;
            if (dr > dim) continue;
            Block blk;
            blk.dl = dl;
            blk.dr = dr;
            blk.bl = ring.basis_monomials(dl);
            blk.br = ring.basis_monomials(dr);
            blk.offset = total;
            total += blk.bl.size() * blk.br.size();
            blocks.push_back(std::move(blk));
        }
    }
};

} // namespace

std::vector<TensorElement> TensorRing::kernel_basis(unsigned total_degree) const {
    PairSpace ps(*ring_, total_degree);
    const std::size_t P = ps.total;
    const std::size_t B = ring_->basis_size(total_degree);
    // Augmented elimination: image part in columns [0,B), tracking part in
    // [B, B+P). Pivots are chosen in the image part only; a row whose image
    // reduces to zero hands its tracking part to the kernel.
    std::vector<BitRow> rows;          // stored reduced rows
    std::vector<std::size_t> pivots;   // pivot column of each stored row
    std::vector<TensorElement> kernel;

    auto sp = ring_->space();
    std::size_t pair_index = 0;
    for (const auto& blk : ps.blocks) {
        for (std::size_t li = 0; li < blk.bl.size(); ++li) {
            for (std::size_t ri = 0; ri < blk.br.size(); ++ri, ++pair_index) {
                BitRow row(B + P);
                Polynomial prod = Polynomial::from_monomial(sp, blk.bl[li]) *
                                  Polynomial::from_monomial(sp, blk.br[ri]);
                for (const auto& t : prod.terms()) {
                    BitRow nf = ring_->nf_row(t);
                    for (std::size_t b = 0; b < nf.size(); ++b)
                        if (nf.get(b)) row.get(b) ? row.clear(b) : row.set(b);
                }
                row.set(B + pair_index);
                for (std::size_t r = 0; r < rows.size(); ++r)
                    if (row.get(pivots[r])) row ^= rows[r];
                std::optional<std::size_t> piv;
                for (std::size_t c = 0; c < B; ++c)
                    if (row.get(c)) { piv = c; break; }
                if (piv) {
                    for (std::size_t r = 0; r < rows.size(); ++r)
                        if (rows[r].get(*piv)) rows[r] ^= row;
                    rows.push_back(std::move(row));
                    pivots.push_back(*piv);
                } else {
                    std::vector<TensorTerm> terms;
                    std::size_t scan = 0;
                    for (const auto& b2 : ps.blocks)
                        for (std::size_t l2 = 0; l2 < b2.bl.size(); ++l2)
                            for (std::size_t r2 = 0; r2 < b2.br.size(); ++r2, ++scan)
                                if (row.get(B + scan))
                                    terms.push_back(TensorTerm{b2.bl[l2], b2.br[r2]});
                    kernel.push_back(tensor_canonical(std::move(terms)));
                }
            }
        }
    }
    return kernel;
}

bool TensorRing::kernel_matches_ideal(unsigned total_degree) const {
    const unsigned k = ring_->k();
    PairSpace ps(*ring_, total_degree);
    const std::size_t P = ps.total;
    const std::size_t B = ring_->basis_size(total_degree);

    // Rank of the multiplication map at this degree.
    Gf2Rref mult(B);
    std::vector<BitRow> mult_rows;
    mult_rows.reserve(P);
    auto sp = ring_->space();
    for (const auto& blk : ps.blocks) {
        for (const auto& lm : blk.bl) {
            for (const auto& rm : blk.br) {
                BitRow row(B);
                Polynomial prod = Polynomial::from_monomial(sp, lm) *
                                  Polynomial::from_monomial(sp, rm);
                for (const auto& t : prod.terms()) {
                    BitRow nf = ring_->nf_row(t);
                    row ^= nf;
                }
                mult_rows.push_back(row);
                mult.insert(std::move(row));
            }
        }
    }
    const std::size_t kernel_dim = P - mult.rank();

    // Span of generator multiples landing in this degree.
    auto locate = [&ps](unsigned dl, std::size_t li, std::size_t ri) -> std::size_t {
        for (const auto& blk : ps.blocks)
            if (blk.dl == dl) return blk.offset + li * blk.br.size() + ri;
        throw usage_error("internal: bidegree not present in pair space");
    };
    auto basis_position = [this](unsigned degree, const Monomial& m) -> std::size_t {
        const DegreeBlock& blk = ring_->block(degree);
        for (std::size_t b = 0; b < blk.basis.size(); ++b)
            if (blk.basis_monomial(b) == m) return b;
        throw usage_error("internal: monomial is not a basis element");
    };

    Gf2Rref ideal(P);
    for (unsigned gi = 0; gi < k; ++gi) {
        const unsigned gw = gi + 1;
        if (total_degree < gw) continue;
        PairSpace src(*ring_, total_degree - gw);
        for (const auto& blk : src.blocks) {
            for (const auto& lm : blk.bl) {
                for (const auto& rm : blk.br) {
                    BitRow row(P);
                    // (w_g * lm) (x) rm
                    if (blk.dl + gw <= ring_->dim()) {
                        Monomial shifted{lm.exps};
                        shifted.exps[gi] = static_cast<Exp>(shifted.exps[gi] + 1);
                        BitRow nf = ring_->nf_row(shifted);
                        std::size_t rpos = basis_position(blk.dr, rm);
                        for (std::size_t b = 0; b < nf.size(); ++b) {
                            if (!nf.get(b)) continue;
                            std::size_t idx = locate(blk.dl + gw, b, rpos);
                            row.get(idx) ? row.clear(idx) : row.set(idx);
                        }
                    }
                    // lm (x) (w_g * rm)
                    if (blk.dr + gw <= ring_->dim()) {
                        Monomial shifted{rm.exps};
                        shifted.exps[gi] = static_cast<Exp>(shifted.exps[gi] + 1);
                        BitRow nf = ring_->nf_row(shifted);
                        std::size_t lpos = basis_position(blk.dl, lm);
                        for (std::size_t b = 0; b < nf.size(); ++b) {
                            if (!nf.get(b)) continue;
                            std::size_t idx = locate(blk.dl, lpos, b);
                            row.get(idx) ? row.clear(idx) : row.set(idx);
                        }
                    }
                    if (!row.any()) continue;
                    // Sanity: every generator multiple must die under the
                    // multiplication map.
                    BitRow image(B);
                    for (std::size_t p = 0; p < P; ++p)
                        if (row.get(p)) image ^= mult_rows[p];
                    if (image.any()) return false;
                    ideal.insert(std::move(row));
                }
            }
        }
    }
    return ideal.rank() == kernel_dim;
}

} // namespace grasstc

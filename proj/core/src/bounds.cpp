#include "grasstc/bounds.hpp"

#include "grasstc/errors.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace grasstc {

unsigned s_of(unsigned n) {
    if (n < 2)
        throw usage_error("s_of: need n >= 2");
    // 2^s < n <= 2^{s+1}, i.e. s+1 = ceil(log2 n) = bit_width(n-1).
    return static_cast<unsigned>(std::bit_width(n - 1)) - 1;
}

ClosedFormPrediction closed_form_height_w1(unsigned k, unsigned n) {
    ClosedFormPrediction p;
    p.k = k;
    p.n = n;
    if (k < 2 || 2 * k > n) {
        p.reason = "defined for 2 <= k <= n/2";
        return p;
    }
    p.s = s_of(n);
    p.applicable = true;
    p.claimed_exact = true;
    const unsigned pow = 1u << (p.s + 1);
    if (k == 2 || (k == 3 && n == (1u << p.s) + 1)) {
        p.value = pow - 2;
        p.reason = "reduced case: k = 2, or k = 3 with n = 2^s + 1";
    } else {
        p.value = pow - 1;
        p.reason = "generic case";
    }
    return p;
}

ClosedFormPrediction closed_form_zcl(unsigned k, unsigned n) {
    ClosedFormPrediction p;
    p.k = k;
    p.n = n;
    if (n < 2 * k || n < 2) {
        p.reason = "defined for k <= n/2";
        return p;
    }
    const unsigned s = s_of(n);
    p.s = s;
    const unsigned pw = 1u << s;       // 2^s
    const unsigned pw1 = 1u << (s + 1); // 2^{s+1}
    if (k == 2) {
        p.applicable = true;
        p.claimed_exact = true;
        p.t = n - pw;
        p.value = pw1 + static_cast<unsigned>(rho(n - 1 - pw)) - 2;
        p.witness = {pw1 - 1, static_cast<unsigned>(rho(n - 1 - pw)) - 1};
        p.reason = "rank-2 closed form";
        return p;
    }
    if (k == 3) {
        const unsigned t = n - pw; // 1 <= t <= 2^s
        p.t = t;
        p.applicable = true;
        p.claimed_exact = true;
        if (t == 1) {
            p.value = 3 * pw - 2;
            p.witness = {pw1 - 1, pw - 1, 0};
            p.reason = "rank-3 closed form, offset 1";
        } else if (t == 2) {
            p.value = 3 * pw - 1;
            p.witness = {pw1 - 1, pw - 1, 1};
            p.reason = "rank-3 closed form, offset 2";
        } else {
            p.value = 4 * pw + static_cast<unsigned>(rho(t - 3)) - 3;
            p.witness = {pw1 - 1, pw1 - 1, static_cast<unsigned>(rho(t - 3)) - 1};
            p.reason = "rank-3 closed form, offset >= 3";
        }
        return p;
    }
    if (k == 4) {
        // Applicable band: 2^s + 2^{s-1} + 3 <= n <= 2^{s+1}.
        if (s >= 1 && n >= pw + pw / 2 + 3) {
            const unsigned t = n - pw - pw / 2; // 3 <= t <= 2^{s-1}
            p.t = t;
            p.applicable = true;
            p.claimed_exact = true;
            p.value = 5 * pw + static_cast<unsigned>(rho(t - 3)) - 4;
            p.witness = {pw1 - 1, pw1 - 1, pw - 1, static_cast<unsigned>(rho(t - 3)) - 1};
            p.reason = "rank-4 closed form";
            return p;
        }
        p.reason = "rank-4 band requires 2^s + 2^{s-1} + 3 <= n <= 2^{s+1}";
        return p;
    }
    p.reason = "no closed form for this rank";
    return p;
}

ClosedFormPrediction closed_form_tc_lower(unsigned k, unsigned n) {
    ClosedFormPrediction p;
    p.k = k;
    p.n = n;
    if (k < 3 || n < 2 * k) {
        p.reason = "defined for 3 <= k <= n/2";
        return p;
    }
    p.s = s_of(n);
    unsigned best = 0;
    std::string why;
    std::vector<unsigned> wit;
    for (unsigned s = 2; (1u << s) <= n; ++s) {
        const unsigned pw = 1u << s;
        if (k <= pw && n >= pw + k) {
            const unsigned v = 4 * pw - 1;
            if (v > best) {
                best = v;
                std::ostringstream os;
                os << "two squared z-classes at s = " << s;
                why = os.str();
                wit.assign(k, 0);
                wit[0] = 2 * pw - 1;
                wit[1] = 2 * pw - 1;
                p.s = s;
                p.t = 1;
            }
        }
        if (s >= 1 && k <= pw / 2 && n >= pw + pw / 2 + k) {
            const unsigned v = 5 * pw - 2;
            if (v > best) {
                best = v;
                std::ostringstream os;
                os << "three z-classes at s = " << s;
                why = os.str();
                wit.assign(k, 0);
                wit[0] = 2 * pw - 1;
                wit[1] = 2 * pw - 1;
                wit[2] = pw - 1;
                p.s = s;
                p.t = 2;
            }
        }
    }
    if (best == 0) {
        p.reason = "no product case applies";
        return p;
    }
    p.applicable = true;
    p.claimed_exact = false;
    p.value = best;
    p.reason = why;
    p.witness = std::move(wit);
    return p;
}

namespace {

void push_claim(std::vector<ProductClaim>& out, ProductClaim::Kind kind,
                std::string id, std::vector<unsigned> e,
                std::vector<unsigned> e2 = {}) {
    out.push_back(ProductClaim{kind, std::move(id), std::move(e), std::move(e2)});
}

} // namespace

std::vector<ProductClaim> predict_products(unsigned k, unsigned n) {
    std::vector<ProductClaim> out;
    if (k < 2 || 2 * k > n)
        return out;
    const unsigned s = s_of(n);
    const unsigned pw = 1u << s;
    const unsigned pw1 = 1u << (s + 1);
    using K = ProductClaim::Kind;

    if (k == 2) {
        // Split powers around 2^s, their first vanishing, and the doubled
        // maximal product (which realizes the full cup-length).
        push_claim(out, K::monomial_nonzero, "pow-split/nonzero", {pw, n - pw - 1});
        push_claim(out, K::monomial_zero, "pow-split/zero", {pw, n - pw});
        push_claim(out, K::monomial_nonzero, "max-product/k2", {pw1 - 2, n - pw - 1});
        push_claim(out, K::cup_maximal, "max-product/k2/maximal", {pw1 - 2, n - pw - 1});
    }

    if (k == 3) {
        // Half-power products just past a power of two. The smallest band
        // (s = 2) is excluded: the products' degrees exceed the dimension.
        if (n == pw + 1 && s >= 3) {
            push_claim(out, K::monomial_nonzero, "half-step/nonzero", {pw, pw / 2, 0});
            push_claim(out, K::monomial_zero, "half-step/zero", {pw, pw / 2, 1});
        }
        if (n == pw + 2 && s >= 3) {
            push_claim(out, K::monomial_nonzero, "half-step-plus/nonzero", {pw, pw / 2, 1});
            push_claim(out, K::monomial_zero, "half-step-plus/zero", {pw, pw / 2, 2});
        }
        // Top-dimensional product for offsets t >= 3.
        const unsigned t = n - pw;
        if (t >= 3)
            push_claim(out, K::monomial_nonzero, "top-cell/nonzero", {pw, pw, t - 3});

        // Maximal factor-count products, rank 3.
        std::vector<unsigned> e;
        if (n == pw1) {
            e = {pw1 - 1, pw1 - 4, 0};
        } else {
            const unsigned m = pw1 + 1 - n; // 2 <= m <= 2^s here
            unsigned p2 = 1;
            while ((1u << p2) < m)
                ++p2; // 2^{p2-1} < m <= 2^{p2}
            const unsigned tt = (1u << p2) - m;
            if (tt == 0)
                e = {pw1 - 2, pw1 - 3 * (1u << (p2 - 1)) - 2, 0};
            else
                e = {pw1 - 1, pw1 - 3 * (1u << (p2 - 1)) - 1, tt - 1};
        }
        push_claim(out, K::monomial_nonzero, "max-product/k3", e);
        push_claim(out, K::cup_maximal, "max-product/k3/maximal", e);
    }

    if (k == 4) {
        // Maximal factor-count products, rank 4.
        if (n == pw + 1) {
            push_claim(out, K::monomial_nonzero, "max-product/k4a",
                       {pw1 - 2, pw - 5, 0, 0});
            push_claim(out, K::cup_maximal, "max-product/k4a/maximal",
                       {pw1 - 2, pw - 5, 0, 0});
            push_claim(out, K::monomial_nonzero, "max-product/k4b",
                       {pw1 - 1, pw - 7, 1, 0});
        } else {
            const unsigned x = n - pw - 1; // x >= 1
            unsigned r = 0;
            while ((2u << r) <= x)
                ++r; // 2^r <= x < 2^{r+1}
            const unsigned tt = x - (1u << r);
            push_claim(out, K::monomial_nonzero, "max-product/k4a",
                       {pw1 - 2, pw + (2u << r) - 5, 0, tt});
            push_claim(out, K::cup_maximal, "max-product/k4a/maximal",
                       {pw1 - 2, pw + (2u << r) - 5, 0, tt});
            if (r > 0)
                push_claim(out, K::monomial_nonzero, "max-product/k4b",
                           {pw1 - 1, pw + (2u << r) - 7, 1, tt});
        }
        // Quadruple product in the upper band.
        if (s >= 1 && n >= pw + pw / 2 + 3 && n <= pw1) {
            const unsigned t = n - pw - pw / 2;
            push_claim(out, K::monomial_nonzero, "quad-product/nonzero",
                       {pw, pw, pw / 2, t - 3});
        }
    }

    if (k >= 3) {
        // Squared-pair identity at the exact balance point n = 2^s + k.
        const unsigned q = n - k;
        if ((q & (q - 1)) == 0 && k <= q) { // q a power of two, k <= 2^s
            std::vector<unsigned> a(k, 0), b(k, 0), c(k, 0);
            a[0] = q;
            a[1] = q;
            b[2] = q;
            c[0] = q;
            c[1] = q;
            c[2] = q;
            push_claim(out, K::monomial_nonzero, "square-pair/nonzero", a);
            push_claim(out, K::nf_equal, "square-pair/identity", a, b);
            push_claim(out, K::monomial_zero, "square-triple/zero", c);
        }
        // Triple product at n = 2^s + 2^{s-1} + k with k <= 2^{s-1}.
        for (unsigned ss = 2; (1u << ss) <= n; ++ss) {
            const unsigned q = 1u << ss;
            if (n == q + q / 2 + k && k >= 3 && k <= q / 2) {
                std::vector<unsigned> e(k, 0);
                e[0] = q;
                e[1] = q;
                e[2] = q / 2;
                push_claim(out, K::monomial_nonzero, "square-triple-half/nonzero", e);
            }
        }
    }
    return out;
}

unsigned tc_upper(const GrassmannRing& ring) {
    const unsigned dim = ring.dim();
    if (dim == 0)
        return 1;
    std::vector<Exp> top(ring.k(), 0);
    top[0] = static_cast<Exp>(dim);
    return ring.monomial_is_nonzero(top) ? 2 * dim : 2 * dim - 1;
}

bool tc_upper_exception_listed(unsigned k, unsigned n) {
    auto is_pow2 = [](unsigned v) { return v >= 1 && (v & (v - 1)) == 0; };
    if (k == 1 && is_pow2(n))
        return true;
    if (k == 2 && n >= 2 && is_pow2(n - 1))
        return true;
    return false;
}

BoundsReport bounds_report(unsigned k, unsigned n, std::uint64_t degree_block_bit_cap) {
    if (k == 0 || k >= n)
        throw usage_error("bounds_report: need 1 <= k < n");
    BoundsReport r;
    r.k = k;
    r.n = n;
    r.dim = k * (n - k);
    const unsigned keff = std::min(k, n - k);
    r.complement_used = keff != k;

    {
        auto zc = closed_form_zcl(keff, n);
        if (zc.applicable)
            r.closed_zcl = zc;
        auto tl = closed_form_tc_lower(keff, n);
        if (tl.applicable)
            r.closed_tc_lower = tl;
    }
    if (tc_upper_exception_listed(keff, n))
        r.exceptions.push_back("known sharper upper-bound case");
    if (keff == 2 && ((n - 1) & (n - 2)) == 0 && n >= 3)
        r.exceptions.push_back("sharpness of the upper bound is an open case");

    r.cat_upper = r.dim + 1;
    try {
        GrassmannRing ring(keff, n, degree_block_bit_cap);
        r.heights = ring.heights();
        auto cup = ring.max_monomial_cup_length();
        r.cup_length = cup.length;
        r.cup_witness = cup.witness;
        r.cat_lower = cup.length + 1;

        TensorRing tr(ring);
        auto z = tr.zcl_basic();
        r.zcl = z.length;
        r.zcl_witness = z.witness;
        r.tc_lower = std::max(z.length + 1, r.cat_lower);
        r.tc_upper = std::min(tc_upper(ring), 2 * r.cat_upper - 1);
    } catch (const infeasible_error& e) {
        r.partial = true;
        r.partial_reason = e.what();
        r.tc_upper = 2 * r.cat_upper - 1;
        if (r.closed_tc_lower)
            r.tc_lower = std::max(r.tc_lower, r.closed_tc_lower->value);
        if (r.cat_lower == 0)
            r.cat_lower = 1;
        if (r.tc_lower == 0)
            r.tc_lower = 1;
    }
    return r;
}

unsigned complex_tc(unsigned k, unsigned n) {
    if (k == 0 || k > n)
        throw usage_error("complex_tc: need 1 <= k <= n");
    return 2 * k * (n - k) + 1;
}

MonotonicityReport monotonicity_report(unsigned k, unsigned m, unsigned n,
                                       std::uint64_t degree_block_bit_cap) {
    if (!(2 * k <= m && m <= n))
        throw usage_error("monotonicity_report: need 2k <= m <= n");
    MonotonicityReport rep;
    rep.k = k;
    rep.m = m;
    rep.n = n;
    rep.cat_threshold = (k - 1) * (m - k) + 1;
    rep.tc_threshold = (2 * k - 1) * (m - k) + 1;

    BoundsReport b = bounds_report(k, n, degree_block_bit_cap);
    rep.cat_lower_n = b.cat_lower;
    rep.tc_lower_n = b.tc_lower;

    std::ostringstream cs, ts;
    if (rep.cat_lower_n > rep.cat_threshold) {
        rep.cat_met = true;
        cs << "established: cat(G_" << k << "(R^" << m << ")) <= cat(G_" << k
           << "(R^" << n << ")) (lower bound " << rep.cat_lower_n
           << " exceeds threshold " << rep.cat_threshold << ")";
    } else {
        cs << "criterion not met (inconclusive): lower bound " << rep.cat_lower_n
           << " does not exceed threshold " << rep.cat_threshold;
    }
    if (rep.tc_lower_n > rep.tc_threshold) {
        rep.tc_met = true;
        ts << "established: TC(G_" << k << "(R^" << m << ")) <= TC(G_" << k
           << "(R^" << n << ")) (lower bound " << rep.tc_lower_n
           << " exceeds threshold " << rep.tc_threshold << ")";
    } else {
        ts << "criterion not met (inconclusive): lower bound " << rep.tc_lower_n
           << " does not exceed threshold " << rep.tc_threshold;
    }
    rep.cat_statement = cs.str();
    rep.tc_statement = ts.str();
    return rep;
}

} // namespace grasstc

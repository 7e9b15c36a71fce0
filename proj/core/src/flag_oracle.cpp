#include "grasstc/flag_oracle.hpp"

#include <algorithm>
#include <numeric>

#include "grasstc/errors.hpp"

namespace grasstc {

Polynomial pi_star(unsigned k, unsigned n, const Polynomial& p) {
    if (k > n) throw usage_error("pi_star: k must not exceed n");
    auto esp = VarSpace::roots_e(n);
    if (!p.space()) return Polynomial::zero(esp);
    if (p.space()->size() != k)
        throw usage_error("pi_star: polynomial must be over the rank-k space");
    std::vector<std::size_t> first(k);
    std::iota(first.begin(), first.end(), 0);
    std::vector<Polynomial> img;
    img.reserve(k);
    for (unsigned i = 1; i <= k; ++i) img.push_back(elementary_symmetric(esp, first, i));
    Polynomial out = Polynomial::zero(esp);
    for (const auto& t : p.terms()) {
        Polynomial term = Polynomial::one(esp);
        for (unsigned i = 0; i < k; ++i)
            if (t.exps[i] != 0) term *= img[i].pow(t.exps[i]);
        out += term;
    }
    return out;
}

Polynomial dual_image(unsigned k, unsigned n, unsigned j) {
    if (k > n) throw usage_error("dual_image: k must not exceed n");
    auto esp = VarSpace::roots_e(n);
    std::vector<std::size_t> rest;
    for (unsigned i = k; i < n; ++i) rest.push_back(i);
    return elementary_symmetric(esp, rest, j);
}

bool top_eval(unsigned n, const Polynomial& q) {
    if (q.is_zero()) return false;
    if (q.space()->size() != n) throw usage_error("top_eval: polynomial must be over n root variables");
    unsigned long parity = 0;
    for (const auto& t : q.terms()) {
        std::uint32_t seen = 0;
        bool perm = true;
        for (Exp e : t.exps) {
            if (e >= n || (seen >> e) & 1u) { perm = false; break; }
            seen |= (std::uint32_t{1} << e);
        }
        if (perm) parity ^= 1ul;
    }
    return parity == 1;
}

namespace {

struct Search {
    unsigned n;
    unsigned long long budget;
    unsigned long long nodes = 0;
    std::vector<Exp> mult;                       // multiplier being built
    std::vector<unsigned> suffix_room;           // max degree placeable at vars >= i
    const std::vector<Monomial>* yterms;
    bool found = false;

    // terms: indices into yterms still alive given the multiplier so far.
    bool dfs(std::size_t var, unsigned remaining, const std::vector<std::size_t>& alive) {
        if (++nodes > budget) return false;      // bubble out-of-budget via flag
        if (alive.empty()) return true;          // dead branch, keep searching elsewhere
        if (var == n) {
            // remaining == 0 here by construction; evaluate the parity.
            unsigned long parity = 0;
            for (std::size_t ti : alive) {
                const auto& t = (*yterms)[ti].exps;
                std::uint32_t seen = 0;
                bool perm = true;
                for (unsigned i = 0; i < n; ++i) {
                    unsigned e = static_cast<unsigned>(t[i]) + mult[i];
                    if (e >= n || (seen >> e) & 1u) { perm = false; break; }
                    seen |= (std::uint32_t{1} << e);
                }
                if (perm) parity ^= 1ul;
            }
            if (parity == 1) found = true;
            return true;
        }
        unsigned cap = n - 1 - static_cast<unsigned>(var); // box bound for this variable
        unsigned hi = std::min(cap, remaining);
        unsigned room_after = suffix_room[var + 1];
        unsigned lo = remaining > room_after ? remaining - room_after : 0;
        for (unsigned e = hi + 1; e-- > lo;) {
            mult[var] = static_cast<Exp>(e);
            std::vector<std::size_t> next;
            next.reserve(alive.size());
            for (std::size_t ti : alive)
                if (static_cast<unsigned>((*yterms)[ti].exps[var]) + e <= n - 1) next.push_back(ti);
            if (!dfs(var + 1, remaining - e, next)) return false;
            if (found) return true;
        }
        mult[var] = 0;
        return true;
    }
};

} // namespace

FlagCheck grassmann_nonzero_via_flag(unsigned k, unsigned n, const Polynomial& p,
                                     unsigned long long node_budget) {
    if (k > n) throw usage_error("grassmann_nonzero_via_flag: k must not exceed n");
    FlagCheck result;
    if (p.is_zero()) return result;
    if (!p.is_homogeneous())
        throw usage_error("grassmann_nonzero_via_flag: input must be homogeneous");
    const unsigned dim = k * (n - k);
    unsigned pdeg = p.degree().value();
    if (pdeg > dim) return result; // above the top degree: zero

    // Fixed staircase factor pairing the two blocks of roots.
    auto esp = VarSpace::roots_e(n);
    Monomial stair{std::vector<Exp>(n, 0)};
    for (unsigned i = 1; i + 1 <= k; ++i) stair.exps[i - 1] = static_cast<Exp>(k - i);
    for (unsigned i = k + 1; i + 1 <= n; ++i) stair.exps[i - 1] = static_cast<Exp>(n - i);
    Polynomial y = pi_star(k, n, p) * Polynomial::from_monomial(esp, stair);
    if (y.is_zero()) return result;

    Search s;
    s.n = n;
    s.budget = node_budget;
    s.mult.assign(n, 0);
    s.yterms = &y.terms();
    s.suffix_room.assign(n + 1, 0);
    for (unsigned v = n; v-- > 0;)
        s.suffix_room[v] = s.suffix_room[v + 1] + (n - 1 - v);

    std::vector<std::size_t> alive(y.term_count());
    std::iota(alive.begin(), alive.end(), 0);
    bool completed = s.dfs(0, dim - pdeg, alive);
    result.nodes = s.nodes;
    if (s.found) {
        result.status = FlagCheck::Status::nonzero;
        result.multiplier = s.mult;
    } else if (!completed) {
        result.status = FlagCheck::Status::out_of_budget;
    } else {
        result.status = FlagCheck::Status::zero;
    }
    return result;
}

} // namespace grasstc

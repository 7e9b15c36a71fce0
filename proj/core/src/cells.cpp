#include "grasstc/cells.hpp"

#include "grasstc/errors.hpp"

#include <algorithm>
#include <numeric>

namespace grasstc {

unsigned SchubertSymbol::dimension() const {
    return std::accumulate(sigma.begin(), sigma.end(), 0u);
}

std::vector<SchubertSymbol> enumerate_symbols(unsigned k, unsigned n,
                                              std::optional<unsigned> d) {
    if (n < k)
        throw usage_error("enumerate_symbols: need n >= k");
    const unsigned box = n - k;
    std::vector<SchubertSymbol> out;
    std::vector<unsigned> cur(k, 0);
    // Depth-first in lexicographic order: position i ranges over
    // cur[i-1]..box, so emitted sequences are non-decreasing and sorted.
    auto rec = [&](auto&& self, unsigned pos) -> void {
        if (pos == k) {
            if (!d || std::accumulate(cur.begin(), cur.end(), 0u) == *d)
                out.push_back(SchubertSymbol{cur});
            return;
        }
        const unsigned lo = pos == 0 ? 0u : cur[pos - 1];
        for (unsigned v = lo; v <= box; ++v) {
            cur[pos] = v;
            self(self, pos + 1);
        }
    };
    if (k == 0) {
        if (!d || *d == 0)
            out.push_back(SchubertSymbol{{}});
        return out;
    }
    rec(rec, 0);
    return out;
}

std::vector<std::size_t> cell_counts(unsigned k, unsigned n) {
    if (n < k)
        throw usage_error("cell_counts: need n >= k");
    const unsigned top = k * (n - k);
    std::vector<std::size_t> counts(top + 1, 0);
    for (const auto& s : enumerate_symbols(k, n))
        ++counts[s.dimension()];
    return counts;
}

bool skeleton_agreement(unsigned k, unsigned n) {
    if (n < k)
        throw usage_error("skeleton_agreement: need n >= k");
    for (unsigned d = 0; d <= n - k; ++d) {
        if (enumerate_symbols(k, n, d) != enumerate_symbols(k, n + 1, d))
            return false;
    }
    return true;
}

unsigned long long binomial(unsigned n, unsigned k) {
    if (k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    unsigned long long r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

} // namespace grasstc

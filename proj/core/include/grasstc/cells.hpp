#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace grasstc {

// One cell of the standard decomposition of the k-plane Grassmannian of R^n:
// a non-decreasing sequence 0 <= s_1 <= .. <= s_k <= n-k. Its dimension is
// the sum of the entries.
struct SchubertSymbol {
    std::vector<unsigned> sigma;
    unsigned dimension() const;
    bool operator==(const SchubertSymbol& o) const { return sigma == o.sigma; }
};

// All symbols in lexicographic order; optionally only those of dimension d.
std::vector<SchubertSymbol> enumerate_symbols(unsigned k, unsigned n,
                                              std::optional<unsigned> d = std::nullopt);

// Number of cells per dimension, indexed 0..k*(n-k). Over the two-element
// field these are exactly the Betti numbers.
std::vector<std::size_t> cell_counts(unsigned k, unsigned n);

// True iff the cells of dimension at most n-k coincide with those of the
// next-larger Grassmannian: the low-dimensional skeleton is stable in n.
bool skeleton_agreement(unsigned k, unsigned n);

unsigned long long binomial(unsigned n, unsigned k);

} // namespace grasstc

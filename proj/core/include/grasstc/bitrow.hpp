#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace grasstc {

// Dense bit vector over GF(2) with word-parallel xor.
class BitRow {
public:
    BitRow() = default;
    explicit BitRow(std::size_t nbits);

    std::size_t size() const { return nbits_; }
    void set(std::size_t i);
    void clear(std::size_t i);
    bool get(std::size_t i) const;
    bool any() const;
    std::size_t popcount() const;
    std::optional<std::size_t> lowest_set() const;

    BitRow& operator^=(const BitRow& o);
    bool operator==(const BitRow& o) const { return nbits_ == o.nbits_ && words_ == o.words_; }

    const std::vector<std::uint64_t>& words() const { return words_; }
    std::vector<std::uint64_t>& words() { return words_; }

private:
    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

// Incrementally maintained reduced row echelon form over GF(2).
//
// Invariants: pivot columns are strictly ascending; stored row i has bit
// pivots()[i] set and no other pivot column set. Reducing a vector therefore
// clears every pivot column in one pass, leaving a residual supported on the
// free columns only — the canonical representative of the vector modulo the
// row space. The reduced form is unique, so the final state does not depend
// on insertion order.
class Gf2Rref {
public:
    explicit Gf2Rref(std::size_t ncols) : ncols_(ncols) {}

    std::size_t ncols() const { return ncols_; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<std::size_t>& pivots() const { return pivot_cols_; }

    // Canonical residual of v modulo the current row space.
    BitRow reduce(BitRow v) const;
    // Adds v to the row space; returns true if the rank grew.
    bool insert(BitRow v);
    bool in_span(BitRow v) const { return !reduce(std::move(v)).any(); }

    // Columns that are not pivots, ascending.
    std::vector<std::size_t> free_columns() const;
    // Repack a residual (supported on free columns) as a dense row indexed by
    // free-column position.
    BitRow compress_to_free(const BitRow& residual) const;

private:
    std::size_t ncols_;
    std::vector<std::size_t> pivot_cols_;
    std::vector<BitRow> rows_;
};

} // namespace grasstc

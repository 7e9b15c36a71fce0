#include "grasstc/bitrow.hpp"

#include <algorithm>
#include <bit>

#include "grasstc/errors.hpp"

namespace grasstc {

BitRow::BitRow(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

void BitRow::set(std::size_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
void BitRow::clear(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
bool BitRow::get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

bool BitRow::any() const {
    for (auto w : words_)
        if (w) return true;
    return false;
}

std::size_t BitRow::popcount() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

std::optional<std::size_t> BitRow::lowest_set() const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi)
        if (words_[wi]) return wi * 64 + static_cast<std::size_t>(std::countr_zero(words_[wi]));
    return std::nullopt;
}

BitRow& BitRow::operator^=(const BitRow& o) {
    if (nbits_ != o.nbits_) throw usage_error("BitRow xor: length mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
}

BitRow Gf2Rref::reduce(BitRow v) const {
    if (v.size() != ncols_) throw usage_error("Gf2Rref::reduce: width mismatch");
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (v.get(pivot_cols_[i])) v ^= rows_[i];
    return v;
}

bool Gf2Rref::insert(BitRow v) {
    BitRow r = reduce(std::move(v));
    auto p = r.lowest_set();
    if (!p) return false;
    // Sweep the new pivot column out of existing rows; r carries no existing
    // pivot column, so their pivots are untouched.
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (rows_[i].get(*p)) rows_[i] ^= r;
    auto pos = std::lower_bound(pivot_cols_.begin(), pivot_cols_.end(), *p);
    std::size_t idx = static_cast<std::size_t>(pos - pivot_cols_.begin());
    pivot_cols_.insert(pos, *p);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(r));
    return true;
}

std::vector<std::size_t> Gf2Rref::free_columns() const {
    std::vector<std::size_t> out;
    out.reserve(ncols_ - rows_.size());
    std::size_t pi = 0;
    for (std::size_t c = 0; c < ncols_; ++c) {
        if (pi < pivot_cols_.size() && pivot_cols_[pi] == c) { ++pi; continue; }
        out.push_back(c);
    }
    return out;
}

BitRow Gf2Rref::compress_to_free(const BitRow& residual) const {
    auto free_cols = free_columns();
    BitRow out(free_cols.size());
    for (std::size_t j = 0; j < free_cols.size(); ++j)
        if (residual.get(free_cols[j])) out.set(j);
    return out;
}

} // namespace grasstc

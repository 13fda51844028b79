#include "unitgraph/bitset.hpp"

#include <algorithm>

namespace unitgraph {

BitSet::BitSet(std::size_t size, bool value)
    : size_(size), words_((size + 63) / 64, value ? ~std::uint64_t{0} : 0) {
    trim();
}

void BitSet::trim() noexcept {
    if (size_ % 64 != 0 && !words_.empty()) {
        words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
    }
}

void BitSet::set_all() noexcept {
    std::fill(words_.begin(), words_.end(), ~std::uint64_t{0});
    trim();
}

void BitSet::reset_all() noexcept { std::fill(words_.begin(), words_.end(), 0); }

std::size_t BitSet::count() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

bool BitSet::any() const noexcept {
    return std::any_of(words_.begin(), words_.end(), [](auto w) { return w != 0; });
}

std::size_t BitSet::next(std::size_t from) const noexcept {
    if (from >= size_) return npos;
    std::size_t w = from >> 6;
    std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (from & 63));
    while (true) {
        if (bits != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        if (++w == words_.size()) return npos;
        bits = words_[w];
    }
}

BitSet& BitSet::operator&=(const BitSet& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

BitSet& BitSet::operator|=(const BitSet& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

BitSet& BitSet::subtract(const BitSet& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
}

BitSet BitSet::operator~() const {
    BitSet out(*this);
    for (auto& w : out.words_) w = ~w;
    out.trim();
    return out;
}

bool BitSet::is_subset_of(const BitSet& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & ~other.words_[i]) != 0) return false;
    }
    return true;
}

bool BitSet::intersects(const BitSet& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & other.words_[i]) != 0) return true;
    }
    return false;
}

std::vector<std::uint32_t> BitSet::to_vector() const {
    std::vector<std::uint32_t> out;
    out.reserve(count());
    for_each([&](std::uint32_t i) { out.push_back(i); });
    return out;
}

BitSet BitSet::from_indices(std::size_t size, std::span<const std::uint32_t> indices) {
    BitSet out(size);
    for (auto i : indices) out.set(i);
    return out;
}

std::strong_ordering lex_compare(const BitSet& a, const BitSet& b) {
    std::size_t i = a.first();
    std::size_t j = b.first();
    while (i != BitSet::npos && j != BitSet::npos) {
        if (i != j) return i <=> j;
        i = a.next(i + 1);
        j = b.next(j + 1);
    }
    if (i == j) return std::strong_ordering::equal;
    // the exhausted list is a prefix of the other one
    return i == BitSet::npos ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::size_t BitSet::hash() const noexcept {
    std::uint64_t h = 1469598103934665603ULL ^ size_;
    for (auto w : words_) {
        h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
}

}  // namespace unitgraph

#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace unitgraph {

/// Fixed-size dense bit set over [0, size). Used for element subsets of a
/// ring (units, ideals) and for adjacency rows of graphs.
class BitSet {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    BitSet() = default;
    explicit BitSet(std::size_t size, bool value = false);

    std::size_t size() const noexcept { return size_; }
    bool test(std::size_t i) const noexcept {
        return (words_[i >> 6] >> (i & 63)) & 1U;
    }
    void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    void assign(std::size_t i, bool v) noexcept { v ? set(i) : reset(i); }
    void set_all() noexcept;
    void reset_all() noexcept;

    std::size_t count() const noexcept;
    bool any() const noexcept;
    bool none() const noexcept { return !any(); }

    /// First set bit at or after `from`, or npos.
    std::size_t next(std::size_t from) const noexcept;
    std::size_t first() const noexcept { return next(0); }

    BitSet& operator&=(const BitSet& other) noexcept;
    BitSet& operator|=(const BitSet& other) noexcept;
    /// this &= ~other
    BitSet& subtract(const BitSet& other) noexcept;
    BitSet operator~() const;

    bool is_subset_of(const BitSet& other) const noexcept;
    bool intersects(const BitSet& other) const noexcept;

    std::vector<std::uint32_t> to_vector() const;
    static BitSet from_indices(std::size_t size, std::span<const std::uint32_t> indices);

    std::span<const std::uint64_t> words() const noexcept { return words_; }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                const auto bit = static_cast<std::size_t>(std::countr_zero(bits));
                f(static_cast<std::uint32_t>(w * 64 + bit));
                bits &= bits - 1;
            }
        }
    }

    friend bool operator==(const BitSet&, const BitSet&) = default;

    /// Lexicographic order of the ascending element lists.
    friend std::strong_ordering lex_compare(const BitSet& a, const BitSet& b);

    std::size_t hash() const noexcept;

private:
    void trim() noexcept;

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitSetHash {
    std::size_t operator()(const BitSet& b) const noexcept { return b.hash(); }
};

}  // namespace unitgraph

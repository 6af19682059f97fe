#pragma once

#include "ordram/simd.hpp"

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ordram {

/// Fixed-width bit row. Bit i stands for the (i+1)-th vertex.
class Bitset {
public:
    using Word = simd::Word;
    static constexpr std::size_t kWordBits = 64;

    Bitset() = default;
    explicit Bitset(std::size_t bits) : bits_(bits), words_(word_count(bits), 0) {}

    static std::size_t word_count(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

    std::size_t bits() const { return bits_; }
    std::size_t words() const { return words_.size(); }
    std::span<const Word> data() const { return words_; }
    std::span<Word> data() { return words_; }

    bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
    void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
    void reset(std::size_t i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }

    /// Sets bits [first, last).
    void set_range(std::size_t first, std::size_t last)
    {
        for (std::size_t i = first; i < last; ++i) set(i);
    }

    /// Clears every bit below `first`.
    void clear_below(std::size_t first)
    {
        const std::size_t full = first / kWordBits;
        for (std::size_t w = 0; w < full && w < words_.size(); ++w) words_[w] = 0;
        if (full < words_.size() && first % kWordBits != 0) words_[full] &= ~Word{0} << (first % kWordBits);
    }

    /// Clears every bit at or above `last`.
    void clear_from(std::size_t last)
    {
        if (last >= bits_) return;
        std::size_t w = last / kWordBits;
        if (last % kWordBits != 0) {
            words_[w] &= (Word{1} << (last % kWordBits)) - 1;
            ++w;
        }
        for (; w < words_.size(); ++w) words_[w] = 0;
    }

    std::size_t count() const { return simd::active_kernels().popcount(words_.data(), words_.size()); }
    bool none() const
    {
        for (Word w : words_)
            if (w != 0) return false;
        return true;
    }

    /// Index of the first set bit at or after `from`, or bits() if none.
    std::size_t find_next(std::size_t from) const
    {
        if (from >= bits_) return bits_;
        std::size_t w = from / kWordBits;
        Word cur = words_[w] & (~Word{0} << (from % kWordBits));
        while (true) {
            if (cur != 0) {
                const std::size_t i = w * kWordBits + static_cast<std::size_t>(std::countr_zero(cur));
                return i < bits_ ? i : bits_;
            }
            if (++w >= words_.size()) return bits_;
            cur = words_[w];
        }
    }
    std::size_t find_first() const { return find_next(0); }

    std::vector<std::size_t> indices() const
    {
        std::vector<std::size_t> out;
        for (std::size_t i = find_first(); i < bits_; i = find_next(i + 1)) out.push_back(i);
        return out;
    }

    Bitset& operator&=(const Bitset& other)
    {
        simd::active_kernels().and_into(words_.data(), words_.data(), other.words_.data(), words_.size());
        return *this;
    }
    void and_not(const Bitset& other)
    {
        simd::active_kernels().and_not_inplace(words_.data(), other.words_.data(), words_.size());
    }
    std::size_t and_count(const Bitset& other) const
    {
        return simd::active_kernels().and_popcount(words_.data(), other.words_.data(), words_.size());
    }
    bool intersects(const Bitset& other) const
    {
        return simd::active_kernels().and_any(words_.data(), other.words_.data(), words_.size());
    }

    friend bool operator==(const Bitset&, const Bitset&) = default;

private:
    std::size_t bits_ = 0;
    std::vector<Word> words_;
};

/// Square 0/1 matrix stored as N bit rows; row v holds the neighbours of v.
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(std::size_t n) : n_(n), rows_(n, Bitset(n)) {}

    std::size_t size() const { return n_; }
    const Bitset& row(std::size_t v) const { return rows_[v]; }
    bool test(std::size_t u, std::size_t v) const { return rows_[u].test(v); }
    void set_symmetric(std::size_t u, std::size_t v)
    {
        rows_[u].set(v);
        rows_[v].set(u);
    }

private:
    std::size_t n_ = 0;
    std::vector<Bitset> rows_;
};

}  // namespace ordram

#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace ramsey {

// Fixed-size bitset sized at construction. Vertex sets and adjacency rows
// are stored this way so that |N(v) ∩ S| is a word-parallel popcount loop.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t nbits)
        : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }

    void set(std::size_t i) {
        assert(i < nbits_);
        words_[i >> 6] |= (std::uint64_t{1} << (i & 63));
    }
    void reset(std::size_t i) {
        assert(i < nbits_);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }
    bool test(std::size_t i) const {
        assert(i < nbits_);
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    void clear() { for (auto& w : words_) w = 0; }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (auto w : words_) if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    // |this ∩ other|
    std::size_t and_count(const Bitset& other) const {
        assert(nbits_ == other.nbits_);
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & other.words_[i]);
        return c;
    }
    bool intersects(const Bitset& other) const {
        assert(nbits_ == other.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    Bitset& operator|=(const Bitset& other) {
        assert(nbits_ == other.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& other) {
        assert(nbits_ == other.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
        return *this;
    }
    // this \ other
    Bitset& subtract(const Bitset& other) {
        assert(nbits_ == other.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
        return *this;
    }

    bool operator==(const Bitset& other) const {
        return nbits_ == other.nbits_ && words_ == other.words_;
    }

    bool is_subset_of(const Bitset& other) const {
        assert(nbits_ == other.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    // First set bit at index >= from, or size() if none.
    std::size_t next_set(std::size_t from) const {
        if (from >= nbits_) return nbits_;
        std::size_t w = from >> 6;
        std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (cur) {
                std::size_t i = (w << 6) + std::countr_zero(cur);
                return i < nbits_ ? i : nbits_;
            }
            if (++w >= words_.size()) return nbits_;
            cur = words_[w];
        }
    }

    template <typename F>
    void for_each_set(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t cur = words_[w];
            while (cur) {
                std::size_t i = (w << 6) + std::countr_zero(cur);
                f(i);
                cur &= cur - 1;
            }
        }
    }

    std::vector<std::size_t> to_vector() const {
        std::vector<std::size_t> v;
        v.reserve(count());
        for_each_set([&](std::size_t i) { v.push_back(i); });
        return v;
    }

private:
    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace ramsey

#pragma once

#include <bit>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace qspec {

// Fixed-universe dynamic bitset. Ordering compares member sets as binary
// numbers (bit i has weight 2^i), which is the canonical order for ideals and
// point sets throughout the library.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

    static Bitset full(std::size_t universe) {
        Bitset b(universe);
        for (std::size_t i = 0; i < universe; ++i) b.set(i);
        return b;
    }

    template <class Range>
    static Bitset of(std::size_t universe, const Range& indices) {
        Bitset b(universe);
        for (auto i : indices) b.set(static_cast<std::size_t>(i));
        return b;
    }
    static Bitset of(std::size_t universe, std::initializer_list<std::size_t> indices) {
        return of<std::initializer_list<std::size_t>>(universe, indices);
    }

    std::size_t universe() const noexcept { return universe_; }

    bool test(std::size_t i) const {
        assert(i < universe_);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i) {
        assert(i < universe_);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
    void reset(std::size_t i) {
        assert(i < universe_);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool none() const noexcept {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    bool any() const noexcept { return !none(); }

    bool is_subset_of(const Bitset& other) const {
        assert(universe_ == other.universe_);
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~other.words_[k]) return false;
        return true;
    }
    bool intersects(const Bitset& other) const {
        assert(universe_ == other.universe_);
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & other.words_[k]) return true;
        return false;
    }

    Bitset& operator|=(const Bitset& o) {
        assert(universe_ == o.universe_);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        assert(universe_ == o.universe_);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }
    // set difference
    Bitset& operator-=(const Bitset& o) {
        assert(universe_ == o.universe_);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
        return *this;
    }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

    Bitset complement() const { return full(universe_) - *this; }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w) {
                const int bit = std::countr_zero(w);
                f(k * 64 + static_cast<std::size_t>(bit));
                w &= w - 1;
            }
        }
    }

    std::vector<std::size_t> to_vector() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    friend bool operator==(const Bitset&, const Bitset&) = default;

    friend std::strong_ordering operator<=>(const Bitset& a, const Bitset& b) {
        if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
        for (std::size_t k = a.words_.size(); k-- > 0;) {
            if (auto c = a.words_[k] <=> b.words_[k]; c != 0) return c;
        }
        return std::strong_ordering::equal;
    }

    std::size_t hash() const noexcept {
        std::size_t h = std::hash<std::size_t>{}(universe_);
        for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const noexcept { return b.hash(); }
};

}  // namespace qspec

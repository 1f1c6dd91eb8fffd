#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#ifndef FORCELAB_MAX_VERTICES
#define FORCELAB_MAX_VERTICES 512
#endif

namespace forcelab {

using Vertex = std::uint32_t;

inline constexpr std::size_t kMaxVertices = FORCELAB_MAX_VERTICES;
static_assert(kMaxVertices % 64 == 0 && kMaxVertices > 0, "FORCELAB_MAX_VERTICES must be a positive multiple of 64");

/// Fixed-capacity bitset over vertex labels 0..kMaxVertices-1.
///
/// Set algebra is word-parallel over a compile-time number of words, so
/// union/intersection/difference are branch-free loops the compiler unrolls.
/// Complement is always taken relative to an explicit universe size.
class VertexSet {
public:
    static constexpr std::size_t kWords = kMaxVertices / 64;

    constexpr VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> vs) {
        for (Vertex v : vs) insert(v);
    }

    /// {0, 1, ..., n-1}
    static VertexSet full(std::size_t n) {
        VertexSet s;
        for (std::size_t w = 0; w < kWords && n > 0; ++w) {
            const std::size_t take = n >= 64 ? 64 : n;
            s.words_[w] = take == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << take) - 1);
            n -= take;
        }
        return s;
    }

    static VertexSet from_mask(std::uint64_t mask) {
        VertexSet s;
        s.words_[0] = mask;
        return s;
    }

    template <class Range>
    static VertexSet from_range(const Range& vs) {
        VertexSet s;
        for (auto v : vs) s.insert(static_cast<Vertex>(v));
        return s;
    }

    constexpr bool contains(Vertex v) const noexcept { return (words_[v >> 6] >> (v & 63)) & 1u; }
    constexpr void insert(Vertex v) noexcept { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    constexpr void erase(Vertex v) noexcept { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    std::size_t size() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool empty() const noexcept {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    /// True iff exactly one element.
    bool is_singleton() const noexcept {
        bool seen = false;
        for (auto w : words_) {
            if (!w) continue;
            if (seen || (w & (w - 1))) return false;
            seen = true;
        }
        return seen;
    }

    /// Smallest element; undefined on an empty set.
    Vertex first() const noexcept {
        for (std::size_t i = 0; i < kWords; ++i)
            if (words_[i]) return static_cast<Vertex>(i * 64 + std::countr_zero(words_[i]));
        return static_cast<Vertex>(kMaxVertices);
    }

    bool intersects(const VertexSet& o) const noexcept {
        for (std::size_t i = 0; i < kWords; ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const VertexSet& o) const noexcept {
        for (std::size_t i = 0; i < kWords; ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    /// Elements of {0..n-1} not in this set.
    VertexSet complement(std::size_t n) const noexcept { return full(n) - *this; }

    VertexSet& operator|=(const VertexSet& o) noexcept {
        for (std::size_t i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) noexcept {
        for (std::size_t i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) noexcept {
        for (std::size_t i = 0; i < kWords; ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) noexcept { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) noexcept { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) noexcept { return a -= b; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    /// Lexicographic order on the sorted element lists, restricted to sets of
    /// equal size; for those it coincides with "smallest element of the
    /// symmetric difference belongs to the lesser set".
    friend bool lex_less(const VertexSet& a, const VertexSet& b) noexcept {
        for (std::size_t i = 0; i < kWords; ++i) {
            const std::uint64_t diff = a.words_[i] ^ b.words_[i];
            if (diff) return (a.words_[i] >> std::countr_zero(diff)) & 1u;
        }
        return false;
    }

    std::uint64_t word(std::size_t i) const noexcept { return words_[i]; }

    std::vector<Vertex> to_vector() const {
        std::vector<Vertex> out;
        for_each([&](Vertex v) { out.push_back(v); });
        return out;
    }

    /// "{0,3,5}"
    std::string str() const;

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < kWords; ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                f(static_cast<Vertex>(i * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

private:
    std::array<std::uint64_t, kWords> words_{};
};

}  // namespace forcelab

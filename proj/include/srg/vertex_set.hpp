#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace srg {

using Vertex = std::size_t;

/// Fixed-capacity bitset over vertices 0..size-1. Rows of the adjacency
/// matrix, clique candidate sets and homomorphism domains all use this.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    VertexSet(std::size_t size, std::initializer_list<Vertex> members) : VertexSet(size)
    {
        for (Vertex v : members)
            set(v);
    }

    static VertexSet full(std::size_t size)
    {
        VertexSet s(size);
        for (auto & w : s.words_)
            w = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    std::size_t size() const { return size_; }

    void set(Vertex v) { words_[v / 64] |= std::uint64_t{1} << (v % 64); }
    void reset(Vertex v) { words_[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }
    bool test(Vertex v) const { return (words_[v / 64] >> (v % 64)) & 1u; }
    bool contains(Vertex v) const { return v < size_ && test(v); }

    void clear() { std::fill(words_.begin(), words_.end(), 0); }

    std::size_t count() const
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool empty() const
    {
        return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
    }

    /// Lowest member, or size() when empty.
    Vertex first() const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i])
                return i * 64 + static_cast<Vertex>(std::countr_zero(words_[i]));
        return size_;
    }

    /// Lowest member strictly greater than v, or size().
    Vertex next(Vertex v) const
    {
        ++v;
        if (v >= size_)
            return size_;
        std::size_t i = v / 64;
        std::uint64_t w = words_[i] & (~std::uint64_t{0} << (v % 64));
        while (true) {
            if (w)
                return i * 64 + static_cast<Vertex>(std::countr_zero(w));
            if (++i == words_.size())
                return size_;
            w = words_[i];
        }
    }

    std::vector<Vertex> members() const
    {
        std::vector<Vertex> out;
        for (Vertex v = first(); v < size_; v = next(v))
            out.push_back(v);
        return out;
    }

    template <typename F>
    void for_each(F && f) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                f(i * 64 + static_cast<Vertex>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::size_t intersection_count(const VertexSet & o) const
    {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
        return c;
    }

    bool intersects(const VertexSet & o) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i])
                return true;
        return false;
    }

    bool is_subset_of(const VertexSet & o) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i])
                return false;
        return true;
    }

    VertexSet & operator&=(const VertexSet & o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }

    VertexSet & operator|=(const VertexSet & o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }

    /// Set difference.
    VertexSet & operator-=(const VertexSet & o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~o.words_[i];
        return *this;
    }

    VertexSet complement() const
    {
        VertexSet s = *this;
        for (auto & w : s.words_)
            w = ~w;
        s.trim();
        return s;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet & b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet & b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet & b) { return a -= b; }
    friend bool operator==(const VertexSet &, const VertexSet &) = default;

private:
    void trim()
    {
        if (size_ % 64 != 0 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace srg

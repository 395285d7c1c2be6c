#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace kfree {

using Vertex = std::size_t;

inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

/// Packed subset of {0, ..., universe-1}.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe) : universe_(universe), words_(words_for(universe), 0) {}
    VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
        for (Vertex v : members) set(v);
    }
    VertexSet(std::size_t universe, std::span<const std::uint64_t> words)
        : universe_(universe), words_(words.begin(), words.end()) {}

    static VertexSet full(std::size_t universe) {
        VertexSet s(universe);
        for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    std::size_t universe() const { return universe_; }
    std::span<const std::uint64_t> words() const { return words_; }

    bool test(Vertex v) const { return (words_[v / kWordBits] >> (v % kWordBits)) & 1U; }
    void set(Vertex v) { words_[v / kWordBits] |= std::uint64_t{1} << (v % kWordBits); }
    void reset(Vertex v) { words_[v / kWordBits] &= ~(std::uint64_t{1} << (v % kWordBits)); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool empty() const {
        for (auto w : words_)
            if (w != 0) return false;
        return true;
    }

    /// Smallest member >= from, or universe() if none.
    Vertex next(Vertex from) const {
        if (from >= universe_) return universe_;
        std::size_t wi = from / kWordBits;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from % kWordBits));
        while (true) {
            if (w != 0) return wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
            if (++wi == words_.size()) return universe_;
            w = words_[wi];
        }
    }
    Vertex first() const { return next(0); }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w != 0) {
                f(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<Vertex> members() const {
        std::vector<Vertex> out;
        out.reserve(count());
        for_each([&](Vertex v) { out.push_back(v); });
        return out;
    }

    VertexSet& operator&=(std::span<const std::uint64_t> other) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& other) { return *this &= other.words(); }
    VertexSet& operator|=(const VertexSet& other) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
        return *this;
    }
    /// Removes every member of other.
    VertexSet& subtract(std::span<const std::uint64_t> other) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other[i];
        return *this;
    }
    VertexSet& subtract(const VertexSet& other) { return subtract(other.words()); }

    VertexSet complemented() const {
        VertexSet s(*this);
        for (auto& w : s.words_) w = ~w;
        s.trim();
        return s;
    }

    std::size_t intersection_count(std::span<const std::uint64_t> other) const {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] & other[i]));
        return c;
    }
    bool intersects(std::span<const std::uint64_t> other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((words_[i] & other[i]) != 0) return true;
        return false;
    }
    bool is_subset_of(const VertexSet& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((words_[i] & ~other.words_[i]) != 0) return false;
        return true;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    void trim() {
        if (universe_ % kWordBits != 0 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << (universe_ % kWordBits)) - 1;
    }

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace kfree

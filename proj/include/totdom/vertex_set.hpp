#pragma once

#include <bit>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <vector>

namespace totdom {

/// Dense vertex id. Vertices of a graph of order n are 0..n-1.
using Vertex = int;

/// A subset of {0, ..., universe-1} stored as a packed bitset.
///
/// Union, intersection, difference and the subset test all cost O(n/64)
/// word operations. Binary operations require both operands to share the
/// same universe.
class VertexSet {
public:
    class const_iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const Vertex*;
        using reference = Vertex;

        const_iterator() = default;
        const_iterator(const VertexSet* set, Vertex at) : set_(set), at_(at) {}

        Vertex operator*() const { return at_; }
        const_iterator& operator++() {
            at_ = set_->next(at_);
            return *this;
        }
        const_iterator operator++(int) {
            auto copy = *this;
            ++*this;
            return copy;
        }
        friend bool operator==(const const_iterator& a, const const_iterator& b) { return a.at_ == b.at_; }

    private:
        const VertexSet* set_ = nullptr;
        Vertex at_ = -1;
    };

    VertexSet() = default;
    explicit VertexSet(int universe) : universe_(universe), words_(word_count(universe), 0) {}
    VertexSet(int universe, std::initializer_list<Vertex> members);
    VertexSet(int universe, std::span<const Vertex> members);

    static VertexSet full(int universe);

    int universe() const { return universe_; }

    bool contains(Vertex v) const {
        assert(v >= 0 && v < universe_);
        return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U;
    }
    void insert(Vertex v) {
        assert(v >= 0 && v < universe_);
        words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
    }
    void erase(Vertex v) {
        assert(v >= 0 && v < universe_);
        words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    int size() const;
    bool empty() const;

    /// Smallest member, or -1 when empty.
    Vertex first() const { return next(-1); }
    /// Smallest member strictly greater than v, or -1.
    Vertex next(Vertex v) const;

    bool is_subset_of(const VertexSet& other) const;
    bool intersects(const VertexSet& other) const;

    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator&=(const VertexSet& other);
    VertexSet& operator-=(const VertexSet& other);

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    friend bool operator==(const VertexSet& a, const VertexSet& b) = default;
    /// Total order used for fingerprint sorting; not the subset order.
    friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b);

    std::vector<Vertex> to_vector() const;

    const_iterator begin() const { return {this, first()}; }
    const_iterator end() const { return {this, -1}; }

    std::span<const std::uint64_t> words() const { return words_; }

private:
    static std::size_t word_count(int universe) { return (static_cast<std::size_t>(universe) + 63) / 64; }

    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace totdom

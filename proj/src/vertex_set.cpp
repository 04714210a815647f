#include "totdom/vertex_set.hpp"

#include <algorithm>

namespace totdom {

VertexSet::VertexSet(int universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(int universe, std::span<const Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(int universe) {
    VertexSet s(universe);
    std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
    if (int tail = universe & 63; tail != 0) s.words_.back() = (std::uint64_t{1} << tail) - 1;
    return s;
}

int VertexSet::size() const {
    int total = 0;
    for (auto w : words_) total += std::popcount(w);
    return total;
}

bool VertexSet::empty() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

Vertex VertexSet::next(Vertex v) const {
    int start = v + 1;
    if (start >= universe_) return -1;
    std::size_t wi = static_cast<std::size_t>(start) >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (start & 63));
    while (true) {
        if (w != 0) return static_cast<Vertex>(wi * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        if (++wi == words_.size()) return -1;
        w = words_[wi];
    }
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i]) return false;
    return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & other.words_[i]) return true;
    return false;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
}

std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
    if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.words_.begin(), a.words_.end(), b.words_.begin(),
                                                  b.words_.end());
}

std::vector<Vertex> VertexSet::to_vector() const {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (Vertex v : *this) out.push_back(v);
    return out;
}

}  // namespace totdom

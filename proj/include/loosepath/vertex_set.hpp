#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace loosepath {

/// Vertices are 1-based, matching the [N] = {1,...,N} convention.
using Vertex = int;

inline constexpr int kMaxVertices = 64;

/// A subset of [64] stored as a bitmask; vertex v lives in bit v-1.
/// Iteration always yields vertices in ascending order.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    VertexSet(std::initializer_list<Vertex> vs) {
        for (Vertex v : vs) insert(v);
    }

    static VertexSet from_vector(const std::vector<Vertex>& vs) {
        VertexSet out;
        for (Vertex v : vs) out.insert(v);
        return out;
    }

    /// {1, ..., n}
    static VertexSet prefix(int n) {
        if (n < 0 || n > kMaxVertices) throw std::out_of_range("VertexSet::prefix");
        return VertexSet(n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }

    constexpr bool contains(Vertex v) const {
        return v >= 1 && v <= kMaxVertices && ((bits_ >> (v - 1)) & 1U);
    }
    constexpr bool contains(VertexSet other) const { return (other.bits_ & ~bits_) == 0; }
    constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

    void insert(Vertex v) {
        if (v < 1 || v > kMaxVertices) throw std::out_of_range("vertex outside 1..64");
        bits_ |= std::uint64_t{1} << (v - 1);
    }

    /// Smallest vertex; the set must be non-empty.
    constexpr Vertex min() const { return std::countr_zero(bits_) + 1; }
    constexpr Vertex max() const { return 64 - std::countl_zero(bits_); }

    /// The k smallest vertices of the set.
    VertexSet smallest(int k) const {
        if (k < 0 || k > size()) throw std::invalid_argument("VertexSet::smallest: k out of range");
        std::uint64_t rest = bits_;
        std::uint64_t out = 0;
        for (int i = 0; i < k; ++i) {
            std::uint64_t low = rest & (~rest + 1);
            out |= low;
            rest ^= low;
        }
        return VertexSet(out);
    }

    std::vector<Vertex> to_vector() const {
        std::vector<Vertex> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (Vertex v : *this) out.push_back(v);
        return out;
    }

    class iterator {
    public:
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr Vertex operator*() const { return std::countr_zero(rest_) + 1; }
        constexpr iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr iterator operator++(int) {
            iterator tmp = *this;
            ++*this;
            return tmp;
        }
        constexpr bool operator==(const iterator&) const = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    VertexSet& operator|=(VertexSet o) {
        bits_ |= o.bits_;
        return *this;
    }
    VertexSet& operator-=(VertexSet o) {
        bits_ &= ~o.bits_;
        return *this;
    }

    constexpr bool operator==(const VertexSet&) const = default;

    /// Lexicographic order of the ascending vertex lists.
    friend bool lex_less(VertexSet a, VertexSet b) {
        while (!a.empty() && !b.empty()) {
            if (a.min() != b.min()) return a.min() < b.min();
            a = a - VertexSet(std::uint64_t{1} << (a.min() - 1));
            b = b - VertexSet(std::uint64_t{1} << (b.min() - 1));
        }
        return a.empty() && !b.empty();
    }

private:
    std::uint64_t bits_ = 0;
};

/// Visits every k-subset of `pool` in lexicographic order of the ascending
/// vertex lists. The callback returns true to stop early; the function then
/// returns true as well.
template <typename Fn>
bool for_each_subset(VertexSet pool, int k, Fn&& fn) {
    const std::vector<Vertex> items = pool.to_vector();
    const int n = static_cast<int>(items.size());
    if (k < 0 || k > n) return false;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        std::uint64_t bits = 0;
        for (int i : idx) bits |= std::uint64_t{1} << (items[i] - 1);
        if (fn(VertexSet(bits))) return true;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace loosepath

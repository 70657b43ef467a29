#ifndef INCRTREE_CORE_HPP
#define INCRTREE_CORE_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace incrtree {

/// Hard structural cap on the number of vertices. Vertex sets are 32-bit
/// masks and edge sets index the n(n-1)/2 pairs of this many vertices.
inline constexpr int kMaxVertices = 16;
inline constexpr int kMaxEdges = kMaxVertices * (kMaxVertices - 1) / 2;

/// Runtime limits for operations that enumerate exponentially many objects.
struct Limits {
    int max_n = kMaxVertices;   // vertex bound for exhaustive operations
    int max_subset_edges = 26;  // edge bound for 2^|E| subgraph scans
};

/// Vertices are 1..n in their natural order.
using VertexId = int;

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public GraphError {
public:
    using GraphError::GraphError;
};

class DisconnectedGraph : public GraphError {
public:
    using GraphError::GraphError;
};

class SizeBoundExceeded : public GraphError {
public:
    using GraphError::GraphError;
};

/// A set of vertices stored as a bitmask; bit v-1 holds vertex v.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint32_t bits) : bits_(bits) {}

    static constexpr VertexSet range(int n) {
        return VertexSet(n <= 0 ? 0u : (n >= 32 ? ~0u : ((1u << n) - 1u)));
    }
    static constexpr VertexSet single(VertexId v) { return VertexSet(1u << (v - 1)); }
    static VertexSet of(std::initializer_list<VertexId> vs) {
        VertexSet s;
        for (VertexId v : vs) s.insert(v);
        return s;
    }

    constexpr std::uint32_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(VertexId v) const {
        return v >= 1 && v <= 32 && ((bits_ >> (v - 1)) & 1u);
    }
    /// Smallest vertex; undefined on the empty set.
    constexpr VertexId min() const { return std::countr_zero(bits_) + 1; }
    constexpr VertexId max() const { return 32 - std::countl_zero(bits_); }

    constexpr void insert(VertexId v) { bits_ |= 1u << (v - 1); }
    constexpr void erase(VertexId v) { bits_ &= ~(1u << (v - 1)); }

    constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(VertexSet, VertexSet) = default;

    /// Vertices in increasing order.
    std::vector<VertexId> to_vector() const {
        std::vector<VertexId> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
        return out;
    }

    class iterator {
    public:
        using value_type = VertexId;
        using difference_type = std::ptrdiff_t;
        constexpr iterator() = default;
        constexpr explicit iterator(std::uint32_t rest) : rest_(rest) {}
        constexpr VertexId operator*() const { return std::countr_zero(rest_) + 1; }
        constexpr iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr iterator operator++(int) {
            iterator old = *this;
            ++*this;
            return old;
        }
        friend constexpr bool operator==(iterator, iterator) = default;

    private:
        std::uint32_t rest_ = 0;
    };
    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

private:
    std::uint32_t bits_ = 0;
};

/// Renders as "{1,3,4}".
std::string to_string(VertexSet s);

}  // namespace incrtree

#endif

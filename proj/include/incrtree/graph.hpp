#ifndef INCRTREE_GRAPH_HPP
#define INCRTREE_GRAPH_HPP

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "incrtree/core.hpp"

namespace incrtree {

class SetPartition;

/// Undirected edge stored with lo < hi; ordered lexicographically.
struct Edge {
    VertexId lo = 0;
    VertexId hi = 0;

    Edge() = default;
    /// Accepts endpoints in either order; throws on a loop or a vertex outside 1..kMaxVertices.
    Edge(VertexId a, VertexId b);

    /// Position of this edge in the lexicographic list of all pairs on kMaxVertices vertices.
    int index() const { return (lo - 1) * (2 * kMaxVertices - lo) / 2 + (hi - lo - 1); }
    static Edge from_index(int index);

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);

/// Set of edges over a fixed lexicographic enumeration of all vertex pairs.
/// Iteration visits edges in lexicographic order.
class EdgeSet {
public:
    EdgeSet() = default;
    EdgeSet(std::initializer_list<Edge> edges) {
        for (const Edge& e : edges) insert(e);
    }

    bool contains(const Edge& e) const { return test(e.index()); }
    void insert(const Edge& e) { words_[e.index() / 64] |= bit(e.index()); }
    void erase(const Edge& e) { words_[e.index() / 64] &= ~bit(e.index()); }

    bool empty() const { return words_[0] == 0 && words_[1] == 0; }
    int size() const { return std::popcount(words_[0]) + std::popcount(words_[1]); }
    bool subset_of(const EdgeSet& o) const {
        return (words_[0] & ~o.words_[0]) == 0 && (words_[1] & ~o.words_[1]) == 0;
    }
    bool intersects(const EdgeSet& o) const {
        return (words_[0] & o.words_[0]) != 0 || (words_[1] & o.words_[1]) != 0;
    }
    /// Lexicographically smallest edge; undefined on the empty set.
    Edge min() const { return *begin(); }

    friend EdgeSet operator|(EdgeSet a, const EdgeSet& b) {
        a.words_[0] |= b.words_[0];
        a.words_[1] |= b.words_[1];
        return a;
    }
    friend EdgeSet operator&(EdgeSet a, const EdgeSet& b) {
        a.words_[0] &= b.words_[0];
        a.words_[1] &= b.words_[1];
        return a;
    }
    friend EdgeSet operator-(EdgeSet a, const EdgeSet& b) {
        a.words_[0] &= ~b.words_[0];
        a.words_[1] &= ~b.words_[1];
        return a;
    }
    friend bool operator==(const EdgeSet&, const EdgeSet&) = default;
    /// Lexicographic comparison of the sorted edge lists.
    friend std::strong_ordering operator<=>(const EdgeSet& a, const EdgeSet& b);

    std::vector<Edge> to_vector() const;

    class iterator {
    public:
        using value_type = Edge;
        using difference_type = std::ptrdiff_t;
        iterator() = default;
        iterator(std::uint64_t w0, std::uint64_t w1) : words_{w0, w1} {}
        Edge operator*() const {
            return Edge::from_index(words_[0] != 0 ? std::countr_zero(words_[0])
                                                   : 64 + std::countr_zero(words_[1]));
        }
        iterator& operator++() {
            if (words_[0] != 0)
                words_[0] &= words_[0] - 1;
            else
                words_[1] &= words_[1] - 1;
            return *this;
        }
        iterator operator++(int) {
            iterator old = *this;
            ++*this;
            return old;
        }
        friend bool operator==(const iterator&, const iterator&) = default;

    private:
        std::array<std::uint64_t, 2> words_{};
    };
    iterator begin() const { return iterator(words_[0], words_[1]); }
    iterator end() const { return iterator(0, 0); }

private:
    static std::uint64_t bit(int i) { return std::uint64_t{1} << (i % 64); }
    bool test(int i) const { return (words_[i / 64] >> (i % 64)) & 1u; }

    std::array<std::uint64_t, 2> words_{};
};

/// Renders as "{12,13,24}" for small labels, "{1-2,...}" otherwise.
std::string to_string(const EdgeSet& edges);

/// Simple undirected graph on a subset of 1..n. Restrictions keep the
/// original vertex identities, so `vertices` need not be all of 1..n.
class Graph {
public:
    Graph() = default;
    /// Edgeless graph on 1..n.
    explicit Graph(int n);
    Graph(int n, const EdgeSet& edges);
    Graph(int n, std::initializer_list<Edge> edges) : Graph(n, EdgeSet(edges)) {}
    Graph(int n, VertexSet vertices, const EdgeSet& edges);

    static Graph complete(int n);

    int universe() const { return n_; }
    VertexSet vertices() const { return vertices_; }
    int order() const { return vertices_.size(); }
    const EdgeSet& edges() const { return edges_; }
    int size() const { return edges_.size(); }
    bool has_edge(const Edge& e) const { return edges_.contains(e); }
    VertexSet neighbors(VertexId v) const { return VertexSet(adjacency_[static_cast<std::size_t>(v)]); }

    /// Spanning subgraph with the given edges (must be a subset of this graph's vertex pairs).
    Graph with_edges(const EdgeSet& edges) const { return Graph(n_, vertices_, edges); }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    VertexSet vertices_;
    EdgeSet edges_;
    std::array<std::uint32_t, kMaxVertices + 1> adjacency_{};
};

/// All possible edges joining v to an element of s (none to v itself).
EdgeSet link(VertexId v, VertexSet s);

/// The graph on s holding exactly the edges of g with both ends in s.
Graph restrict(const Graph& g, VertexSet s);

/// Vertices reachable from `start` inside `within` along edges of g.
VertexSet reachable(const Graph& g, VertexId start, VertexSet within);

/// s(G): the partition of the vertex set into connected components.
SetPartition components_partition(const Graph& g);

/// True iff g has exactly one component (an empty vertex set is not connected).
bool is_connected(const Graph& g);

/// True iff g has no circuits.
bool is_forest(const Graph& g);

}  // namespace incrtree

#endif

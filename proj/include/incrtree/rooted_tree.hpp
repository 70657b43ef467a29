#ifndef INCRTREE_ROOTED_TREE_HPP
#define INCRTREE_ROOTED_TREE_HPP

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "incrtree/graph.hpp"
#include "incrtree/partition.hpp"

namespace incrtree {

/// Rooted tree given by a parent map on a vertex set.
class RootedTree {
public:
    RootedTree() = default;
    /// `parent` maps every non-root vertex to its parent. Throws
    /// std::invalid_argument unless the map describes a tree rooted at `root`.
    RootedTree(VertexSet vertices, VertexId root, const std::map<VertexId, VertexId>& parent);

    /// The one-vertex tree.
    static RootedTree single(VertexId v);
    /// Builds from a chain of arcs parent -> child, e.g. {{1,2},{2,3}} for the path 1->2->3.
    static RootedTree from_arcs(VertexId root, std::initializer_list<std::pair<VertexId, VertexId>> arcs);

    VertexSet vertices() const { return vertices_; }
    VertexId root() const { return root_; }
    bool is_root(VertexId v) const { return v == root_; }
    bool contains(VertexId v) const { return vertices_.contains(v); }

    /// des(v,R), including v itself.
    VertexSet descendants(VertexId v) const;
    /// Throws std::invalid_argument for the root or an unknown vertex.
    VertexId parent(VertexId v) const;
    VertexSet children(VertexId v) const;
    /// Deepest common ancestor.
    VertexId join(VertexId v, VertexId w) const;

    /// Undirected edges {parent(v), v}.
    EdgeSet edges() const;
    /// The tree as a spanning graph on its vertex set inside 1..n.
    Graph as_graph(int n) const;
    /// R restricted to des(v,R), rooted at v.
    RootedTree subtree(VertexId v) const;

    /// Non-root vertices mapped to their parents.
    std::map<VertexId, VertexId> parent_map() const;

    friend bool operator==(const RootedTree& a, const RootedTree& b) {
        return a.vertices_ == b.vertices_ && a.root_ == b.root_ && a.parent_ == b.parent_;
    }

private:
    void check_vertex(VertexId v) const;

    VertexSet vertices_;
    VertexId root_ = 0;
    std::array<VertexId, kMaxVertices + 1> parent_{};
    std::array<VertexSet, kMaxVertices + 1> des_{};
};

/// Forest of rooted trees over disjoint vertex sets; components are kept
/// sorted by their minimum vertex.
class RootedForest {
public:
    RootedForest() = default;
    explicit RootedForest(std::vector<RootedTree> components);

    const std::vector<RootedTree>& components() const { return components_; }
    VertexSet ground() const { return ground_; }
    /// s(R).
    SetPartition partition() const;
    EdgeSet edges() const;
    int edge_count() const { return ground_.size() - static_cast<int>(components_.size()); }

    friend bool operator==(const RootedForest&, const RootedForest&) = default;

private:
    std::vector<RootedTree> components_;
    VertexSet ground_;
};

VertexSet descendants(VertexId v, const RootedTree& r);
VertexId parent_of(VertexId v, const RootedTree& r);
VertexId join(VertexId v, VertexId w, const RootedTree& r);
bool is_increasing(const RootedTree& r);
/// J(v,R) = link(parent(v,R), des(v,R)). Throws for the root.
EdgeSet j_set(VertexId v, const RootedTree& r);
/// J(v,R) meets G for every non-root v. Throws std::invalid_argument on a vertex-set mismatch.
bool is_g_connected(const RootedTree& r, const Graph& g);

/// Streams every increasing tree on a vertex set exactly once.
///
/// Each non-minimum vertex picks a parent among the smaller vertices. Trees
/// come out in lexicographic order of the parent-choice vector (indexed by
/// vertex, last vertex varying fastest), so the star rooted at min(V) is
/// first and the path in vertex order is last.
class IncreasingTreeStream {
public:
    /// Throws SizeBoundExceeded when |V| > limits.max_n, std::invalid_argument when V is empty.
    explicit IncreasingTreeStream(VertexSet vertices, const Limits& limits = {});
    std::optional<RootedTree> next();

private:
    VertexSet vertices_;
    std::vector<VertexId> order_;
    std::vector<int> choice_;
    bool done_ = false;
};

std::vector<RootedTree> enumerate_increasing_trees(VertexSet vertices, const Limits& limits = {});

/// Increasing trees on V(G) that are G-connected, in stream order.
std::vector<RootedTree> increasing_g_connected_trees(const Graph& g, const Limits& limits = {});

/// Streams increasing G-connected forests: set partitions in canonical
/// order, and within one partition, the product of per-block tree streams
/// with the last block varying fastest.
class IncreasingForestStream {
public:
    explicit IncreasingForestStream(const Graph& g, std::optional<int> components = std::nullopt,
                                    const Limits& limits = {});
    std::optional<RootedForest> next();

private:
    bool load_partition();

    Graph graph_;
    Limits limits_;
    std::vector<SetPartition> partitions_;
    std::size_t partition_index_ = 0;
    std::map<std::uint32_t, std::vector<RootedTree>> trees_by_block_;
    std::vector<const std::vector<RootedTree>*> block_trees_;
    std::vector<std::size_t> odometer_;
    bool active_ = false;
};

std::vector<RootedForest> enumerate_increasing_g_connected_forests(const Graph& g,
                                                                   std::optional<int> components = std::nullopt,
                                                                   const Limits& limits = {});

}  // namespace incrtree

#endif

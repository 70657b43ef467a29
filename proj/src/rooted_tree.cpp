#include "incrtree/rooted_tree.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace incrtree {

RootedTree::RootedTree(VertexSet vertices, VertexId root, const std::map<VertexId, VertexId>& parent)
    : vertices_(vertices), root_(root) {
    if (!vertices.contains(root)) throw std::invalid_argument("root " + std::to_string(root) + " not in vertex set");
    if (parent.size() != static_cast<std::size_t>(vertices.size() - 1))
        throw std::invalid_argument("parent map must cover exactly the non-root vertices");
    for (auto [v, p] : parent) {
        if (v == root || !vertices.contains(v) || !vertices.contains(p) || v == p)
            throw std::invalid_argument("bad parent entry " + std::to_string(v) + " -> " + std::to_string(p));
        parent_[static_cast<std::size_t>(v)] = p;
    }
    for (VertexId v : vertices) {
        // Walk to the root, marking v as a descendant of every vertex on the way.
        VertexId u = v;
        int steps = 0;
        for (;;) {
            des_[static_cast<std::size_t>(u)].insert(v);
            if (u == root) break;
            u = parent_[static_cast<std::size_t>(u)];
            if (++steps > vertices.size()) throw std::invalid_argument("parent map has a cycle");
        }
    }
}

RootedTree RootedTree::single(VertexId v) { return RootedTree(VertexSet::single(v), v, {}); }

RootedTree RootedTree::from_arcs(VertexId root, std::initializer_list<std::pair<VertexId, VertexId>> arcs) {
    VertexSet vs = VertexSet::single(root);
    std::map<VertexId, VertexId> parent;
    for (auto [p, c] : arcs) {
        vs.insert(p);
        vs.insert(c);
        if (!parent.emplace(c, p).second) throw std::invalid_argument("vertex given two parents");
    }
    return RootedTree(vs, root, parent);
}

void RootedTree::check_vertex(VertexId v) const {
    if (!vertices_.contains(v)) throw std::invalid_argument("vertex " + std::to_string(v) + " not in tree");
}

VertexSet RootedTree::descendants(VertexId v) const {
    check_vertex(v);
    return des_[static_cast<std::size_t>(v)];
}

VertexId RootedTree::parent(VertexId v) const {
    check_vertex(v);
    if (v == root_) throw std::invalid_argument("the root has no parent");
    return parent_[static_cast<std::size_t>(v)];
}

VertexSet RootedTree::children(VertexId v) const {
    check_vertex(v);
    VertexSet out;
    for (VertexId w : vertices_)
        if (w != root_ && parent_[static_cast<std::size_t>(w)] == v) out.insert(w);
    return out;
}

VertexId RootedTree::join(VertexId v, VertexId w) const {
    check_vertex(v);
    check_vertex(w);
    VertexId u = v;
    while (!des_[static_cast<std::size_t>(u)].contains(w)) u = parent_[static_cast<std::size_t>(u)];
    return u;
}

EdgeSet RootedTree::edges() const {
    EdgeSet out;
    for (VertexId v : vertices_)
        if (v != root_) out.insert(Edge(parent_[static_cast<std::size_t>(v)], v));
    return out;
}

Graph RootedTree::as_graph(int n) const { return Graph(n, vertices_, edges()); }

RootedTree RootedTree::subtree(VertexId v) const {
    const VertexSet des = descendants(v);
    std::map<VertexId, VertexId> parent;
    for (VertexId w : des)
        if (w != v) parent.emplace(w, parent_[static_cast<std::size_t>(w)]);
    return RootedTree(des, v, parent);
}

std::map<VertexId, VertexId> RootedTree::parent_map() const {
    std::map<VertexId, VertexId> out;
    for (VertexId v : vertices_)
        if (v != root_) out.emplace(v, parent_[static_cast<std::size_t>(v)]);
    return out;
}

RootedForest::RootedForest(std::vector<RootedTree> components) : components_(std::move(components)) {
    for (const RootedTree& t : components_) {
        if (t.vertices().intersects(ground_)) throw std::invalid_argument("forest components overlap");
        ground_ = ground_ | t.vertices();
    }
    std::sort(components_.begin(), components_.end(),
              [](const RootedTree& a, const RootedTree& b) { return a.vertices().min() < b.vertices().min(); });
}

SetPartition RootedForest::partition() const {
    std::vector<VertexSet> blocks;
    for (const RootedTree& t : components_) blocks.push_back(t.vertices());
    return SetPartition(std::move(blocks));
}

EdgeSet RootedForest::edges() const {
    EdgeSet out;
    for (const RootedTree& t : components_) out = out | t.edges();
    return out;
}

VertexSet descendants(VertexId v, const RootedTree& r) { return r.descendants(v); }
VertexId parent_of(VertexId v, const RootedTree& r) { return r.parent(v); }
VertexId join(VertexId v, VertexId w, const RootedTree& r) { return r.join(v, w); }

bool is_increasing(const RootedTree& r) {
    for (VertexId v : r.vertices())
        if (r.descendants(v).min() < v) return false;
    return true;
}

EdgeSet j_set(VertexId v, const RootedTree& r) { return link(r.parent(v), r.descendants(v)); }

bool is_g_connected(const RootedTree& r, const Graph& g) {
    if (r.vertices() != g.vertices()) throw std::invalid_argument("is_g_connected: vertex sets differ");
    for (VertexId v : r.vertices()) {
        if (r.is_root(v)) continue;
        if (!j_set(v, r).intersects(g.edges())) return false;
    }
    return true;
}

IncreasingTreeStream::IncreasingTreeStream(VertexSet vertices, const Limits& limits)
    : vertices_(vertices), order_(vertices.to_vector()), choice_(order_.size(), 0) {
    if (vertices.empty()) throw std::invalid_argument("increasing trees need a nonempty vertex set");
    if (vertices.size() > limits.max_n)
        throw SizeBoundExceeded("increasing tree enumeration on " + std::to_string(vertices.size()) +
                                " vertices exceeds bound " + std::to_string(limits.max_n));
}

std::optional<RootedTree> IncreasingTreeStream::next() {
    if (done_) return std::nullopt;
    std::map<VertexId, VertexId> parent;
    for (std::size_t i = 1; i < order_.size(); ++i)
        parent.emplace(order_[i], order_[static_cast<std::size_t>(choice_[i])]);
    RootedTree tree(vertices_, order_.front(), parent);

    // Advance the odometer; position i ranges over 0..i-1.
    std::size_t i = order_.size();
    for (;;) {
        if (i <= 1) {
            done_ = true;
            break;
        }
        --i;
        if (choice_[i] + 1 < static_cast<int>(i)) {
            ++choice_[i];
            break;
        }
        choice_[i] = 0;
    }
    return tree;
}

std::vector<RootedTree> enumerate_increasing_trees(VertexSet vertices, const Limits& limits) {
    std::vector<RootedTree> out;
    IncreasingTreeStream stream(vertices, limits);
    while (auto t = stream.next()) out.push_back(std::move(*t));
    return out;
}

std::vector<RootedTree> increasing_g_connected_trees(const Graph& g, const Limits& limits) {
    std::vector<RootedTree> out;
    IncreasingTreeStream stream(g.vertices(), limits);
    while (auto t = stream.next())
        if (is_g_connected(*t, g)) out.push_back(std::move(*t));
    return out;
}

IncreasingForestStream::IncreasingForestStream(const Graph& g, std::optional<int> components, const Limits& limits)
    : graph_(g), limits_(limits) {
    if (g.order() > limits.max_n)
        throw SizeBoundExceeded("forest enumeration on " + std::to_string(g.order()) + " vertices exceeds bound " +
                                std::to_string(limits.max_n));
    for (SetPartition& p : set_partitions(g.vertices())) {
        if (components && p.length() != *components) continue;
        const bool blocks_connected = std::all_of(p.blocks().begin(), p.blocks().end(),
                                                  [&](VertexSet b) { return is_connected(restrict(g, b)); });
        if (blocks_connected) partitions_.push_back(std::move(p));
    }
}

bool IncreasingForestStream::load_partition() {
    while (partition_index_ < partitions_.size()) {
        const SetPartition& p = partitions_[partition_index_];
        block_trees_.clear();
        bool any_empty = false;
        for (VertexSet b : p.blocks()) {
            auto it = trees_by_block_.find(b.bits());
            if (it == trees_by_block_.end())
                it = trees_by_block_.emplace(b.bits(), increasing_g_connected_trees(restrict(graph_, b), limits_)).first;
            any_empty = any_empty || it->second.empty();
            block_trees_.push_back(&it->second);
        }
        if (!any_empty) {
            odometer_.assign(block_trees_.size(), 0);
            return true;
        }
        ++partition_index_;
    }
    return false;
}

std::optional<RootedForest> IncreasingForestStream::next() {
    if (!active_) {
        if (!load_partition()) return std::nullopt;
        active_ = true;
    }
    std::vector<RootedTree> parts;
    parts.reserve(block_trees_.size());
    for (std::size_t i = 0; i < block_trees_.size(); ++i) parts.push_back((*block_trees_[i])[odometer_[i]]);
    RootedForest forest(std::move(parts));

    std::size_t i = odometer_.size();
    for (;;) {
        if (i == 0) {
            ++partition_index_;
            active_ = false;
            break;
        }
        --i;
        if (odometer_[i] + 1 < block_trees_[i]->size()) {
            ++odometer_[i];
            break;
        }
        odometer_[i] = 0;
    }
    return forest;
}

std::vector<RootedForest> enumerate_increasing_g_connected_forests(const Graph& g, std::optional<int> components,
                                                                   const Limits& limits) {
    std::vector<RootedForest> out;
    IncreasingForestStream stream(g, components, limits);
    while (auto f = stream.next()) out.push_back(std::move(*f));
    return out;
}

}  // namespace incrtree

#include "incrtree/broken_circuits.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace incrtree {

namespace {

/// Edges on the path from u to v in forest h, or nullopt if they lie in different components.
std::optional<EdgeSet> forest_path(const Graph& h, VertexId u, VertexId v) {
    std::array<VertexId, kMaxVertices + 1> via{};
    VertexSet seen = VertexSet::single(u);
    std::vector<VertexId> queue{u};
    for (std::size_t i = 0; i < queue.size() && !seen.contains(v); ++i) {
        const VertexId x = queue[i];
        for (VertexId y : h.neighbors(x) - seen) {
            seen.insert(y);
            via[static_cast<std::size_t>(y)] = x;
            queue.push_back(y);
        }
    }
    if (!seen.contains(v)) return std::nullopt;
    EdgeSet path;
    for (VertexId x = v; x != u; x = via[static_cast<std::size_t>(x)]) path.insert(Edge(x, via[static_cast<std::size_t>(x)]));
    return path;
}

void require_spanning_tree_of(const Graph& tree, const Graph& g) {
    if (tree.vertices() != g.vertices()) throw std::invalid_argument("tree and graph have different vertex sets");
    if (!tree.edges().subset_of(g.edges())) throw std::invalid_argument("tree is not a subgraph of the graph");
    if (!is_connected(tree) || !is_forest(tree)) throw std::invalid_argument("subgraph is not a spanning tree");
}

}  // namespace

EdgeSet circuit_closed_by(const Graph& tree, const Edge& e) {
    if (tree.has_edge(e)) throw std::invalid_argument("edge " + to_string(e) + " already in the tree");
    if (!tree.vertices().contains(e.lo) || !tree.vertices().contains(e.hi))
        throw std::invalid_argument("edge " + to_string(e) + " leaves the tree's vertex set");
    if (!is_connected(tree) || !is_forest(tree)) throw std::invalid_argument("not a tree");
    EdgeSet circuit = *forest_path(tree, e.lo, e.hi);
    circuit.insert(e);
    return circuit;
}

EdgeSet breaks_direct(const Graph& tree, const Graph& g) {
    require_spanning_tree_of(tree, g);
    EdgeSet out;
    for (Edge e : g.edges() - tree.edges())
        if (circuit_closed_by(tree, e).min() == e) out.insert(e);
    return out;
}

EdgeSet breaks_via_j_sets(const Graph& tree, const Graph& g) {
    require_spanning_tree_of(tree, g);
    const RootedTree r = k_tree(tree);
    EdgeSet out;
    for (VertexId v : r.vertices()) {
        if (r.is_root(v)) continue;
        const EdgeSet j = j_set(v, r);
        const EdgeSet in_tree = j & tree.edges();
        if (in_tree.size() != 1)
            throw std::logic_error("J(v,R) ∩ T is not a single edge at vertex " + std::to_string(v));
        const Edge chosen = in_tree.min();
        for (Edge e : j & g.edges())
            if (e < chosen) out.insert(e);
    }
    return out;
}

bool is_broken_circuit_free(const Graph& h, const Graph& g) {
    if (h.vertices() != g.vertices() || !h.edges().subset_of(g.edges()))
        throw std::invalid_argument("subgraph is not contained in the graph");
    if (!is_forest(h)) return false;
    for (Edge e : g.edges() - h.edges()) {
        const auto path = forest_path(h, e.lo, e.hi);
        if (path && e < path->min()) return false;
    }
    return true;
}

std::optional<Graph> bijection_f(const RootedTree& r, const Graph& g, Strictness mode) {
    EdgeSet out;
    for (const auto& [v, edges] : fiber_edge_sets(g, r)) {
        if (edges.empty()) {
            if (mode == Strictness::strict)
                throw std::invalid_argument("tree is not G-connected at vertex " + std::to_string(v));
            return std::nullopt;
        }
        out.insert(edges.min());
    }
    return g.with_edges(out);
}

BcfForestStream::BcfForestStream(const Graph& g, std::optional<int> components)
    : graph_(g), components_(components), edges_(g.edges().to_vector()) {}

bool BcfForestStream::accept(const EdgeSet& edges) const {
    return !components_ || graph_.order() - edges.size() == *components_;
}

std::optional<Graph> BcfForestStream::next() {
    if (done_) return std::nullopt;
    auto current = [&] {
        EdgeSet s;
        for (std::size_t i : chosen_) s.insert(edges_[i]);
        return s;
    };
    if (!started_) {
        started_ = true;
        if (accept(EdgeSet{})) return graph_.with_edges({});
    }
    for (;;) {
        bool descended = false;
        // Extending lowers the component count, so stop once the target is reached.
        const bool may_extend = !components_ || graph_.order() - static_cast<int>(chosen_.size()) > *components_;
        while (may_extend && cursor_ < edges_.size()) {
            EdgeSet candidate = current();
            candidate.insert(edges_[cursor_]);
            const Graph h = graph_.with_edges(candidate);
            if (is_broken_circuit_free(h, graph_)) {
                chosen_.push_back(cursor_);
                ++cursor_;
                if (accept(candidate)) return h;
                descended = true;
                break;
            }
            ++cursor_;
        }
        if (descended) continue;
        if (chosen_.empty()) {
            done_ = true;
            return std::nullopt;
        }
        cursor_ = chosen_.back() + 1;
        chosen_.pop_back();
    }
}

std::vector<Graph> enumerate_bcf_subforests(const Graph& g, std::optional<int> components) {
    std::vector<Graph> out;
    BcfForestStream stream(g, components);
    while (auto h = stream.next()) out.push_back(std::move(*h));
    return out;
}

}  // namespace incrtree

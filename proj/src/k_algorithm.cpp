#include "incrtree/k_algorithm.hpp"

#include <stdexcept>
#include <string>

namespace incrtree {

namespace {

void require_same_vertices(const Graph& g, const RootedTree& r) {
    if (g.vertices() != r.vertices())
        throw std::invalid_argument("tree vertices " + to_string(r.vertices()) + " differ from graph vertices " +
                                    to_string(g.vertices()));
}

void require_connected(const Graph& g) {
    if (!is_connected(g))
        throw DisconnectedGraph("graph is not connected; components " + to_string(components_partition(g)));
}

}  // namespace

SetPartition depth_first_partition(const Graph& g, VertexId root) {
    if (!g.vertices().contains(root)) throw std::invalid_argument("root " + std::to_string(root) + " not in graph");
    require_connected(g);
    return components_partition(restrict(g, g.vertices() - VertexSet::single(root)));
}

RootedTree k_tree(const Graph& g) {
    require_connected(g);
    std::map<VertexId, VertexId> parent;
    std::vector<VertexSet> work{g.vertices()};
    while (!work.empty()) {
        const VertexSet s = work.back();
        work.pop_back();
        const VertexId r = s.min();
        const SetPartition pi = components_partition(restrict(g, s - VertexSet::single(r)));
        for (VertexSet block : pi.blocks()) {
            parent.emplace(block.min(), r);
            if (block.size() > 1) work.push_back(block);
        }
    }
    return RootedTree(g.vertices(), g.vertices().min(), parent);
}

RootedForest k_forest(const Graph& h) {
    std::vector<RootedTree> parts;
    const SetPartition blocks = components_partition(h);
    for (VertexSet block : blocks.blocks()) parts.push_back(k_tree(restrict(h, block)));
    return RootedForest(std::move(parts));
}

std::map<VertexId, EdgeSet> fiber_edge_sets(const Graph& g, const RootedTree& r) {
    require_same_vertices(g, r);
    std::map<VertexId, EdgeSet> out;
    for (VertexId v : r.vertices())
        if (!r.is_root(v)) out.emplace(v, j_set(v, r) & g.edges());
    return out;
}

mpz_class fiber_size(const Graph& g, const RootedTree& r, Strictness mode) {
    mpz_class total = 1;
    for (const auto& [v, edges] : fiber_edge_sets(g, r)) {
        if (edges.empty()) {
            if (mode == Strictness::strict)
                throw std::invalid_argument("tree is not G-connected at vertex " + std::to_string(v));
            return 0;
        }
        mpz_class factor;
        mpz_ui_pow_ui(factor.get_mpz_t(), 2, static_cast<unsigned long>(edges.size()));
        total *= factor - 1;
    }
    return total;
}

FiberStream::FiberStream(const Graph& g, const RootedTree& r, Strictness mode) : graph_(g.with_edges({})) {
    for (const auto& [v, edges] : fiber_edge_sets(g, r)) {
        if (edges.empty()) {
            if (mode == Strictness::strict)
                throw std::invalid_argument("tree is not G-connected at vertex " + std::to_string(v));
            done_ = true;
        }
        choices_.push_back(edges.to_vector());
    }
    counter_.assign(choices_.size(), 1);
}

std::optional<Graph> FiberStream::next() {
    if (done_) return std::nullopt;
    EdgeSet q;
    for (std::size_t i = 0; i < choices_.size(); ++i)
        for (std::size_t b = 0; b < choices_[i].size(); ++b)
            if ((counter_[i] >> b) & 1u) q.insert(choices_[i][b]);

    std::size_t i = counter_.size();
    for (;;) {
        if (i == 0) {
            done_ = true;
            break;
        }
        --i;
        const std::uint32_t full = (std::uint32_t{1} << choices_[i].size()) - 1;
        if (counter_[i] < full) {
            ++counter_[i];
            break;
        }
        counter_[i] = 1;
    }
    return graph_.with_edges(q);
}

std::vector<Graph> enumerate_fiber(const Graph& g, const RootedTree& r, Strictness mode) {
    std::vector<Graph> out;
    FiberStream stream(g, r, mode);
    while (auto q = stream.next()) out.push_back(std::move(*q));
    return out;
}

bool verify_characterization(const Graph& g, const RootedTree& r) {
    if (g.vertices() != r.vertices()) return false;
    for (VertexId v : r.vertices()) {
        const VertexSet des = r.descendants(v);
        const Graph local = restrict(g, des);
        if (!is_connected(local)) return false;
        std::vector<VertexSet> tree_blocks;
        for (VertexId c : r.children(v)) tree_blocks.push_back(r.descendants(c));
        if (depth_first_partition(local, v) != SetPartition(std::move(tree_blocks))) return false;
    }
    return true;
}

bool satisfies_edge_cover(const Graph& g, const RootedTree& r) {
    if (g.vertices() != r.vertices()) return false;
    EdgeSet cover;
    for (const auto& [v, edges] : fiber_edge_sets(g, r)) {
        if (edges.empty()) return false;
        cover = cover | edges;
    }
    return cover == g.edges();
}

}  // namespace incrtree

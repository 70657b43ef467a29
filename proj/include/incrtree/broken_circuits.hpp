#ifndef INCRTREE_BROKEN_CIRCUITS_HPP
#define INCRTREE_BROKEN_CIRCUITS_HPP

#include <optional>
#include <vector>

#include "incrtree/graph.hpp"
#include "incrtree/k_algorithm.hpp"
#include "incrtree/rooted_tree.hpp"

// Edges are ordered lexicographically throughout. A broken circuit is a
// circuit of G minus its smallest edge; a break of a spanning tree T ⊆ G is
// an edge e of G - T that is the smallest edge on the circuit of T + e.

namespace incrtree {

/// The circuit of T + e, e included. T must be a tree on its vertex set;
/// throws std::invalid_argument if e is already in T or leaves V(T).
EdgeSet circuit_closed_by(const Graph& tree, const Edge& e);

/// Breaks of T in G from the definition. Throws std::invalid_argument unless
/// T is a spanning tree of G.
EdgeSet breaks_direct(const Graph& tree, const Graph& g);

/// Breaks of T computed from R = k(T): for every non-root v, J(v,R) ∩ T is
/// a single edge e(v), and the breaks are the edges of J(v,R) ∩ G smaller
/// than e(v).
EdgeSet breaks_via_j_sets(const Graph& tree, const Graph& g);

/// True iff h contains no broken circuit of g: h is a forest and no edge of
/// g - h joining two vertices of one h-component is smaller than every edge
/// of the h-path between them. Throws std::invalid_argument if h ⊄ g.
bool is_broken_circuit_free(const Graph& h, const Graph& g);

/// f(R) = union over non-root v of min(J(v,R) ∩ G). Lenient mode returns
/// nullopt when R is not G-connected.
std::optional<Graph> bijection_f(const RootedTree& r, const Graph& g, Strictness mode = Strictness::lenient);

/// Streams broken-circuit-free spanning subforests of g in lexicographic
/// order of their sorted edge lists, optionally only those with the given
/// number of components.
class BcfForestStream {
public:
    explicit BcfForestStream(const Graph& g, std::optional<int> components = std::nullopt);
    std::optional<Graph> next();

private:
    bool accept(const EdgeSet& edges) const;

    Graph graph_;
    std::optional<int> components_;
    std::vector<Edge> edges_;
    // Depth-first search over increasing edge sequences: the current set and,
    // per depth, the next candidate edge index.
    std::vector<std::size_t> chosen_;
    std::size_t cursor_ = 0;
    bool started_ = false;
    bool done_ = false;
};

std::vector<Graph> enumerate_bcf_subforests(const Graph& g, std::optional<int> components = std::nullopt);

}  // namespace incrtree

#endif

#ifndef INCRTREE_K_ALGORITHM_HPP
#define INCRTREE_K_ALGORITHM_HPP

#include <map>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "incrtree/graph.hpp"
#include "incrtree/partition.hpp"
#include "incrtree/rooted_tree.hpp"

namespace incrtree {

/// How fiber operations treat a tree that is not G-connected.
enum class Strictness {
    lenient,  // empty fiber, size 0, absent result
    strict,   // throw std::invalid_argument
};

/// s(G restricted to V - {root}). Throws DisconnectedGraph if g is
/// disconnected and std::invalid_argument if root is not a vertex of g.
SetPartition depth_first_partition(const Graph& g, VertexId root);

/// The increasing G-connected tree k(G).
///
/// Starting from S = V(G): take r = min(S), split S - {r} into the
/// components of G restricted to it, hang the minimum of each component
/// below r, then repeat inside every component with more than one vertex.
/// Throws DisconnectedGraph when g is not connected.
RootedTree k_tree(const Graph& g);

/// k applied to every component of h; h may be disconnected.
RootedForest k_forest(const Graph& h);

/// v -> J(v,R) ∩ G for every non-root v of R.
std::map<VertexId, EdgeSet> fiber_edge_sets(const Graph& g, const RootedTree& r);

/// Number of connected spanning subgraphs Q of G with k(Q) = R, i.e. the
/// product over non-root v of (2^|J(v,R) ∩ G| - 1).
mpz_class fiber_size(const Graph& g, const RootedTree& r, Strictness mode = Strictness::lenient);

/// Streams the fiber {Q ⊆ G : k(Q) = R} as unions of one nonempty subset of
/// J(v,R) ∩ G per non-root v. Each per-vertex subset runs through a binary
/// counter over that vertex's edges in lexicographic order (lowest edge is
/// the lowest bit); vertices compose in increasing order with the largest
/// vertex varying fastest.
class FiberStream {
public:
    FiberStream(const Graph& g, const RootedTree& r, Strictness mode = Strictness::lenient);
    std::optional<Graph> next();

private:
    Graph graph_;
    std::vector<std::vector<Edge>> choices_;
    std::vector<std::uint32_t> counter_;
    bool done_ = false;
};

std::vector<Graph> enumerate_fiber(const Graph& g, const RootedTree& r, Strictness mode = Strictness::lenient);

/// Recursive characterization: for every v, G restricted to des(v,R) is
/// connected and, rooted at v, has the same depth-first partition as the
/// subtree of R at v. Agrees with k(G) == R.
bool verify_characterization(const Graph& g, const RootedTree& r);

/// Cover characterization: every J(v,R) ∩ G is nonempty and together they
/// contain every edge of G. Agrees with k(G) == R.
bool satisfies_edge_cover(const Graph& g, const RootedTree& r);

}  // namespace incrtree

#endif

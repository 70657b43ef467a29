#ifndef INCRTREE_GENERATORS_HPP
#define INCRTREE_GENERATORS_HPP

#include <functional>
#include <random>

#include "incrtree/graph.hpp"

namespace incrtree {

/// Calls fn on each of the 2^(n(n-1)/2) labeled graphs on 1..n, in the
/// binary order of their edge masks over the lexicographic edge list.
void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& fn);

/// Each possible edge present independently with probability 1/2.
Graph random_graph(int n, std::mt19937_64& rng);
/// random_graph conditioned on being connected (rejection sampling).
Graph random_connected_graph(int n, std::mt19937_64& rng);

}  // namespace incrtree

#endif

#include "incrtree/generators.hpp"

#include <vector>

namespace incrtree {

namespace {

std::vector<Edge> all_pairs(int n) {
    std::vector<Edge> out;
    for (VertexId a = 1; a <= n; ++a)
        for (VertexId b = a + 1; b <= n; ++b) out.emplace_back(a, b);
    return out;
}

}  // namespace

void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& fn) {
    const std::vector<Edge> pairs = all_pairs(n);
    const std::uint64_t count = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        EdgeSet edges;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if ((mask >> i) & 1u) edges.insert(pairs[i]);
        fn(Graph(n, edges));
    }
}

Graph random_graph(int n, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(0.5);
    EdgeSet edges;
    for (Edge e : all_pairs(n))
        if (coin(rng)) edges.insert(e);
    return Graph(n, edges);
}

Graph random_connected_graph(int n, std::mt19937_64& rng) {
    for (;;) {
        Graph g = random_graph(n, rng);
        if (is_connected(g)) return g;
    }
}

}  // namespace incrtree

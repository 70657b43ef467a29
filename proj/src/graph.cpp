#include "incrtree/graph.hpp"

#include <sstream>
#include <stdexcept>

#include "incrtree/partition.hpp"

namespace incrtree {

namespace {

struct EdgeIndexTable {
    std::array<Edge, kMaxEdges> edges{};
    EdgeIndexTable() {
        int i = 0;
        for (VertexId lo = 1; lo <= kMaxVertices; ++lo)
            for (VertexId hi = lo + 1; hi <= kMaxVertices; ++hi) edges[static_cast<std::size_t>(i++)] = Edge(lo, hi);
    }
};

const EdgeIndexTable& edge_table() {
    static const EdgeIndexTable table;
    return table;
}

}  // namespace

Edge::Edge(VertexId a, VertexId b) : lo(a < b ? a : b), hi(a < b ? b : a) {
    if (a == b) throw std::invalid_argument("loop edge at vertex " + std::to_string(a));
    if (lo < 1 || hi > kMaxVertices)
        throw std::invalid_argument("edge endpoint outside 1.." + std::to_string(kMaxVertices));
}

Edge Edge::from_index(int index) { return edge_table().edges[static_cast<std::size_t>(index)]; }

std::string to_string(const Edge& e) {
    if (e.hi < 10) return std::to_string(e.lo) + std::to_string(e.hi);
    return std::to_string(e.lo) + "-" + std::to_string(e.hi);
}

std::strong_ordering operator<=>(const EdgeSet& a, const EdgeSet& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
        if (auto c = *ia <=> *ib; c != 0) return c;
    }
    if (ia == a.end() && ib == b.end()) return std::strong_ordering::equal;
    return ia == a.end() ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::vector<Edge> EdgeSet::to_vector() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (Edge e : *this) out.push_back(e);
    return out;
}

std::string to_string(const EdgeSet& edges) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (Edge e : edges) {
        if (!first) os << ',';
        os << to_string(e);
        first = false;
    }
    os << '}';
    return os.str();
}

std::string to_string(VertexSet s) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (VertexId v : s) {
        if (!first) os << ',';
        os << v;
        first = false;
    }
    os << '}';
    return os.str();
}

Graph::Graph(int n) : Graph(n, VertexSet::range(n), EdgeSet{}) {}

Graph::Graph(int n, const EdgeSet& edges) : Graph(n, VertexSet::range(n), edges) {}

Graph::Graph(int n, VertexSet vertices, const EdgeSet& edges) : n_(n), vertices_(vertices), edges_(edges) {
    if (n < 0 || n > kMaxVertices)
        throw SizeBoundExceeded("graph order " + std::to_string(n) + " exceeds " + std::to_string(kMaxVertices));
    if (!vertices.subset_of(VertexSet::range(n))) throw std::invalid_argument("vertex set outside 1..n");
    for (Edge e : edges_) {
        if (!vertices_.contains(e.lo) || !vertices_.contains(e.hi))
            throw std::invalid_argument("edge " + to_string(e) + " has an endpoint outside the vertex set");
        adjacency_[static_cast<std::size_t>(e.lo)] |= VertexSet::single(e.hi).bits();
        adjacency_[static_cast<std::size_t>(e.hi)] |= VertexSet::single(e.lo).bits();
    }
}

Graph Graph::complete(int n) {
    EdgeSet all;
    for (VertexId a = 1; a <= n; ++a)
        for (VertexId b = a + 1; b <= n; ++b) all.insert(Edge(a, b));
    return Graph(n, all);
}

EdgeSet link(VertexId v, VertexSet s) {
    EdgeSet out;
    for (VertexId w : s)
        if (w != v) out.insert(Edge(v, w));
    return out;
}

Graph restrict(const Graph& g, VertexSet s) {
    const VertexSet kept = s & g.vertices();
    EdgeSet edges;
    for (Edge e : g.edges())
        if (kept.contains(e.lo) && kept.contains(e.hi)) edges.insert(e);
    return Graph(g.universe(), kept, edges);
}

VertexSet reachable(const Graph& g, VertexId start, VertexSet within) {
    VertexSet seen = VertexSet::single(start);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        for (VertexId v : frontier) next = next | g.neighbors(v);
        frontier = (next & within) - seen;
        seen = seen | frontier;
    }
    return seen;
}

SetPartition components_partition(const Graph& g) {
    std::vector<VertexSet> blocks;
    VertexSet rest = g.vertices();
    while (!rest.empty()) {
        VertexSet block = reachable(g, rest.min(), g.vertices());
        blocks.push_back(block);
        rest = rest - block;
    }
    return SetPartition(std::move(blocks));
}

bool is_connected(const Graph& g) {
    if (g.vertices().empty()) return false;
    return reachable(g, g.vertices().min(), g.vertices()) == g.vertices();
}

bool is_forest(const Graph& g) {
    return g.size() == g.order() - components_partition(g).length();
}

}  // namespace incrtree

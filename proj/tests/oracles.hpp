#ifndef INCRTREE_TESTS_ORACLES_HPP
#define INCRTREE_TESTS_ORACLES_HPP

// Brute-force reference computations for the test suites. These deliberately
// avoid the library's algorithms: plain adjacency matrices, explicit DFS, and
// exhaustive enumeration only. The library types appear only at the boundary.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "incrtree/graph.hpp"
#include "incrtree/rooted_tree.hpp"

namespace oracle {

using Pair = std::pair<int, int>;
using EdgeList = std::vector<Pair>;

inline EdgeList edge_list(const incrtree::Graph& g) {
    EdgeList out;
    for (incrtree::Edge e : g.edges()) out.emplace_back(e.lo, e.hi);
    return out;
}

inline incrtree::Graph make_graph(int n, const EdgeList& edges) {
    incrtree::EdgeSet s;
    for (auto [a, b] : edges) s.insert(incrtree::Edge(a, b));
    return incrtree::Graph(n, s);
}

/// Component label per vertex (index 1..n) among `vertices`, using only `edges`.
inline std::vector<int> component_labels(int n, const std::vector<int>& vertices, const EdgeList& edges) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
    std::vector<bool> inside(static_cast<std::size_t>(n) + 1, false);
    for (int v : vertices) inside[static_cast<std::size_t>(v)] = true;
    for (auto [a, b] : edges) {
        if (!inside[static_cast<std::size_t>(a)] || !inside[static_cast<std::size_t>(b)]) continue;
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    std::vector<int> label(static_cast<std::size_t>(n) + 1, 0);
    int next = 0;
    for (int v : vertices) {
        if (label[static_cast<std::size_t>(v)] != 0) continue;
        ++next;
        std::vector<int> stack{v};
        label[static_cast<std::size_t>(v)] = next;
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            for (int y : adj[static_cast<std::size_t>(x)])
                if (label[static_cast<std::size_t>(y)] == 0) {
                    label[static_cast<std::size_t>(y)] = next;
                    stack.push_back(y);
                }
        }
    }
    return label;
}

inline std::vector<std::vector<int>> components(int n, const std::vector<int>& vertices, const EdgeList& edges) {
    const auto label = component_labels(n, vertices, edges);
    std::map<int, std::vector<int>> groups;
    for (int v : vertices) groups[label[static_cast<std::size_t>(v)]].push_back(v);
    std::vector<std::vector<int>> out;
    for (auto& [_, g] : groups) out.push_back(g);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<int> range(int n) {
    std::vector<int> v;
    for (int i = 1; i <= n; ++i) v.push_back(i);
    return v;
}

inline bool connected(int n, const EdgeList& edges) { return components(n, range(n), edges).size() == 1; }

/// Every subset of `edges`.
inline void for_each_subset(const EdgeList& edges, const std::function<void(const EdgeList&)>& fn) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
        EdgeList sub;
        for (std::size_t i = 0; i < edges.size(); ++i)
            if ((mask >> i) & 1u) sub.push_back(edges[i]);
        fn(sub);
    }
}

/// Parent map (vertex -> parent) of k, computed recursively over explicit
/// vertex lists: the minimum becomes the root, each component of the rest
/// hangs off it by its own minimum.
inline void k_recursive(int n, const EdgeList& edges, const std::vector<int>& s, std::map<int, int>& parent) {
    const int r = *std::min_element(s.begin(), s.end());
    std::vector<int> rest;
    for (int v : s)
        if (v != r) rest.push_back(v);
    for (const auto& block : components(n, rest, edges)) {
        parent[*std::min_element(block.begin(), block.end())] = r;
        if (block.size() > 1) k_recursive(n, edges, block, parent);
    }
}

inline std::map<int, int> k_parent_map(int n, const EdgeList& edges) {
    std::map<int, int> parent;
    k_recursive(n, edges, range(n), parent);
    return parent;
}

/// All increasing trees on 1..n found by scanning every map v -> parent(v) in
/// (1..n)^(n-1) and keeping those that are trees rooted at 1 whose vertices
/// precede all their descendants.
inline std::vector<std::map<int, int>> increasing_trees_by_scan(int n) {
    std::vector<std::map<int, int>> out;
    std::vector<int> choice(static_cast<std::size_t>(n) + 1, 1);
    for (;;) {
        bool ok = true;
        for (int v = 2; v <= n && ok; ++v) {
            // Walk to the root; every ancestor must be smaller.
            int u = v;
            int steps = 0;
            while (u != 1 && ok) {
                const int p = choice[static_cast<std::size_t>(u)];
                if (p == u || p > v || ++steps > n) ok = false;
                u = p;
            }
        }
        if (ok) {
            std::map<int, int> m;
            for (int v = 2; v <= n; ++v) m[v] = choice[static_cast<std::size_t>(v)];
            out.push_back(m);
        }
        int i = n;
        while (i >= 2 && choice[static_cast<std::size_t>(i)] == n) choice[static_cast<std::size_t>(i--)] = 1;
        if (i < 2) break;
        ++choice[static_cast<std::size_t>(i)];
    }
    return out;
}

/// Proper colorings of G with x colors, by enumeration.
inline long count_colorings(int n, const EdgeList& edges, int x) {
    if (x <= 0) return n == 0 ? 1 : 0;
    std::vector<int> color(static_cast<std::size_t>(n) + 1, 0);
    long count = 0;
    for (;;) {
        bool proper = true;
        for (auto [a, b] : edges)
            if (color[static_cast<std::size_t>(a)] == color[static_cast<std::size_t>(b)]) proper = false;
        if (proper) ++count;
        int i = n;
        while (i >= 1 && color[static_cast<std::size_t>(i)] == x - 1) color[static_cast<std::size_t>(i--)] = 0;
        if (i < 1) break;
        ++color[static_cast<std::size_t>(i)];
    }
    return count;
}

inline std::map<int, int> parent_map(const incrtree::RootedTree& r) { return r.parent_map(); }

}  // namespace oracle

#endif

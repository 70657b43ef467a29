#include "incrtree/invariants.hpp"

#include <array>
#include <string>
#include <vector>

#include "incrtree/k_algorithm.hpp"
#include "incrtree/rooted_tree.hpp"

namespace incrtree {

namespace {

mpz_class sign_power(int exponent) { return (exponent % 2 == 0) ? 1 : -1; }

void require_order(const Graph& g, const Limits& limits, const char* what) {
    if (g.order() > limits.max_n)
        throw SizeBoundExceeded(std::string(what) + ": " + std::to_string(g.order()) + " vertices exceeds bound " +
                                std::to_string(limits.max_n));
}

void require_connected(const Graph& g) {
    if (!is_connected(g))
        throw DisconnectedGraph("graph is not connected; components " + to_string(components_partition(g)));
}

}  // namespace

void PExpansionX::add(const IntegerPartition& lambda, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms.try_emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

mpz_class PExpansionX::coefficient(const IntegerPartition& lambda) const {
    auto it = terms.find(lambda);
    return it == terms.end() ? mpz_class(0) : it->second;
}

void PExpansionY::add(const SetPartition& pi, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms.try_emplace(pi, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

mpz_class PExpansionY::coefficient(const SetPartition& pi) const {
    auto it = terms.find(pi);
    return it == terms.end() ? mpz_class(0) : it->second;
}

void for_each_spanning_subgraph(const Graph& g, const Limits& limits,
                                const std::function<void(const EdgeSet&, const SetPartition&)>& fn) {
    require_order(g, limits, "subgraph scan");
    if (g.size() > limits.max_subset_edges)
        throw SizeBoundExceeded("subgraph scan: " + std::to_string(g.size()) + " edges exceeds bound " +
                                std::to_string(limits.max_subset_edges));
    const std::vector<Edge> edges = g.edges().to_vector();
    const std::uint64_t count = std::uint64_t{1} << edges.size();
    std::vector<VertexSet> blocks;
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        std::array<std::uint32_t, kMaxVertices + 1> adj{};
        EdgeSet subset;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (!((mask >> i) & 1u)) continue;
            const Edge e = edges[i];
            subset.insert(e);
            adj[static_cast<std::size_t>(e.lo)] |= VertexSet::single(e.hi).bits();
            adj[static_cast<std::size_t>(e.hi)] |= VertexSet::single(e.lo).bits();
        }
        blocks.clear();
        VertexSet rest = g.vertices();
        while (!rest.empty()) {
            VertexSet seen = VertexSet::single(rest.min());
            VertexSet frontier = seen;
            while (!frontier.empty()) {
                VertexSet next;
                for (VertexId v : frontier) next = next | VertexSet(adj[static_cast<std::size_t>(v)]);
                frontier = next - seen;
                seen = seen | frontier;
            }
            blocks.push_back(seen);
            rest = rest - seen;
        }
        fn(subset, SetPartition(blocks));
    }
}

const mpz_class& TreeCounter::trees(VertexSet block) {
    if (auto it = trees_.find(block.bits()); it != trees_.end()) return it->second;
    const VertexId r = block.min();
    mpz_class count = hanging(r, block - VertexSet::single(r));
    return trees_.emplace(block.bits(), std::move(count)).first->second;
}

const mpz_class& TreeCounter::hanging(VertexId root, VertexSet rest) {
    const std::uint64_t key = (std::uint64_t{static_cast<std::uint32_t>(root)} << 32) | rest.bits();
    if (auto it = hanging_.find(key); it != hanging_.end()) return it->second;
    mpz_class total = 0;
    if (rest.empty()) {
        total = 1;
    } else {
        const VertexId anchor = rest.min();
        const std::uint32_t others = (rest - VertexSet::single(anchor)).bits();
        const VertexSet root_nbrs = graph_.neighbors(root);
        // Every subset C of `rest` containing anchor.
        for (std::uint32_t sub = others;; sub = (sub - 1) & others) {
            const VertexSet child = VertexSet(sub) | VertexSet::single(anchor);
            if (child.intersects(root_nbrs)) {
                const mpz_class& below = trees(child);
                if (below != 0) total += below * hanging(root, rest - child);
            }
            if (sub == 0) break;
        }
    }
    return hanging_.emplace(key, std::move(total)).first->second;
}

IntPolynomial TreeCounter::forests_by_components(VertexSet ground) {
    if (auto it = forests_.find(ground.bits()); it != forests_.end()) return it->second;
    IntPolynomial total;
    if (ground.empty()) {
        total = IntPolynomial::constant(1);
    } else {
        const VertexId anchor = ground.min();
        const std::uint32_t others = (ground - VertexSet::single(anchor)).bits();
        for (std::uint32_t sub = others;; sub = (sub - 1) & others) {
            const VertexSet block = VertexSet(sub) | VertexSet::single(anchor);
            const mpz_class& h = trees(block);
            if (h != 0) total += IntPolynomial::monomial(1, h) * forests_by_components(ground - block);
            if (sub == 0) break;
        }
    }
    forests_.emplace(ground.bits(), total);
    return total;
}

IntPolynomial eta_bruteforce(const Graph& g, const Limits& limits) {
    require_connected(g);
    std::vector<mpz_class> coeffs(static_cast<std::size_t>(g.size()) + 1);
    for_each_spanning_subgraph(g, limits, [&](const EdgeSet& q, const SetPartition& s) {
        if (s.length() == 1) ++coeffs[static_cast<std::size_t>(q.size())];
    });
    return IntPolynomial(std::move(coeffs));
}

IntPolynomial eta_via_trees(const Graph& g, const Limits& limits) {
    require_connected(g);
    const IntPolynomial one_plus_t{1, 1};
    const IntPolynomial one{1};
    IntPolynomial total;
    IncreasingTreeStream stream(g.vertices(), limits);
    while (auto r = stream.next()) {
        IntPolynomial term = one;
        for (const auto& [v, edges] : fiber_edge_sets(g, *r)) {
            if (edges.empty()) {
                term = IntPolynomial{};
                break;
            }
            term *= one_plus_t.pow(static_cast<unsigned>(edges.size())) - one;
        }
        total += term;
    }
    return total;
}

IntPolynomial chromatic_polynomial_oracle(const Graph& g, const Limits& limits) {
    std::vector<mpz_class> coeffs(static_cast<std::size_t>(g.order()) + 1);
    for_each_spanning_subgraph(g, limits, [&](const EdgeSet& q, const SetPartition& s) {
        coeffs[static_cast<std::size_t>(s.length())] += sign_power(q.size());
    });
    return IntPolynomial(std::move(coeffs));
}

namespace {

using Adjacency = std::array<std::uint32_t, kMaxVertices + 1>;

IntPolynomial deletion_contraction(VertexSet vertices, Adjacency adj) {
    VertexId lo = 0;
    for (VertexId v : vertices) {
        if (adj[static_cast<std::size_t>(v)] != 0) {
            lo = v;
            break;
        }
    }
    if (lo == 0) return IntPolynomial::monomial(vertices.size());
    const VertexId hi = VertexSet(adj[static_cast<std::size_t>(lo)]).min();

    Adjacency deleted = adj;
    deleted[static_cast<std::size_t>(lo)] &= ~VertexSet::single(hi).bits();
    deleted[static_cast<std::size_t>(hi)] &= ~VertexSet::single(lo).bits();

    Adjacency contracted = deleted;
    const VertexSet hi_nbrs(contracted[static_cast<std::size_t>(hi)]);
    for (VertexId w : hi_nbrs) {
        contracted[static_cast<std::size_t>(w)] &= ~VertexSet::single(hi).bits();
        contracted[static_cast<std::size_t>(w)] |= VertexSet::single(lo).bits();
        contracted[static_cast<std::size_t>(lo)] |= VertexSet::single(w).bits();
    }
    contracted[static_cast<std::size_t>(hi)] = 0;

    return deletion_contraction(vertices, deleted) -
           deletion_contraction(vertices - VertexSet::single(hi), contracted);
}

}  // namespace

IntPolynomial chromatic_polynomial_deletion_contraction(const Graph& g) {
    Adjacency adj{};
    for (VertexId v : g.vertices()) adj[static_cast<std::size_t>(v)] = g.neighbors(v).bits();
    return deletion_contraction(g.vertices(), adj);
}

IntPolynomial chromatic_coeffs_via_forests(const Graph& g, const Limits& limits) {
    require_order(g, limits, "chromatic coefficients");
    TreeCounter counter(g);
    const IntPolynomial counts = counter.forests_by_components(g.vertices());
    std::vector<mpz_class> coeffs(counts.coefficients());
    const int n = g.order();
    for (std::size_t q = 0; q < coeffs.size(); ++q) coeffs[q] *= sign_power(n - static_cast<int>(q));
    return IntPolynomial(std::move(coeffs));
}

PExpansionY csf_y_via_forests(const Graph& g, const Limits& limits) {
    require_order(g, limits, "Y expansion");
    TreeCounter counter(g);
    PExpansionY out;
    const int n = g.order();
    for_each_set_partition(g.vertices(), [&](const SetPartition& pi) {
        mpz_class forests = 1;
        for (VertexSet block : pi.blocks()) {
            forests *= counter.trees(block);
            if (forests == 0) return;
        }
        out.add(pi, sign_power(n - pi.length()) * forests);
    });
    return out;
}

PExpansionY csf_y_oracle(const Graph& g, const Limits& limits) {
    PExpansionY out;
    for_each_spanning_subgraph(g, limits,
                               [&](const EdgeSet& q, const SetPartition& s) { out.add(s, sign_power(q.size())); });
    return out;
}

PExpansionX csf_x_via_forests(const Graph& g, const Limits& limits) {
    return collapse_by_shape(csf_y_via_forests(g, limits));
}

PExpansionX collapse_by_shape(const PExpansionY& y) {
    PExpansionX out;
    for (const auto& [pi, c] : y.terms) out.add(shape(pi), c);
    return out;
}

IntPolynomial specialize_to_chromatic(const PExpansionY& y) {
    IntPolynomial out;
    for (const auto& [pi, c] : y.terms) out += IntPolynomial::monomial(pi.length(), c);
    return out;
}

}  // namespace incrtree

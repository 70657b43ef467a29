#include "incrtree/selfcheck.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <random>
#include <set>

#include "incrtree/broken_circuits.hpp"
#include "incrtree/generators.hpp"
#include "incrtree/invariants.hpp"
#include "incrtree/k_algorithm.hpp"
#include "incrtree/rooted_tree.hpp"

namespace incrtree {

bool SelfcheckReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.failed == 0; });
}

namespace {

class Checker {
public:
    template <typename Fn>
    void run(const std::string& name, const Graph& g, Fn&& fn) {
        try {
            record(name, g, fn(), {});
        } catch (const std::exception& e) {
            record(name, g, false, e.what());
        }
    }

    void record(const std::string& name, const Graph& g, bool ok, const std::string& detail) {
        auto [it, inserted] = index_.try_emplace(name, results_.size());
        if (inserted) results_.push_back(CheckResult{name, 0, 0, std::nullopt, {}});
        CheckResult& r = results_[it->second];
        if (ok) {
            ++r.passed;
            return;
        }
        ++r.failed;
        const bool smaller = !r.counterexample || g.order() < r.counterexample->order() ||
                             (g.order() == r.counterexample->order() && g.size() < r.counterexample->size());
        if (smaller) {
            r.counterexample = g;
            r.detail = detail;
        }
    }

    std::vector<CheckResult> take() { return std::move(results_); }

private:
    std::vector<CheckResult> results_;
    std::map<std::string, std::size_t> index_;
};

mpz_class abs_coeff(const IntPolynomial& p, int q) { return abs(p.coefficient(q)); }

void check_any_graph(Checker& c, const Graph& g) {
    const SetPartition s = components_partition(g);

    c.run("core.refinement-chain", g, [&] {
        return refines(SetPartition::singletons(g.vertices()), s) && refines(s, SetPartition::whole(g.vertices()));
    });
    c.run("core.components-connected", g, [&] {
        return std::all_of(s.blocks().begin(), s.blocks().end(),
                           [&](VertexSet b) { return is_connected(restrict(g, b)); });
    });
    c.run("core.partition-roundtrip", g, [&] { return parse_set_partition(to_string(s)) == s; });

    const IntPolynomial subgraph = chromatic_polynomial_oracle(g);
    const IntPolynomial forests = chromatic_coeffs_via_forests(g);
    c.run("invariants.chromatic-forests", g, [&] { return forests == subgraph; });
    c.run("invariants.chromatic-oracles-agree", g,
          [&] { return chromatic_polynomial_deletion_contraction(g) == subgraph; });
    c.run("invariants.chromatic-signs", g, [&] {
        for (int q = 0; q <= g.order(); ++q) {
            const mpz_class coeff = forests.coefficient(q);
            if (coeff != 0 && sgn(coeff) != ((g.order() - q) % 2 == 0 ? 1 : -1)) return false;
        }
        return true;
    });

    const PExpansionY y_forests = csf_y_via_forests(g);
    const PExpansionY y_oracle = csf_y_oracle(g);
    c.run("invariants.csf-y", g, [&] { return y_forests == y_oracle; });
    c.run("invariants.csf-x-collapse", g, [&] {
        return csf_x_via_forests(g) == collapse_by_shape(y_oracle) &&
               csf_x_via_forests(g) == collapse_by_shape(y_forests);
    });
    c.run("invariants.y-specializes-to-chromatic", g,
          [&] { return specialize_to_chromatic(y_forests) == forests; });

    c.run("trees.forest-enumeration", g, [&] {
        std::map<int, long> by_q;
        std::set<EdgeSet> seen;
        for (const RootedForest& f : enumerate_increasing_g_connected_forests(g)) {
            ++by_q[f.partition().length()];
            for (const RootedTree& t : f.components())
                if (!is_increasing(t) || !is_g_connected(t, restrict(g, t.vertices()))) return false;
            // An increasing forest is determined by its undirected edges.
            if (!seen.insert(f.edges()).second) return false;
        }
        for (int q = 1; q <= g.order(); ++q) {
            if (by_q[q] != abs_coeff(forests, q)) return false;
            if (static_cast<long>(enumerate_increasing_g_connected_forests(g, q).size()) != by_q[q]) return false;
        }
        return true;
    });

    c.run("bcf.whitney", g, [&] {
        for (int q = 1; q <= g.order(); ++q)
            if (mpz_class(static_cast<long>(enumerate_bcf_subforests(g, q).size())) != abs_coeff(subgraph, q))
                return false;
        return true;
    });

    c.run("bcf.implies-forest", g, [&] {
        bool ok = true;
        for_each_spanning_subgraph(g, Limits{}, [&](const EdgeSet& h, const SetPartition&) {
            const Graph sub = g.with_edges(h);
            if (is_broken_circuit_free(sub, g) && !is_forest(sub)) ok = false;
        });
        return ok;
    });
}

struct TreeKey {
    std::map<VertexId, VertexId> parent;
    friend auto operator<=>(const TreeKey&, const TreeKey&) = default;
};

void check_connected_graph(Checker& c, const Graph& g, const std::vector<RootedTree>& all_trees, bool& witness) {
    const RootedTree kg = k_tree(g);
    c.run("k.increasing-g-connected", g, [&] { return is_increasing(kg) && is_g_connected(kg, g); });
    if (!kg.edges().subset_of(g.edges())) witness = true;

    c.run("k.tri-equivalence", g, [&] {
        for (const RootedTree& r : all_trees) {
            const bool first = (kg == r);
            if (verify_characterization(g, r) != first || satisfies_edge_cover(g, r) != first) return false;
        }
        return true;
    });
    c.run("k.non-g-connected-trees", g, [&] {
        for (const RootedTree& r : all_trees) {
            if (is_g_connected(r, g)) continue;
            if (kg == r || verify_characterization(g, r) || satisfies_edge_cover(g, r)) return false;
            if (fiber_size(g, r) != 0 || !enumerate_fiber(g, r).empty()) return false;
        }
        return true;
    });

    // Brute-force fibers: apply k to every connected spanning subgraph.
    std::map<TreeKey, std::set<EdgeSet>> brute;
    long connected = 0;
    for_each_spanning_subgraph(g, Limits{}, [&](const EdgeSet& q, const SetPartition& s) {
        if (s.length() != 1) return;
        ++connected;
        brute[TreeKey{k_tree(g.with_edges(q)).parent_map()}].insert(q);
    });
    c.run("k.fiber-partition", g, [&] {
        mpz_class total = 0;
        for (const RootedTree& r : all_trees) {
            const auto it = brute.find(TreeKey{r.parent_map()});
            const std::size_t expected = it == brute.end() ? 0 : it->second.size();
            if (fiber_size(g, r) != static_cast<unsigned long>(expected)) return false;
            std::set<EdgeSet> listed;
            for (const Graph& q : enumerate_fiber(g, r)) listed.insert(q.edges());
            if (listed != (it == brute.end() ? std::set<EdgeSet>{} : it->second)) return false;
            total += fiber_size(g, r);
        }
        return total == connected;
    });
    c.run("k.fiber-idempotence", g, [&] {
        for (const Graph& q : enumerate_fiber(g, kg, Strictness::strict))
            if (!(k_tree(q) == kg)) return false;
        return true;
    });

    const IntPolynomial eta = eta_bruteforce(g);
    c.run("invariants.eta", g, [&] { return eta_via_trees(g) == eta; });
    c.run("invariants.eta-at-minus-one", g, [&] {
        const long trees = static_cast<long>(increasing_g_connected_trees(g).size());
        return eta.evaluate(-1) == ((g.order() - 1) % 2 == 0 ? trees : -trees);
    });

    std::vector<Graph> spanning_trees;
    for_each_spanning_subgraph(g, Limits{}, [&](const EdgeSet& q, const SetPartition& s) {
        if (s.length() == 1 && q.size() == g.order() - 1) spanning_trees.push_back(g.with_edges(q));
    });
    c.run("bcf.breaks-via-j-sets", g, [&] {
        for (const Graph& t : spanning_trees)
            if (breaks_via_j_sets(t, g) != breaks_direct(t, g)) return false;
        return true;
    });
    c.run("bcf.bijection", g, [&] {
        std::set<EdgeSet> bcf_trees;
        for (const Graph& t : spanning_trees)
            if (is_broken_circuit_free(t, g)) bcf_trees.insert(t.edges());
        std::set<EdgeSet> images;
        const std::vector<RootedTree> g_trees = increasing_g_connected_trees(g);
        for (const RootedTree& r : g_trees) {
            const Graph image = *bijection_f(r, g, Strictness::strict);
            if (!bcf_trees.contains(image.edges())) return false;
            if (!(k_tree(image) == r)) return false;
            images.insert(image.edges());
        }
        if (images.size() != g_trees.size() || images != bcf_trees) return false;
        for (const EdgeSet& t : bcf_trees)
            if (bijection_f(k_tree(g.with_edges(t)), g)->edges() != t) return false;
        return mpz_class(static_cast<long>(bcf_trees.size())) == abs_coeff(chromatic_polynomial_oracle(g), 1);
    });
}

void check_order(Checker& c, int n) {
    const std::vector<RootedTree> trees = enumerate_increasing_trees(VertexSet::range(n));
    const Graph empty(n);
    c.run("trees.count-factorial", empty, [&] {
        long factorial = 1;
        for (int i = 2; i < n; ++i) factorial *= i;
        std::set<TreeKey> distinct;
        for (const RootedTree& t : trees) {
            if (!is_increasing(t)) return false;
            distinct.insert(TreeKey{t.parent_map()});
        }
        return static_cast<long>(trees.size()) == factorial && static_cast<long>(distinct.size()) == factorial;
    });
    c.run("trees.j-sets-disjoint", empty, [&] {
        for (const RootedTree& t : trees) {
            EdgeSet seen;
            for (VertexId v : t.vertices()) {
                if (t.is_root(v)) continue;
                const EdgeSet j = j_set(v, t);
                if (j.intersects(seen)) return false;
                seen = seen | j;
            }
        }
        return true;
    });
    c.run("core.link-size", empty, [&] {
        for (std::uint32_t bits = 0; bits < (1u << n); ++bits)
            for (VertexId v = 1; v <= n; ++v)
                if (link(v, VertexSet(bits)).size() != (VertexSet(bits) - VertexSet::single(v)).size()) return false;
        return true;
    });
}

}  // namespace

SelfcheckReport run_selfcheck(const SelfcheckOptions& options) {
    if (options.max_n > kSelfcheckMaxN || options.max_n < 1)
        throw SizeBoundExceeded("self-check max_n must be in 1.." + std::to_string(kSelfcheckMaxN));
    Checker c;
    SelfcheckReport report;
    std::mt19937_64 rng(options.seed);
    bool witness = false;

    for (int n = 1; n <= options.max_n; ++n) {
        check_order(c, n);
        const std::vector<RootedTree> trees = enumerate_increasing_trees(VertexSet::range(n));
        auto visit = [&](const Graph& g) {
            ++report.graphs;
            check_any_graph(c, g);
            c.run("trees.g-connected-needs-connected", g, [&] {
                if (is_connected(g)) return true;
                return std::none_of(trees.begin(), trees.end(),
                                    [&](const RootedTree& r) { return is_g_connected(r, g); });
            });
            if (is_connected(g)) check_connected_graph(c, g, trees, witness);
        };
        if (n <= options.exhaustive_n) {
            for_each_labeled_graph(n, visit);
        } else {
            for (int i = 0; i < options.samples; ++i) visit(random_graph(n, rng));
        }
    }
    if (options.max_n >= 3) c.record("k.non-subgraph-witness", Graph(options.max_n), witness, "no connected G with k(G) outside G");

    report.checks = c.take();
    return report;
}

}  // namespace incrtree

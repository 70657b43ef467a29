// Acceptance suite: one line per criterion, exit status nonzero on any failure.
// Every check compares library output against an exact reference; each
// criterion also has a wall-clock budget that counts toward pass/fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "incrtree/broken_circuits.hpp"
#include "incrtree/generators.hpp"
#include "incrtree/invariants.hpp"
#include "incrtree/k_algorithm.hpp"
#include "incrtree/rooted_tree.hpp"
#include "k4_example.hpp"
#include "oracles.hpp"

using namespace incrtree;

namespace {

constexpr std::uint64_t kSeed = 20240517;
constexpr int kRandomSamples = 100;

// Accumulates failures; the first few are kept for the report line.
struct Outcome {
    long checks = 0;
    long failures = 0;
    std::string first;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (ok) return;
        if (failures++ == 0) first = what;
    }
};

std::string describe(const Graph& g) {
    std::ostringstream s;
    s << "n=" << g.universe() << " E={";
    bool sep = false;
    for (Edge e : g.edges()) {
        s << (sep ? "," : "") << e.lo << e.hi;
        sep = true;
    }
    s << "}";
    return s.str();
}

void for_each_connected(int max_n, const std::function<void(const Graph&)>& fn) {
    for (int n = 1; n <= max_n; ++n)
        for_each_labeled_graph(n, [&](const Graph& g) {
            if (is_connected(g)) fn(g);
        });
}

/// Connected spanning subgraphs of g bucketed by the parent map of the
/// reference k; everything here is independent of the library's k.
std::map<std::map<int, int>, std::set<oracle::EdgeList>> brute_fibers(const Graph& g) {
    const int n = g.universe();
    std::map<std::map<int, int>, std::set<oracle::EdgeList>> out;
    oracle::for_each_subset(oracle::edge_list(g), [&](const oracle::EdgeList& q) {
        if (oracle::connected(n, q)) out[oracle::k_parent_map(n, q)].insert(q);
    });
    return out;
}

// --- criteria -------------------------------------------------------------

Outcome k4_golden() {
    Outcome o;
    const Graph k4 = Graph::complete(4);
    const auto trees = enumerate_increasing_trees(VertexSet::range(4));
    o.expect(trees.size() == 6, "increasing trees on 4 vertices != 6");
    o.expect(oracle::increasing_trees_by_scan(4).size() == 6, "scan count != 6");

    int spanning_trees = 0;
    int connected = 0;
    oracle::for_each_subset(oracle::edge_list(k4), [&](const oracle::EdgeList& q) {
        if (!oracle::connected(4, q)) return;
        ++connected;
        if (q.size() == 3) ++spanning_trees;
    });
    o.expect(spanning_trees == 16, "spanning trees != 16");
    o.expect(connected == 38, "connected spanning subgraphs != 38");
    o.expect(connected - spanning_trees == 22, "non-tree connected subgraphs != 22");

    // Fibers of k restricted to spanning trees.
    std::map<std::map<int, int>, int> tree_fibers;
    oracle::for_each_subset(oracle::edge_list(k4), [&](const oracle::EdgeList& q) {
        if (q.size() == 3 && oracle::connected(4, q)) ++tree_fibers[k_tree(oracle::make_graph(4, q)).parent_map()];
    });
    std::multiset<int> sizes;
    for (const auto& [_, c] : tree_fibers) sizes.insert(c);
    o.expect(sizes == std::multiset<int>{6, 3, 2, 2, 2, 1}, "tree fiber sizes != {6,3,2,2,2,1}");

    // Row by row against the hand-worked table, including the BCF member and breaks.
    for (const auto& row : fixture::k4_example()) {
        const RootedTree r(VertexSet::range(4), 1, row.parent);
        o.expect(static_cast<int>(row.subtrees.size()) == tree_fibers[row.parent], "table row size mismatch");
        for (const auto& [t, breaks] : row.subtrees) {
            const Graph tg(4, t);
            o.expect(k_tree(tg) == r, "k(T) differs from table row");
            o.expect(breaks_direct(tg, k4) == breaks, "breaks differ from table");
        }
        const auto f = bijection_f(r, k4);
        o.expect(f && f->edges() == row.subtrees.front().first, "f(R) is not the row's BCF tree");
    }
    return o;
}

Outcome eta_equivalence() {
    Outcome o;
    std::map<int, int> connected_count;
    for_each_connected(5, [&](const Graph& g) {
        ++connected_count[g.universe()];
        o.expect(eta_via_trees(g) == eta_bruteforce(g), "eta mismatch at " + describe(g));
    });
    o.expect(connected_count[5] == 728, "connected labeled graphs at n=5 != 728");
    std::mt19937_64 rng(kSeed);
    for (int i = 0; i < kRandomSamples; ++i) {
        const Graph g = random_connected_graph(6, rng);
        o.expect(eta_via_trees(g) == eta_bruteforce(g), "eta mismatch at " + describe(g));
    }
    return o;
}

Outcome chromatic_routes() {
    Outcome o;
    const auto check = [&](const Graph& g, bool colorings) {
        const IntPolynomial forests = chromatic_coeffs_via_forests(g);
        o.expect(forests == chromatic_polynomial_oracle(g), "subgraph expansion mismatch at " + describe(g));
        o.expect(forests == chromatic_polynomial_deletion_contraction(g), "deletion-contraction mismatch at " + describe(g));
        if (!colorings) return;
        for (int x = 0; x <= g.universe() + 1; ++x)
            o.expect(forests.evaluate(x) == oracle::count_colorings(g.universe(), oracle::edge_list(g), x),
                     "coloring count mismatch at " + describe(g));
    };
    for (int n = 1; n <= 5; ++n) for_each_labeled_graph(n, [&](const Graph& g) { check(g, true); });
    std::mt19937_64 rng(kSeed + 1);
    for (int i = 0; i < kRandomSamples; ++i) check(random_graph(6, rng), false);
    return o;
}

Outcome symmetric_functions() {
    Outcome o;
    for (int n = 1; n <= 5; ++n)
        for_each_labeled_graph(n, [&](const Graph& g) {
            const PExpansionY oracle_y = csf_y_oracle(g);
            o.expect(csf_y_via_forests(g) == oracle_y, "Y mismatch at " + describe(g));
            o.expect(csf_x_via_forests(g) == collapse_by_shape(oracle_y), "X mismatch at " + describe(g));
        });
    return o;
}

Outcome bijection() {
    Outcome o;
    for_each_connected(5, [&](const Graph& g) {
        const auto trees = increasing_g_connected_trees(g);
        const auto bcf = enumerate_bcf_subforests(g, 1);
        std::set<EdgeSet> images;
        for (const RootedTree& r : trees) {
            const auto f = bijection_f(r, g);
            if (!f) {
                o.expect(false, "f undefined at " + describe(g));
                continue;
            }
            images.insert(f->edges());
            o.expect(is_broken_circuit_free(*f, g) && is_connected(*f) && is_forest(*f),
                     "f(R) not a BCF spanning tree at " + describe(g));
            o.expect(k_tree(*f) == r, "k(f(R)) != R at " + describe(g));
        }
        o.expect(images.size() == trees.size(), "f not injective at " + describe(g));
        std::set<EdgeSet> bcf_set;
        for (const Graph& t : bcf) {
            bcf_set.insert(t.edges());
            const auto back = bijection_f(k_tree(t), g);
            o.expect(back && back->edges() == t.edges(), "f(k(T)) != T at " + describe(g));
        }
        o.expect(bcf_set == images, "f not onto BCF subtrees at " + describe(g));
        const mpz_class whitney = abs(chromatic_polynomial_deletion_contraction(g).coefficient(1));
        o.expect(whitney == static_cast<long>(trees.size()) && whitney == static_cast<long>(bcf.size()),
                 "Whitney count mismatch at " + describe(g));
    });
    return o;
}

Outcome breaks() {
    Outcome o;
    for_each_connected(5, [&](const Graph& g) {
        const int n = g.universe();
        oracle::for_each_subset(oracle::edge_list(g), [&](const oracle::EdgeList& q) {
            if (static_cast<int>(q.size()) != n - 1 || !oracle::connected(n, q)) return;
            const Graph t = oracle::make_graph(n, q);
            o.expect(breaks_via_j_sets(t, g) == breaks_direct(t, g), "breaks mismatch at " + describe(t));
        });
    });
    return o;
}

Outcome counting() {
    Outcome o;
    long factorial = 1;
    for (int n = 1; n <= 8; ++n) {
        if (n > 1) factorial *= n - 1;
        long count = 0;
        for (IncreasingTreeStream s(VertexSet::range(n)); s.next();) ++count;
        o.expect(count == factorial, "increasing tree count != (n-1)! at n=" + std::to_string(n));
    }
    for_each_connected(5, [&](const Graph& g) {
        const auto brute = brute_fibers(g);
        long total = 0;
        for (const RootedTree& r : increasing_g_connected_trees(g)) {
            mpz_class product = 1;
            for (const auto& [_, e] : fiber_edge_sets(g, r)) product *= (mpz_class(1) << e.size()) - 1;
            const auto it = brute.find(r.parent_map());
            const std::size_t expected = it == brute.end() ? 0 : it->second.size();
            o.expect(fiber_size(g, r) == product, "fiber_size != product formula at " + describe(g));
            o.expect(product == static_cast<long>(expected), "product formula != brute-force fiber at " + describe(g));
            std::set<oracle::EdgeList> listed;
            for (const Graph& q : enumerate_fiber(g, r)) listed.insert(oracle::edge_list(q));
            o.expect(it != brute.end() && listed == it->second, "enumerated fiber != brute-force fiber at " + describe(g));
            total += static_cast<long>(expected);
        }
        long all = 0;
        for (const auto& [_, f] : brute) all += static_cast<long>(f.size());
        o.expect(total == all, "fibers do not cover all connected spanning subgraphs at " + describe(g));
    });
    return o;
}

Outcome tri_equivalence() {
    Outcome o;
    long non_g_connected = 0;
    for_each_connected(4, [&](const Graph& g) {
        const RootedTree k = k_tree(g);
        for (const RootedTree& r : enumerate_increasing_trees(g.vertices())) {
            const bool a = k == r;
            const bool b = verify_characterization(g, r);
            const bool c = satisfies_edge_cover(g, r);
            o.expect(a == b && b == c, "conditions disagree at " + describe(g));
            if (!is_g_connected(r, g)) {
                ++non_g_connected;
                o.expect(!a && !c, "non-G-connected tree accepted at " + describe(g));
            }
        }
    });
    o.expect(non_g_connected > 0, "no non-G-connected trees exercised");
    return o;
}

struct Criterion {
    int id;
    const char* title;
    double budget_seconds;
    Outcome (*run)();
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {1, "K4 golden: 6 trees, 16 spanning trees in fibers {6,3,2,2,2,1}, 38 connected", 1.0, k4_golden},
        {2, "eta via trees = brute force, n<=5 exhaustive + 100 random n=6", 120.0, eta_equivalence},
        {3, "chromatic via forests = both oracles, n<=5 exhaustive + 100 random n=6", 300.0, chromatic_routes},
        {4, "Y via forests = oracle, X = shape collapse, n<=5", 300.0, symmetric_functions},
        {5, "f bijects G-connected trees onto BCF subtrees, Whitney count, n<=5", 120.0, bijection},
        {6, "breaks via J sets = direct breaks, all spanning trees, n<=5", 120.0, breaks},
        {7, "(n-1)! increasing trees n<=8; fiber sizes vs brute-force k, n<=5", 300.0, counting},
        {8, "k(G)=R <=> partition agreement <=> edge cover, n<=4", 60.0, tri_equivalence},
    };
    int failed = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        const Outcome o = c.run();
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = seconds < c.budget_seconds;
        const bool ok = o.failures == 0 && in_time;
        if (!ok) ++failed;
        std::printf("%s criterion %d: %s [%ld checks, %ld failed, %.3f s / %.0f s budget]\n", ok ? "PASS" : "FAIL",
                    c.id, c.title, o.checks, o.failures, seconds, c.budget_seconds);
        if (o.failures) std::printf("    first failure: %s\n", o.first.c_str());
        if (!in_time) std::printf("    over time budget\n");
    }
    std::printf("%d/8 criteria passed\n", 8 - failed);
    return failed == 0 ? 0 : 1;
}

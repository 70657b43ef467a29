#ifndef INCRTREE_INVARIANTS_HPP
#define INCRTREE_INVARIANTS_HPP

#include <functional>
#include <map>
#include <unordered_map>

#include <gmpxx.h>

#include "incrtree/graph.hpp"
#include "incrtree/partition.hpp"
#include "incrtree/polynomial.hpp"

namespace incrtree {

/// Power-sum coefficients indexed by integer partitions. Iteration is in
/// reverse lexicographic order of the partitions, e.g. (3), (2,1), (1,1,1).
struct PExpansionX {
    std::map<IntegerPartition, mpz_class, std::greater<>> terms;

    /// Adds c to the coefficient of lambda, dropping it if it becomes zero.
    void add(const IntegerPartition& lambda, const mpz_class& c);
    mpz_class coefficient(const IntegerPartition& lambda) const;
    friend bool operator==(const PExpansionX&, const PExpansionX&) = default;
};

/// Power-sum coefficients indexed by set partitions of V, in canonical order.
struct PExpansionY {
    std::map<SetPartition, mpz_class> terms;

    void add(const SetPartition& pi, const mpz_class& c);
    mpz_class coefficient(const SetPartition& pi) const;
    friend bool operator==(const PExpansionY&, const PExpansionY&) = default;
};

/// Calls fn(edges, components) for each of the 2^|E| spanning subgraphs of g.
/// Throws SizeBoundExceeded beyond limits.max_n vertices or limits.max_subset_edges edges.
void for_each_spanning_subgraph(const Graph& g, const Limits& limits,
                                const std::function<void(const EdgeSet&, const SetPartition&)>& fn);

/// Counts increasing G-connected trees on vertex subsets of one graph.
///
/// A tree on B rooted at r = min(B) is a choice of a set partition of
/// B - {r} into child subtrees. A child subtree on block C hangs below r and
/// is acceptable iff link(r, C) meets G and the subtree is itself an
/// increasing G-connected tree on C, which gives
///
///   H(B)    = W(r, B - {r})
///   W(r, S) = sum over C ⊆ S containing min(S) with N(r) ∩ C ≠ ∅ of H(C) W(r, S - C)
///
/// Results are memoized per vertex subset.
class TreeCounter {
public:
    explicit TreeCounter(const Graph& g) : graph_(g) {}

    /// Number of increasing G|block-connected trees on `block` (1 for a singleton).
    const mpz_class& trees(VertexSet block);

    /// sum over forests q: F_q(S) x^q, counting increasing G-connected forests on `ground` by components.
    IntPolynomial forests_by_components(VertexSet ground);

private:
    const mpz_class& hanging(VertexId root, VertexSet rest);

    Graph graph_;
    std::unordered_map<std::uint32_t, mpz_class> trees_;
    std::unordered_map<std::uint64_t, mpz_class> hanging_;
    std::unordered_map<std::uint32_t, IntPolynomial> forests_;
};

/// Sum over connected spanning Q ⊆ G of t^|Q|, by exhaustive subset scan.
IntPolynomial eta_bruteforce(const Graph& g, const Limits& limits = {});

/// Sum over increasing G-connected trees R of the product over non-root v
/// of ((1+t)^|J(v,R) ∩ G| - 1).
IntPolynomial eta_via_trees(const Graph& g, const Limits& limits = {});

/// Subgraph expansion: sum over Q ⊆ G of (-1)^|Q| x^c(Q).
IntPolynomial chromatic_polynomial_oracle(const Graph& g, const Limits& limits = {});

/// P(G) = P(G - e) - P(G / e) down to edgeless graphs. Contraction merges
/// the larger endpoint into the smaller and drops parallel edges.
IntPolynomial chromatic_polynomial_deletion_contraction(const Graph& g);

/// sum over q of (-1)^(n-q) F_q x^q with F_q the number of increasing
/// G-connected forests with q components.
IntPolynomial chromatic_coeffs_via_forests(const Graph& g, const Limits& limits = {});

/// Y_G term at pi: (-1)^(n - l(pi)) times the number of increasing
/// G-connected forests with s(R) = pi.
PExpansionY csf_y_via_forests(const Graph& g, const Limits& limits = {});

/// Y_G = sum over Q ⊆ G of (-1)^|Q| p_s(Q).
PExpansionY csf_y_oracle(const Graph& g, const Limits& limits = {});

/// X_G by forest counts: the shape collapse of csf_y_via_forests.
PExpansionX csf_x_via_forests(const Graph& g, const Limits& limits = {});

/// Sums Y coefficients over set partitions of equal shape.
PExpansionX collapse_by_shape(const PExpansionY& y);

/// Replaces each p_pi by x^l(pi).
IntPolynomial specialize_to_chromatic(const PExpansionY& y);

}  // namespace incrtree

#endif

#ifndef INCRTREE_JSON_IO_HPP
#define INCRTREE_JSON_IO_HPP

#include <gmpxx.h>
#include <json.hpp>

#include "incrtree/graph.hpp"
#include "incrtree/invariants.hpp"
#include "incrtree/polynomial.hpp"
#include "incrtree/rooted_tree.hpp"

namespace incrtree::json {

using Json = nlohmann::ordered_json;

/// A JSON number when the value fits in 64 bits, its decimal string otherwise.
Json integer(const mpz_class& value);
/// Always the decimal string.
Json integer_string(const mpz_class& value);

/// {"root": r, "parent": {"v": p, ...}} with parent keys in vertex order.
Json tree(const RootedTree& r);
/// Components in order of their minimum vertex.
Json forest(const RootedForest& f);
/// [[lo, hi], ...] in lexicographic order.
Json edges(const EdgeSet& e);
Json blocks(const SetPartition& p);
/// Coefficients lowest degree first.
Json polynomial(const IntPolynomial& p);
/// [{"lambda": [...], "coeff": "..."}, ...] in reverse lexicographic order of lambda.
Json expansion(const PExpansionX& x);
/// [{"blocks": [[...], ...], "coeff": "..."}, ...] in canonical partition order.
Json expansion(const PExpansionY& y);

}  // namespace incrtree::json

#endif

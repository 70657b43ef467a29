#include "incrtree/json_io.hpp"

#include <string>

namespace incrtree::json {

Json integer(const mpz_class& value) {
    static_assert(sizeof(long) >= 8);
    if (value.fits_slong_p()) return static_cast<std::int64_t>(value.get_si());
    return value.get_str();
}

Json integer_string(const mpz_class& value) { return value.get_str(); }

Json tree(const RootedTree& r) {
    Json parent = Json::object();
    for (auto [v, p] : r.parent_map()) parent[std::to_string(v)] = p;
    Json out = Json::object();
    out["root"] = r.root();
    out["parent"] = std::move(parent);
    return out;
}

Json forest(const RootedForest& f) {
    Json out = Json::array();
    for (const RootedTree& t : f.components()) out.push_back(tree(t));
    return out;
}

Json edges(const EdgeSet& e) {
    Json out = Json::array();
    for (Edge edge : e) out.push_back(Json::array({edge.lo, edge.hi}));
    return out;
}

Json blocks(const SetPartition& p) {
    Json out = Json::array();
    for (VertexSet b : p.blocks()) out.push_back(b.to_vector());
    return out;
}

Json polynomial(const IntPolynomial& p) {
    Json out = Json::array();
    for (const mpz_class& c : p.coefficients()) out.push_back(integer(c));
    return out;
}

Json expansion(const PExpansionX& x) {
    Json out = Json::array();
    for (const auto& [lambda, c] : x.terms) {
        Json term = Json::object();
        term["lambda"] = lambda.parts;
        term["coeff"] = integer_string(c);
        out.push_back(std::move(term));
    }
    return out;
}

Json expansion(const PExpansionY& y) {
    Json out = Json::array();
    for (const auto& [pi, c] : y.terms) {
        Json term = Json::object();
        term["blocks"] = blocks(pi);
        term["coeff"] = integer_string(c);
        out.push_back(std::move(term));
    }
    return out;
}

}  // namespace incrtree::json

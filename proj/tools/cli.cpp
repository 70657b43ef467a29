#include "incrtree/cli.hpp"

#include <CLI11.hpp>
#include <iomanip>
#include <optional>
#include <sstream>

#include "incrtree/broken_circuits.hpp"
#include "incrtree/graph_io.hpp"
#include "incrtree/invariants.hpp"
#include "incrtree/json_io.hpp"
#include "incrtree/k_algorithm.hpp"
#include "incrtree/selfcheck.hpp"

namespace incrtree::cli {

namespace {

using json::Json;

struct Options {
    std::string file;
    std::string which;
    std::string method = "trees";
    std::optional<int> q;
    bool list = false;
    bool trees_only = false;
    bool breaks_all = false;
    bool table = false;
    int max_n = 5;
    int samples = 100;
    std::uint64_t seed = SelfcheckOptions{}.seed;
};

std::string tree_line(const RootedTree& r) {
    std::ostringstream os;
    os << "root " << r.root();
    for (auto [v, p] : r.parent_map()) os << "  " << p << "->" << v;
    return os.str();
}

void require_connected(const Graph& g) {
    if (!is_connected(g))
        throw DisconnectedGraph("graph is not connected; components " + to_string(components_partition(g)));
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

int cmd_k(const Options& o, std::ostream& out) {
    const Graph g = read_graph_file(o.file);
    const RootedTree r = k_tree(g);
    if (o.table)
        out << tree_line(r) << '\n';
    else
        emit(out, json::tree(r));
    return kOk;
}

Json render_value(const IntPolynomial& p) { return json::polynomial(p); }
Json render_value(const PExpansionX& x) { return json::expansion(x); }
Json render_value(const PExpansionY& y) { return json::expansion(y); }

std::string render_text(const IntPolynomial& p, const std::string& var) { return to_string(p, var); }
std::string render_text(const PExpansionX& x, const std::string&) {
    std::ostringstream os;
    for (const auto& [lambda, c] : x.terms) os << c.get_str() << " p" << to_string(lambda) << '\n';
    return os.str();
}
std::string render_text(const PExpansionY& y, const std::string&) {
    std::ostringstream os;
    for (const auto& [pi, c] : y.terms) os << c.get_str() << " p" << to_string(pi) << '\n';
    return os.str();
}

template <typename T>
int report_invariant(const Options& o, std::ostream& out, const std::string& var,
                     const std::function<T()>& via_trees, const std::vector<std::pair<std::string, std::function<T()>>>& oracles) {
    Json j = Json::object();
    j["invariant"] = o.which;
    j["method"] = o.method;
    std::optional<T> tree_value;
    if (o.method != "oracle") {
        tree_value = via_trees();
        j[o.method == "both" ? "trees" : "value"] = render_value(*tree_value);
        if (o.table) out << "trees: " << render_text(*tree_value, var) << '\n';
    }
    bool agree = true;
    if (o.method != "trees") {
        for (const auto& [name, fn] : oracles) {
            const T value = fn();
            j[o.method == "both" ? name : (name == "oracle" ? "value" : name)] = render_value(value);
            if (o.table) out << name << ": " << render_text(value, var) << '\n';
            if (tree_value) agree = agree && (value == *tree_value);
        }
    }
    if (o.method == "both") {
        j["agree"] = agree;
        if (o.table) out << "agree: " << (agree ? "true" : "false") << '\n';
    }
    if (!o.table) emit(out, j);
    return kOk;
}

int cmd_invariants(const Options& o, std::ostream& out) {
    const Graph g = read_graph_file(o.file);
    if (o.which == "eta") {
        require_connected(g);
        return report_invariant<IntPolynomial>(o, out, "t", [&] { return eta_via_trees(g); },
                                               {{"oracle", [&] { return eta_bruteforce(g); }}});
    }
    if (o.which == "chromatic") {
        return report_invariant<IntPolynomial>(
            o, out, "x", [&] { return chromatic_coeffs_via_forests(g); },
            {{"oracle", [&] { return chromatic_polynomial_oracle(g); }},
             {"deletion_contraction", [&] { return chromatic_polynomial_deletion_contraction(g); }}});
    }
    if (o.which == "csf-x") {
        return report_invariant<PExpansionX>(o, out, "", [&] { return csf_x_via_forests(g); },
                                             {{"oracle", [&] { return collapse_by_shape(csf_y_oracle(g)); }}});
    }
    return report_invariant<PExpansionY>(o, out, "", [&] { return csf_y_via_forests(g); },
                                         {{"oracle", [&] { return csf_y_oracle(g); }}});
}

int cmd_fibers(const Options& o, std::ostream& out) {
    const Graph g = read_graph_file(o.file);
    require_connected(g);
    Json records = Json::array();
    mpz_class total = 0;
    for (const RootedTree& r : increasing_g_connected_trees(g)) {
        const auto sets = fiber_edge_sets(g, r);
        Json sizes = Json::object();
        mpz_class tree_count = 1;
        for (const auto& [v, e] : sets) {
            sizes[std::to_string(v)] = e.size();
            tree_count *= e.size();
        }
        const mpz_class size = o.trees_only ? tree_count : fiber_size(g, r, Strictness::strict);
        total += size;
        Json rec = Json::object();
        rec["tree"] = json::tree(r);
        rec["fiber_size"] = json::integer(size);
        rec["j_sizes"] = std::move(sizes);
        if (o.list) {
            Json members = Json::array();
            FiberStream stream(g, r, Strictness::strict);
            while (auto q = stream.next())
                if (!o.trees_only || q->size() == g.order() - 1) members.push_back(json::edges(q->edges()));
            rec["fiber"] = std::move(members);
        }
        if (o.table) {
            out << std::setw(8) << size.get_str() << "  " << tree_line(r) << '\n';
            if (o.list)
                for (const auto& m : rec["fiber"]) out << "          " << m.dump() << '\n';
        }
        records.push_back(std::move(rec));
    }
    if (o.table) {
        out << std::setw(8) << total.get_str() << "  total\n";
        return kOk;
    }
    Json j = Json::object();
    j["trees_only"] = o.trees_only;
    j["records"] = std::move(records);
    j["total"] = json::integer(total);
    emit(out, j);
    return kOk;
}

int cmd_bcf(const Options& o, std::ostream& out) {
    const Graph g = read_graph_file(o.file);
    if (!o.q) require_connected(g);
    const int q = o.q.value_or(1);
    Json pairs = Json::array();
    for (const Graph& h : enumerate_bcf_subforests(g, q)) {
        const RootedForest f = k_forest(h);
        Json rec = Json::object();
        rec["subgraph"] = json::edges(h.edges());
        rec["k"] = f.components().size() == 1 ? json::tree(f.components().front()) : json::forest(f);
        if (o.table) {
            out << to_string(h.edges()) << "  <->";
            for (const RootedTree& t : f.components()) out << "  [" << tree_line(t) << ']';
            out << '\n';
        }
        pairs.push_back(std::move(rec));
    }
    Json j = Json::object();
    j["q"] = q;
    j["pairs"] = std::move(pairs);
    if (o.breaks_all) {
        require_connected(g);
        Json records = Json::array();
        for_each_spanning_subgraph(g, Limits{}, [&](const EdgeSet& t, const SetPartition& s) {
            if (s.length() != 1 || t.size() != g.order() - 1) return;
            records.push_back(Json{{"subtree", json::edges(t)}, {"breaks", json::edges(breaks_direct(g.with_edges(t), g))}});
        });
        std::sort(records.begin(), records.end(),
                  [](const Json& a, const Json& b) { return a["subtree"] < b["subtree"]; });
        if (o.table)
            for (const auto& r : records) out << "breaks " << r["subtree"].dump() << ": " << r["breaks"].dump() << '\n';
        j["breaks"] = std::move(records);
    }
    if (!o.table) emit(out, j);
    return kOk;
}

int cmd_selfcheck(const Options& o, std::ostream& out) {
    SelfcheckOptions so;
    so.max_n = o.max_n;
    so.samples = o.samples;
    so.seed = o.seed;
    const SelfcheckReport report = run_selfcheck(so);
    long passed = 0;
    long failed = 0;
    for (const CheckResult& c : report.checks) {
        out << (c.failed == 0 ? "PASS " : "FAIL ") << c.name << "  " << c.passed << " passed, " << c.failed
            << " failed\n";
        passed += c.passed;
        failed += c.failed;
    }
    out << "graphs: " << report.graphs << "  checks passed: " << passed << "  failed: " << failed << '\n';
    for (const CheckResult& c : report.checks) {
        if (c.failed == 0) continue;
        out << "# counterexample for " << c.name;
        if (!c.detail.empty()) out << " (" << c.detail << ')';
        out << '\n' << format_graph(*c.counterexample);
    }
    return report.ok() ? kOk : kSelfcheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Increasing trees, the k algorithm, and graph invariants", "incrtree"};
    app.require_subcommand(1);
    Options o;

    auto add_format = [&](CLI::App* sub) {
        auto* json_flag = sub->add_flag("--json", "JSON output (default)");
        sub->add_flag("--table", o.table, "plain-text output")->excludes(json_flag);
    };
    auto add_file = [&](CLI::App* sub) {
        sub->add_option("graphfile", o.file, "graph in the text format")->required();
    };

    auto* k = app.add_subcommand("k", "print k(G)");
    add_file(k);
    add_format(k);

    auto* inv = app.add_subcommand("invariants", "eta, chromatic polynomial, or chromatic symmetric functions");
    inv->add_option("--which", o.which, "eta|chromatic|csf-x|csf-y")
        ->required()
        ->check(CLI::IsMember({"eta", "chromatic", "csf-x", "csf-y"}));
    inv->add_option("--method", o.method, "trees|oracle|both")->check(CLI::IsMember({"trees", "oracle", "both"}));
    add_file(inv);
    add_format(inv);

    auto* fib = app.add_subcommand("fibers", "fibers of k over increasing G-connected trees");
    fib->add_flag("--list", o.list, "list the members of each fiber");
    fib->add_flag("--trees-only", o.trees_only, "restrict fibers to spanning trees");
    add_file(fib);
    add_format(fib);

    auto* bcf = app.add_subcommand("bcf", "broken circuit free subforests paired with their k-images");
    bcf->add_option("--q", o.q, "number of components (default 1)")->check(CLI::PositiveNumber);
    bcf->add_flag("--breaks-all", o.breaks_all, "breaks of every spanning subtree");
    add_file(bcf);
    add_format(bcf);

    auto* self = app.add_subcommand("selfcheck", "run the invariant suite over small graphs");
    self->add_option("--max-n", o.max_n, "largest vertex count checked");
    self->add_option("--samples", o.samples, "random graphs per order above 5");
    self->add_option("--seed", o.seed, "seed for random graphs");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kParseError;
    }

    try {
        if (k->parsed()) return cmd_k(o, out);
        if (inv->parsed()) return cmd_invariants(o, out);
        if (fib->parsed()) return cmd_fibers(o, out);
        if (bcf->parsed()) return cmd_bcf(o, out);
        return cmd_selfcheck(o, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kParseError;
    } catch (const DisconnectedGraph& e) {
        err << "error: " << e.what() << '\n';
        return kNotConnected;
    } catch (const SizeBoundExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kSizeBound;
    }
}

}  // namespace incrtree::cli

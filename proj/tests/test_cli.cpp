#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "incrtree/cli.hpp"
#include "incrtree/graph.hpp"
#include "incrtree/graph_io.hpp"

using namespace incrtree;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

class GraphFile {
public:
    GraphFile(const std::string& name, const std::string& text)
        : path_(std::filesystem::temp_directory_path() / ("incrtree_test_" + name + ".txt")) {
        std::ofstream(path_) << text;
    }
    explicit GraphFile(const std::string& name, const Graph& g) : GraphFile(name, format_graph(g)) {}
    ~GraphFile() { std::filesystem::remove(path_); }
    std::string path() const { return path_.string(); }

private:
    std::filesystem::path path_;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

const GraphFile& k3() {
    static const GraphFile f("k3", Graph::complete(3));
    return f;
}
const GraphFile& k4() {
    static const GraphFile f("k4", Graph::complete(4));
    return f;
}

}  // namespace

TEST_CASE("cli k") {
    const Result r = run({"k", k3().path()});
    CHECK(r.code == cli::kOk);
    CHECK(r.out == "{\"root\":1,\"parent\":{\"2\":1,\"3\":2}}\n");

    const GraphFile single("single", "n 1\n");
    CHECK(run({"k", single.path()}).out == "{\"root\":1,\"parent\":{}}\n");

    const GraphFile split("split", "n 4\n1 2\n3 4\n");
    const Result bad = run({"k", split.path()});
    CHECK(bad.code == cli::kNotConnected);
    CHECK(bad.err.find("{{1,2},{3,4}}") != std::string::npos);

    CHECK(run({"k", "--table", k3().path()}).out == "root 1  1->2  2->3\n");
}

TEST_CASE("cli exit codes") {
    const GraphFile dup("dup", "n 3\n1 2\n1 2\n");
    CHECK(run({"k", dup.path()}).code == cli::kParseError);
    CHECK(run({"k", "/nonexistent/graph.txt"}).code == cli::kParseError);
    CHECK(run({"bogus"}).code == cli::kParseError);
    CHECK(run({"invariants", "--which", "nope", k3().path()}).code == cli::kParseError);
    const GraphFile big("k8", Graph::complete(8));
    CHECK(run({"invariants", "--which", "chromatic", "--method", "oracle", big.path()}).code == cli::kSizeBound);
    CHECK(run({"invariants", "--which", "chromatic", big.path()}).code == cli::kOk);
    const GraphFile split("split2", "n 3\n1 2\n");
    CHECK(run({"invariants", "--which", "eta", split.path()}).code == cli::kNotConnected);
    CHECK(run({"invariants", "--which", "chromatic", split.path()}).code == cli::kOk);
}

TEST_CASE("cli invariants") {
    const json chromatic = json::parse(run({"invariants", "--which", "chromatic", "--method", "both", k4().path()}).out);
    CHECK(chromatic["trees"] == json::parse("[0,-6,11,-6,1]"));
    CHECK(chromatic["oracle"] == chromatic["trees"]);
    CHECK(chromatic["deletion_contraction"] == chromatic["trees"]);
    CHECK(chromatic["agree"] == true);

    const json eta = json::parse(run({"invariants", "--which", "eta", "--method", "both", k3().path()}).out);
    CHECK(eta["trees"] == json::parse("[0,0,3,1]"));
    CHECK(eta["agree"] == true);

    const Result x = run({"invariants", "--which", "csf-x", k3().path()});
    CHECK(x.out ==
          "{\"invariant\":\"csf-x\",\"method\":\"trees\",\"value\":[{\"lambda\":[3],\"coeff\":\"2\"},"
          "{\"lambda\":[2,1],\"coeff\":\"-3\"},{\"lambda\":[1,1,1],\"coeff\":\"1\"}]}\n");

    const json y = json::parse(run({"invariants", "--which", "csf-y", "--method", "oracle", k3().path()}).out);
    CHECK(y["value"].size() == 5);
    CHECK(y["value"][0]["blocks"] == json::parse("[[1],[2],[3]]"));
    CHECK(y["value"][0]["coeff"] == "1");
}

TEST_CASE("cli fibers") {
    const json k3fib = json::parse(run({"fibers", k3().path()}).out);
    REQUIRE(k3fib["records"].size() == 2);
    std::multiset<int> sizes;
    for (const auto& rec : k3fib["records"]) sizes.insert(rec["fiber_size"].get<int>());
    CHECK(sizes == std::multiset<int>{1, 3});
    CHECK(k3fib["total"] == 4);

    const json k4trees = json::parse(run({"fibers", "--trees-only", "--list", k4().path()}).out);
    REQUIRE(k4trees["records"].size() == 6);
    sizes.clear();
    for (const auto& rec : k4trees["records"]) {
        sizes.insert(rec["fiber_size"].get<int>());
        CHECK(rec["fiber"].size() == rec["fiber_size"].get<std::size_t>());
    }
    CHECK(sizes == std::multiset<int>{6, 3, 2, 2, 2, 1});
    CHECK(k4trees["total"] == 16);

    const json k4all = json::parse(run({"fibers", k4().path()}).out);
    CHECK(k4all["total"] == 38);

    const GraphFile p3("p3", "n 3\n1 2\n2 3\n");
    const json p3fib = json::parse(run({"fibers", p3.path()}).out);
    REQUIRE(p3fib["records"].size() == 1);
    CHECK(p3fib["records"][0]["tree"] == json::parse("{\"root\":1,\"parent\":{\"2\":1,\"3\":2}}"));
}

TEST_CASE("cli bcf") {
    const json k3bcf = json::parse(run({"bcf", "--breaks-all", k3().path()}).out);
    REQUIRE(k3bcf["pairs"].size() == 2);
    CHECK(k3bcf["pairs"][0]["subgraph"] == json::parse("[[1,2],[1,3]]"));
    CHECK(k3bcf["pairs"][0]["k"] == json::parse("{\"root\":1,\"parent\":{\"2\":1,\"3\":1}}"));
    CHECK(k3bcf["pairs"][1]["k"] == json::parse("{\"root\":1,\"parent\":{\"2\":1,\"3\":2}}"));
    REQUIRE(k3bcf["breaks"].size() == 3);
    CHECK(k3bcf["breaks"][0]["breaks"] == json::array());
    CHECK(k3bcf["breaks"][1]["breaks"] == json::array());
    CHECK(k3bcf["breaks"][2]["breaks"] == json::parse("[[1,2]]"));

    CHECK(json::parse(run({"bcf", k4().path()}).out)["pairs"].size() == 6);
    const json q2 = json::parse(run({"bcf", "--q", "2", k3().path()}).out);
    CHECK(q2["pairs"].size() == 3);
}

TEST_CASE("cli output is deterministic") {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"fibers", "--list", k4().path()},
          std::vector<std::string>{"invariants", "--which", "csf-y", "--method", "both", k4().path()},
          std::vector<std::string>{"bcf", "--breaks-all", k4().path()}}) {
        CHECK(run(args).out == run(args).out);
    }
}

TEST_CASE("cli selfcheck") {
    const Result ok = run({"selfcheck", "--max-n", "4"});
    CHECK(ok.code == cli::kOk);
    CHECK(ok.out.find("FAIL") == std::string::npos);
    CHECK(run({"selfcheck", "--max-n", "7"}).code == cli::kSizeBound);
}

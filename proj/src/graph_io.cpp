#include "incrtree/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace incrtree {

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

int to_int(std::string_view tok, int line_no) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError("line " + std::to_string(line_no) + ": '" + std::string(tok) + "' is not an integer");
    return value;
}

}  // namespace

Graph parse_graph(std::string_view text) {
    int n = -1;
    EdgeSet edges;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const auto toks = tokens(line);
        if (toks.empty()) continue;
        const std::string where = "line " + std::to_string(line_no) + ": ";
        if (n < 0) {
            if (toks.size() != 2 || toks[0] != "n") throw ParseError(where + "expected 'n <count>'");
            n = to_int(toks[1], line_no);
            if (n < 1) throw ParseError(where + "vertex count must be at least 1");
            if (n > kMaxVertices)
                throw SizeBoundExceeded(where + "vertex count " + std::to_string(n) + " exceeds " +
                                        std::to_string(kMaxVertices));
            continue;
        }
        if (toks.size() != 2) throw ParseError(where + "expected an edge 'u v'");
        const int u = to_int(toks[0], line_no);
        const int v = to_int(toks[1], line_no);
        if (u < 1 || v > n || u >= v) throw ParseError(where + "edge must satisfy 1 <= u < v <= n");
        const Edge e(u, v);
        if (edges.contains(e)) throw ParseError(where + "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        edges.insert(e);
    }
    if (n < 0) throw ParseError("missing 'n <count>' line");
    return Graph(n, edges);
}

Graph read_graph_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

std::string format_graph(const Graph& g) {
    std::ostringstream os;
    os << "n " << g.universe() << '\n';
    for (Edge e : g.edges()) os << e.lo << ' ' << e.hi << '\n';
    return os.str();
}

}  // namespace incrtree

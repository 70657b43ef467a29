#include "incrtree/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace incrtree {

SetPartition::SetPartition(std::vector<VertexSet> blocks) : blocks_(std::move(blocks)) {
    for (VertexSet b : blocks_) {
        if (b.empty()) throw std::invalid_argument("set partition has an empty block");
        if (b.intersects(ground_)) throw std::invalid_argument("set partition blocks overlap");
        ground_ = ground_ | b;
    }
    std::sort(blocks_.begin(), blocks_.end(), [](VertexSet a, VertexSet b) { return a.min() < b.min(); });
}

SetPartition SetPartition::singletons(VertexSet ground) {
    std::vector<VertexSet> blocks;
    for (VertexId v : ground) blocks.push_back(VertexSet::single(v));
    return SetPartition(std::move(blocks));
}

SetPartition SetPartition::whole(VertexSet ground) {
    if (ground.empty()) return SetPartition{};
    return SetPartition({ground});
}

VertexSet SetPartition::block_of(VertexId v) const {
    for (VertexSet b : blocks_)
        if (b.contains(v)) return b;
    throw std::out_of_range("vertex " + std::to_string(v) + " not in partition ground set");
}

std::strong_ordering operator<=>(const SetPartition& a, const SetPartition& b) {
    const std::size_t common = std::min(a.blocks_.size(), b.blocks_.size());
    for (std::size_t i = 0; i < common; ++i) {
        const auto va = a.blocks_[i].to_vector();
        const auto vb = b.blocks_[i].to_vector();
        if (auto c = std::lexicographical_compare_three_way(va.begin(), va.end(), vb.begin(), vb.end()); c != 0)
            return c;
    }
    return a.blocks_.size() <=> b.blocks_.size();
}

std::string to_string(const SetPartition& p) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < p.blocks().size(); ++i) {
        if (i != 0) os << ',';
        os << to_string(p.blocks()[i]);
    }
    os << '}';
    return os.str();
}

namespace {

class PartitionParser {
public:
    explicit PartitionParser(std::string_view text) : text_(text) {}

    SetPartition parse() {
        std::vector<VertexSet> blocks;
        expect('{');
        if (peek() == '}') {
            ++pos_;
        } else {
            for (;;) {
                blocks.push_back(parse_block());
                const char c = next();
                if (c == '}') break;
                if (c != ',') fail("expected ',' or '}'");
            }
        }
        if (peek() != '\0') fail("trailing characters");
        try {
            return SetPartition(std::move(blocks));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }

private:
    VertexSet parse_block() {
        VertexSet block;
        expect('{');
        for (;;) {
            const VertexId v = parse_vertex();
            if (block.contains(v)) fail("repeated vertex");
            block.insert(v);
            const char c = next();
            if (c == '}') break;
            if (c != ',') fail("expected ',' or '}'");
        }
        return block;
    }

    VertexId parse_vertex() {
        skip_space();
        int value = 0;
        std::size_t digits = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_++] - '0');
            if (++digits > 3) fail("vertex label too large");
        }
        if (digits == 0) fail("expected a vertex");
        if (value < 1 || value > kMaxVertices) fail("vertex out of range");
        return value;
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    char next() {
        const char c = peek();
        if (c != '\0') ++pos_;
        return c;
    }
    void expect(char c) {
        if (next() != c) fail(std::string("expected '") + c + "'");
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("set partition, offset " + std::to_string(pos_) + ": " + what);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

SetPartition parse_set_partition(std::string_view text) { return PartitionParser(text).parse(); }

bool refines(const SetPartition& sigma, const SetPartition& pi) {
    if (sigma.ground() != pi.ground()) throw std::invalid_argument("refines: ground sets differ");
    return std::all_of(sigma.blocks().begin(), sigma.blocks().end(),
                       [&](VertexSet b) { return b.subset_of(pi.block_of(b.min())); });
}

int IntegerPartition::sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string to_string(const IntegerPartition& lambda) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < lambda.parts.size(); ++i) {
        if (i != 0) os << ',';
        os << lambda.parts[i];
    }
    os << ')';
    return os.str();
}

IntegerPartition shape(const SetPartition& p) {
    IntegerPartition out;
    for (VertexSet b : p.blocks()) out.parts.push_back(b.size());
    std::sort(out.parts.begin(), out.parts.end(), std::greater<>());
    return out;
}

void for_each_set_partition(VertexSet ground, const std::function<void(const SetPartition&)>& fn) {
    const std::vector<VertexId> elems = ground.to_vector();
    if (elems.empty()) {
        fn(SetPartition{});
        return;
    }
    // Restricted growth strings: block[0] = 0, block[i] <= 1 + max(block[0..i-1]).
    std::vector<VertexSet> blocks;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == elems.size()) {
            fn(SetPartition(blocks));
            return;
        }
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            blocks[b].insert(elems[i]);
            self(self, i + 1);
            blocks[b].erase(elems[i]);
        }
        blocks.push_back(VertexSet::single(elems[i]));
        self(self, i + 1);
        blocks.pop_back();
    };
    rec(rec, 0);
}

std::vector<SetPartition> set_partitions(VertexSet ground) {
    std::vector<SetPartition> out;
    for_each_set_partition(ground, [&](const SetPartition& p) { out.push_back(p); });
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace incrtree

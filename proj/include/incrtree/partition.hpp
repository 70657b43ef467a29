#ifndef INCRTREE_PARTITION_HPP
#define INCRTREE_PARTITION_HPP

#include <compare>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "incrtree/core.hpp"

namespace incrtree {

/// Partition of a vertex subset into disjoint nonempty blocks.
///
/// Always held in canonical form: blocks are sorted by their minimum
/// element (each block, being a bitmask, is implicitly sorted). Two
/// partitions compare equal iff they are the same partition, and the
/// ordering compares the canonical block lists lexicographically as
/// lists of sorted vertex lists, so {{1,2},{3}} < {{1,3},{2}}.
class SetPartition {
public:
    SetPartition() = default;
    /// Throws std::invalid_argument if blocks are empty or overlap.
    explicit SetPartition(std::vector<VertexSet> blocks);

    static SetPartition singletons(VertexSet ground);
    static SetPartition whole(VertexSet ground);

    const std::vector<VertexSet>& blocks() const& { return blocks_; }
    // By value on temporaries so range-for over f().blocks() stays valid.
    std::vector<VertexSet> blocks() && { return std::move(blocks_); }
    VertexSet ground() const { return ground_; }
    /// Number of blocks.
    int length() const { return static_cast<int>(blocks_.size()); }
    /// The block containing v; throws std::out_of_range if v is not in the ground set.
    VertexSet block_of(VertexId v) const;

    friend bool operator==(const SetPartition& a, const SetPartition& b) { return a.blocks_ == b.blocks_; }
    friend std::strong_ordering operator<=>(const SetPartition& a, const SetPartition& b);

private:
    std::vector<VertexSet> blocks_;
    VertexSet ground_;
};

/// Renders as "{{1,2},{3}}"; the empty partition renders as "{}".
std::string to_string(const SetPartition& p);
/// Inverse of to_string; whitespace is ignored. Throws ParseError.
SetPartition parse_set_partition(std::string_view text);

/// True iff every block of sigma lies inside some block of pi.
/// Throws std::invalid_argument when the ground sets differ.
bool refines(const SetPartition& sigma, const SetPartition& pi);

/// Weakly decreasing list of positive parts.
struct IntegerPartition {
    std::vector<int> parts;

    int length() const { return static_cast<int>(parts.size()); }
    int sum() const;

    friend auto operator<=>(const IntegerPartition&, const IntegerPartition&) = default;
};

std::string to_string(const IntegerPartition& lambda);

/// Multiset of block sizes, weakly decreasing.
IntegerPartition shape(const SetPartition& p);

/// Calls fn on every set partition of `ground`, in restricted-growth order.
void for_each_set_partition(VertexSet ground, const std::function<void(const SetPartition&)>& fn);

/// All set partitions of `ground` in canonical (operator<) order.
std::vector<SetPartition> set_partitions(VertexSet ground);

}  // namespace incrtree

#endif

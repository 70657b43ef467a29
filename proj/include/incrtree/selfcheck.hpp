#ifndef INCRTREE_SELFCHECK_HPP
#define INCRTREE_SELFCHECK_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "incrtree/graph.hpp"

namespace incrtree {

/// Largest max_n accepted by the self-check.
inline constexpr int kSelfcheckMaxN = 6;

struct SelfcheckOptions {
    int max_n = 5;
    /// Orders up to this bound are checked exhaustively; larger orders are sampled.
    int exhaustive_n = 5;
    int samples = 100;
    std::uint64_t seed = 20240517;
};

struct CheckResult {
    std::string name;
    long passed = 0;
    long failed = 0;
    /// Smallest failing graph seen (fewest vertices, then fewest edges).
    std::optional<Graph> counterexample;
    std::string detail;
};

struct SelfcheckReport {
    std::vector<CheckResult> checks;
    long graphs = 0;

    bool ok() const;
};

/// Runs every library invariant over all graphs on up to exhaustive_n
/// vertices and over seeded random samples above that. Throws
/// SizeBoundExceeded when max_n > kSelfcheckMaxN.
SelfcheckReport run_selfcheck(const SelfcheckOptions& options);

}  // namespace incrtree

#endif

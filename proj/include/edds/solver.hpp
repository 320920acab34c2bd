#pragma once

#include "edds/graph.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace edds {

/// A vertex whose closed neighborhood meets the candidate set in a count
/// other than two.
struct EddsViolation {
    int vertex;
    int count;
    friend bool operator==(const EddsViolation&, const EddsViolation&) = default;
};

struct EddsStats {
    bool exists = false;
    std::optional<int> size;  // common size of all sets, absent when none exist
    std::uint64_t count = 0;  // number of distinct sets
};

inline constexpr int kDefaultSolverBound = 24;

/// The graph is larger than the configured search bound.
class BoundExceeded : public std::length_error {
    using std::length_error::length_error;
};

/// The enumerated sets did not all share one cardinality. This signals a
/// solver bug, never valid data.
class SolverConsistencyError : public std::logic_error {
    using std::logic_error::logic_error;
};

/// Returns every vertex v with |N[v] ∩ d| != 2; empty iff d is an exact
/// doubly dominating set of g.
std::vector<EddsViolation> verify_edds(const Graph& g, VertexSet d);

/// First exact doubly dominating set found by the deterministic backtracking
/// search, or nullopt. The empty graph reports no set.
std::optional<VertexSet> find_edds(const Graph& g, int max_n = kDefaultSolverBound);

/// All exact doubly dominating sets, sorted by ascending member sequence.
std::vector<VertexSet> enumerate_edds(const Graph& g, int max_n = kDefaultSolverBound);

/// Aggregates enumerate_edds and asserts the equal-size law.
EddsStats edds_stats(const Graph& g, int max_n = kDefaultSolverBound);

} // namespace edds

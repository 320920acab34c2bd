#pragma once

#include "edds/characterizations.hpp"
#include "edds/graph.hpp"
#include "edds/solver.hpp"
#include "edds/transforms.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace edds {

/// The six transformed targets with a characterization decider.
enum class Target { s, s_bar, mu, mu_bar, m, m_bar };

inline constexpr std::array<Target, 6> kAllTargets{
    Target::s, Target::s_bar, Target::mu, Target::mu_bar, Target::m, Target::m_bar};

std::string_view target_name(Target t);
std::optional<Target> parse_target(std::string_view name);

/// Transformed graph for a target; complements keep the transform's tags.
TaggedGraph build_target(const Graph& g, Target t);

/// Dispatches to the decider matching the target.
Decision decide_target(const Graph& g, Target t);

/// One graph, one target: decider versus the exhaustive-search oracle,
/// witness verification, and the target's size laws (for S(G) this includes
/// the bound on originals inside any enumerated set and its equality cases).
struct CrossCheckRecord {
    std::string graph6;
    Target target = Target::s;
    bool decider_exists = false;
    bool oracle_exists = false;
    std::optional<bool> witness_valid; // when the decider produced a witness
    std::optional<bool> size_law_ok;   // when a size law applies
    double elapsed_ms = 0.0;

    bool pass() const {
        return decider_exists == oracle_exists && witness_valid.value_or(true) &&
               size_law_ok.value_or(true);
    }
};

struct CrossCheckReport {
    std::vector<CrossCheckRecord> records;

    std::size_t pass_count() const;
    std::size_t fail_count() const;
    std::size_t pass_count(Target t) const;
    std::size_t fail_count(Target t) const;
    bool all_pass() const { return fail_count() == 0; }
};

struct CrossCheckOptions {
    std::vector<Target> targets{kAllTargets.begin(), kAllTargets.end()};
    int jobs = 1;
    int solver_bound = kDefaultSolverBound;
};

CrossCheckRecord cross_check_one(const Graph& g, Target t,
                                 int solver_bound = kDefaultSolverBound);

/// Runs every selected target over the corpus; records appear in corpus
/// order regardless of the number of worker threads.
CrossCheckReport run_crosscheck(const std::vector<Graph>& corpus,
                                const CrossCheckOptions& options);

/// All labeled graphs on 0..max_n vertices, in enumeration order.
std::vector<Graph> exhaustive_corpus(int max_n);

} // namespace edds

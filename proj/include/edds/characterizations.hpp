#pragma once

#include "edds/graph.hpp"
#include "edds/transforms.hpp"

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace edds {

/// The criterion that settled a decision, positive or negative.
enum class Reason {
    mod3_fail,          // order congruence rules the target out
    no_omega_witness,   // order fits but no degree-2 cover exists
    always_nonexistent, // the target family never admits a set
    isolated_pair,      // decided by the two-isolated-vertices criterion
    c4_special,         // the complement-middle C4 case
    empty_graph,        // target has no vertices
    witness_found,      // constructive witness produced
};

std::string_view reason_name(Reason r);

/// Certificate that S(G) admits an exact doubly dominating set: a set of
/// degree-2 vertices of G whose open neighborhoods are pairwise disjoint and
/// together exhaust the remaining vertices. Forces |V(G)| = 3|omega| and
/// omega independent.
struct OmegaWitness {
    VertexSet omega;
};

/// Outcome of a decider. The witness, when present, lives in the coordinates
/// of the transformed target graph and passes verify_edds there.
struct Decision {
    bool exists = false;
    std::optional<VertexSet> witness;
    Reason reason = Reason::empty_graph;
    std::optional<VertexSet> omega;                    // subdivision certificate
    std::optional<std::pair<int, int>> isolated_pair;  // complement certificate

    static Decision no(Reason r) { return {false, std::nullopt, r, std::nullopt, std::nullopt}; }
    static Decision yes(VertexSet w, Reason r) {
        return {true, w, r, std::nullopt, std::nullopt};
    }
};

/// P_n admits a set iff n ≡ 2 (mod 3); the canonical witness keeps vertices
/// with position mod 3 in {0, 1} and has size 2(n+1)/3.
Decision path_edds(int n);

/// C_n admits a set iff n ≡ 0 (mod 3); witness pattern as for paths, size
/// 2n/3. Requires n >= 3.
Decision cycle_edds(int n);

/// Exact-cover backtracking for an OmegaWitness; returns the first witness
/// under the deterministic resolution order, or nullopt. Quick rejection
/// when the order is 0 or not a multiple of 3.
std::optional<OmegaWitness> omega_witness(const Graph& g);

/// Target S(G): exists iff an omega witness exists; the witness is
/// (V(G) minus omega) plus the edge vertices incident to omega, of size 4n/3.
Decision subdivision_edds(const Graph& g);

/// Target complement(S(G)): exists iff G has two isolated vertices; the two
/// lowest-indexed ones form the witness.
Decision complement_subdivision_edds(const Graph& g);

/// Target mu(G): never admits a set.
Decision mycielskian_edds(const Graph& g);

/// Target complement(mu(G)): exists iff G has two isolated vertices.
Decision complement_mycielskian_edds(const Graph& g);

/// Target M(G): never admits a set.
Decision middle_edds(const Graph& g);

/// Target complement(M(G)): exists iff G has two isolated vertices, or G is
/// a 4-cycle, in which case the witness is its four edge vertices.
Decision complement_middle_edds(const Graph& g);

/// Replay of the reverse construction: from a verified set d of S(G),
/// contract one incident edge per omega vertex (toward its lowest neighbor)
/// and return the contracted graph with the remaining incident edges as a
/// matching. Test-only helper.
struct ReplayResult {
    Graph h;
    std::vector<Edge> matching;   // in h coordinates
    VertexSet omega;              // in V(G)
    bool triangle_exception;      // some omega vertex lies on a triangle of G
    bool round_trip_ok;           // subdivide_matching(h, matching) rebuilds G
};

ReplayResult replay_reverse_construction(const Graph& g, VertexSet d);

} // namespace edds

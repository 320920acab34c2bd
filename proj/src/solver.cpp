#include "edds/solver.hpp"

#include <algorithm>
#include <functional>

namespace edds {

std::vector<EddsViolation> verify_edds(const Graph& g, VertexSet d) {
    const int n = g.order();
    if (!(d - VertexSet::full(n)).empty())
        throw std::out_of_range("verify_edds: set member out of range");
    std::vector<EddsViolation> out;
    for (int v = 0; v < n; ++v) {
        const int c = (g.closed_neighborhood(v) & d).size();
        if (c != 2) out.push_back({v, c});
    }
    return out;
}

namespace {

// Backtracking over per-vertex in/out decisions. Every vertex v contributes
// the constraint |N[v] ∩ D| = 2, tracked as confirmed members of N[v]
// (closed[v] & in) plus undecided ones. Propagation to fixpoint:
//   confirmed > 2            -> dead branch
//   confirmed + undecided < 2 -> dead branch
//   confirmed == 2           -> remaining undecided neighbors forced out
//   confirmed + undecided == 2 -> undecided neighbors forced in
// The matching prune (a chosen vertex with two chosen neighbors is dead)
// is the confirmed > 2 case applied to the vertex itself.
class EddsSearch {
public:
    explicit EddsSearch(const Graph& g) : n_(g.order()) {
        closed_.reserve(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v)
            closed_.push_back(g.closed_neighborhood(v).bits());
        full_ = VertexSet::full(n_).bits();
    }

    // sink(D) returns true to stop the search
    void run(const std::function<bool(VertexSet)>& sink) {
        if (n_ == 0) return; // empty graph: no set by convention
        sink_ = &sink;
        dfs(0, 0);
    }

private:
    bool propagate(std::uint64_t& in, std::uint64_t& out) const {
        for (bool changed = true; changed;) {
            changed = false;
            for (int v = 0; v < n_; ++v) {
                const std::uint64_t cnb = closed_[static_cast<std::size_t>(v)];
                const int confirmed = std::popcount(cnb & in);
                if (confirmed > 2) return false;
                const std::uint64_t undecided = cnb & ~in & ~out;
                const int pending = std::popcount(undecided);
                if (confirmed + pending < 2) return false;
                if (undecided == 0) continue;
                if (confirmed == 2) {
                    out |= undecided;
                    changed = true;
                } else if (confirmed + pending == 2) {
                    in |= undecided;
                    changed = true;
                }
            }
        }
        return true;
    }

    bool dfs(std::uint64_t in, std::uint64_t out) {
        if (!propagate(in, out)) return false;
        const std::uint64_t undec = full_ & ~in & ~out;
        if (undec == 0) return (*sink_)(VertexSet(in));

        // fail-first: branch inside the open neighborhood with the fewest
        // undecided vertices, lowest indices breaking ties
        int best = -1, best_pending = kMaxVertices + 1;
        for (int v = 0; v < n_; ++v) {
            const std::uint64_t undecided = closed_[static_cast<std::size_t>(v)] & undec;
            if (undecided == 0) continue;
            const int pending = std::popcount(undecided);
            if (pending < best_pending) {
                best_pending = pending;
                best = v;
            }
        }
        const int x = std::countr_zero(closed_[static_cast<std::size_t>(best)] & undec);
        const std::uint64_t bit = 1ull << x;
        if (dfs(in | bit, out)) return true;
        return dfs(in, out | bit);
    }

    static constexpr int kMaxVertices = Graph::kMaxVertices;
    int n_;
    std::uint64_t full_;
    std::vector<std::uint64_t> closed_;
    const std::function<bool(VertexSet)>* sink_ = nullptr;
};

void check_bound(const Graph& g, int max_n) {
    if (g.order() > max_n)
        throw BoundExceeded("solver bound exceeded: graph has " +
                            std::to_string(g.order()) + " vertices, bound is " +
                            std::to_string(max_n));
}

} // namespace

std::optional<VertexSet> find_edds(const Graph& g, int max_n) {
    check_bound(g, max_n);
    std::optional<VertexSet> found;
    EddsSearch(g).run([&](VertexSet d) {
        found = d;
        return true;
    });
    return found;
}

std::vector<VertexSet> enumerate_edds(const Graph& g, int max_n) {
    check_bound(g, max_n);
    std::vector<VertexSet> all;
    EddsSearch(g).run([&](VertexSet d) {
        all.push_back(d);
        return false;
    });
    std::sort(all.begin(), all.end(), VertexSet::lex_less);
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

EddsStats edds_stats(const Graph& g, int max_n) {
    const auto all = enumerate_edds(g, max_n);
    EddsStats stats;
    stats.count = all.size();
    stats.exists = !all.empty();
    if (stats.exists) {
        stats.size = all.front().size();
        for (const auto& d : all)
            if (d.size() != *stats.size)
                throw SolverConsistencyError(
                    "enumerated exact doubly dominating sets differ in size");
    }
    return stats;
}

} // namespace edds

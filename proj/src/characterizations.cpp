#include "edds/characterizations.hpp"

#include "edds/solver.hpp"

#include <algorithm>
#include <stdexcept>

namespace edds {

std::string_view reason_name(Reason r) {
    switch (r) {
    case Reason::mod3_fail: return "mod3-fail";
    case Reason::no_omega_witness: return "no-omega-witness";
    case Reason::always_nonexistent: return "always-nonexistent";
    case Reason::isolated_pair: return "isolated-pair";
    case Reason::c4_special: return "c4-special";
    case Reason::empty_graph: return "empty-graph";
    case Reason::witness_found: return "witness-found";
    }
    return "?";
}

namespace {

VertexSet mod3_pattern(int n) {
    VertexSet w;
    for (int v = 0; v < n; ++v)
        if (v % 3 != 2) w.insert(v);
    return w;
}

} // namespace

Decision path_edds(int n) {
    if (n < 1) throw std::invalid_argument("path requires n >= 1");
    if (n > Graph::kMaxVertices)
        throw std::length_error("path decider witness limited to 64 vertices");
    if (n % 3 != 2) return Decision::no(Reason::mod3_fail);
    return Decision::yes(mod3_pattern(n), Reason::witness_found);
}

Decision cycle_edds(int n) {
    if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
    if (n > Graph::kMaxVertices)
        throw std::length_error("cycle decider witness limited to 64 vertices");
    if (n % 3 != 0) return Decision::no(Reason::mod3_fail);
    return Decision::yes(mod3_pattern(n), Reason::witness_found);
}

namespace {

// Exact-cover backtracking: the lowest unresolved vertex is either put into
// omega (degree 2, both neighbors still free) or covered by a neighbor that
// can join omega. Every cover is used exactly once.
class OmegaSearch {
public:
    explicit OmegaSearch(const Graph& g) : g_(g), n_(g.order()) {}

    std::optional<VertexSet> run() {
        if (n_ == 0 || n_ % 3 != 0) return std::nullopt;
        if (solve(VertexSet(), VertexSet())) return best_;
        return std::nullopt;
    }

private:
    bool can_enter(int u, VertexSet omega, VertexSet covered) const {
        if (omega.contains(u) || covered.contains(u)) return false;
        if (g_.degree(u) != 2) return false;
        const VertexSet nb = g_.neighbors(u);
        return (nb & (covered | omega)).empty();
    }

    bool solve(VertexSet omega, VertexSet covered) {
        const VertexSet unresolved = g_.vertices() - omega - covered;
        if (unresolved.empty()) {
            best_ = omega;
            return true;
        }
        const int v = unresolved.lowest();
        if (can_enter(v, omega, covered) &&
            solve(omega | VertexSet::of({v}), covered | g_.neighbors(v)))
            return true;
        for (int u : g_.neighbors(v))
            if (can_enter(u, omega, covered) &&
                solve(omega | VertexSet::of({u}), covered | g_.neighbors(u)))
                return true;
        return false;
    }

    const Graph& g_;
    int n_;
    VertexSet best_;
};

} // namespace

std::optional<OmegaWitness> omega_witness(const Graph& g) {
    if (auto w = OmegaSearch(g).run()) return OmegaWitness{*w};
    return std::nullopt;
}

Decision subdivision_edds(const Graph& g) {
    const int n = g.order();
    if (n == 0) return Decision::no(Reason::empty_graph);
    if (n % 3 != 0) return Decision::no(Reason::mod3_fail);
    const auto w = omega_witness(g);
    if (!w) return Decision::no(Reason::no_omega_witness);

    // D = (V(G) \ omega) plus every z adjacent to an omega vertex in S(G)
    VertexSet d = g.vertices() - w->omega;
    const auto es = g.edges();
    for (int k = 0; k < static_cast<int>(es.size()); ++k)
        if (w->omega.contains(es[static_cast<std::size_t>(k)].first) ||
            w->omega.contains(es[static_cast<std::size_t>(k)].second))
            d.insert(n + k);
    Decision out = Decision::yes(d, Reason::witness_found);
    out.omega = w->omega;
    return out;
}

namespace {

Decision isolated_pair_decision(const Graph& g) {
    const VertexSet iso = isolated_vertices(g);
    if (iso.size() < 2) return Decision::no(Reason::isolated_pair);
    auto it = iso.begin();
    const int a = *it;
    const int b = *++it;
    Decision out = Decision::yes(VertexSet::of({a, b}), Reason::isolated_pair);
    out.isolated_pair = {a, b};
    return out;
}

} // namespace

Decision complement_subdivision_edds(const Graph& g) {
    if (g.order() == 0) return Decision::no(Reason::empty_graph);
    return isolated_pair_decision(g);
}

Decision mycielskian_edds(const Graph&) {
    // mu(G) has at least the apex even for the empty graph
    return Decision::no(Reason::always_nonexistent);
}

Decision complement_mycielskian_edds(const Graph& g) {
    return isolated_pair_decision(g);
}

Decision middle_edds(const Graph& g) {
    if (g.order() == 0) return Decision::no(Reason::empty_graph);
    return Decision::no(Reason::always_nonexistent);
}

Decision complement_middle_edds(const Graph& g) {
    const int n = g.order();
    if (n == 0) return Decision::no(Reason::empty_graph);
    if (is_c4(g)) {
        VertexSet d;
        for (int k = 0; k < 4; ++k) d.insert(n + k);
        return Decision::yes(d, Reason::c4_special);
    }
    return isolated_pair_decision(g);
}

ReplayResult replay_reverse_construction(const Graph& g, VertexSet d) {
    const int n = g.order();
    const TaggedGraph s = subdivision(g);
    if (!verify_edds(s.graph, d).empty())
        throw std::invalid_argument(
            "replay: the set is not an exact doubly dominating set of S(G)");

    ReplayResult out{};
    out.omega = g.vertices() - (d & g.vertices());
    const int k = out.omega.size();
    if (n != 3 * k)
        throw std::logic_error("replay: |V(G)| = 3|omega| violated");

    out.triangle_exception = false;
    std::vector<int> merge_target(static_cast<std::size_t>(n), -1);
    std::vector<std::pair<Edge, int>> raw_matching; // matching edge (G coords) -> omega vertex
    for (int v : out.omega) {
        const VertexSet nb = g.neighbors(v);
        if (nb.size() != 2)
            throw std::logic_error("replay: omega vertex without degree 2");
        auto it = nb.begin();
        const int lo = *it;
        const int hi = *++it;
        if (g.has_edge(lo, hi)) out.triangle_exception = true;
        merge_target[static_cast<std::size_t>(v)] = lo;
        raw_matching.push_back({{lo, hi}, v});
    }

    // survivors keep their relative order
    std::vector<int> new_label(static_cast<std::size_t>(n), -1);
    std::vector<int> survivor;
    for (int v = 0; v < n; ++v)
        if (!out.omega.contains(v)) {
            new_label[static_cast<std::size_t>(v)] = static_cast<int>(survivor.size());
            survivor.push_back(v);
        }
    if (static_cast<int>(survivor.size()) != 2 * k)
        throw std::logic_error("replay: |V(H)| = 2|omega| violated");

    out.h = Graph(2 * k);
    for (const auto& [a, b] : g.edges()) {
        int a2 = out.omega.contains(a) ? merge_target[static_cast<std::size_t>(a)] : a;
        int b2 = out.omega.contains(b) ? merge_target[static_cast<std::size_t>(b)] : b;
        if (a2 == b2) continue; // the contracted edge
        out.h.add_edge(new_label[static_cast<std::size_t>(a2)],
                       new_label[static_cast<std::size_t>(b2)]);
    }

    for (auto& [e, v] : raw_matching) {
        e = {new_label[static_cast<std::size_t>(e.first)],
             new_label[static_cast<std::size_t>(e.second)]};
        if (e.first > e.second) std::swap(e.first, e.second);
    }
    std::sort(raw_matching.begin(), raw_matching.end());

    VertexSet matched;
    for (const auto& [e, v] : raw_matching) {
        if (matched.contains(e.first) || matched.contains(e.second))
            throw std::logic_error("replay: remaining incident edges are not a matching");
        matched.insert(e.first);
        matched.insert(e.second);
        out.matching.push_back(e);
    }

    // round trip through the canonical correspondence: original vertex l of
    // S_M(H) stands for survivor[l], the z of the t-th matching edge stands
    // for the omega vertex that produced it
    const TaggedGraph sm = subdivide_matching(out.h, out.matching);
    std::vector<int> to_g(static_cast<std::size_t>(sm.graph.order()), -1);
    for (int l = 0; l < 2 * k; ++l) to_g[static_cast<std::size_t>(l)] = survivor[static_cast<std::size_t>(l)];
    for (std::size_t t = 0; t < raw_matching.size(); ++t)
        to_g[static_cast<std::size_t>(2 * k) + t] = raw_matching[t].second;

    out.round_trip_ok = sm.graph.order() == n && sm.graph.size() == g.size();
    if (out.round_trip_ok)
        for (const auto& [x, y] : sm.graph.edges())
            if (!g.has_edge(to_g[static_cast<std::size_t>(x)], to_g[static_cast<std::size_t>(y)])) {
                out.round_trip_ok = false;
                break;
            }

    if (!out.triangle_exception && !out.round_trip_ok)
        throw std::logic_error("replay: reverse construction failed to rebuild G");
    return out;
}

} // namespace edds

#include "edds/transforms.hpp"

#include <algorithm>
#include <stdexcept>

namespace edds {

std::string VertexTag::render() const {
    switch (kind) {
    case Kind::original: return "v" + std::to_string(i + 1);
    case Kind::edge_vertex:
        return "z(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
    case Kind::shadow: return "u" + std::to_string(i + 1);
    case Kind::apex: return "w";
    }
    return "?";
}

VertexSet TaggedGraph::original_vertices() const {
    VertexSet out;
    for (int v = 0; v < graph.order(); ++v)
        if (tags[static_cast<std::size_t>(v)].kind == VertexTag::Kind::original)
            out.insert(v);
    return out;
}

VertexSet TaggedGraph::edge_vertices() const {
    VertexSet out;
    for (int v = 0; v < graph.order(); ++v)
        if (tags[static_cast<std::size_t>(v)].kind == VertexTag::Kind::edge_vertex)
            out.insert(v);
    return out;
}

namespace {

// Replaces each edge of `targets` (sorted, i < j) by a 2-path; keeps the rest.
TaggedGraph subdivide_edges(const Graph& h, const std::vector<Edge>& targets) {
    const int n = h.order();
    TaggedGraph out;
    out.source_n = n;
    out.graph = Graph(n + static_cast<int>(targets.size()));
    out.tags.reserve(static_cast<std::size_t>(out.graph.order()));
    for (int i = 0; i < n; ++i) out.tags.push_back(VertexTag::original(i));

    int z = n;
    for (const auto& [u, v] : targets) {
        out.tags.push_back(VertexTag::edge_vertex(u, v));
        out.graph.add_edge(u, z);
        out.graph.add_edge(v, z);
        ++z;
    }
    for (const auto& [u, v] : h.edges())
        if (!std::binary_search(targets.begin(), targets.end(), Edge{u, v}))
            out.graph.add_edge(u, v);
    return out;
}

} // namespace

TaggedGraph subdivision(const Graph& g) {
    return subdivide_edges(g, g.edges());
}

TaggedGraph subdivide_matching(const Graph& h, const std::vector<Edge>& m) {
    std::vector<Edge> matching = m;
    for (auto& [u, v] : matching)
        if (u > v) std::swap(u, v);
    std::sort(matching.begin(), matching.end());
    matching.erase(std::unique(matching.begin(), matching.end()), matching.end());

    VertexSet covered;
    for (const auto& [u, v] : matching) {
        if (!h.has_edge(u, v))
            throw std::invalid_argument("subdivide_matching: not an edge of the graph");
        if (covered.contains(u) || covered.contains(v))
            throw std::invalid_argument("subdivide_matching: edges are not pairwise non-incident");
        covered.insert(u);
        covered.insert(v);
    }
    return subdivide_edges(h, matching);
}

TaggedGraph mycielskian(const Graph& g) {
    const int n = g.order();
    TaggedGraph out;
    out.source_n = n;
    out.graph = Graph(2 * n + 1);
    for (int i = 0; i < n; ++i) out.tags.push_back(VertexTag::original(i));
    for (int i = 0; i < n; ++i) out.tags.push_back(VertexTag::shadow(i));
    out.tags.push_back(VertexTag::apex());

    const int apex = 2 * n;
    for (const auto& [u, v] : g.edges()) {
        out.graph.add_edge(u, v);
        out.graph.add_edge(u, n + v);
        out.graph.add_edge(v, n + u);
    }
    for (int i = 0; i < n; ++i) out.graph.add_edge(apex, n + i);
    return out;
}

TaggedGraph line_graph(const Graph& g) {
    const auto es = g.edges();
    const int m = static_cast<int>(es.size());
    TaggedGraph out;
    out.source_n = g.order();
    out.graph = Graph(m);
    for (const auto& [u, v] : es) out.tags.push_back(VertexTag::edge_vertex(u, v));
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            const auto& [u1, v1] = es[static_cast<std::size_t>(a)];
            const auto& [u2, v2] = es[static_cast<std::size_t>(b)];
            if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2)
                out.graph.add_edge(a, b);
        }
    return out;
}

TaggedGraph middle(const Graph& g) {
    const int n = g.order();
    const auto es = g.edges();
    const int m = static_cast<int>(es.size());
    TaggedGraph out;
    out.source_n = n;
    out.graph = Graph(n + m);
    for (int i = 0; i < n; ++i) out.tags.push_back(VertexTag::original(i));
    for (const auto& [u, v] : es) out.tags.push_back(VertexTag::edge_vertex(u, v));

    for (int k = 0; k < m; ++k) {
        out.graph.add_edge(es[static_cast<std::size_t>(k)].first, n + k);
        out.graph.add_edge(es[static_cast<std::size_t>(k)].second, n + k);
    }
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            const auto& [u1, v1] = es[static_cast<std::size_t>(a)];
            const auto& [u2, v2] = es[static_cast<std::size_t>(b)];
            if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2)
                out.graph.add_edge(n + a, n + b);
        }
    return out;
}

Graph contract_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v))
        throw std::invalid_argument("contract_edge: not an edge of the graph");
    if (u > v) std::swap(u, v);
    // v merges into u; vertices above v shift down by one
    const int n = g.order();
    auto relabel = [&](int x) { return x > v ? x - 1 : x; };
    Graph out(n - 1);
    for (const auto& [a, b] : g.edges()) {
        int a2 = (a == v) ? u : a;
        int b2 = (b == v) ? u : b;
        if (a2 == b2) continue; // the contracted edge itself
        out.add_edge(relabel(a2), relabel(b2));
    }
    return out;
}

} // namespace edds

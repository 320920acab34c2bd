#pragma once

#include "edds/graph.hpp"

#include <string>
#include <vector>

namespace edds {

/// Provenance of a vertex of a transformed graph: original v_i, subdivision
/// vertex z_{ij}, Mycielskian shadow u_i, or the Mycielskian apex w.
struct VertexTag {
    enum class Kind { original, edge_vertex, shadow, apex };

    Kind kind = Kind::original;
    int i = -1;
    int j = -1; // edge_vertex only, with i < j

    static VertexTag original(int i) { return {Kind::original, i, -1}; }
    static VertexTag edge_vertex(int i, int j) { return {Kind::edge_vertex, i, j}; }
    static VertexTag shadow(int i) { return {Kind::shadow, i, -1}; }
    static VertexTag apex() { return {Kind::apex, -1, -1}; }

    /// Human-facing rendering, 1-based:
    /// "v3", "z(2,5)", "u4", "w".
    std::string render() const;

    friend bool operator==(const VertexTag&, const VertexTag&) = default;
};

/// A transformed graph together with the provenance tag of each vertex and
/// the order of the source graph. Vertex layout is deterministic: originals
/// ascending, then edge vertices in lexicographic (i, j) order, then shadows
/// ascending, then the apex.
struct TaggedGraph {
    Graph graph;
    std::vector<VertexTag> tags;
    int source_n = 0;

    /// Members of the transformed graph tagged Original.
    VertexSet original_vertices() const;
    /// Members tagged EdgeVertex.
    VertexSet edge_vertices() const;
};

/// S(G): every edge v_i v_j replaced by the path v_i - z_{ij} - v_j.
TaggedGraph subdivision(const Graph& g);

/// S_M(H): only the edges of the matching m are subdivided; other edges are
/// kept. Throws if m contains a non-edge or two incident edges.
TaggedGraph subdivide_matching(const Graph& h, const std::vector<Edge>& m);

/// mu(G): order 2n+1; shadows u_i adjacent to the G-neighbors of v_i, apex w
/// adjacent to every shadow.
TaggedGraph mycielskian(const Graph& g);

/// L(G): one vertex per edge of G, adjacent iff the edges share an endpoint.
TaggedGraph line_graph(const Graph& g);

/// M(G): originals plus edge vertices; each z_{ij} adjacent to v_i, v_j and
/// to the edge vertices of incident edges. Originals are pairwise
/// non-adjacent.
TaggedGraph middle(const Graph& g);

/// Contracts edge (u, v) with simple-graph semantics: the endpoints merge,
/// parallel edges collapse, the order drops by one. Surviving vertices keep
/// their relative order. Throws if (u, v) is not an edge.
Graph contract_edge(const Graph& g, int u, int v);

} // namespace edds

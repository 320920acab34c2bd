#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace edds {

/// Subset of vertices of a graph with at most 64 vertices, stored as a bit mask.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.insert(v);
        return s;
    }

    /// {0, 1, ..., n-1}
    static constexpr VertexSet full(int n) {
        return VertexSet(n >= 64 ? ~0ull : (1ull << n) - 1);
    }

    constexpr bool contains(int v) const { return (bits_ >> v) & 1; }
    constexpr void insert(int v) { bits_ |= 1ull << v; }
    constexpr void erase(int v) { bits_ &= ~(1ull << v); }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::uint64_t bits() const { return bits_; }

    /// Index of the lowest member; undefined on the empty set.
    constexpr int lowest() const { return std::countr_zero(bits_); }

    std::vector<int> to_vector() const;

    constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(VertexSet, VertexSet) = default;

    /// Orders sets by their ascending member sequences ({0,3} before {1,2},
    /// a proper prefix before its extensions).
    static constexpr bool lex_less(VertexSet a, VertexSet b) {
        while (!a.empty() && !b.empty()) {
            const int x = a.lowest(), y = b.lowest();
            if (x != y) return x < y;
            a.erase(x);
            b.erase(y);
        }
        return !b.empty();
    }

    class iterator {
    public:
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr int operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
        constexpr bool operator!=(const iterator& o) const { return rest_ != o.rest_; }
    private:
        std::uint64_t rest_;
    };
    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

private:
    std::uint64_t bits_ = 0;
};

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1, adjacency as per-vertex bit
/// masks. Values are treated as immutable once built; all operations below
/// are pure functions.
class Graph {
public:
    static constexpr int kMaxVertices = 64;

    Graph() = default;
    explicit Graph(int n);

    void add_edge(int u, int v);

    int order() const { return n_; }
    int size() const { return m_; }
    int degree(int v) const { return VertexSet(adj_at(v)).size(); }
    bool has_edge(int u, int v) const;

    VertexSet neighbors(int v) const;
    VertexSet closed_neighborhood(int v) const;
    VertexSet vertices() const { return VertexSet::full(n_); }

    /// Edges as (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::uint64_t adj_at(int v) const;
    int n_ = 0;
    int m_ = 0;
    std::vector<std::uint64_t> adj_;
};

/// Builds a simple graph from an edge list; duplicate pairs collapse.
/// Throws std::invalid_argument on out-of-range indices or self-loops.
Graph new_graph(int n, const std::vector<Edge>& edges);

Graph complement(const Graph& g);
VertexSet isolated_vertices(const Graph& g);

/// True iff every vertex of d has exactly one neighbor inside d, i.e. the
/// subgraph induced on d is a perfect matching of itself.
bool is_one_regular_on(const Graph& g, VertexSet d);

/// True iff g is a 4-cycle under any labeling.
bool is_c4(const Graph& g);

/// graph6 short form (n <= 62): one ASCII line per graph, first byte n+63,
/// then the upper-triangle bits in column-major order, 6 per byte, each +63.
Graph parse_graph6(std::string_view line);
std::string to_graph6(const Graph& g);

enum class Family { path, cycle, star, complete, empty };

std::optional<Family> parse_family(std::string_view name);

/// Canonical labeled family member: path/cycle vertices in traversal order,
/// star centered at vertex 0.
Graph gen_family(Family family, int n);

/// Streams all 2^(n(n-1)/2) labeled simple graphs on n vertices, in
/// deterministic order (edge bits in graph6 pair order). Practical bound
/// n <= 7.
class GraphEnumerator {
public:
    explicit GraphEnumerator(int n);
    std::optional<Graph> next();
    std::uint64_t total() const { return total_; }

private:
    int n_;
    std::vector<Edge> pairs_;
    std::uint64_t total_;
    std::uint64_t cursor_ = 0;
};

} // namespace edds

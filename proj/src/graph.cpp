#include "edds/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace edds {

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int v : *this) out.push_back(v);
    return out;
}

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("graph order must be non-negative");
    if (n > kMaxVertices)
        throw std::length_error("graph capacity exceeded (max " +
                                std::to_string(kMaxVertices) + " vertices)");
    adj_.assign(static_cast<std::size_t>(n), 0);
}

std::uint64_t Graph::adj_at(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex index out of range");
    return adj_[static_cast<std::size_t>(v)];
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    std::uint64_t bit_u = 1ull << u, bit_v = 1ull << v;
    if (adj_[static_cast<std::size_t>(u)] & bit_v) return; // duplicate
    adj_[static_cast<std::size_t>(u)] |= bit_v;
    adj_[static_cast<std::size_t>(v)] |= bit_u;
    ++m_;
}

bool Graph::has_edge(int u, int v) const {
    return (adj_at(u) >> v) & 1;
}

VertexSet Graph::neighbors(int v) const {
    return VertexSet(adj_at(v));
}

VertexSet Graph::closed_neighborhood(int v) const {
    return VertexSet(adj_at(v) | (1ull << v));
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : VertexSet(adj_[static_cast<std::size_t>(u)]))
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph new_graph(int n, const std::vector<Edge>& edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph complement(const Graph& g) {
    const int n = g.order();
    Graph out(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) out.add_edge(u, v);
    return out;
}

VertexSet isolated_vertices(const Graph& g) {
    VertexSet out;
    for (int v = 0; v < g.order(); ++v)
        if (g.neighbors(v).empty()) out.insert(v);
    return out;
}

bool is_one_regular_on(const Graph& g, VertexSet d) {
    for (int v : d) {
        if (v >= g.order()) throw std::out_of_range("set member out of range");
        if ((g.neighbors(v) & d).size() != 1) return false;
    }
    return true;
}

bool is_c4(const Graph& g) {
    if (g.order() != 4) return false;
    for (int v = 0; v < 4; ++v)
        if (g.degree(v) != 2) return false;
    // connected: BFS from 0
    VertexSet seen = VertexSet::of({0});
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        for (int v : frontier) next |= g.neighbors(v);
        frontier = next - seen;
        seen |= next;
    }
    return seen == VertexSet::full(4);
}

namespace {

constexpr int kG6Base = 63; // printable offset; data bytes range '?'..'~'

// pair index k <-> (i, j), i < j, in column-major upper-triangle order:
// (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...
std::vector<Edge> upper_triangle_pairs(int n) {
    std::vector<Edge> pairs;
    pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
    return pairs;
}

} // namespace

Graph parse_graph6(std::string_view line) {
    if (line.empty()) throw std::invalid_argument("graph6: empty line");
    if (line.front() == '~')
        throw std::invalid_argument("graph6: long form (n > 62) not supported");
    int c = static_cast<unsigned char>(line.front());
    if (c < kG6Base || c > kG6Base + 62)
        throw std::invalid_argument("graph6: malformed order byte");
    const int n = c - kG6Base;
    const int nbits = n * (n - 1) / 2;
    const std::size_t expect = 1 + static_cast<std::size_t>((nbits + 5) / 6);
    if (line.size() != expect)
        throw std::invalid_argument("graph6: length mismatch (expected " +
                                    std::to_string(expect) + " characters, got " +
                                    std::to_string(line.size()) + ")");
    Graph g(n);
    const auto pairs = upper_triangle_pairs(n);
    for (int k = 0; k < nbits; ++k) {
        int byte = static_cast<unsigned char>(line[1 + static_cast<std::size_t>(k / 6)]);
        if (byte < kG6Base || byte > kG6Base + 63)
            throw std::invalid_argument("graph6: malformed character");
        if ((byte - kG6Base) >> (5 - k % 6) & 1)
            g.add_edge(pairs[static_cast<std::size_t>(k)].first,
                       pairs[static_cast<std::size_t>(k)].second);
    }
    return g;
}

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    if (n > 62) throw std::length_error("graph6: short form requires n <= 62");
    std::string out;
    out.push_back(static_cast<char>(n + kG6Base));
    const auto pairs = upper_triangle_pairs(n);
    int acc = 0, filled = 0;
    for (const auto& [i, j] : pairs) {
        acc = acc << 1 | (g.has_edge(i, j) ? 1 : 0);
        if (++filled == 6) {
            out.push_back(static_cast<char>(acc + kG6Base));
            acc = 0;
            filled = 0;
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kG6Base));
    return out;
}

std::optional<Family> parse_family(std::string_view name) {
    if (name == "path") return Family::path;
    if (name == "cycle") return Family::cycle;
    if (name == "star") return Family::star;
    if (name == "complete") return Family::complete;
    if (name == "empty") return Family::empty;
    return std::nullopt;
}

Graph gen_family(Family family, int n) {
    if (n < 1) throw std::invalid_argument("family graphs require n >= 1");
    switch (family) {
    case Family::path: {
        Graph g(n);
        for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
        return g;
    }
    case Family::cycle: {
        if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
        Graph g(n);
        for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
        return g;
    }
    case Family::star: {
        Graph g(n);
        for (int i = 1; i < n; ++i) g.add_edge(0, i);
        return g;
    }
    case Family::complete: {
        Graph g(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
        return g;
    }
    case Family::empty:
        return Graph(n);
    }
    throw std::invalid_argument("unknown family");
}

GraphEnumerator::GraphEnumerator(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("enumeration order must be non-negative");
    if (n > 7)
        throw std::invalid_argument("exhaustive enumeration is bounded at n <= 7");
    pairs_ = upper_triangle_pairs(n);
    total_ = 1ull << pairs_.size();
}

std::optional<Graph> GraphEnumerator::next() {
    if (cursor_ >= total_) return std::nullopt;
    const std::uint64_t mask = cursor_++;
    Graph g(n_);
    for (std::size_t k = 0; k < pairs_.size(); ++k)
        if (mask >> k & 1) g.add_edge(pairs_[k].first, pairs_[k].second);
    return g;
}

} // namespace edds

#include "edds/transforms.hpp"

#include "edds/graph.hpp"

#include "doctest.h"

#include <random>
#include <stdexcept>

using namespace edds;

namespace {

std::vector<Graph> small_corpus(int max_n) {
    std::vector<Graph> out;
    for (int n = 0; n <= max_n; ++n) {
        GraphEnumerator en(n);
        while (auto g = en.next()) out.push_back(std::move(*g));
    }
    return out;
}

} // namespace

TEST_CASE("tag rendering is 1-based") {
    CHECK(VertexTag::original(2).render() == "v3");
    CHECK(VertexTag::edge_vertex(1, 4).render() == "z(2,5)");
    CHECK(VertexTag::shadow(3).render() == "u4");
    CHECK(VertexTag::apex().render() == "w");
}

TEST_CASE("subdivision of P5 is the 9-vertex alternating path") {
    const auto s = subdivision(gen_family(Family::path, 5));
    CHECK(s.graph.order() == 9);
    CHECK(s.graph.size() == 8);
    CHECK(s.source_n == 5);
    // layout: v1..v5 then z(1,2) z(2,3) z(3,4) z(4,5)
    CHECK(s.tags[0] == VertexTag::original(0));
    CHECK(s.tags[5] == VertexTag::edge_vertex(0, 1));
    CHECK(s.tags[8] == VertexTag::edge_vertex(3, 4));
    // path v1 z12 v2 z23 v3 z34 v4 z45 v5
    const std::vector<Edge> want{{0, 5}, {1, 5}, {1, 6}, {2, 6}, {2, 7}, {3, 7}, {3, 8}, {4, 8}};
    auto got = s.graph.edges();
    std::sort(got.begin(), got.end());
    auto sorted_want = want;
    std::sort(sorted_want.begin(), sorted_want.end());
    CHECK(got == sorted_want);
}

TEST_CASE("subdivision of C3 is a 6-cycle") {
    const auto s = subdivision(gen_family(Family::cycle, 3));
    CHECK(s.graph.order() == 6);
    CHECK(s.graph.size() == 6);
    for (int v = 0; v < 6; ++v) CHECK(s.graph.degree(v) == 2);
    CHECK(s.graph ==
          new_graph(6, {{0, 3}, {1, 3}, {0, 4}, {2, 4}, {1, 5}, {2, 5}}));
}

TEST_CASE("subdivision of an edgeless graph is itself") {
    const auto s = subdivision(Graph(4));
    CHECK(s.graph == Graph(4));
    CHECK(s.tags.size() == 4);
}

TEST_CASE("subdivide_matching") {
    SUBCASE("single edge of K2 gives P3") {
        const auto t = subdivide_matching(gen_family(Family::path, 2), {{0, 1}});
        CHECK(t.graph == new_graph(3, {{0, 2}, {1, 2}}));
        CHECK(t.tags[2] == VertexTag::edge_vertex(0, 1));
    }
    SUBCASE("perfect matching of C4 gives C6") {
        const auto t = subdivide_matching(gen_family(Family::cycle, 4), {{0, 1}, {2, 3}});
        CHECK(t.graph.order() == 6);
        for (int v = 0; v < 6; ++v) CHECK(t.graph.degree(v) == 2);
        CHECK(t.graph ==
              new_graph(6, {{0, 4}, {1, 4}, {2, 5}, {3, 5}, {1, 2}, {0, 3}}));
    }
    SUBCASE("inner edge of P4 gives P5") {
        const auto t = subdivide_matching(gen_family(Family::path, 4), {{1, 2}});
        CHECK(t.graph == new_graph(5, {{0, 1}, {1, 4}, {2, 4}, {2, 3}}));
    }
    SUBCASE("rejects incident edges") {
        CHECK_THROWS_AS(subdivide_matching(gen_family(Family::path, 3), {{0, 1}, {1, 2}}),
                        std::invalid_argument);
    }
    SUBCASE("rejects non-edges") {
        CHECK_THROWS_AS(subdivide_matching(new_graph(3, {{0, 1}}), {{1, 2}}),
                        std::invalid_argument);
    }
    SUBCASE("perfect matching forces order divisible by three") {
        const auto t = subdivide_matching(gen_family(Family::complete, 4), {{0, 1}, {2, 3}});
        CHECK(t.graph.order() % 3 == 0);
    }
}

TEST_CASE("subdivision equals one-edge-at-a-time matching subdivision") {
    for (const auto& g : small_corpus(4)) {
        Graph cur = g;
        for (const auto& e : g.edges())
            cur = subdivide_matching(cur, {e}).graph;
        CHECK(cur == subdivision(g).graph);
    }
}

TEST_CASE("mycielskian of P5 layout and adjacency") {
    const auto mu = mycielskian(gen_family(Family::path, 5));
    CHECK(mu.graph.order() == 11);
    CHECK(mu.graph.size() == 17); // 3m + n
    const int apex = 10;
    CHECK(mu.tags[apex] == VertexTag::apex());
    CHECK(mu.tags[5] == VertexTag::shadow(0));
    CHECK(mu.graph.neighbors(apex) == VertexSet::of({5, 6, 7, 8, 9}));
    // u1 sees v2 only; u2 sees v1 and v3
    CHECK((mu.graph.neighbors(5) - VertexSet::of({apex})) == VertexSet::of({1}));
    CHECK((mu.graph.neighbors(6) - VertexSet::of({apex})) == VertexSet::of({0, 2}));
}

TEST_CASE("mycielskian of a single vertex") {
    const auto mu = mycielskian(Graph(1));
    CHECK(mu.graph.order() == 3);
    CHECK(mu.graph.size() == 1);
    CHECK(mu.graph.has_edge(2, 1)); // w - u1
    CHECK(mu.graph.degree(0) == 0);
}

TEST_CASE("mycielskian of K2 is the 5-cycle") {
    const auto mu = mycielskian(gen_family(Family::path, 2));
    CHECK(mu.graph == new_graph(5, {{0, 1}, {0, 3}, {1, 2}, {2, 4}, {3, 4}}));
    for (int v = 0; v < 5; ++v) CHECK(mu.graph.degree(v) == 2);
}

TEST_CASE("line graphs") {
    CHECK(line_graph(gen_family(Family::path, 3)).graph == new_graph(2, {{0, 1}}));
    const auto lc4 = line_graph(gen_family(Family::cycle, 4));
    CHECK(lc4.graph.order() == 4);
    for (int v = 0; v < 4; ++v) CHECK(lc4.graph.degree(v) == 2);
    const auto lstar = line_graph(gen_family(Family::star, 4));
    CHECK(lstar.graph == gen_family(Family::complete, 3));
}

TEST_CASE("middle of C4 structure") {
    const auto m = middle(gen_family(Family::cycle, 4));
    CHECK(m.graph.order() == 8);
    CHECK(m.graph.size() == 12);
    // z layout: z(1,2)=4 z(1,4)=5 z(2,3)=6 z(3,4)=7
    CHECK(m.tags[4] == VertexTag::edge_vertex(0, 1));
    CHECK(m.tags[5] == VertexTag::edge_vertex(0, 3));
    CHECK(m.tags[6] == VertexTag::edge_vertex(1, 2));
    CHECK(m.tags[7] == VertexTag::edge_vertex(2, 3));
    // each z adjacent to its two endpoints
    CHECK(m.graph.has_edge(4, 0));
    CHECK(m.graph.has_edge(4, 1));
    // the z vertices form a 4-cycle
    for (int z = 4; z < 8; ++z)
        CHECK((m.graph.neighbors(z) & VertexSet::of({4, 5, 6, 7})).size() == 2);
    CHECK(m.graph.has_edge(4, 5));
    CHECK(m.graph.has_edge(4, 6));
    CHECK(!m.graph.has_edge(4, 7));
    CHECK(!m.graph.has_edge(5, 6));
}

TEST_CASE("middle of K2 is P3, middle of edgeless is itself") {
    CHECK(middle(gen_family(Family::path, 2)).graph == new_graph(3, {{0, 2}, {1, 2}}));
    CHECK(middle(Graph(3)).graph == Graph(3));
}

TEST_CASE("contract_edge") {
    CHECK(contract_edge(gen_family(Family::path, 3), 0, 1) == gen_family(Family::path, 2));
    CHECK(contract_edge(gen_family(Family::cycle, 3), 0, 1) == gen_family(Family::path, 2));
    CHECK(contract_edge(gen_family(Family::cycle, 4), 1, 2) == gen_family(Family::cycle, 3));
    CHECK_THROWS_AS(contract_edge(gen_family(Family::path, 3), 0, 2), std::invalid_argument);
}

TEST_CASE("counting laws hold on the small corpus") {
    for (const auto& g : small_corpus(4)) {
        const int n = g.order(), m = g.size();
        const auto s = subdivision(g);
        CHECK(s.graph.order() == n + m);
        CHECK(s.graph.size() == 2 * m);
        const auto mu = mycielskian(g);
        CHECK(mu.graph.order() == 2 * n + 1);
        CHECK(mu.graph.size() == 3 * m + n);
        const auto lg = line_graph(g);
        const auto mid = middle(g);
        CHECK(mid.graph.order() == n + m);
        CHECK(mid.graph.size() == 2 * m + lg.graph.size());
    }
}

TEST_CASE("originals are independent in S and M, cliques in the complements") {
    std::mt19937 rng(99);
    std::bernoulli_distribution coin(0.5);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g(5);
        for (int u = 0; u < 5; ++u)
            for (int v = u + 1; v < 5; ++v)
                if (coin(rng)) g.add_edge(u, v);
        for (const auto& t : {subdivision(g), middle(g)}) {
            const auto originals = t.original_vertices();
            for (int a : originals)
                for (int b : originals) {
                    if (a == b) continue;
                    CHECK(!t.graph.has_edge(a, b));
                    CHECK(complement(t.graph).has_edge(a, b));
                }
        }
        for (const auto& e : subdivision(g).graph.edges()) (void)e;
        for (int z : subdivision(g).edge_vertices())
            CHECK(subdivision(g).graph.degree(z) == 2);
    }
}

TEST_CASE("tags are unique per tagged graph") {
    for (const auto& g : small_corpus(3)) {
        for (const auto& t : {subdivision(g), mycielskian(g), middle(g), line_graph(g)}) {
            CHECK(t.tags.size() == static_cast<std::size_t>(t.graph.order()));
            for (std::size_t a = 0; a < t.tags.size(); ++a)
                for (std::size_t b = a + 1; b < t.tags.size(); ++b)
                    CHECK(!(t.tags[a] == t.tags[b]));
        }
    }
}

TEST_CASE("transform capacity errors are clean") {
    // a dense 12-vertex graph subdivides past the 64-vertex capacity
    const Graph k12 = [] {
        Graph g(12);
        for (int u = 0; u < 12; ++u)
            for (int v = u + 1; v < 12; ++v) g.add_edge(u, v);
        return g;
    }();
    CHECK_THROWS_AS(subdivision(k12), std::length_error);
}

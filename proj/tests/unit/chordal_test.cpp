#include "tpfill/chordal.hpp"
#include "tpfill/generate.hpp"
#include "tpfill/oracle.hpp"

#include <gtest/gtest.h>

using namespace tpfill;

namespace {

Graph cycle(std::size_t n) {
    std::vector<Edge> es;
    for (std::size_t i = 0; i < n; ++i) es.push_back(make_edge(Vertex(i), Vertex((i + 1) % n)));
    return Graph(n, es);
}

Graph clique(std::size_t n) {
    std::vector<Edge> es;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) es.push_back({Vertex(a), Vertex(b)});
    return Graph(n, es);
}

Graph random_graph(std::size_t n, double p, Rng& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> es;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (coin(rng)) es.push_back({Vertex(a), Vertex(b)});
    return Graph(n, es);
}

bool is_clique(const Graph& g, const VertexSet& s) {
    for (Vertex a : s)
        for (Vertex b : s)
            if (a < b && !g.has_edge(a, b)) return false;
    return true;
}

}  // namespace

TEST(Chordal, Examples) {
    EXPECT_TRUE(is_chordal(clique(3)));
    auto c = check_chordal(cycle(4));
    EXPECT_FALSE(c.chordal);
    EXPECT_EQ(c.cycle.size(), 4u);
    EXPECT_TRUE(is_chordal(Graph(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}})));
    EXPECT_TRUE(is_chordal(Graph(0)));
}

TEST(Chordal, CertificatesAreValid) {
    Rng rng(31);
    for (int i = 0; i < 1500; ++i) {
        Graph g = random_graph(1 + rng() % 9, 0.2 + 0.6 * (rng() % 100) / 100.0, rng);
        auto c = check_chordal(g);
        EXPECT_EQ(c.chordal, !has_long_induced_cycle(g));
        if (c.chordal) {
            // each vertex's later neighbours form a clique
            std::vector<std::size_t> pos(g.order());
            ASSERT_EQ(c.elimination_order.size(), g.order());
            for (std::size_t k = 0; k < g.order(); ++k) pos[c.elimination_order[k]] = k;
            for (Vertex v : c.elimination_order) {
                std::vector<Vertex> later;
                for (Vertex u : g.neighbors(v))
                    if (pos[u] > pos[v]) later.push_back(u);
                EXPECT_TRUE(is_clique(g, VertexSet(later)));
            }
        } else {
            ASSERT_GE(c.cycle.size(), 4u);
            auto sub = induced_subgraph(g, VertexSet(c.cycle));
            EXPECT_EQ(sub.graph.size(), c.cycle.size());
            for (std::size_t k = 0; k < c.cycle.size(); ++k)
                EXPECT_TRUE(g.has_edge(c.cycle[k], c.cycle[(k + 1) % c.cycle.size()]));
        }
    }
}

TEST(Cobipartite, Examples) {
    auto k4 = is_cobipartite(clique(4));
    ASSERT_TRUE(k4);
    EXPECT_EQ(k4->first.size() + k4->second.size(), 4u);
    EXPECT_FALSE(is_cobipartite(cycle(5)));
    auto c4 = is_cobipartite(cycle(4));
    ASSERT_TRUE(c4);
    EXPECT_EQ(c4->first, (VertexSet{0, 1}));
    EXPECT_EQ(c4->second, (VertexSet{2, 3}));
}

TEST(MinimalSeparators, Examples) {
    EXPECT_EQ(minimal_separators(Graph(3, {{0, 1}, {1, 2}})), (std::vector<VertexSet>{{1}}));
    EXPECT_EQ(minimal_separators(cycle(4)), (std::vector<VertexSet>{{0, 2}, {1, 3}}));
    EXPECT_TRUE(minimal_separators(clique(5)).empty());
    EXPECT_THROW(minimal_separators(Graph(13)), std::invalid_argument);
}

TEST(MinimalSeparators, CharacterizeChordal) {
    Rng rng(32);
    for (int i = 0; i < 800; ++i) {
        Graph g = random_graph(1 + rng() % 8, 0.3 + 0.5 * (rng() % 100) / 100.0, rng);
        auto seps = minimal_separators(g);
        bool all_cliques = std::all_of(seps.begin(), seps.end(), [&](const VertexSet& s) { return is_clique(g, s); });
        EXPECT_EQ(is_chordal(g), all_cliques);
    }
}

TEST(Gadget, C4Example) {
    Graph f(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    auto gi = build_gadget({f, {0, 1}, {2, 3}, 1});
    EXPECT_EQ(gi.k_big, 2);
    EXPECT_EQ(gi.c.size(), 3u);
    EXPECT_EQ(gi.g.order(), 8u);
    EXPECT_EQ(gi.g.neighbors(gi.v), (std::vector<Vertex>{0, 1}));
    EXPECT_FALSE(gi.g.has_edge(0, 1));
    for (Vertex c : gi.c) EXPECT_EQ(gi.g.degree(c), 6u);
    EXPECT_EQ(gi.source[gi.v], -1);
    EXPECT_EQ(gi.source[2], 2);
}

TEST(Gadget, DegenerateCases) {
    auto k2 = build_gadget({Graph(2, {{0, 1}}), {0}, {1}, 0});
    EXPECT_EQ(k2.k_big, 0);
    EXPECT_EQ(k2.c.size(), 1u);
    EXPECT_EQ(k2.g.neighbors(k2.v), (std::vector<Vertex>{0}));
    auto noa = build_gadget({clique(3), {}, {0, 1, 2}, 2});
    EXPECT_EQ(noa.k_big, 2);
    EXPECT_EQ(noa.c.size(), 3u);
    EXPECT_EQ(noa.g.degree(noa.v), 0u);
}

TEST(Gadget, RejectsBadPartition) {
    Graph f(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    EXPECT_THROW(build_gadget({f, {0, 2}, {1, 3}, 1}), InvalidGadgetInput);
    EXPECT_THROW(build_gadget({f, {0, 1}, {2}, 1}), InvalidGadgetInput);
    EXPECT_THROW(build_gadget({f, {0, 1}, {2, 3}, -1}), InvalidGadgetInput);
}

TEST(Gadget, Invariants) {
    Rng rng(33);
    for (int i = 0; i < 200; ++i) {
        std::size_t n = 1 + rng() % 6;
        Graph f = random_graph(n, 0.7, rng);
        auto ab = is_cobipartite(f);
        if (!ab) continue;
        std::int64_t k = static_cast<std::int64_t>(rng() % 4);
        auto gi = build_gadget({f, ab->first, ab->second, k});
        std::int64_t a = static_cast<std::int64_t>(ab->first.size());
        EXPECT_EQ(gi.k_big, k + a * (a - 1) / 2);
        EXPECT_EQ(static_cast<std::int64_t>(gi.c.size()), gi.k_big + 1);
        for (Vertex x : ab->first)
            for (Vertex y : ab->first)
                if (x < y) EXPECT_FALSE(gi.g.has_edge(x, y));
        std::vector<Vertex> bc(ab->second.begin(), ab->second.end());
        bc.insert(bc.end(), gi.c.begin(), gi.c.end());
        EXPECT_TRUE(is_clique(gi.g, VertexSet(bc)));
        EXPECT_EQ(gi.g.neighbors(gi.v), ab->first.items());
    }
}

#include "tpfill/slim.hpp"
#include "tpfill/generate.hpp"
#include "tpfill/oracle.hpp"

#include <gtest/gtest.h>

using namespace tpfill;

TEST(Slim, Examples) {
    EXPECT_TRUE(slim_tpc({Graph(1), {0}}).fill.empty());
    auto two = slim_tpc({Graph(2), {0, 1}});
    EXPECT_EQ(two.fill, (std::vector<Edge>{{0, 1}}));
    Graph p3(3, {{0, 1}, {1, 2}});
    auto r = slim_tpc({p3, {0}});
    EXPECT_EQ(r.fill, (std::vector<Edge>{{0, 2}}));
    EXPECT_EQ(r.tree.root(), 0);
    EXPECT_EQ(r.tree.base(), 0);
}

TEST(Slim, BaseIsDeepestMarker) {
    Graph p3(3, {{0, 1}, {1, 2}});
    auto r = slim_tpc({p3, {0, 2}});
    EXPECT_EQ(r.fill.size(), 1u);
    EXPECT_EQ(r.tree.level(r.tree.base()), 2u);
}

TEST(Slim, Invalid) {
    EXPECT_THROW(slim_tpc({Graph(2), {0}}), InvalidSlimProblem);
    EXPECT_THROW(slim_tpc({Graph(4, {{0, 1}, {1, 2}, {2, 3}}), {0}}), InvalidSlimProblem);
    EXPECT_THROW(slim_tpc({Graph(2, {{0, 1}}), {}}), InvalidSlimProblem);
    EXPECT_THROW(slim_tpc({Graph(2, {{0, 1}}), {4}}), InvalidSlimProblem);
}

TEST(IsSlimCompletion, Examples) {
    SlimProblem p{Graph(2), {0, 1}};
    EXPECT_TRUE(is_slim_completion(p, Graph(2, {{0, 1}})));
    EXPECT_FALSE(is_slim_completion(p, Graph(2)));
    SlimProblem q{Graph(3, {{0, 1}, {1, 2}}), {0, 2}};
    EXPECT_TRUE(is_slim_completion(q, Graph(3, {{0, 1}, {0, 2}, {1, 2}})));
    EXPECT_FALSE(is_slim_completion(q, Graph(3, {{0, 1}, {1, 2}})));
    EXPECT_THROW(is_slim_completion(q, Graph(4)), InvalidSlimProblem);
}

TEST(IsSlimCompletion, MarkersMustBeOnTop) {
    // star centred at 1: 0 and 2 cannot both sit in the top two levels
    SlimProblem p{Graph(4, {{0, 1}, {1, 2}, {1, 3}}), {0, 2}};
    EXPECT_FALSE(is_slim_completion(p, p.f));
    EXPECT_FALSE(is_slim_completion(p, Graph(4, {{0, 1}, {1, 2}, {1, 3}, {0, 2}})));
    EXPECT_FALSE(is_slim_completion(p, Graph(4, {{0, 1}, {1, 2}, {1, 3}, {0, 2}, {0, 3}})));
    EXPECT_TRUE(is_slim_completion(p, Graph(4, {{0, 1}, {1, 2}, {1, 3}, {0, 2}, {0, 3}, {2, 3}})));
    EXPECT_EQ(slim_tpc(p).fill.size(), 3u);
}

TEST(Slim, MatchesEnumeration) {
    Rng rng(21);
    int checked = 0;
    while (checked < 500) {
        std::size_t n = 1 + rng() % 6;
        Graph f = random_tp_graph(n, rng);
        std::vector<Vertex> s;
        for (const auto& comp : connected_components(f)) {
            auto items = comp.items();
            s.push_back(items[rng() % items.size()]);
            for (Vertex x : items)
                if (rng() % 3 == 0) s.push_back(x);
        }
        SlimProblem p{f, VertexSet(s)};
        auto r = slim_tpc(p);
        EXPECT_TRUE(is_slim_completion(p, add_edges(f, r.fill)));
        EXPECT_EQ(r.fill.size(), enumerate_slim(p));
        EXPECT_TRUE(p.s.contains(r.tree.base()));
        EXPECT_EQ(r.tree.level(r.tree.base()), p.s.size());
        ++checked;
    }
}

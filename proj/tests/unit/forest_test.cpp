#include "tpfill/forest.hpp"
#include "tpfill/generate.hpp"
#include "tpfill/oracle.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace tpfill;

namespace {

RootedTree path(std::vector<Vertex> ids) {
    std::vector<int> par;
    for (std::size_t i = 0; i < ids.size(); ++i) par.push_back(static_cast<int>(i) - 1);
    int base = static_cast<int>(ids.size()) - 1;
    return RootedTree::from_raw(std::move(ids), std::move(par), base);
}

RootedTree star(Vertex r, std::vector<Vertex> leaves) {
    std::vector<std::pair<Vertex, std::optional<Vertex>>> nodes{{r, std::nullopt}};
    for (Vertex x : leaves) nodes.push_back({x, r});
    return RootedTree::from_parents(nodes);
}

}  // namespace

TEST(RootedTree, Validation) {
    EXPECT_THROW(RootedTree::from_raw({0, 1}, {-1, 1}, 0), std::invalid_argument);
    EXPECT_THROW(RootedTree::from_raw({0, 0}, {-1, 0}, 0), std::invalid_argument);
    EXPECT_THROW(RootedTree::from_parents({{0, std::nullopt}, {1, 2}}), std::invalid_argument);
    EXPECT_THROW(RootedTree::from_parents({{0, std::nullopt}}, 4), std::invalid_argument);
}

TEST(RootedTree, Queries) {
    auto t = RootedTree::from_parents({{5, std::nullopt}, {2, 5}, {7, 5}, {1, 7}}, 1);
    EXPECT_EQ(t.root(), 5);
    EXPECT_EQ(t.base(), 1);
    EXPECT_EQ(t.level(1), 3u);
    EXPECT_EQ(t.base_path(), (std::vector<Vertex>{5, 7, 1}));
    EXPECT_EQ(t.children(5), (std::vector<Vertex>{2, 7}));
    EXPECT_TRUE(t.is_ancestor(5, 1));
    EXPECT_FALSE(t.is_ancestor(2, 1));
    EXPECT_EQ(t.edge_count(), 2 + 1 + 1 + 0);
    EXPECT_EQ(t.subtree(7).base(), 1);
    EXPECT_EQ(t.subtree(2).base(), 2);
}

TEST(ToForest, Examples) {
    auto k3 = to_forest(Graph(3, {{0, 1}, {0, 2}, {1, 2}}));
    ASSERT_EQ(k3.trees.size(), 1u);
    EXPECT_EQ(k3.trees[0], path({0, 1, 2}).with_base(0));
    auto two = to_forest(Graph(2));
    EXPECT_EQ(two.trees.size(), 2u);
    try {
        to_forest(Graph(4, {{0, 1}, {1, 2}, {2, 3}}));
        FAIL();
    } catch (const NotTriviallyPerfect& e) {
        auto w = e.witness().vertices;
        std::sort(w.begin(), w.end());
        EXPECT_EQ(w, (std::array<Vertex, 4>{0, 1, 2, 3}));
        EXPECT_FALSE(e.witness().cycle);
    }
}

TEST(ToForest, C4Witness) {
    auto r = recognize(Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
    ASSERT_TRUE(std::holds_alternative<Obstruction>(r));
    EXPECT_TRUE(std::get<Obstruction>(r).cycle);
}

TEST(ToForest, CanonicalOrder) {
    // two stars of different size plus an isolated vertex
    Graph g(7, {{4, 0}, {4, 1}, {4, 2}, {3, 5}});
    auto f = to_forest(g);
    ASSERT_EQ(f.trees.size(), 3u);
    EXPECT_EQ(f.trees[0].root(), 4);
    EXPECT_EQ(f.trees[1].root(), 3);
    EXPECT_EQ(f.trees[2].root(), 6);
    EXPECT_EQ(f.trees[0].children(4), (std::vector<Vertex>{0, 1, 2}));
}

TEST(FromForest, Examples) {
    EXPECT_EQ(from_forest({{path({0, 1, 2})}}), Graph(3, {{0, 1}, {0, 2}, {1, 2}}));
    EXPECT_EQ(from_forest({{star(0, {1, 2, 3})}}), Graph(4, {{0, 1}, {0, 2}, {0, 3}}));
    EXPECT_EQ(from_forest({{RootedTree::single(0)}}), Graph(1));
}

TEST(EdgeCount, Examples) {
    EXPECT_EQ(edge_count(RootedForest{{RootedTree::single(0)}}), 0);
    EXPECT_EQ(edge_count(RootedForest{{path({0, 1, 2})}}), 3);
    EXPECT_EQ(edge_count(RootedForest{{star(0, {1, 2, 3})}}), 3);
}

TEST(Forest, RoundTripAndCount) {
    Rng rng(11);
    for (int i = 0; i < 2000; ++i) {
        std::size_t n = 1 + rng() % 12;
        auto f = random_forest(n, rng);
        Graph g = from_forest(f);
        EXPECT_EQ(static_cast<std::int64_t>(g.size()), edge_count(f));
        EXPECT_TRUE(is_trivially_perfect(g));
        EXPECT_EQ(from_forest(to_forest(g)), g);
    }
}

TEST(Forest, Serialization) {
    Rng rng(3);
    auto f = random_forest(9, rng);
    f.trees[0] = f.trees[0].with_base(f.trees[0].vertices().back());
    std::stringstream s;
    write_forest(s, f);
    EXPECT_EQ(read_forest(s), f);
    std::istringstream bad("0 -\n1 0\n");
    EXPECT_THROW(read_forest(bad), ParseError);
    std::istringstream bad2("0 -\n1 2\nbase 1\n");
    EXPECT_THROW(read_forest(bad2), ParseError);
}

TEST(Segment, Examples) {
    auto p = path({0, 1, 2});
    EXPECT_EQ(segment(p, 0, 0), RootedTree::single(0));
    EXPECT_EQ(segment(p, 0, 2), p);
    auto t = RootedTree::from_parents({{0, std::nullopt}, {1, 0}, {2, 0}}, 1);
    auto s = segment(t, 0, 0);
    EXPECT_EQ(s.vertices(), (std::vector<Vertex>{0, 2}));
    EXPECT_EQ(s.base(), 0);
    EXPECT_THROW(segment(t, 2, 1), std::invalid_argument);
    EXPECT_THROW(segment(t, 0, 2), std::invalid_argument);
}

TEST(Merge, Examples) {
    auto a = merge(RootedTree::single(0), path({1, 2}));
    EXPECT_EQ(a.edge_count(), 3);
    EXPECT_EQ(a.base(), 2);
    auto b = merge(path({0, 1}), RootedTree::single(2));
    EXPECT_EQ(b.edge_count(), 3);
    EXPECT_EQ(merge(RootedTree::single(0), RootedTree::single(1)).edge_count(), 1);
    EXPECT_THROW(merge(RootedTree::single(0), RootedTree::single(0)), std::invalid_argument);
}

TEST(MergeN, Examples) {
    auto p = path({0, 1});
    EXPECT_EQ(merge({p}), p);
    auto k3 = merge({RootedTree::single(0), RootedTree::single(1), RootedTree::single(2)});
    EXPECT_EQ(from_forest({{k3}}), from_forest({{path({0, 1, 2})}}));
    auto k4 = merge({path({0, 1}), RootedTree::single(2), RootedTree::single(3)});
    EXPECT_EQ(k4.edge_count(), 6);
}

TEST(Merge, EdgeIdentity) {
    Rng rng(5);
    for (int i = 0; i < 3000; ++i) {
        auto g = random_tree(1 + rng() % 7, rng, 0);
        auto t = random_tree(1 + rng() % 7, rng, 10);
        auto m = merge(g, t);
        EXPECT_EQ(m.edge_count(),
                  static_cast<std::int64_t>(g.level(g.base()) * t.size()) + g.edge_count() + t.edge_count());
        EXPECT_EQ(m.base(), t.base());
    }
}

TEST(Merge, TwoTrees) {
    Rng rng(6);
    for (int i = 0; i < 3000; ++i) {
        auto t1 = random_tree(1 + rng() % 7, rng, 0);
        auto t2 = random_tree(1 + rng() % 7, rng, 10);
        auto a1 = average(t1, 1, t1.level(t1.base()));
        auto a2 = average(t2, 1, t2.level(t2.base()));
        if (a1 >= a2) EXPECT_LE(merge(t1, t2).edge_count(), merge(t2, t1).edge_count());
    }
}

TEST(Average, Examples) {
    auto p = path({0, 1, 2});
    EXPECT_EQ(average(p, 1, 3), Rational(1));
    // root 0 with base-child 1 and side child 2 carrying 3
    auto t = RootedTree::from_parents({{0, std::nullopt}, {1, 0}, {2, 0}, {3, 2}}, 1);
    EXPECT_EQ(average(t, 1, 2), Rational(2));
    EXPECT_EQ(average(t, 1, 1), Rational(3));
    EXPECT_EQ(average(t, 2, 2), Rational(1));
    EXPECT_THROW(average(t, 1, 3), std::out_of_range);
    EXPECT_THROW(average(t, 0, 1), std::out_of_range);
}

TEST(Average, ExactRational) {
    auto t = RootedTree::from_parents({{0, std::nullopt}, {1, 0}, {2, 1}, {3, 1}}, 2);
    EXPECT_EQ(average(t, 1, 3), Rational(4, 3));
    EXPECT_EQ(average(t, 2, 3), Rational(3, 2));
}

TEST(LeadingSubtree, Examples) {
    EXPECT_EQ(leading_subtree(path({0, 1, 2})), 1u);
    auto t = RootedTree::from_parents({{0, std::nullopt}, {1, 0}, {2, 0}, {3, 2}}, 1);
    EXPECT_EQ(leading_subtree(t), 1u);
    EXPECT_EQ(leading_subtree(star(0, {1, 2})), 1u);
    // 0 - 1 - 2(base) with three leaves under 1: sizes 1, 4, 1
    auto u = RootedTree::from_parents({{0, std::nullopt}, {1, 0}, {2, 1}, {3, 1}, {4, 1}, {5, 1}}, 2);
    EXPECT_EQ(leading_subtree(u), 2u);
}

TEST(LeadingMerge, Examples) {
    std::vector<RootedTree> ones{RootedTree::single(0), RootedTree::single(1)};
    EXPECT_EQ(leading_merge(ones).edge_count(), 1);
    std::vector<RootedTree> pair{path({0, 1}), star(2, {3, 4})};
    EXPECT_EQ(leading_merge(pair).edge_count(), 5);
    std::vector<RootedTree> rev{star(2, {3, 4}), path({0, 1})};
    EXPECT_EQ(merge(pair[0], pair[1]).edge_count(), 9);
    EXPECT_EQ(leading_merge(rev).edge_count(), 5);
    std::vector<RootedTree> one{path({0, 1, 2})};
    EXPECT_EQ(leading_merge(one), one[0]);
}

TEST(LeadingMerge, MatchesEnumeration) {
    Rng rng(8);
    for (int i = 0; i < 400; ++i) {
        std::size_t k = 1 + rng() % 3;
        std::vector<RootedTree> ts;
        Vertex next = 0;
        std::size_t left = 8;
        for (std::size_t j = 0; j < k && left > 0; ++j) {
            std::size_t n = 1 + rng() % std::min<std::size_t>(left, 4);
            ts.push_back(random_tree(n, rng, next));
            next += static_cast<Vertex>(n);
            left -= n;
        }
        auto m = leading_merge(ts);
        EXPECT_EQ(m.size(), static_cast<std::size_t>(next));
        EXPECT_EQ(m.edge_count(), enumerate_merges(ts));
    }
}

TEST(TopSubtree, Examples) {
    auto t = RootedTree::from_parents({{0, std::nullopt}, {1, 0}, {2, 1}, {3, 0}, {4, 3}});
    EXPECT_EQ(top_subtree(t, VertexSet{}), t);
    EXPECT_EQ(top_subtree(t, VertexSet{1, 2, 3, 4}), RootedTree::single(0));
    auto top = top_subtree(t, VertexSet{2});
    EXPECT_EQ(top.vertices(), (std::vector<Vertex>{0, 3, 4}));
    EXPECT_EQ(top.root(), 0);
}

TEST(DeleteVertices, LiftsChildren) {
    auto t = RootedTree::from_parents({{0, std::nullopt}, {1, 0}, {2, 1}, {3, 1}});
    VertexMask m(4);
    m.set(1);
    auto d = delete_vertices(t, m);
    EXPECT_EQ(d.children(0), (std::vector<Vertex>{2, 3}));
    m.set(0);
    EXPECT_THROW(delete_vertices(t, m), std::invalid_argument);
}

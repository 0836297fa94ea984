#pragma once

#include "tpfill/forest.hpp"

#include <random>

namespace tpfill {

using Rng = std::mt19937_64;

// Random rooted forest on ids first..first+n-1 (shuffled), bases left at the roots.
RootedForest random_forest(std::size_t n, Rng& rng, Vertex first = 0, double new_root = 0.15);
// Random tree with a random base.
RootedTree random_tree(std::size_t n, Rng& rng, Vertex first = 0);
Graph random_tp_graph(std::size_t n, Rng& rng);

struct OneTpSample {
    Graph g;
    Vertex v = -1;
};

// Connected graph whose last vertex v has a nonempty neighbourhood and g - v trivially perfect.
OneTpSample random_one_tp(std::size_t n, Rng& rng);

}  // namespace tpfill

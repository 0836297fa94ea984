#include "tpfill/generate.hpp"

#include <algorithm>
#include <numeric>

namespace tpfill {

RootedForest random_forest(std::size_t n, Rng& rng, Vertex first, double new_root) {
    std::vector<int> parent(n, -1);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (std::size_t i = 1; i < n; ++i)
        if (coin(rng) >= new_root) parent[i] = static_cast<int>(std::uniform_int_distribution<std::size_t>(0, i - 1)(rng));
    std::vector<Vertex> label(n);
    std::iota(label.begin(), label.end(), first);
    std::shuffle(label.begin(), label.end(), rng);

    RootedForest f;
    std::vector<int> tree_of(n, -1), local(n, -1);
    std::vector<std::vector<Vertex>> ids;
    std::vector<std::vector<int>> pars;
    for (std::size_t i = 0; i < n; ++i) {
        int t;
        if (parent[i] < 0) {
            t = static_cast<int>(ids.size());
            ids.emplace_back();
            pars.emplace_back();
            pars[t].push_back(-1);
        } else {
            t = tree_of[parent[i]];
            pars[t].push_back(local[parent[i]]);
        }
        tree_of[i] = t;
        local[i] = static_cast<int>(ids[t].size());
        ids[t].push_back(label[i]);
    }
    for (std::size_t t = 0; t < ids.size(); ++t)
        f.trees.push_back(RootedTree::from_raw(std::move(ids[t]), std::move(pars[t]), 0));
    return f;
}

RootedTree random_tree(std::size_t n, Rng& rng, Vertex first) {
    auto f = random_forest(n, rng, first, 0.0);
    RootedTree t = f.trees.at(0);
    auto pick = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    return t.with_base(t.vertices()[pick]);
}

Graph random_tp_graph(std::size_t n, Rng& rng) {
    return from_forest(random_forest(n, rng), n);
}

OneTpSample random_one_tp(std::size_t n, Rng& rng) {
    if (n < 2) throw std::invalid_argument("random_one_tp needs at least two vertices");
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    const double densities[] = {0.2, 0.4, 0.6};
    while (true) {
        Graph f = random_tp_graph(n - 1, rng);
        double p = densities[std::uniform_int_distribution<int>(0, 2)(rng)];
        std::vector<Edge> es = f.edges();
        auto v = static_cast<Vertex>(n - 1);
        bool any = false;
        for (Vertex u = 0; u < v; ++u)
            if (coin(rng) < p) {
                es.push_back({u, v});
                any = true;
            }
        if (!any) continue;
        Graph g(n, es);
        if (connected_components(g).size() == 1) return {std::move(g), v};
    }
}

}  // namespace tpfill

#include "tpfill/slim.hpp"

#include <algorithm>

namespace tpfill {

namespace {

bool hits(const RootedTree& t, const VertexMask& m) {
    for (Vertex v : t.vertices())
        if (static_cast<std::size_t>(v) < m.size() && m.test(v)) return true;
    return false;
}

}  // namespace

RootedTree slim_tree(const RootedTree& t, const VertexMask& marked) {
    std::vector<Vertex> in_s;
    for (Vertex v : t.vertices())
        if (static_cast<std::size_t>(v) < marked.size() && marked.test(v)) in_s.push_back(v);
    if (in_s.empty()) throw InvalidSlimProblem("slim: component " + std::to_string(t.root()) + " misses the marker set");

    Vertex root = t.root();
    if (!marked.test(root)) {
        std::sort(in_s.begin(), in_s.end());
        RootedTree chain;
        for (Vertex s : in_s) chain = merge(chain, RootedTree::single(s));
        return merge(chain, delete_vertices(t, marked)).with_base(in_s.back());
    }
    RootedTree top = top_subtree(t, marked);
    std::vector<RootedTree> rest;
    for (Vertex c : t.children(root)) {
        RootedTree sub = t.subtree(c);
        if (hits(sub, marked)) rest.push_back(sub.with_base(c));
    }
    if (rest.empty()) return top;
    VertexMask below = marked;
    below.reset(root);
    return merge(top, slim_forest(rest, below));
}

RootedTree slim_forest(std::span<const RootedTree> components, const VertexMask& marked) {
    std::vector<RootedTree> parts;
    parts.reserve(components.size());
    for (const auto& c : components) parts.push_back(slim_tree(c, marked));
    return leading_merge(parts);
}

void validate(const SlimProblem& p) {
    if (p.s.empty()) throw InvalidSlimProblem("slim: marker set is empty");
    for (Vertex v : p.s)
        if (v < 0 || static_cast<std::size_t>(v) >= p.f.order())
            throw InvalidSlimProblem("slim: marker " + std::to_string(v) + " is not a vertex");
    if (!is_trivially_perfect(p.f)) throw InvalidSlimProblem("slim: graph is not trivially perfect");
    for (const auto& comp : connected_components(p.f)) {
        bool meets = std::any_of(comp.begin(), comp.end(), [&](Vertex v) { return p.s.contains(v); });
        if (!meets) throw InvalidSlimProblem("slim: a component misses the marker set");
    }
}

SlimResult slim_tpc(const SlimProblem& p) {
    validate(p);
    RootedForest f = to_forest(p.f);
    VertexMask marked = p.s.mask(p.f.order());
    SlimResult r;
    r.tree = slim_forest(f.trees, marked);
    Graph h = from_forest(RootedForest{{r.tree}}, p.f.order());
    std::set_difference(h.edges().begin(), h.edges().end(), p.f.edges().begin(), p.f.edges().end(),
                        std::back_inserter(r.fill));
    return r;
}

bool is_slim_completion(const SlimProblem& p, const Graph& h) {
    if (h.order() != p.f.order()) throw InvalidSlimProblem("slim: vertex sets differ");
    for (const Edge& e : p.f.edges())
        if (!h.has_edge(e.u, e.v)) return false;
    if (connected_components(h).size() > 1 || !is_trivially_perfect(h)) return false;

    // Peel universal vertices, preferring markers; every marker must go within the first |S| peels.
    VertexMask alive(h.order());
    alive.set();
    VertexMask todo = p.s.mask(h.order());
    while (todo.any()) {
        Vertex pick = -1;
        std::size_t need = alive.count() - 1;
        for (auto v = todo.find_first(); v != VertexMask::npos; v = todo.find_next(v))
            if ((h.neighbor_mask(static_cast<Vertex>(v)) & alive).count() == need) {
                pick = static_cast<Vertex>(v);
                break;
            }
        if (pick < 0) return false;
        alive.reset(pick);
        todo.reset(pick);
        if (todo.none()) break;
        auto comps = connected_components(h, alive);
        auto it = std::find_if(comps.begin(), comps.end(), [&](const VertexMask& c) { return c.intersects(todo); });
        if ((*it & todo) != todo) return false;
        alive = *it;
    }
    return true;
}

}  // namespace tpfill

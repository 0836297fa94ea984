#include "tpfill/min_tpc.hpp"

#include "tpfill/slim.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tpfill {

NotOneAwayFromTP::NotOneAwayFromTP(Vertex v, Obstruction w)
    : std::invalid_argument("graph minus vertex " + std::to_string(v) + " is not trivially perfect: induced " +
                            (w.cycle ? "C4" : "P4") + " on " + std::to_string(w.vertices[0]) + " " +
                            std::to_string(w.vertices[1]) + " " + std::to_string(w.vertices[2]) + " " +
                            std::to_string(w.vertices[3])),
      witness_(w) {}

namespace {

using Word = std::uint64_t;

bool hits(const RootedTree& t, const VertexMask& m) {
    for (Vertex x : t.vertices())
        if (m.test(x)) return true;
    return false;
}

std::size_t count_in(const RootedTree& t, const VertexMask& m) {
    std::size_t c = 0;
    for (Vertex x : t.vertices()) c += m.test(x);
    return c;
}

std::vector<Edge> fill_of(const Graph& g, const RootedTree& t) {
    std::vector<Edge> out;
    const auto& ids = t.vertices();
    const auto& par = t.parent_index();
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (int a = par[i]; a >= 0; a = par[a])
            if (!g.has_edge(ids[i], ids[a])) out.push_back(make_edge(ids[i], ids[a]));
    std::sort(out.begin(), out.end());
    return out;
}

class Solver {
public:
    Solver(const Graph& g, Vertex v, MinTpcStats& st) : g_(g), v_(v), n_(g.order()), st_(st) {
        words_ = (n_ + 63) / 64;
        adj_.assign(n_ * words_, 0);
        for (std::size_t u = 0; u < n_; ++u)
            for (Vertex w : g.neighbors(static_cast<Vertex>(u))) adj_[u * words_ + w / 64] |= Word(1) << (w % 64);
        s_ = g.neighbor_mask(v);
    }

    RootedForest solve(const VertexMask& w) {
        if (auto it = memo_.find(w); it != memo_.end()) {
            ++st_.memo_hits;
            return it->second;
        }
        ++st_.calls;
        RootedForest out;
        auto r = recognize(g_, w);
        if (auto* f = std::get_if<RootedForest>(&r)) {
            out = std::move(*f);
        } else {
            for (const auto& c : connected_components(g_, w)) {
                if (c.test(v_))
                    out.trees.insert(out.trees.begin(), solve_connected(c));
                else
                    for (auto& t : forest_of(c).trees) out.trees.push_back(std::move(t));
            }
        }
        memo_.emplace(w, out);
        return out;
    }

    RootedForest forest_of(const VertexMask& w) const { return to_forest(g_, w, s_); }

    struct Pool {
        RootedTree best;
        std::int64_t edges = -1;
        std::vector<Edge> fill;  // filled lazily on ties
        bool fill_known = false;
    };

    RootedTree universal(const VertexMask& w) const {
        VertexMask rest = w;
        rest.reset(v_);
        auto f = forest_of(rest);
        return attach_below(RootedTree::single(v_), f.trees);
    }

    std::vector<RootedTree> upsilon_of(const RootedForest& f, std::size_t i) const {
        std::vector<RootedTree> out;
        if (i >= f.trees.size()) return out;
        const RootedTree& t = f.trees[i];
        out.push_back(top_subtree(t, s_));
        if (count_in(t, s_) == 1) out.push_back(slim_tree(t, s_));
        return out;
    }

    std::array<std::vector<RootedTree>, 2> find_top(const VertexMask& w, const RootedTree& r, Pool& q) {
        VertexMask rest = w - r.mask(n_);
        RootedTree best = merge(r, universal(rest));
        bool have = covers(w, best);
        VertexMask f = rest;
        f.reset(v_);
        auto forest = forest_of(f);
        std::array<std::vector<RootedTree>, 2> ups;
        for (std::size_t i = 0; i < std::min<std::size_t>(2, forest.trees.size()); ++i) {
            ups[i] = upsilon_of(forest, i);
            for (const auto& j : ups[i]) {
                RootedTree cand = merge({r, j, universal(rest - j.mask(n_))});
                if (!covers(w, cand)) continue;
                if (!have || cand.edge_count() < best.edge_count()) {
                    best = std::move(cand);
                    have = true;
                }
            }
        }
        add(q, w, std::move(best));
        return ups;
    }

    RootedTree solve_connected(const VertexMask& w);

private:
    // Edges of G among the tree's vertices are ancestor-related; with `outside`,
    // vertices off the base path also have no neighbours in outside.
    bool ancestry_ok(const RootedTree& t, const VertexMask* outside) const {
        std::size_t k = t.size();
        const auto& ids = t.vertices();
        const auto& par = t.parent_index();
        std::vector<Word> dmask(words_, 0), anc(k * words_, 0), rel(k * words_, 0);
        for (Vertex x : ids) dmask[x / 64] |= Word(1) << (x % 64);
        for (std::size_t i = 1; i < k; ++i) {
            int p = par[i];
            for (std::size_t b = 0; b < words_; ++b) anc[i * words_ + b] = anc[p * words_ + b];
            anc[i * words_ + ids[p] / 64] |= Word(1) << (ids[p] % 64);
        }
        for (std::size_t i = k; i-- > 1;) {
            int p = par[i];
            for (std::size_t b = 0; b < words_; ++b) rel[p * words_ + b] |= rel[i * words_ + b];
            rel[p * words_ + ids[i] / 64] |= Word(1) << (ids[i] % 64);
        }
        std::vector<char> on_path(k, 0);
        for (int i = t.base_index(); i >= 0; i = par[i]) on_path[i] = 1;
        std::vector<Word> out(words_, 0);
        if (outside) boost::to_block_range(*outside, out.begin());
        for (std::size_t i = 0; i < k; ++i) {
            const Word* a = &adj_[static_cast<std::size_t>(ids[i]) * words_];
            for (std::size_t b = 0; b < words_; ++b) {
                Word nb = a[b] & dmask[b];
                if (nb & ~(anc[i * words_ + b] | rel[i * words_ + b])) return false;
                if (outside && !on_path[i] && (a[b] & out[b] & ~dmask[b])) return false;
            }
        }
        return true;
    }

    bool covers(const VertexMask& w, const RootedTree& t) const {
        if (t.size() != w.count()) return false;
        for (Vertex x : t.vertices())
            if (!w.test(x)) return false;
        return ancestry_ok(t, nullptr);
    }

    bool valid_top(const VertexMask& w, const RootedTree& d) const {
        if (d.empty()) return false;
        for (Vertex x : d.vertices())
            if (!w.test(x)) return false;
        return ancestry_ok(d, &w);
    }

    void add(Pool& q, const VertexMask& w, RootedTree t) {
        ++st_.candidates;
        if (!covers(w, t)) {
            ++st_.rejected;
            return;
        }
        std::int64_t e = t.edge_count();
        if (q.edges >= 0 && e > q.edges) return;
        if (q.edges == e) {
            if (!q.fill_known) {
                q.fill = fill_of(g_, q.best);
                q.fill_known = true;
            }
            auto f = fill_of(g_, t);
            if (!(f < q.fill)) return;
            q.fill = std::move(f);
        } else {
            q.fill_known = false;
        }
        q.best = std::move(t);
        q.edges = e;
    }

    // <X, MinTPC(G - X, v)>; the child instance must respect the size budget.
    RootedTree complete_below(const VertexMask& w, const RootedTree& x) {
        VertexMask rest = w - x.mask(n_);
        std::size_t total = w.count(), child = rest.count();
        if (6 * child > 5 * total + 5)  // child > ceil(5 total / 6)
            throw RecursionBudgetExceeded("recursive call on " + std::to_string(child) + " of " +
                                          std::to_string(total) + " vertices");
        ++st_.recursions;
        st_.max_child_fraction = std::max(st_.max_child_fraction, double(child) / double(total));
        auto sub = solve(rest);
        return attach_below(x, sub.trees);
    }

    void add_below(Pool& q, const VertexMask& w, const RootedTree& x) {
        if (!valid_top(w, x)) {
            ++st_.rejected;
            return;
        }
        add(q, w, complete_below(w, x));
    }

    void add_universal_below(Pool& q, const VertexMask& w, const RootedTree& x) {
        add(q, w, merge(x, universal(w - x.mask(n_))));
    }

    // Every way of inserting c into the base path of z: above path[i], or below the base.
    std::vector<RootedTree> insertions(const RootedTree& z, const RootedTree& c) const {
        std::vector<RootedTree> out;
        auto path = z.base_path();
        for (std::size_t i = 0; i <= path.size(); ++i) {
            RootedTree pre = i > 0 ? segment(z, z.root(), path[i - 1]) : RootedTree();
            RootedTree post = i < path.size() ? z.subtree(path[i]) : RootedTree();
            out.push_back(merge({pre, c, post}));
        }
        return out;
    }

    const Graph& g_;
    Vertex v_;
    std::size_t n_;
    std::size_t words_ = 0;
    std::vector<Word> adj_;
    VertexMask s_;
    MinTpcStats& st_;
    std::map<VertexMask, RootedForest> memo_;
};

RootedTree Solver::solve_connected(const VertexMask& w) {
    if (is_trivially_perfect(g_, w)) return forest_of(w).trees.at(0);
    VertexMask fm = w;
    fm.reset(v_);
    const VertexMask& s = s_;
    RootedForest fs = forest_of(fm);
    const std::size_t nf = fm.count();
    Pool q;
    std::vector<RootedTree> gamma;

    auto ups = find_top(w, RootedTree(), q);
    const RootedTree& f1 = fs.trees.at(0);
    RootedTree top_f1 = top_subtree(f1, s);
    std::vector<RootedTree> bf;
    for (Vertex c : f1.children(f1.root())) {
        RootedTree sub = f1.subtree(c);
        if (hits(sub, s)) bf.push_back(sub.with_base(c));
    }
    std::stable_sort(bf.begin(), bf.end(), [](const RootedTree& a, const RootedTree& b) {
        return a.size() != b.size() ? a.size() > b.size() : a.root() < b.root();
    });
    const RootedTree* b1 = bf.empty() ? nullptr : &bf[0];

    if (3 * f1.size() < 2 * nf) {
        for (const auto& d2 : ups[1]) {
            if (b1) {
                gamma.push_back(merge({top_f1, top_subtree(*b1, s), d2}));
                if (count_in(*b1, s) == 1) gamma.push_back(merge({top_f1, slim_tree(*b1, s), d2}));
            }
            for (const auto& d1 : ups[0]) {
                RootedTree a = merge(d2, d1), b = merge(d1, d2);
                bool va = valid_top(w, a), vb = valid_top(w, b);
                RootedTree l;
                if (va && vb)
                    l = b.edge_count() < a.edge_count() ? b : a;
                else if (va || vb)
                    l = va ? a : b;
                else
                    l = b.edge_count() < a.edge_count() ? b : a;
                add_universal_below(q, w, l);
                if (d1.size() == f1.size())
                    gamma.push_back(l);
                else if (6 * l.size() >= nf)
                    add_below(q, w, l);
            }
        }
        std::size_t s_f1 = count_in(f1, s);
        if (s_f1 == 1) {
            gamma.push_back(slim_tree(f1, s));
            if (b1) gamma.push_back(merge(top_f1, slim_tree(*b1, s)));
        } else if (s_f1 == 2) {
            gamma.push_back(slim_tree(f1, s));
        }
        for (const auto& t : gamma)
            if (3 * t.size() >= nf) add_below(q, w, t);
        find_top(w, top_f1, q);
        if (b1) find_top(w, merge(top_f1, top_subtree(*b1, s)), q);
        return q.best;
    }

    // The largest tree holds at least two thirds of F: grow R by stacking tops.
    struct Gamma1Item {
        RootedTree m;
        std::size_t b2_size;
        std::size_t r_levels;
    };
    RootedTree r;
    std::vector<Gamma1Item> gamma1;
    std::vector<RootedTree> gamma2;
    while (true) {
        VertexMask bm = fm - r.mask(n_);
        RootedForest bfs = forest_of(bm);
        if (!(3 * r.size() < nf && !bfs.trees.empty() && 3 * bfs.trees[0].size() >= bm.count())) break;
        ups = find_top(w, r, q);
        if (bfs.trees.size() >= 2) {
            Vertex b2 = bfs.trees[1].root();
            for (const auto& y : ups[1]) {
                RootedTree ry = merge(r, y);
                if (3 * ry.size() < nf) continue;
                bool keep = false;
                if (!r.empty() && f1.contains(b2) && f1.parent(b2) == std::optional<Vertex>(r.base())) {
                    keep = true;
                } else {
                    auto path = r.base_path();
                    RootedTree shorter = path.size() >= 2 ? segment(r, r.root(), path[path.size() - 2]) : RootedTree();
                    keep = 3 * (shorter.size() + y.size()) < nf;
                }
                if (keep) gamma1.push_back({ry, bfs.trees[1].size(), r.empty() ? 0 : r.base_path().size()});
            }
        }
        const RootedTree& top_b = bfs.trees[0];
        if (!s.test(top_b.root()) && hits(top_b, s)) {
            RootedTree t = slim_tree(top_b, s);
            if (r.size() + 3 * t.size() >= nf) gamma2.push_back(merge(r, t));
        }
        r = merge(r, top_subtree(top_b, s));
    }

    auto r_path = r.empty() ? std::vector<Vertex>{} : r.base_path();
    for (const auto& item : gamma1) {
        std::set<std::size_t> larger;
        for (const auto& other : gamma1)
            if (other.b2_size > item.b2_size) larger.insert(other.b2_size);
        if (larger.size() >= 2) {
            auto start = static_cast<std::ptrdiff_t>(item.r_levels);
            for (std::ptrdiff_t end = start - 1; end < static_cast<std::ptrdiff_t>(r_path.size()); ++end) {
                RootedTree x = end < start ? item.m : merge(item.m, segment(r, r_path[start], r_path[end]));
                if (valid_top(w, x)) add_universal_below(q, w, x);
            }
        } else {
            add_below(q, w, item.m);
        }
    }

    // Among equal-size members keep the fewest edges, and also the one that is cheapest
    // once the remaining vertices are hung below its base.
    const std::int64_t nw = static_cast<std::int64_t>(w.count());
    auto pick = [&](const std::vector<const RootedTree*>& group) {
        const RootedTree* a = group[0];
        const RootedTree* b = group[0];
        auto proxy = [&](const RootedTree* t) {
            return t->edge_count() + static_cast<std::int64_t>(t->level(t->base())) * (nw - static_cast<std::int64_t>(t->size()));
        };
        for (const auto* t : group) {
            if (t->edge_count() < a->edge_count()) a = t;
            if (proxy(t) < proxy(b)) b = t;
        }
        gamma.push_back(*a);
        if (b != a) gamma.push_back(*b);
    };
    if (!gamma2.empty()) {
        std::size_t m3 = gamma2[0].size();
        for (const auto& t : gamma2) m3 = std::min(m3, t.size());
        std::vector<const RootedTree*> g3, g4;
        for (const auto& t : gamma2) (t.size() == m3 ? g3 : g4).push_back(&t);
        pick(g3);
        if (!g4.empty()) {
            std::size_t m4 = g4[0]->size();
            for (const auto* t : g4) m4 = std::min(m4, t->size());
            std::vector<const RootedTree*> g4min;
            for (const auto* t : g4)
                if (t->size() == m4) g4min.push_back(t);
            pick(g4min);
        }
    }

    if (3 * r.size() >= nf) {
        gamma.push_back(r);
    } else {
        if (!r.empty()) add_universal_below(q, w, r);
        for (const auto& c : ups[1])
            for (auto& d : insertions(r, c))
                if (valid_top(w, d)) add_universal_below(q, w, d);
    }

    for (const auto& z : gamma) {
        if (!valid_top(w, z)) {
            ++st_.rejected;
            continue;
        }
        add(q, w, complete_below(w, z));
        RootedForest rf = forest_of(fm - z.mask(n_));
        for (const auto& c : upsilon_of(rf, 1)) {
            const RootedTree* best = nullptr;
            auto options = insertions(z, c);
            for (const auto& d : options)
                if (valid_top(w, d) && (!best || d.edge_count() < best->edge_count())) best = &d;
            if (best) add(q, w, complete_below(w, *best));
        }
    }
    return q.best;
}

}  // namespace

void check_instance(const Graph& g, Vertex v) {
    if (v < 0 || static_cast<std::size_t>(v) >= g.order()) throw GraphError("apex vertex out of range");
    VertexMask f(g.order());
    f.set();
    f.reset(v);
    auto r = recognize(g, f);
    if (auto* o = std::get_if<Obstruction>(&r)) throw NotOneAwayFromTP(v, *o);
}

namespace {

Completion finish(const Graph& g, std::vector<Edge> fill) {
    std::sort(fill.begin(), fill.end());
    Completion c;
    Graph h = add_edges(g, fill);
    auto r = recognize(h);
    c.verified = std::holds_alternative<RootedForest>(r);
    if (c.verified) c.forest = std::get<RootedForest>(std::move(r));
    c.fill = std::move(fill);
    return c;
}

VertexMask component_of(const Graph& g, Vertex v) {
    VertexMask all(g.order());
    all.set();
    for (auto& c : connected_components(g, all))
        if (c.test(v)) return c;
    throw std::logic_error("vertex without component");
}

}  // namespace

Completion universal_completion(const Graph& g, Vertex v) {
    check_instance(g, v);
    std::vector<Edge> fill;
    for (std::size_t u = 0; u < g.order(); ++u)
        if (static_cast<Vertex>(u) != v && !g.has_edge(v, static_cast<Vertex>(u)))
            fill.push_back(make_edge(v, static_cast<Vertex>(u)));
    return finish(g, std::move(fill));
}

std::vector<RootedTree> upsilon(const Graph& g, Vertex v, int i) {
    check_instance(g, v);
    if (i != 1 && i != 2) throw std::out_of_range("upsilon index must be 1 or 2");
    VertexMask f(g.order());
    f.set();
    f.reset(v);
    auto forest = to_forest(g, f);
    if (static_cast<std::size_t>(i) > forest.trees.size()) throw std::out_of_range("upsilon index exceeds component count");
    MinTpcStats st;
    Solver solver(g, v, st);
    return solver.upsilon_of(forest, static_cast<std::size_t>(i - 1));
}

FindTopResult find_top(const Graph& g, Vertex v, const RootedTree& r) {
    check_instance(g, v);
    MinTpcStats st;
    Solver solver(g, v, st);
    Solver::Pool q;
    VertexMask w = component_of(g, v);
    FindTopResult out;
    out.upsilon = solver.find_top(w, r, q);
    if (q.edges < 0) throw std::invalid_argument("find_top: partial tree admits no completion");
    out.best = q.best;
    out.fill = q.edges - static_cast<std::int64_t>(edges_within(g, w));
    return out;
}

Completion min_tpc(const Graph& g, Vertex v, MinTpcStats* stats) {
    check_instance(g, v);
    MinTpcStats local;
    MinTpcStats& st = stats ? *stats : local;
    Solver solver(g, v, st);
    VertexMask all(g.order());
    all.set();
    RootedForest f = solver.solve(all);
    std::vector<Edge> fill;
    for (const auto& t : f.trees) {
        auto part = fill_of(g, t);
        fill.insert(fill.end(), part.begin(), part.end());
    }
    return finish(g, std::move(fill));
}

bool verify_tp_completion(const Graph& g, std::span<const Edge> fill) {
    return is_trivially_perfect(add_edges(g, fill));
}

}  // namespace tpfill

#include "tpfill/forest.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace tpfill {

RootedTree RootedTree::single(Vertex v) { return RootedTree({v}, {-1}, 0); }

RootedTree RootedTree::from_raw(std::vector<Vertex> ids, std::vector<int> par, int base) {
    if (ids.size() != par.size()) throw std::invalid_argument("tree: ids and parents differ in length");
    if (ids.empty()) {
        if (base != -1) throw std::invalid_argument("tree: empty tree with a base");
        return RootedTree();
    }
    if (par[0] != -1) throw std::invalid_argument("tree: first node must be the root");
    for (std::size_t i = 1; i < par.size(); ++i)
        if (par[i] < 0 || static_cast<std::size_t>(par[i]) >= i)
            throw std::invalid_argument("tree: parent must precede child");
    if (base < 0 || static_cast<std::size_t>(base) >= ids.size()) throw std::invalid_argument("tree: bad base");
    std::vector<Vertex> sorted = ids;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("tree: repeated vertex");
    return RootedTree(std::move(ids), std::move(par), base);
}

RootedTree RootedTree::from_parents(const std::vector<std::pair<Vertex, std::optional<Vertex>>>& nodes,
                                    std::optional<Vertex> base) {
    std::vector<Vertex> ids;
    std::vector<int> par;
    for (const auto& [v, p] : nodes) {
        if (ids.empty() != !p.has_value()) throw std::invalid_argument("tree: exactly the first node is the root");
        int pi = -1;
        if (p) {
            auto it = std::find(ids.begin(), ids.end(), *p);
            if (it == ids.end()) throw std::invalid_argument("tree: parent listed after child");
            pi = static_cast<int>(it - ids.begin());
        }
        ids.push_back(v);
        par.push_back(pi);
    }
    int b = ids.empty() ? -1 : 0;
    if (base) {
        auto it = std::find(ids.begin(), ids.end(), *base);
        if (it == ids.end()) throw std::invalid_argument("tree: base not in tree");
        b = static_cast<int>(it - ids.begin());
    }
    return from_raw(std::move(ids), std::move(par), b);
}

int RootedTree::find(Vertex v) const {
    for (std::size_t i = 0; i < ids_.size(); ++i)
        if (ids_[i] == v) return static_cast<int>(i);
    return -1;
}

namespace {
int require(const RootedTree& t, Vertex v) {
    int i = t.find(v);
    if (i < 0) throw std::out_of_range("vertex " + std::to_string(v) + " not in tree");
    return i;
}
}  // namespace

Vertex RootedTree::root() const {
    if (empty()) throw std::logic_error("empty tree has no root");
    return ids_[0];
}

Vertex RootedTree::base() const {
    if (empty()) throw std::logic_error("empty tree has no base");
    return ids_[base_];
}

std::optional<Vertex> RootedTree::parent(Vertex v) const {
    int i = require(*this, v);
    if (par_[i] < 0) return std::nullopt;
    return ids_[par_[i]];
}

std::vector<Vertex> RootedTree::children(Vertex v) const {
    int i = require(*this, v);
    std::vector<Vertex> out;
    for (std::size_t j = i + 1; j < ids_.size(); ++j)
        if (par_[j] == i) out.push_back(ids_[j]);
    return out;
}

std::size_t RootedTree::level(Vertex v) const {
    std::size_t l = 1;
    for (int i = par_[require(*this, v)]; i >= 0; i = par_[i]) ++l;
    return l;
}

std::vector<Vertex> RootedTree::base_path() const {
    std::vector<Vertex> p;
    for (int i = base_; i >= 0; i = par_[i]) p.push_back(ids_[i]);
    std::reverse(p.begin(), p.end());
    return p;
}

std::int64_t RootedTree::edge_count() const {
    std::vector<std::int64_t> depth(ids_.size(), 0);
    std::int64_t total = 0;
    for (std::size_t i = 1; i < ids_.size(); ++i) {
        depth[i] = depth[par_[i]] + 1;
        total += depth[i];
    }
    return total;
}

bool RootedTree::is_ancestor(Vertex a, Vertex d) const {
    int ia = require(*this, a);
    for (int i = require(*this, d); i >= 0; i = par_[i])
        if (i == ia) return true;
    return false;
}

std::vector<char> RootedTree::inside(int u) const {
    std::vector<char> in(ids_.size(), 0);
    in[u] = 1;
    for (std::size_t i = u + 1; i < ids_.size(); ++i) in[i] = in[par_[i]];
    return in;
}

RootedTree RootedTree::restrict(const std::vector<char>& keep, int base) const {
    std::vector<int> local(ids_.size(), -1);
    std::vector<Vertex> ids;
    std::vector<int> par;
    for (std::size_t i = 0; i < ids_.size(); ++i) {
        if (!keep[i]) continue;
        local[i] = static_cast<int>(ids.size());
        ids.push_back(ids_[i]);
        par.push_back(par_[i] >= 0 ? local[par_[i]] : -1);
    }
    return RootedTree(std::move(ids), std::move(par), local[base]);
}

RootedTree RootedTree::subtree(Vertex u) const {
    int iu = require(*this, u);
    auto keep = inside(iu);
    return restrict(keep, keep[base_] ? base_ : iu);
}

RootedTree RootedTree::with_base(Vertex b) const {
    RootedTree t = *this;
    t.base_ = require(*this, b);
    return t;
}

RootedTree RootedTree::without_subtree(Vertex x) const {
    int ix = require(*this, x);
    if (ix == 0) throw std::invalid_argument("cannot remove the root subtree");
    auto keep = inside(ix);
    for (auto& k : keep) k = !k;
    return restrict(keep, keep[base_] ? base_ : par_[ix]);
}

VertexMask RootedTree::mask(std::size_t order) const {
    VertexMask m(order);
    for (Vertex v : ids_) m.set(static_cast<std::size_t>(v));
    return m;
}

RootedTree segment(const RootedTree& t, Vertex top, Vertex bottom) {
    if (!t.is_ancestor(top, bottom)) throw std::invalid_argument("segment: top is not an ancestor of bottom");
    auto path = t.base_path();
    auto it = std::find(path.begin(), path.end(), bottom);
    if (it == path.end()) throw std::invalid_argument("segment: bottom is not on the base path");
    RootedTree s = t.subtree(top);
    if (bottom == t.base()) return s;
    return s.without_subtree(*(it + 1)).with_base(bottom);
}

RootedTree merge(const RootedTree& upper, const RootedTree& lower) {
    if (upper.empty()) return lower;
    if (lower.empty()) return upper;
    std::vector<Vertex> ids = upper.vertices();
    std::vector<int> par = upper.parent_index();
    int shift = static_cast<int>(ids.size());
    ids.insert(ids.end(), lower.vertices().begin(), lower.vertices().end());
    for (int p : lower.parent_index()) par.push_back(p < 0 ? upper.base_index() : p + shift);
    return RootedTree::from_raw(std::move(ids), std::move(par), lower.base_index() + shift);
}

RootedTree merge(std::span<const RootedTree> chain) {
    RootedTree out;
    for (const auto& t : chain) out = merge(out, t);
    return out;
}

RootedTree merge(std::initializer_list<RootedTree> chain) {
    return merge(std::span<const RootedTree>(chain.begin(), chain.size()));
}

RootedTree attach_below(const RootedTree& upper, std::span<const RootedTree> lower) {
    if (upper.empty()) {
        if (lower.empty()) return RootedTree();
        if (lower.size() == 1) return lower[0];
        throw std::invalid_argument("attach_below: several trees below an empty tree");
    }
    std::vector<Vertex> ids = upper.vertices();
    std::vector<int> par = upper.parent_index();
    for (const auto& t : lower) {
        int shift = static_cast<int>(ids.size());
        ids.insert(ids.end(), t.vertices().begin(), t.vertices().end());
        for (int p : t.parent_index()) par.push_back(p < 0 ? upper.base_index() : p + shift);
    }
    return RootedTree::from_raw(std::move(ids), std::move(par), upper.base_index());
}

std::vector<std::size_t> segment_sizes(const RootedTree& t) {
    if (t.empty()) return {};
    const auto& par = t.parent_index();
    std::vector<std::size_t> sz(t.size(), 1);
    for (std::size_t i = t.size(); i-- > 1;) sz[par[i]] += sz[i];
    std::vector<int> path;
    for (int i = t.base_index(); i >= 0; i = par[i]) path.push_back(i);
    std::reverse(path.begin(), path.end());
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < path.size(); ++k)
        out.push_back(sz[path[k]] - (k + 1 < path.size() ? sz[path[k + 1]] : 0));
    return out;
}

Rational average(const RootedTree& t, std::size_t first_level, std::size_t last_level) {
    auto sz = segment_sizes(t);
    if (first_level < 1 || first_level > last_level || last_level > sz.size())
        throw std::out_of_range("average: level range outside the base path");
    std::int64_t sum = 0;
    for (std::size_t l = first_level; l <= last_level; ++l) sum += static_cast<std::int64_t>(sz[l - 1]);
    return Rational(sum, static_cast<std::int64_t>(last_level - first_level + 1));
}

namespace {

std::pair<std::size_t, Rational> leading_of(const std::vector<std::size_t>& sz) {
    std::size_t best_i = 0;
    Rational best(0);
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < sz.size(); ++i) {
        acc += static_cast<std::int64_t>(sz[i]);
        Rational a(acc, static_cast<std::int64_t>(i + 1));
        if (i == 0 || a > best) {
            best = a;
            best_i = i;
        }
    }
    return {best_i + 1, best};
}

}  // namespace

std::size_t leading_subtree(const RootedTree& t) {
    if (t.empty()) throw std::invalid_argument("leading_subtree: empty tree");
    return leading_of(segment_sizes(t)).first;
}

RootedTree leading_merge(std::span<const RootedTree> trees) {
    std::vector<RootedTree> pool;
    for (const auto& t : trees)
        if (!t.empty()) pool.push_back(t);
    RootedTree out;
    while (!pool.empty()) {
        std::size_t pick = 0, pick_level = 0;
        Rational pick_avg(0);
        for (std::size_t k = 0; k < pool.size(); ++k) {
            auto [level, avg] = leading_of(segment_sizes(pool[k]));
            if (k == 0 || avg > pick_avg || (avg == pick_avg && pool[k].root() < pool[pick].root())) {
                pick = k;
                pick_level = level;
                pick_avg = avg;
            }
        }
        RootedTree t = std::move(pool[pick]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
        auto path = t.base_path();
        out = merge(out, segment(t, t.root(), path[pick_level - 1]));
        if (pick_level < path.size()) pool.push_back(t.subtree(path[pick_level]));
    }
    return out;
}

RootedTree top_subtree(const RootedTree& t, const VertexSet& marked) {
    VertexMask m;
    for (Vertex v : marked) {
        if (static_cast<std::size_t>(v) >= m.size()) m.resize(static_cast<std::size_t>(v) + 1);
        m.set(static_cast<std::size_t>(v));
    }
    return top_subtree(t, m);
}

namespace {
bool marked_in(const VertexMask& m, Vertex v) {
    return static_cast<std::size_t>(v) < m.size() && m.test(static_cast<std::size_t>(v));
}
}  // namespace

RootedTree top_subtree(const RootedTree& t, const VertexMask& marked) {
    if (t.empty()) return t;
    const auto& par = t.parent_index();
    const auto& ids = t.vertices();
    std::size_t n = t.size();
    std::vector<char> hit(n, 0);
    for (std::size_t i = n; i-- > 0;) {
        if (marked_in(marked, ids[i])) hit[i] = 1;
        if (i > 0 && hit[i]) hit[par[i]] = 1;
    }
    std::vector<int> top(n, 0);
    std::vector<Vertex> kid;
    std::vector<int> kpar, local(n, -1);
    local[0] = 0;
    kid.push_back(ids[0]);
    kpar.push_back(-1);
    for (std::size_t i = 1; i < n; ++i) {
        top[i] = par[i] == 0 ? static_cast<int>(i) : top[par[i]];
        if (hit[top[i]]) continue;
        local[i] = static_cast<int>(kid.size());
        kid.push_back(ids[i]);
        kpar.push_back(local[par[i]]);
    }
    return RootedTree::from_raw(std::move(kid), std::move(kpar), 0);
}

RootedTree delete_vertices(const RootedTree& t, const VertexMask& marked) {
    if (t.empty()) return t;
    const auto& par = t.parent_index();
    const auto& ids = t.vertices();
    if (marked_in(marked, ids[0])) throw std::invalid_argument("delete_vertices: root is marked");
    std::size_t n = t.size();
    std::vector<int> local(n, -1), up(n, -1);
    std::vector<Vertex> kid;
    std::vector<int> kpar;
    for (std::size_t i = 0; i < n; ++i) {
        int anchor = i == 0 ? -1 : (local[par[i]] >= 0 ? local[par[i]] : up[par[i]]);
        if (marked_in(marked, ids[i])) {
            up[i] = anchor;
            continue;
        }
        local[i] = static_cast<int>(kid.size());
        kid.push_back(ids[i]);
        kpar.push_back(anchor);
    }
    return RootedTree::from_raw(std::move(kid), std::move(kpar), 0);
}

std::size_t RootedForest::size() const {
    std::size_t s = 0;
    for (const auto& t : trees) s += t.size();
    return s;
}

std::int64_t RootedForest::edge_count() const {
    std::int64_t e = 0;
    for (const auto& t : trees) e += t.edge_count();
    return e;
}

std::int64_t edge_count(const RootedForest& f) { return f.edge_count(); }

NotTriviallyPerfect::NotTriviallyPerfect(Obstruction w)
    : std::runtime_error(std::string("graph is not trivially perfect: induced ") + (w.cycle ? "C4" : "P4") + " on " +
                         std::to_string(w.vertices[0]) + " " + std::to_string(w.vertices[1]) + " " +
                         std::to_string(w.vertices[2]) + " " + std::to_string(w.vertices[3])),
      witness_(w) {}

std::variant<RootedForest, Obstruction> recognize(const Graph& g, const VertexMask& active) {
    return recognize(g, active, VertexMask(g.order()));
}

std::variant<RootedForest, Obstruction> recognize(const Graph& g, const VertexMask& active, const VertexMask& prefer) {
    std::vector<Vertex> order;
    std::vector<std::size_t> deg(g.order(), 0);
    for (auto u = active.find_first(); u != VertexMask::npos; u = active.find_next(u)) {
        order.push_back(static_cast<Vertex>(u));
        deg[u] = (g.neighbor_mask(static_cast<Vertex>(u)) & active).count();
    }
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        if (deg[a] != deg[b]) return deg[a] > deg[b];
        if (prefer.test(a) != prefer.test(b)) return prefer.test(a);
        return a < b;
    });
    std::vector<int> pos(g.order(), -1);
    for (std::size_t k = 0; k < order.size(); ++k) pos[order[k]] = static_cast<int>(k);

    // Parent is the latest earlier neighbour; N[v] must then sit inside N[parent].
    std::vector<Vertex> parent(g.order(), -1);
    for (std::size_t k = 0; k < order.size(); ++k) {
        Vertex v = order[k];
        Vertex p = -1;
        for (Vertex w : g.neighbors(v))
            if (active.test(w) && pos[w] < static_cast<int>(k) && (p < 0 || pos[w] > pos[p])) p = w;
        if (p < 0) continue;
        parent[v] = p;
        const VertexMask& np = g.neighbor_mask(p);
        for (Vertex x : g.neighbors(v)) {
            if (!active.test(x) || x == p || np.test(x)) continue;
            const VertexMask& nv = g.neighbor_mask(v);
            for (Vertex y : g.neighbors(p)) {
                if (!active.test(y) || y == v || nv.test(y)) continue;
                Obstruction o;
                o.vertices = {y, p, v, x};
                o.cycle = g.has_edge(x, y);
                return o;
            }
            throw std::logic_error("recognize: degree order violated");
        }
    }

    std::vector<std::vector<Vertex>> kids(g.order());
    std::vector<std::size_t> sub(g.order(), 1);
    for (std::size_t k = order.size(); k-- > 0;) {
        Vertex v = order[k];
        if (parent[v] >= 0) {
            sub[parent[v]] += sub[v];
            kids[parent[v]].push_back(v);
        }
    }
    auto by_size = [&](Vertex a, Vertex b) { return sub[a] != sub[b] ? sub[a] > sub[b] : a < b; };
    std::vector<Vertex> roots;
    for (Vertex v : order)
        if (parent[v] < 0) roots.push_back(v);
    std::sort(roots.begin(), roots.end(), by_size);

    RootedForest f;
    for (Vertex r : roots) {
        std::vector<Vertex> ids;
        std::vector<int> par;
        std::vector<std::pair<Vertex, int>> stack{{r, -1}};
        while (!stack.empty()) {
            auto [v, p] = stack.back();
            stack.pop_back();
            int me = static_cast<int>(ids.size());
            ids.push_back(v);
            par.push_back(p);
            auto& ks = kids[v];
            std::sort(ks.begin(), ks.end(), by_size);
            for (auto it = ks.rbegin(); it != ks.rend(); ++it) stack.push_back({*it, me});
        }
        f.trees.push_back(RootedTree::from_raw(std::move(ids), std::move(par), 0));
    }
    return f;
}

std::variant<RootedForest, Obstruction> recognize(const Graph& g) {
    VertexMask all(g.order());
    all.set();
    return recognize(g, all);
}

bool is_trivially_perfect(const Graph& g) { return std::holds_alternative<RootedForest>(recognize(g)); }

bool is_trivially_perfect(const Graph& g, const VertexMask& active) {
    return std::holds_alternative<RootedForest>(recognize(g, active));
}

RootedForest to_forest(const Graph& g, const VertexMask& active) {
    auto r = recognize(g, active);
    if (auto* o = std::get_if<Obstruction>(&r)) throw NotTriviallyPerfect(*o);
    return std::get<RootedForest>(std::move(r));
}

RootedForest to_forest(const Graph& g, const VertexMask& active, const VertexMask& prefer) {
    auto r = recognize(g, active, prefer);
    if (auto* o = std::get_if<Obstruction>(&r)) throw NotTriviallyPerfect(*o);
    return std::get<RootedForest>(std::move(r));
}

RootedForest to_forest(const Graph& g) {
    VertexMask all(g.order());
    all.set();
    return to_forest(g, all);
}

Graph from_forest(const RootedForest& f, std::size_t order) {
    std::vector<Edge> es;
    std::vector<char> seen(order, 0);
    for (const auto& t : f.trees) {
        const auto& ids = t.vertices();
        const auto& par = t.parent_index();
        for (std::size_t i = 0; i < ids.size(); ++i) {
            if (ids[i] < 0 || static_cast<std::size_t>(ids[i]) >= order)
                throw GraphError("forest vertex out of range: " + std::to_string(ids[i]));
            if (seen[ids[i]]) throw GraphError("forest repeats vertex " + std::to_string(ids[i]));
            seen[ids[i]] = 1;
            for (int a = par[i]; a >= 0; a = par[a]) es.push_back(make_edge(ids[i], ids[a]));
        }
    }
    return Graph(order, es);
}

Graph from_forest(const RootedForest& f) {
    Graph g = from_forest(f, f.size());
    return g;
}

void write_forest(std::ostream& out, const RootedForest& f) {
    for (const auto& t : f.trees) {
        const auto& ids = t.vertices();
        const auto& par = t.parent_index();
        for (std::size_t i = 0; i < ids.size(); ++i) {
            out << ids[i] << ' ';
            if (par[i] < 0)
                out << '-';
            else
                out << ids[par[i]];
            out << '\n';
        }
        out << "base " << t.base() << '\n';
    }
}

RootedForest read_forest(std::istream& in) {
    RootedForest f;
    std::vector<std::pair<Vertex, std::optional<Vertex>>> nodes;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto p = line.find_first_not_of(" \t\r");
        if (p == std::string::npos || line[p] == '#') continue;
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a >> b) || (ls >> extra)) throw ParseError(lineno, "expected two fields");
        try {
            if (a == "base") {
                f.trees.push_back(RootedTree::from_parents(nodes, static_cast<Vertex>(std::stol(b))));
                nodes.clear();
            } else {
                std::optional<Vertex> parent;
                if (b != "-") parent = static_cast<Vertex>(std::stol(b));
                nodes.emplace_back(static_cast<Vertex>(std::stol(a)), parent);
            }
        } catch (const std::logic_error& e) {
            throw ParseError(lineno, e.what());
        }
    }
    if (!nodes.empty()) throw ParseError(lineno, "tree without a base line");
    return f;
}

}  // namespace tpfill

#include "tpfill/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <functional>
#include <map>
#include <string>

namespace tpfill {

OracleTooLarge::OracleTooLarge(std::size_t n, std::size_t cap)
    : std::runtime_error("oracle skipped: " + std::to_string(n) + " vertices exceed cap " + std::to_string(cap)) {}

FillCapExceeded::FillCapExceeded(std::size_t lower_bound, std::uint64_t explored)
    : std::runtime_error("no completion within the fill cap; minimum fill is at least " + std::to_string(lower_bound)),
      lower_bound_(lower_bound),
      explored_(explored) {}

std::size_t default_oracle_cap() {
    if (const char* env = std::getenv("TPFILL_ORACLE_CAP")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return 8;
}

namespace {

using Mask = std::uint64_t;

std::vector<Mask> closed_rows(const Graph& g) {
    std::vector<Mask> rows(g.order());
    for (std::size_t u = 0; u < g.order(); ++u) {
        rows[u] = Mask(1) << u;
        for (Vertex w : g.neighbors(static_cast<Vertex>(u))) rows[u] |= Mask(1) << w;
    }
    return rows;
}

bool tp_rows(const std::vector<Mask>& rows) {
    for (std::size_t u = 0; u < rows.size(); ++u)
        for (Mask m = rows[u] & ~(Mask(1) << u); m; m &= m - 1) {
            auto w = static_cast<std::size_t>(std::countr_zero(m));
            Mask both = rows[u] & rows[w];
            if (both != rows[u] && both != rows[w]) return false;
        }
    return true;
}

bool chordal_rows(const std::vector<Mask>& rows) {
    Mask alive = rows.empty() ? 0 : (rows.size() == 64 ? ~Mask(0) : (Mask(1) << rows.size()) - 1);
    bool progress = true;
    while (alive && progress) {
        progress = false;
        for (Mask m = alive; m; m &= m - 1) {
            auto u = static_cast<std::size_t>(std::countr_zero(m));
            Mask nb = rows[u] & alive & ~(Mask(1) << u);
            bool simplicial = true;
            for (Mask x = nb; x && simplicial; x &= x - 1) {
                auto w = static_cast<std::size_t>(std::countr_zero(x));
                if ((rows[w] & nb) != nb) simplicial = false;
            }
            if (simplicial) {
                alive &= ~(Mask(1) << u);
                progress = true;
            }
        }
    }
    return alive == 0;
}

bool connected_rows(const std::vector<Mask>& rows) {
    if (rows.empty()) return true;
    Mask seen = 1, frontier = 1;
    while (frontier) {
        Mask next = 0;
        for (Mask m = frontier; m; m &= m - 1) next |= rows[std::countr_zero(m)];
        frontier = next & ~seen;
        seen |= next;
    }
    return std::popcount(seen) == static_cast<int>(rows.size());
}

void toggle(std::vector<Mask>& rows, const Edge& e) {
    rows[e.u] ^= Mask(1) << e.v;
    rows[e.v] ^= Mask(1) << e.u;
}

// Visits the size-k subsets of `pool` in lexicographic order until `hit` returns true.
bool first_combination(std::vector<Mask>& rows, const std::vector<Edge>& pool, std::size_t k, std::uint64_t& explored,
                       const std::function<bool(const std::vector<Mask>&)>& hit, std::vector<Edge>& witness) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    if (k > pool.size()) return false;
    while (true) {
        for (auto i : idx) toggle(rows, pool[i]);
        ++explored;
        bool ok = hit(rows);
        for (auto i : idx) toggle(rows, pool[i]);
        if (ok) {
            witness.clear();
            for (auto i : idx) witness.push_back(pool[i]);
            return true;
        }
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == pool.size() - k + i - 1) --i;
        if (i == 0) return false;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

FillSearchResult brute_min_fill(const Graph& g, FillTarget target, std::size_t max_fill, std::size_t vertex_cap) {
    if (g.order() > vertex_cap || g.order() > 64) throw OracleTooLarge(g.order(), std::min<std::size_t>(vertex_cap, 64));
    auto rows = closed_rows(g);
    auto pool = g.non_edges();
    std::function<bool(const std::vector<Mask>&)> hit =
        target == FillTarget::TriviallyPerfect ? std::function<bool(const std::vector<Mask>&)>(tp_rows) : chordal_rows;
    FillSearchResult r;
    for (std::size_t k = 0; k <= std::min(max_fill, pool.size()); ++k) {
        if (first_combination(rows, pool, k, r.explored, hit, r.witness)) {
            r.min_fill = k;
            return r;
        }
    }
    throw FillCapExceeded(std::min(max_fill, pool.size()) + 1, r.explored);
}

std::optional<Obstruction> find_p4_or_c4(const Graph& g) {
    const auto n = static_cast<Vertex>(g.order());
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c)
                for (Vertex d = c + 1; d < n; ++d) {
                    std::array<Vertex, 4> q{a, b, c, d};
                    int deg[4] = {0, 0, 0, 0}, m = 0;
                    for (int i = 0; i < 4; ++i)
                        for (int j = i + 1; j < 4; ++j)
                            if (g.has_edge(q[i], q[j])) ++deg[i], ++deg[j], ++m;
                    bool cycle = m == 4 && std::all_of(deg, deg + 4, [](int x) { return x == 2; });
                    bool path = m == 3 && std::count(deg, deg + 4, 1) == 2 && std::count(deg, deg + 4, 2) == 2;
                    if (!cycle && !path) continue;
                    // Walk the path or cycle starting from the smallest end.
                    int start = 0;
                    if (path)
                        while (deg[start] != 1) ++start;
                    Obstruction o;
                    o.cycle = cycle;
                    int prev = -1, cur = start;
                    for (int step = 0; step < 4; ++step) {
                        o.vertices[step] = q[cur];
                        for (int nxt = 0; nxt < 4; ++nxt)
                            if (nxt != cur && nxt != prev && g.has_edge(q[cur], q[nxt])) {
                                prev = cur;
                                cur = nxt;
                                break;
                            }
                    }
                    return o;
                }
    return std::nullopt;
}

bool has_long_induced_cycle(const Graph& g) {
    const std::size_t n = g.order();
    if (n > 12) throw OracleTooLarge(n, 12);
    auto rows = closed_rows(g);
    for (Mask sub = 0; sub < (Mask(1) << n); ++sub) {
        if (std::popcount(sub) < 4) continue;
        bool all_two = true;
        for (Mask m = sub; m && all_two; m &= m - 1) {
            auto u = std::countr_zero(m);
            all_two = std::popcount(rows[u] & sub & ~(Mask(1) << u)) == 2;
        }
        if (!all_two) continue;
        // 2-regular: an induced cycle iff connected.
        Mask low = sub & -sub, seen = low, frontier = low;
        while (frontier) {
            Mask next = 0;
            for (Mask m = frontier; m; m &= m - 1) next |= rows[std::countr_zero(m)] & sub;
            frontier = next & ~seen;
            seen |= next;
        }
        if (seen == sub) return true;
    }
    return false;
}

namespace {

std::int64_t best_merge(std::vector<RootedTree>& pool, std::int64_t base_level) {
    if (pool.empty()) return 0;
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (std::size_t k = 0; k < pool.size(); ++k) {
        RootedTree t = pool[k];
        auto path = t.base_path();
        for (std::size_t i = 1; i <= path.size(); ++i) {
            RootedTree seg = segment(t, t.root(), path[i - 1]);
            std::int64_t cost = base_level * static_cast<std::int64_t>(seg.size()) + seg.edge_count();
            std::vector<RootedTree> next = pool;
            next.erase(next.begin() + static_cast<std::ptrdiff_t>(k));
            if (i < path.size()) next.push_back(t.subtree(path[i]));
            best = std::min(best, cost + best_merge(next, base_level + static_cast<std::int64_t>(i)));
        }
    }
    return best;
}

}  // namespace

std::int64_t enumerate_merges(std::span<const RootedTree> trees, std::size_t cap) {
    std::vector<RootedTree> pool;
    std::size_t total = 0;
    for (const auto& t : trees)
        if (!t.empty()) {
            pool.push_back(t);
            total += t.size();
        }
    if (total > cap) throw OracleTooLarge(total, cap);
    if (pool.empty()) throw std::invalid_argument("enumerate_merges: empty family");
    return best_merge(pool, 0);
}

namespace {

bool slim_rows(const std::vector<Mask>& rows, Mask s) {
    if (!connected_rows(rows) || !tp_rows(rows)) return false;
    const std::size_t n = rows.size();
    Mask alive = n == 64 ? ~Mask(0) : (Mask(1) << n) - 1;
    Mask todo = s;
    while (todo) {
        int pick = -1;
        for (Mask m = todo; m; m &= m - 1) {
            int u = std::countr_zero(m);
            if ((rows[u] & alive) == alive) {
                pick = u;
                break;
            }
        }
        if (pick < 0) return false;
        alive &= ~(Mask(1) << pick);
        todo &= ~(Mask(1) << pick);
        if (!todo) break;
        // Keep the component holding the remaining markers.
        Mask seed = todo & -todo, seen = seed, frontier = seed;
        while (frontier) {
            Mask next = 0;
            for (Mask m = frontier; m; m &= m - 1) next |= rows[std::countr_zero(m)] & alive;
            frontier = next & ~seen;
            seen |= next;
        }
        if ((seen & todo) != todo) return false;
        alive = seen;
    }
    return true;
}

}  // namespace

std::size_t enumerate_slim(const SlimProblem& p, std::size_t cap) {
    validate(p);
    const std::size_t n = p.f.order();
    if (n > cap) throw OracleTooLarge(n, cap);
    auto rows = closed_rows(p.f);
    Mask s = 0;
    for (Vertex x : p.s) s |= Mask(1) << x;
    // Every slim completion contains the edges that make S a clique.
    std::vector<Edge> forced, pool;
    for (const Edge& e : p.f.non_edges()) ((s >> e.u & 1) && (s >> e.v & 1) ? forced : pool).push_back(e);
    for (const Edge& e : forced) toggle(rows, e);
    std::uint64_t explored = 0;
    std::vector<Edge> witness;
    auto hit = [s](const std::vector<Mask>& r) { return slim_rows(r, s); };
    for (std::size_t k = 0; k <= pool.size(); ++k)
        if (first_combination(rows, pool, k, explored, hit, witness)) return forced.size() + k;
    throw std::logic_error("enumerate_slim: no slim completion found");
}

std::size_t exact_chordal_fill(const Graph& g, std::size_t quotient_cap) {
    const std::size_t n = g.order();
    if (n > 64) throw OracleTooLarge(n, 64);
    auto rows = closed_rows(g);
    // True-twin classes stay modules of some minimum triangulation, so fill edges come in
    // full blocks between classes: cost w(x) w(y) in the quotient.
    std::vector<int> cls(n, -1);
    std::vector<std::int64_t> weight;
    std::vector<std::size_t> rep;
    for (std::size_t u = 0; u < n; ++u) {
        if (cls[u] >= 0) continue;
        cls[u] = static_cast<int>(rep.size());
        rep.push_back(u);
        weight.push_back(1);
        for (std::size_t w = u + 1; w < n; ++w)
            if (cls[w] < 0 && rows[w] == rows[u]) {
                cls[w] = cls[u];
                ++weight.back();
            }
    }
    const std::size_t q = rep.size();
    if (q > quotient_cap) throw OracleTooLarge(q, quotient_cap);
    std::vector<Mask> adj(q, 0);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j)
            if (i != j && (rows[rep[i]] >> rep[j] & 1)) adj[i] |= Mask(1) << j;

    const Mask full = (Mask(1) << q) - 1;
    std::vector<std::int64_t> best(std::size_t(1) << q, std::numeric_limits<std::int64_t>::max());
    best[0] = 0;
    for (Mask done = 0; done < full; ++done) {
        if (best[done] == std::numeric_limits<std::int64_t>::max()) continue;
        for (Mask cand = full & ~done; cand; cand &= cand - 1) {
            int x = std::countr_zero(cand);
            // Later neighbours of x: vertices outside done reachable through done.
            Mask reach = Mask(1) << x, frontier = reach, later = 0;
            while (frontier) {
                Mask next = 0;
                for (Mask m = frontier; m; m &= m - 1) next |= adj[std::countr_zero(m)];
                later |= next & ~done;
                frontier = next & done & ~reach;
                reach |= frontier;
            }
            later &= ~(Mask(1) << x);
            std::int64_t cost = 0;
            for (Mask m = later & ~adj[x]; m; m &= m - 1) cost += weight[x] * weight[std::countr_zero(m)];
            Mask nd = done | (Mask(1) << x);
            best[nd] = std::min(best[nd], best[done] + cost);
        }
    }
    return static_cast<std::size_t>(best[full]);
}

}  // namespace tpfill

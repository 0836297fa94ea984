#include "tpfill/chordal.hpp"

#include <algorithm>
#include <deque>

namespace tpfill {

namespace {

// Shortest chordless cycle through some vertex and two of its non-adjacent neighbours.
std::vector<Vertex> chordless_cycle(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<Vertex> best;
    std::vector<int> prev(n);
    for (std::size_t vi = 0; vi < n; ++vi) {
        Vertex v = static_cast<Vertex>(vi);
        const auto& nv = g.neighbors(v);
        for (std::size_t i = 0; i < nv.size(); ++i) {
            for (std::size_t j = i + 1; j < nv.size(); ++j) {
                Vertex x = nv[i], y = nv[j];
                if (g.has_edge(x, y)) continue;
                std::vector<char> blocked(n, 0);
                blocked[v] = 1;
                for (Vertex u : nv) blocked[u] = 1;
                blocked[y] = 0;
                std::fill(prev.begin(), prev.end(), -2);
                prev[x] = -1;
                std::deque<Vertex> bfs{x};
                while (!bfs.empty() && prev[y] == -2) {
                    Vertex u = bfs.front();
                    bfs.pop_front();
                    for (Vertex w : g.neighbors(u))
                        if (!blocked[w] && prev[w] == -2) {
                            prev[w] = u;
                            bfs.push_back(w);
                        }
                }
                if (prev[y] == -2) continue;
                std::vector<Vertex> cyc{v};
                for (Vertex u = y; u != -1; u = prev[u]) cyc.push_back(u);
                if (best.empty() || cyc.size() < best.size()) best = cyc;
            }
        }
    }
    return best;
}

}  // namespace

ChordalityCertificate check_chordal(const Graph& g) {
    const std::size_t n = g.order();
    // Maximum cardinality search; the reverse visit order is a PEO iff g is chordal.
    std::vector<int> weight(n, 0);
    std::vector<char> done(n, 0);
    std::vector<Vertex> visit;
    for (std::size_t step = 0; step < n; ++step) {
        int pick = -1;
        for (std::size_t u = 0; u < n; ++u)
            if (!done[u] && (pick < 0 || weight[u] > weight[pick])) pick = static_cast<int>(u);
        done[pick] = 1;
        visit.push_back(pick);
        for (Vertex w : g.neighbors(pick))
            if (!done[w]) ++weight[w];
    }
    std::vector<Vertex> order(visit.rbegin(), visit.rend());
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;

    ChordalityCertificate cert;
    cert.chordal = true;
    for (std::size_t i = 0; i < n && cert.chordal; ++i) {
        Vertex u = order[i];
        std::vector<Vertex> later;
        for (Vertex w : g.neighbors(u))
            if (pos[w] > i) later.push_back(w);
        if (later.empty()) continue;
        Vertex p = *std::min_element(later.begin(), later.end(), [&](Vertex a, Vertex b) { return pos[a] < pos[b]; });
        for (Vertex w : later)
            if (w != p && !g.has_edge(p, w)) {
                cert.chordal = false;
                break;
            }
    }
    if (cert.chordal)
        cert.elimination_order = std::move(order);
    else
        cert.cycle = chordless_cycle(g);
    return cert;
}

bool is_chordal(const Graph& g) { return check_chordal(g).chordal; }

std::optional<std::pair<VertexSet, VertexSet>> is_cobipartite(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<int> colour(n, -1);
    for (std::size_t s = 0; s < n; ++s) {
        if (colour[s] >= 0) continue;
        colour[s] = 0;
        std::deque<std::size_t> q{s};
        while (!q.empty()) {
            auto u = q.front();
            q.pop_front();
            for (std::size_t w = 0; w < n; ++w) {
                if (w == u || g.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(w))) continue;
                if (colour[w] < 0) {
                    colour[w] = 1 - colour[u];
                    q.push_back(w);
                } else if (colour[w] == colour[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    std::vector<Vertex> a, b;
    for (std::size_t u = 0; u < n; ++u) (colour[u] == 0 ? a : b).push_back(static_cast<Vertex>(u));
    return std::make_pair(VertexSet(a), VertexSet(b));
}

std::vector<VertexSet> minimal_separators(const Graph& g, std::size_t cap) {
    const std::size_t n = g.order();
    if (n > cap) throw std::invalid_argument("minimal_separators: " + std::to_string(n) + " vertices exceed cap " +
                                             std::to_string(cap));
    std::vector<VertexSet> out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << n); ++bits) {
        VertexMask sep(n), rest(n);
        for (std::size_t u = 0; u < n; ++u) (bits >> u & 1 ? sep : rest).set(u);
        // S is a minimal separator iff G - S has two components whose neighbourhood is all of S.
        int full = 0;
        for (const auto& c : connected_components(g, rest)) {
            VertexMask nb(n);
            for (auto u = c.find_first(); u != VertexMask::npos; u = c.find_next(u)) nb |= g.neighbor_mask(static_cast<Vertex>(u));
            if ((nb & sep) == sep) ++full;
        }
        if (full >= 2) out.push_back(VertexSet::from_mask(sep));
    }
    std::sort(out.begin(), out.end(), [](const VertexSet& x, const VertexSet& y) {
        return x.size() != y.size() ? x.size() < y.size() : x.items() < y.items();
    });
    return out;
}

GadgetInstance build_gadget(const CoBipartiteInstance& inst) {
    const Graph& f = inst.f;
    const std::size_t n = f.order();
    std::vector<int> side(n, -1);
    for (Vertex x : inst.a) {
        if (x < 0 || static_cast<std::size_t>(x) >= n) throw InvalidGadgetInput("gadget: side A has a non-vertex");
        side[x] = 0;
    }
    for (Vertex x : inst.b) {
        if (x < 0 || static_cast<std::size_t>(x) >= n) throw InvalidGadgetInput("gadget: side B has a non-vertex");
        if (side[x] == 0) throw InvalidGadgetInput("gadget: sides overlap at " + std::to_string(x));
        side[x] = 1;
    }
    for (std::size_t x = 0; x < n; ++x)
        if (side[x] < 0) throw InvalidGadgetInput("gadget: vertex " + std::to_string(x) + " is on neither side");
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y)
            if (side[x] == side[y] && !f.has_edge(static_cast<Vertex>(x), static_cast<Vertex>(y)))
                throw InvalidGadgetInput("gadget: side is not a clique");
    if (inst.k < 0) throw InvalidGadgetInput("gadget: negative budget");

    GadgetInstance out;
    auto a = static_cast<std::int64_t>(inst.a.size());
    out.k_big = inst.k + a * (a - 1) / 2;
    std::size_t cs = static_cast<std::size_t>(out.k_big) + 1;
    std::size_t total = n + cs + 1;
    out.v = static_cast<Vertex>(n + cs);
    std::vector<Edge> es;
    for (const Edge& e : f.edges())
        if (!(side[e.u] == 0 && side[e.v] == 0)) es.push_back(e);
    std::vector<Vertex> c;
    for (std::size_t i = 0; i < cs; ++i) {
        Vertex ci = static_cast<Vertex>(n + i);
        c.push_back(ci);
        for (std::size_t x = 0; x < n; ++x) es.push_back(make_edge(ci, static_cast<Vertex>(x)));
        for (std::size_t j = 0; j < i; ++j) es.push_back(make_edge(ci, static_cast<Vertex>(n + j)));
    }
    for (Vertex x : inst.a) es.push_back(make_edge(out.v, x));
    out.g = Graph(total, es);
    out.c = VertexSet(c);
    out.source.assign(total, -1);
    for (std::size_t x = 0; x < n; ++x) out.source[x] = static_cast<Vertex>(x);
    return out;
}

}  // namespace tpfill

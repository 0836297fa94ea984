#include "tpfill/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace tpfill {

Edge make_edge(Vertex a, Vertex b) {
    if (a == b) throw GraphError("self loop on vertex " + std::to_string(a));
    return a < b ? Edge{a, b} : Edge{b, a};
}

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

VertexSet::VertexSet(std::initializer_list<Vertex> vs) : VertexSet(std::vector<Vertex>(vs)) {}

VertexSet::VertexSet(std::vector<Vertex> vs) : items_(std::move(vs)) {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

bool VertexSet::contains(Vertex v) const { return std::binary_search(items_.begin(), items_.end(), v); }

VertexMask VertexSet::mask(std::size_t order) const {
    VertexMask m(order);
    for (Vertex v : items_) {
        if (v < 0 || static_cast<std::size_t>(v) >= order) throw GraphError("vertex out of range: " + std::to_string(v));
        m.set(static_cast<std::size_t>(v));
    }
    return m;
}

VertexSet VertexSet::from_mask(const VertexMask& m) {
    std::vector<Vertex> vs;
    for (auto i = m.find_first(); i != VertexMask::npos; i = m.find_next(i)) vs.push_back(static_cast<Vertex>(i));
    return VertexSet(std::move(vs));
}

Graph::Graph(std::size_t order) : adj_(order), rows_(order, VertexMask(order)) {}

Graph::Graph(std::size_t order, std::initializer_list<Edge> edges)
    : Graph(order, std::span<const Edge>(edges.begin(), edges.size())) {}

Graph::Graph(std::size_t order, std::span<const Edge> edges) : Graph(order) {
    for (const Edge& raw : edges) {
        check_vertex(raw.u);
        check_vertex(raw.v);
        Edge e = make_edge(raw.u, raw.v);
        if (rows_[e.u].test(e.v))
            throw GraphError("duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
        rows_[e.u].set(e.v);
        rows_[e.v].set(e.u);
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
        edges_.push_back(e);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
    std::sort(edges_.begin(), edges_.end());
}

void Graph::check_vertex(Vertex v) const {
    if (v < 0 || static_cast<std::size_t>(v) >= order())
        throw GraphError("vertex out of range: " + std::to_string(v));
}

bool Graph::has_edge(Vertex a, Vertex b) const {
    check_vertex(a);
    check_vertex(b);
    return rows_[a].test(b);
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[v];
}

std::vector<Edge> Graph::non_edges() const {
    std::vector<Edge> out;
    for (std::size_t a = 0; a < order(); ++a)
        for (std::size_t b = a + 1; b < order(); ++b)
            if (!rows_[a].test(b)) out.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
    return out;
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
    std::vector<Vertex> local(g.order(), -1);
    Subgraph out;
    for (Vertex v : keep) {
        if (v < 0 || static_cast<std::size_t>(v) >= g.order()) throw GraphError("vertex out of range: " + std::to_string(v));
        local[v] = static_cast<Vertex>(out.original.size());
        out.original.push_back(v);
    }
    std::vector<Edge> es;
    for (const Edge& e : g.edges())
        if (local[e.u] >= 0 && local[e.v] >= 0) es.push_back(make_edge(local[e.u], local[e.v]));
    out.graph = Graph(out.original.size(), es);
    return out;
}

Graph complement(const Graph& g) {
    auto es = g.non_edges();
    return Graph(g.order(), es);
}

std::vector<VertexMask> connected_components(const Graph& g, const VertexMask& active) {
    std::vector<VertexMask> out;
    VertexMask left = active;
    std::vector<std::size_t> stack;
    for (auto s = left.find_first(); s != VertexMask::npos; s = left.find_first()) {
        VertexMask comp(g.order());
        comp.set(s);
        left.reset(s);
        stack.assign(1, s);
        while (!stack.empty()) {
            auto u = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(static_cast<Vertex>(u))) {
                if (left.test(w)) {
                    left.reset(w);
                    comp.set(w);
                    stack.push_back(w);
                }
            }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    VertexMask all(g.order());
    all.set();
    std::vector<VertexSet> out;
    for (const auto& c : connected_components(g, all)) out.push_back(VertexSet::from_mask(c));
    return out;
}

std::size_t edges_within(const Graph& g, const VertexMask& active) {
    std::size_t twice = 0;
    for (auto u = active.find_first(); u != VertexMask::npos; u = active.find_next(u))
        twice += (g.neighbor_mask(static_cast<Vertex>(u)) & active).count();
    return twice / 2;
}

Graph add_edges(const Graph& g, std::span<const Edge> fill) {
    std::vector<Edge> es = g.edges();
    for (const Edge& f : fill) {
        if (g.has_edge(f.u, f.v))
            throw GraphError("fill edge already present: " + std::to_string(f.u) + " " + std::to_string(f.v));
        es.push_back(f);
    }
    return Graph(g.order(), es);  // rejects repeated fill edges
}

namespace {

bool next_data_line(std::istream& in, std::string& line, std::size_t& lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        auto p = line.find_first_not_of(" \t\r");
        if (p == std::string::npos || line[p] == '#') continue;
        return true;
    }
    return false;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    if (!next_data_line(in, line, lineno)) throw ParseError(lineno, "missing header");
    long long n = -1, m = -1;
    {
        std::istringstream hs(line);
        std::string extra;
        if (!(hs >> n >> m) || (hs >> extra) || n < 0 || m < 0) throw ParseError(lineno, "expected header 'n m'");
    }
    std::vector<Edge> es;
    es.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_data_line(in, line, lineno)) throw ParseError(lineno, "expected " + std::to_string(m) + " edges");
        std::istringstream ls(line);
        long long a = -1, b = -1;
        std::string extra;
        if (!(ls >> a >> b) || (ls >> extra)) throw ParseError(lineno, "expected 'u v'");
        if (a < 0 || b < 0 || a >= n || b >= n) throw ParseError(lineno, "vertex out of range");
        if (a == b) throw ParseError(lineno, "self loop");
        es.push_back(make_edge(static_cast<Vertex>(a), static_cast<Vertex>(b)));
    }
    if (next_data_line(in, line, lineno)) throw ParseError(lineno, "trailing data after edges");
    try {
        return Graph(static_cast<std::size_t>(n), es);
    } catch (const GraphError& e) {
        throw ParseError(lineno, e.what());
    }
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.order() << ' ' << g.size() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace tpfill

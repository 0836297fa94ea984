#pragma once

#include <boost/dynamic_bitset.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tpfill {

using Vertex = std::int32_t;
using VertexMask = boost::dynamic_bitset<>;

// Undirected edge, always stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    auto operator<=>(const Edge&) const = default;
};

Edge make_edge(Vertex a, Vertex b);

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Sorted set of distinct vertex ids.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> vs);
    explicit VertexSet(std::vector<Vertex> vs);

    bool contains(Vertex v) const;
    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }
    const std::vector<Vertex>& items() const { return items_; }
    VertexMask mask(std::size_t order) const;
    static VertexSet from_mask(const VertexMask& m);

    bool operator==(const VertexSet&) const = default;

private:
    std::vector<Vertex> items_;
};

class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t order);
    Graph(std::size_t order, std::span<const Edge> edges);
    Graph(std::size_t order, std::initializer_list<Edge> edges);

    std::size_t order() const { return adj_.size(); }
    std::size_t size() const { return edges_.size(); }
    bool has_edge(Vertex a, Vertex b) const;
    const std::vector<Vertex>& neighbors(Vertex v) const;
    const VertexMask& neighbor_mask(Vertex v) const { return rows_.at(static_cast<std::size_t>(v)); }
    std::size_t degree(Vertex v) const { return neighbors(v).size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    std::vector<Edge> non_edges() const;

    bool operator==(const Graph& o) const { return edges_ == o.edges_ && order() == o.order(); }

private:
    void check_vertex(Vertex v) const;

    std::vector<std::vector<Vertex>> adj_;
    std::vector<VertexMask> rows_;
    std::vector<Edge> edges_;
};

struct Subgraph {
    Graph graph;
    std::vector<Vertex> original;  // original[i] is the id of local vertex i in the parent graph
};

Subgraph induced_subgraph(const Graph& g, const VertexSet& keep);
Graph complement(const Graph& g);
std::vector<VertexSet> connected_components(const Graph& g);
std::vector<VertexMask> connected_components(const Graph& g, const VertexMask& active);
std::size_t edges_within(const Graph& g, const VertexMask& active);

// Throws GraphError when a fill edge is already present or repeated.
Graph add_edges(const Graph& g, std::span<const Edge> fill);

// Edge-list text: header "n m", then m lines "u v". Lines starting with '#' are ignored.
Graph read_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace tpfill

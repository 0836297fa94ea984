#pragma once

#include "tpfill/graph.hpp"

#include <boost/rational.hpp>

#include <array>
#include <optional>
#include <utility>
#include <variant>

namespace tpfill {

using Rational = boost::rational<std::int64_t>;

// Rooted tree with a designated base vertex. Vertices are kept in a
// parent-before-child order; local index 0 is the root.
class RootedTree {
public:
    RootedTree() = default;
    static RootedTree single(Vertex v);
    // Nodes must list each parent before its children; exactly one node has no parent.
    static RootedTree from_parents(const std::vector<std::pair<Vertex, std::optional<Vertex>>>& nodes,
                                   std::optional<Vertex> base = std::nullopt);
    // Local form: par[0] == -1 and par[i] < i for i > 0.
    static RootedTree from_raw(std::vector<Vertex> ids, std::vector<int> par, int base);

    bool empty() const { return ids_.empty(); }
    std::size_t size() const { return ids_.size(); }
    Vertex root() const;
    Vertex base() const;
    bool contains(Vertex v) const { return find(v) >= 0; }
    std::optional<Vertex> parent(Vertex v) const;
    std::vector<Vertex> children(Vertex v) const;
    std::size_t level(Vertex v) const;  // root has level 1
    std::vector<Vertex> base_path() const;  // root .. base
    const std::vector<Vertex>& vertices() const { return ids_; }
    std::int64_t edge_count() const;  // edges of the comparability graph
    bool is_ancestor(Vertex a, Vertex d) const;  // true when a == d

    RootedTree subtree(Vertex u) const;  // keeps the base when it lies below u
    RootedTree with_base(Vertex b) const;
    RootedTree without_subtree(Vertex x) const;
    VertexMask mask(std::size_t order) const;

    // Index-level access for hot loops.
    const std::vector<int>& parent_index() const { return par_; }
    int base_index() const { return base_; }
    int find(Vertex v) const;

    bool operator==(const RootedTree&) const = default;

private:
    RootedTree(std::vector<Vertex> ids, std::vector<int> par, int base)
        : ids_(std::move(ids)), par_(std::move(par)), base_(base) {}
    std::vector<char> inside(int u) const;
    RootedTree restrict(const std::vector<char>& keep, int base) const;

    std::vector<Vertex> ids_;
    std::vector<int> par_;
    int base_ = -1;
};

// Subtree rooted at `top` minus everything below `bottom` on the base path; base becomes `bottom`.
RootedTree segment(const RootedTree& t, Vertex top, Vertex bottom);
// Root of `lower` becomes a child of the base of `upper`; the base of `lower` is kept.
RootedTree merge(const RootedTree& upper, const RootedTree& lower);
RootedTree merge(std::span<const RootedTree> chain);
RootedTree merge(std::initializer_list<RootedTree> chain);
// Every tree of `lower` is hung below the base of `upper`; the base of `upper` is kept.
RootedTree attach_below(const RootedTree& upper, std::span<const RootedTree> lower);

std::vector<std::size_t> segment_sizes(const RootedTree& t);  // |T_{u,u}| along the base path
Rational average(const RootedTree& t, std::size_t first_level, std::size_t last_level);
std::size_t leading_subtree(const RootedTree& t);  // level of the leading base, 1-based
RootedTree leading_merge(std::span<const RootedTree> trees);

// Root together with the child subtrees that avoid `marked`.
RootedTree top_subtree(const RootedTree& t, const VertexSet& marked);
RootedTree top_subtree(const RootedTree& t, const VertexMask& marked);
// Removes marked non-root vertices; children move up to the nearest kept ancestor.
RootedTree delete_vertices(const RootedTree& t, const VertexMask& marked);

struct RootedForest {
    std::vector<RootedTree> trees;

    std::size_t size() const;
    std::int64_t edge_count() const;
    bool operator==(const RootedForest&) const = default;
};

// Induced P4 (vertices in path order) or C4 (vertices in cycle order).
struct Obstruction {
    std::array<Vertex, 4> vertices{};
    bool cycle = false;
};

class NotTriviallyPerfect : public std::runtime_error {
public:
    explicit NotTriviallyPerfect(Obstruction w);
    const Obstruction& witness() const { return witness_; }

private:
    Obstruction witness_;
};

std::variant<RootedForest, Obstruction> recognize(const Graph& g, const VertexMask& active);
// Among true twins, vertices in `prefer` are placed above the others.
std::variant<RootedForest, Obstruction> recognize(const Graph& g, const VertexMask& active, const VertexMask& prefer);
std::variant<RootedForest, Obstruction> recognize(const Graph& g);
bool is_trivially_perfect(const Graph& g);
bool is_trivially_perfect(const Graph& g, const VertexMask& active);

// Canonical forest: trees and children ordered by size descending, then smallest root id.
RootedForest to_forest(const Graph& g);
RootedForest to_forest(const Graph& g, const VertexMask& active);
RootedForest to_forest(const Graph& g, const VertexMask& active, const VertexMask& prefer);
Graph from_forest(const RootedForest& f);
Graph from_forest(const RootedForest& f, std::size_t order);
std::int64_t edge_count(const RootedForest& f);

// Per tree: lines "node parent" ('-' for the root) followed by "base id".
void write_forest(std::ostream& out, const RootedForest& f);
RootedForest read_forest(std::istream& in);

}  // namespace tpfill

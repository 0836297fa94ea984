#pragma once

#include "tpfill/graph.hpp"

#include <optional>
#include <utility>

namespace tpfill {

struct ChordalityCertificate {
    bool chordal = false;
    std::vector<Vertex> elimination_order;  // perfect elimination ordering when chordal
    std::vector<Vertex> cycle;              // chordless cycle of length >= 4 otherwise
};

ChordalityCertificate check_chordal(const Graph& g);
bool is_chordal(const Graph& g);

// Two-colouring of the complement, or nothing when the complement is not bipartite.
std::optional<std::pair<VertexSet, VertexSet>> is_cobipartite(const Graph& g);

// Inclusion-minimal (a,b)-separators for some pair a,b; sorted by size, then lexicographically.
std::vector<VertexSet> minimal_separators(const Graph& g, std::size_t cap = 12);

struct CoBipartiteInstance {
    Graph f;
    VertexSet a;
    VertexSet b;
    std::int64_t k = 0;
};

struct GadgetInstance {
    Graph g;
    Vertex v = -1;
    std::int64_t k_big = 0;
    VertexSet c;
    std::vector<Vertex> source;  // source[x] is the id in F, or -1 for the added vertices
};

class InvalidGadgetInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

GadgetInstance build_gadget(const CoBipartiteInstance& inst);

}  // namespace tpfill

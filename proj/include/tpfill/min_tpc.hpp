#pragma once

#include "tpfill/forest.hpp"

#include <array>

namespace tpfill {

struct Completion {
    std::vector<Edge> fill;  // sorted, ids of the input graph
    RootedForest forest;     // canonical forest of the completed graph
    bool verified = false;

    std::size_t fill_size() const { return fill.size(); }
};

struct MinTpcStats {
    std::uint64_t calls = 0;       // distinct subproblems solved
    std::uint64_t memo_hits = 0;
    std::uint64_t candidates = 0;  // trees offered to a candidate pool
    std::uint64_t rejected = 0;    // offered trees that were not completions of their subproblem
    std::uint64_t recursions = 0;  // gated recursive calls
    double max_child_fraction = 0;  // largest |child| / |parent| over gated calls
};

class NotOneAwayFromTP : public std::invalid_argument {
public:
    NotOneAwayFromTP(Vertex v, Obstruction w);
    const Obstruction& witness() const { return witness_; }

private:
    Obstruction witness_;
};

class RecursionBudgetExceeded : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Throws NotOneAwayFromTP unless g - v is trivially perfect.
void check_instance(const Graph& g, Vertex v);

Completion universal_completion(const Graph& g, Vertex v);

// Members of the family for the i-th largest tree of g - v (i is 1 or 2): the top of that
// tree, then its minimum slim completion when it holds exactly one neighbour of v.
std::vector<RootedTree> upsilon(const Graph& g, Vertex v, int i);

struct FindTopResult {
    RootedTree best;  // completion of the component of v of the form <r, T> with v at level <= 2 of T
    std::int64_t fill = 0;
    std::array<std::vector<RootedTree>, 2> upsilon;  // families of g - r
};

// g must be connected; r is a partial tree over vertices of g - v (possibly empty).
FindTopResult find_top(const Graph& g, Vertex v, const RootedTree& r);

Completion min_tpc(const Graph& g, Vertex v, MinTpcStats* stats = nullptr);

bool verify_tp_completion(const Graph& g, std::span<const Edge> fill);

}  // namespace tpfill

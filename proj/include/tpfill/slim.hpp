#pragma once

#include "tpfill/forest.hpp"

namespace tpfill {

struct SlimProblem {
    Graph f;
    VertexSet s;
};

struct SlimResult {
    std::vector<Edge> fill;
    RootedTree tree;  // base is the S-vertex at level |S|
};

class InvalidSlimProblem : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

void validate(const SlimProblem& p);
SlimResult slim_tpc(const SlimProblem& p);
bool is_slim_completion(const SlimProblem& p, const Graph& h);

// Tree-level forms. `marked` is indexed by vertex id and must meet every given tree.
RootedTree slim_tree(const RootedTree& component, const VertexMask& marked);
RootedTree slim_forest(std::span<const RootedTree> components, const VertexMask& marked);

}  // namespace tpfill

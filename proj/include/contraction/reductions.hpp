#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "contraction/graph.hpp"

namespace contraction {

// Bipartite domination instance: does some set of at most t vertices of B
// dominate all of A? Assumes every A-vertex has a B-neighbor and t <= |A|.
struct RbdsInstance {
    int a_size = 0;
    int b_size = 0;
    int t = 0;
    std::vector<std::pair<int, int>> edges; // (a index, b index)

    void validate() const; // throws std::invalid_argument on broken assumptions
};

// The budget-preserving gadget: a hub vertex adjacent to all of B, plus k+1
// two-paths between the hub and every A-vertex, with k = |A| + t. The
// instance is a yes for domination iff the gadget contracts to a tree
// within k. Vertex layout: A, hub, B, then the per-A bundles.
std::pair<Graph, int> rbds_to_tree_instance(const RbdsInstance& r);

// Cross-validates one instance: domination brute force against an exact
// decision on the transformed graph (verified solver witness for a fast
// "yes", exhaustive contraction enumeration to confirm a "no").
bool equivalence_check(const RbdsInstance& r);

// Text format: first line "|A| |B| t", then one "i j" line per edge.
RbdsInstance parse_rbds_instance(std::istream& in);

} // namespace contraction

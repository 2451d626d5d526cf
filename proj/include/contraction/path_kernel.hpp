#pragma once

#include <optional>
#include <vector>

#include "contraction/graph.hpp"

namespace contraction {

// One reduction step: the graph it was applied to, the bridge contracted
// (in that graph's ids), and the resulting id mapping. Kept so witnesses
// found on the reduced graph can be lifted back step by step.
struct KernelStep {
    Graph before;
    Vertex u = -1, v = -1;
    VertexMapping map;
};

struct KernelResult {
    Graph reduced;
    int k = 0;
    std::vector<KernelStep> steps; // the trace, in application order
    VertexMapping mapping;         // original ids -> reduced ids
    bool decided_no = false;       // reduced graph too large to be a yes-instance
};

// If g has a bridge uv whose deletion leaves two components of at least k+2
// vertices each, contract the lexicographically smallest such bridge.
// Requires g connected.
std::optional<std::pair<Graph, VertexMapping>> rule1_step(const Graph& g, int k);

// Apply rule1_step until fixpoint. The reduced graph of a yes-instance has
// at most 5k+3 vertices; decided_no is set when the bound is exceeded.
// Graphs that already are paths are never declared no, whatever their size.
KernelResult kernelize(const Graph& g, int k);

} // namespace contraction

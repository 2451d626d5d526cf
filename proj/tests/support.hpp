#pragma once

#include <optional>
#include <vector>

#include "contraction/graph.hpp"

// Shared helpers for the test suites. The partition-enumeration solvers here
// are deliberately written from scratch so they can serve as an independent
// cross-check of the oracle module.
namespace testsupport {

using contraction::Graph;
using contraction::Vertex;

// Every labeled graph on n vertices, one per edge bitmask. fn(const Graph&).
template <typename Fn>
void for_each_labeled_graph(int n, Fn&& fn) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
        Graph g(n);
        int bit = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v, ++bit)
                if ((mask >> bit) & 1) g.add_edge(u, v);
        fn(g);
    }
}

// All graphs on exactly n vertices up to isomorphism (cached). n <= 8.
const std::vector<Graph>& graphs_upto_iso(int n);
// The connected ones.
const std::vector<Graph>& connected_graphs_upto_iso(int n);

// Independent brute force: best witness over all partitions of V into
// connected parts whose quotient is a path (returned parts follow the
// quotient path order) or a tree.
struct PartitionSolution {
    int cost = 0;
    std::vector<std::vector<Vertex>> parts; // path order for the path variant
};
std::optional<PartitionSolution> partition_oracle_path(const Graph& g);
std::optional<PartitionSolution> partition_oracle_tree(const Graph& g);

// Minimum core size over all star-shaped partitions of component X: cores
// must contain the boundary of X, stay connected and cover all inner edges.
int star_shatter_bruteforce(const Graph& g, const std::vector<Vertex>& X);

} // namespace testsupport

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "contraction/graph.hpp"

namespace contraction {

// Exhaustive exact solvers used as ground truth for everything else in this
// repo. Deliberately plain: enumerate, check, take the minimum. Each routine
// is guarded so an accidental large input fails fast instead of hanging CI.

// Minimum number of edge contractions turning g into a simple path, found by
// enumerating contracted spanning forests. nullopt when g is disconnected
// (no contraction sequence can reconnect it). Guard: n <= 12.
std::optional<int> min_contractions_to_path(const Graph& g);

// Minimum total contractions making every connected component acyclic,
// summed over components. Guard: n <= 12.
int min_contractions_to_tree(const Graph& g);

// Decision version: can g be made acyclic with at most k contractions?
// Same forest enumeration with early exit; guarded by an estimate of the
// number of edge subsets it would visit.
bool tree_contractible_within(const Graph& g, int k);

// Minimum size of a connected vertex cover. Requires g connected; n <= 12.
int min_cvc_bruteforce(const Graph& g);

// Minimum size (largest part) over all path-witness partitions of gx that
// have at most one big part, first part containing every vertex of L and
// last part containing every vertex of R. Requires gx connected; |V| <= 8.
int min_shatter_bruteforce(const Graph& gx, const std::vector<Vertex>& L, const std::vector<Vertex>& R);

// Red-Blue Domination: does some S of at most t vertices on the B side
// dominate all of A? Edges are (a_index, b_index) pairs. Guard: |B| <= 20.
bool rbds_bruteforce(int a_size, int b_size, const std::vector<std::pair<int, int>>& edges, int t);

} // namespace contraction

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "contraction/graph.hpp"

namespace contraction {

// Minimum-size connected vertex cover of size <= upper_bound, or nullopt if
// none exists within the bound. Requires g connected. Ties between
// minimum-size covers go to the lexicographically smallest vertex set.
std::optional<std::pair<int, std::vector<Vertex>>> min_cvc(const Graph& g, int upper_bound);

namespace detail {

// Exhaustive subset scan; the route taken for n <= 15.
std::optional<std::pair<int, std::vector<Vertex>>> min_cvc_subsets(const Graph& g, int upper_bound);

// Branch on uncovered edges to enumerate minimal vertex covers, then connect
// disconnected ones by an exact Steiner augmentation over their pieces.
std::optional<std::pair<int, std::vector<Vertex>>> min_cvc_branching(const Graph& g, int upper_bound);

} // namespace detail

} // namespace contraction

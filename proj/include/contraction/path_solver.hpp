#pragma once

#include <optional>

#include "contraction/graph.hpp"
#include "contraction/path_kernel.hpp"
#include "contraction/witness.hpp"

namespace contraction {

// Monochromatic components of a coloring, arranged along their quotient
// path, with the boundary of each component toward its neighbors.
struct OrderedComponents {
    std::vector<std::vector<Vertex>> components;
    std::vector<std::vector<Vertex>> left_boundary;  // N(X_{i-1}) cap X_i, empty at i = 0
    std::vector<std::vector<Vertex>> right_boundary; // N(X_{i+1}) cap X_i, empty at the end
};

// nullopt when the quotient of the monochromatic components is not a path.
// Requires g connected.
std::optional<OrderedComponents> order_components(const Graph& g, const TwoColoring& c);

// Refinement of one component into an ordered path witness of its induced
// subgraph with at most one part of size > 1, the left boundary inside the
// first part and the right boundary inside the last.
struct Shatter {
    std::vector<std::vector<Vertex>> parts; // ordered, global vertex ids
    int size = 0;                           // cardinality of the largest part
};

// Minimum-size shatter of component `index`. Total: the single-part shatter
// always qualifies. Empty boundaries (end components, or a single component
// covering the whole graph) impose no containment and every candidate path
// end is tried.
Shatter min_shatter(const Graph& g, const OrderedComponents& oc, int index);

// Replace every component by its minimum shatter; nullopt when the component
// quotient is not a path. Parts come back in path order.
std::optional<WitnessStructure> extract_path_witness(const Graph& g, const TwoColoring& c);

// Lift a witness found on the reduced graph back to the original one by
// replaying the kernel trace backwards. Only valid for witnesses whose cost
// is within the kernel's budget k.
WitnessStructure lift_through_kernel(const KernelResult& kr, const WitnessStructure& reduced_witness);

// Monte Carlo decision: kernelize, then try up to min(4^k, 2^#V(reduced))
// random colorings. "yes" always carries a verified witness of the input
// graph; "no" errs with probability at most 1/e on yes-instances.
Verdict solve_path_randomized(const Graph& g, int k, std::uint64_t seed);

// Exact decision: iterates extraction over an (n', min(2k, n'))-universal
// coloring family of the reduced graph.
Verdict solve_path_deterministic(const Graph& g, int k);

} // namespace contraction

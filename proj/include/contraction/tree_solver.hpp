#pragma once

#include <optional>

#include "contraction/graph.hpp"
#include "contraction/witness.hpp"

namespace contraction {

// Star-like refinement of one monochromatic component: a connected vertex
// cover of the component that holds every boundary vertex, plus singletons.
struct StarShatter {
    std::vector<Vertex> core;
    std::vector<std::vector<Vertex>> parts; // core first, then the singletons
};

// Vertices of X with at least one neighbor outside X.
std::vector<Vertex> boundary(const Graph& g, const std::vector<Vertex>& X);

// Minimum-core star-shatter with |core| <= d, computed as a minimum
// connected vertex cover of G[X] with one pendant attached to each boundary
// vertex. Requires G[X] connected and |X| >= 2.
std::optional<StarShatter> min_star_shatter(const Graph& g, const std::vector<Vertex>& X, int d);

// Replace every multi-vertex monochromatic component by its minimum
// star-shatter (cores capped at d). nullopt when the component quotient is
// not a tree or some component has no star-shatter within d.
// Requires g connected; meant for blocks (2-connected graphs or single edges).
std::optional<WitnessStructure> extract_tree_witness(const Graph& g, const TwoColoring& c, int d);

struct TreeBlockStats {
    int block_size = 0;
    int budget = 0;
    std::uint64_t extraction_calls = 0;
};
struct TreeSolveStats {
    std::vector<TreeBlockStats> blocks;
};

// Decide whether g (possibly disconnected) turns acyclic within k
// contractions. Components are split into biconnected blocks, per-block
// minima are summed, and block witnesses are merged at the cut vertices.
// The witness of a "yes" is verified before it is returned.
Verdict solve_tree(const Graph& g, int k, SolveMode mode, std::uint64_t seed = 0, TreeSolveStats* stats = nullptr);

} // namespace contraction

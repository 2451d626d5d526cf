#pragma once

#include <random>

#include "contraction/graph.hpp"

namespace contraction {

Graph gen_path(int n);
Graph gen_cycle(int n);

// Star with `legs` paths of `leg_length` edges hanging off a center vertex.
Graph gen_spider(int legs, int leg_length);

// Random spanning tree plus each remaining pair independently with
// probability p; always connected.
Graph gen_random_connected(int n, double p, std::mt19937_64& rng);

// Plain G(n,p); may be disconnected.
Graph gen_random(int n, double p, std::mt19937_64& rng);

} // namespace contraction

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "contraction/common.hpp"

namespace contraction {

// Simple undirected graph on vertices 0..n-1. No loops, no parallel edges,
// neighbor lists kept sorted. Instances are treated as immutable once built.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n) {}

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return m_; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }

    bool has_edge(Vertex u, Vertex v) const;

    // Adding an already present edge is a no-op; loops are rejected.
    void add_edge(Vertex u, Vertex v);

    // All edges as (u, v) with u < v, in lexicographic order.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

private:
    std::vector<std::vector<Vertex>> adj_;
    int m_ = 0;
};

// Surjective map from the vertices of one graph onto those of a smaller one.
struct VertexMapping {
    std::vector<Vertex> to_new; // old id -> new id
    int new_count = 0;

    static VertexMapping identity(int n);
    // Composition: apply *this first, then `later`.
    VertexMapping then(const VertexMapping& later) const;
};

// Assignment of colors {1,2} to the vertices of a graph. Not required to be
// proper; it only drives the monochromatic-component decomposition.
struct TwoColoring {
    std::vector<std::uint8_t> color;

    int size() const { return static_cast<int>(color.size()); }
    static TwoColoring constant(int n, std::uint8_t c = 1);
    static TwoColoring random(int n, std::mt19937_64& rng);
};

// Contract edge uv: both endpoints are replaced by one vertex adjacent to
// N(u) u N(v) \ {u,v}. Vertex ids are re-densified; the mapping records
// where every old vertex went.
std::pair<Graph, VertexMapping> contract_edge(const Graph& g, Vertex u, Vertex v);

bool is_connected(const Graph& g);
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

// Connectivity restricted to an induced vertex subset.
bool is_connected_subset(const Graph& g, const std::vector<Vertex>& s);
std::vector<std::vector<Vertex>> components_within(const Graph& g, const std::vector<Vertex>& s);

bool is_path_graph(const Graph& g);
bool is_tree(const Graph& g);

// Edges whose deletion disconnects g. Requires g connected.
std::vector<std::pair<Vertex, Vertex>> bridges(const Graph& g);

// Blocks (maximal 2-connected subgraphs / single edges) as vertex sets.
// Requires g connected. Two blocks share at most one vertex.
std::vector<std::vector<Vertex>> biconnected_components(const Graph& g);

// Maximal connected same-colored vertex sets; they partition V.
std::vector<std::vector<Vertex>> monochromatic_components(const Graph& g, const TwoColoring& c);

// Subgraph induced by `verts` (must be sorted ascending); local id i is verts[i].
Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& verts);

// Exhaustive isomorphism test for n <= 8; identical sorted edge lists beyond.
bool isomorphic(const Graph& a, const Graph& b);

} // namespace contraction

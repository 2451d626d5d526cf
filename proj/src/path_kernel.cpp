#include "contraction/path_kernel.hpp"

#include <algorithm>

namespace contraction {

namespace {

// Sizes of the two sides of bridge uv: (side of u, side of v).
std::pair<int, int> bridge_side_sizes(const Graph& g, Vertex u, Vertex v) {
    const int n = g.vertex_count();
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack{u};
    seen[u] = 1;
    int cu = 0;
    while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        ++cu;
        for (Vertex y : g.neighbors(x)) {
            if (x == u && y == v) continue; // skip the bridge itself
            if (!seen[y]) {
                seen[y] = 1;
                stack.push_back(y);
            }
        }
    }
    return {cu, n - cu};
}

} // namespace

std::optional<std::pair<Graph, VertexMapping>> rule1_step(const Graph& g, int k) {
    auto bs = bridges(g); // throws on disconnected input
    for (auto [u, v] : bs) {
        auto [su, sv] = bridge_side_sizes(g, u, v);
        if (su >= k + 2 && sv >= k + 2) return contract_edge(g, u, v);
    }
    return std::nullopt;
}

KernelResult kernelize(const Graph& g, int k) {
    KernelResult res;
    res.k = k;
    res.reduced = g;
    res.mapping = VertexMapping::identity(g.vertex_count());
    while (true) {
        auto bs = bridges(res.reduced);
        bool applied = false;
        for (auto [u, v] : bs) {
            auto [su, sv] = bridge_side_sizes(res.reduced, u, v);
            if (su < k + 2 || sv < k + 2) continue;
            auto [next, map] = contract_edge(res.reduced, u, v);
            res.steps.push_back({res.reduced, u, v, map});
            res.mapping = res.mapping.then(map);
            res.reduced = std::move(next);
            applied = true;
            break;
        }
        if (!applied) break;
    }
    res.decided_no = !is_path_graph(res.reduced) && res.reduced.vertex_count() > 5 * k + 3;
    return res;
}

} // namespace contraction

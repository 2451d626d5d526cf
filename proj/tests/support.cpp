#include "support.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>

#include "contraction/tree_solver.hpp"

namespace testsupport {

using namespace contraction;

namespace {

std::string certificate(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::string> desc(n);
    for (Vertex v = 0; v < n; ++v) {
        int tri = 0;
        const auto& nb = g.neighbors(v);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (g.has_edge(nb[i], nb[j])) ++tri;
        std::vector<int> nbr_degs;
        for (Vertex w : nb) nbr_degs.push_back(g.degree(w));
        std::sort(nbr_degs.begin(), nbr_degs.end());
        std::string d = std::to_string(g.degree(v)) + "t" + std::to_string(tri) + ":";
        for (int x : nbr_degs) d += std::to_string(x) + ",";
        desc[v] = d;
    }
    std::sort(desc.begin(), desc.end());
    std::string cert = std::to_string(n) + "/" + std::to_string(g.edge_count()) + "|";
    for (auto& d : desc) cert += d + ";";
    return cert;
}

std::vector<Graph> build_level(const std::vector<Graph>& prev, int n) {
    std::unordered_map<std::string, std::vector<Graph>> buckets;
    std::vector<Graph> out;
    for (const Graph& h : prev) {
        const int subsets = 1 << (n - 1);
        for (int s = 0; s < subsets; ++s) {
            Graph g(n);
            for (auto [u, v] : h.edges()) g.add_edge(u, v);
            for (int v = 0; v < n - 1; ++v)
                if ((s >> v) & 1) g.add_edge(v, n - 1);
            std::string cert = certificate(g);
            auto& bucket = buckets[cert];
            bool fresh = std::none_of(bucket.begin(), bucket.end(),
                                      [&](const Graph& other) { return isomorphic(g, other); });
            if (fresh) {
                bucket.push_back(g);
                out.push_back(std::move(g));
            }
        }
    }
    return out;
}

} // namespace

const std::vector<Graph>& graphs_upto_iso(int n) {
    static std::map<int, std::vector<Graph>> cache;
    if (n < 1 || n > 8) throw std::invalid_argument("graphs_upto_iso: 1 <= n <= 8");
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    if (n == 1) return cache.emplace(1, std::vector<Graph>{Graph(1)}).first->second;
    return cache.emplace(n, build_level(graphs_upto_iso(n - 1), n)).first->second;
}

const std::vector<Graph>& connected_graphs_upto_iso(int n) {
    static std::map<int, std::vector<Graph>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Graph> conn;
    for (const Graph& g : graphs_upto_iso(n))
        if (is_connected(g)) conn.push_back(g);
    return cache.emplace(n, std::move(conn)).first->second;
}

namespace {

template <typename Fn>
void for_each_partition(int n, Fn&& fn) {
    std::vector<int> assign(n, 0), max_prefix(n, 0);
    while (true) {
        int parts = *std::max_element(assign.begin(), assign.end()) + 1;
        std::vector<std::vector<Vertex>> out(parts);
        for (int v = 0; v < n; ++v) out[assign[v]].push_back(v);
        fn(out);
        int i = n - 1;
        while (i > 0 && assign[i] == max_prefix[i - 1] + 1) --i;
        if (i == 0) break;
        ++assign[i];
        max_prefix[i] = std::max(max_prefix[i - 1], assign[i]);
        for (int j = i + 1; j < n; ++j) {
            assign[j] = 0;
            max_prefix[j] = max_prefix[i];
        }
    }
}

struct QuotientInfo {
    int parts = 0;
    std::vector<std::vector<char>> adj;
    bool connected_parts = true;
};

QuotientInfo quotient_info(const Graph& g, const std::vector<std::vector<Vertex>>& parts) {
    QuotientInfo q;
    q.parts = static_cast<int>(parts.size());
    for (const auto& p : parts)
        if (!is_connected_subset(g, p)) {
            q.connected_parts = false;
            return q;
        }
    std::vector<int> part_of(g.vertex_count());
    for (int i = 0; i < q.parts; ++i)
        for (Vertex v : parts[i]) part_of[v] = i;
    q.adj.assign(q.parts, std::vector<char>(q.parts, 0));
    for (auto [u, v] : g.edges())
        if (part_of[u] != part_of[v]) q.adj[part_of[u]][part_of[v]] = q.adj[part_of[v]][part_of[u]] = 1;
    return q;
}

std::optional<std::vector<int>> path_order(const QuotientInfo& q) {
    const int r = q.parts;
    int edges = 0;
    std::vector<int> deg(r, 0);
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
            if (q.adj[i][j]) {
                ++edges;
                ++deg[i];
                ++deg[j];
            }
    if (edges != r - 1) return std::nullopt;
    for (int d : deg)
        if (d > 2) return std::nullopt;
    // quotient of a connected graph is connected; tree with max degree 2 = path
    std::vector<int> order;
    if (r == 1) return std::vector<int>{0};
    int start = -1;
    for (int i = 0; i < r; ++i)
        if (deg[i] == 1) {
            start = i;
            break;
        }
    if (start == -1) return std::nullopt;
    order.push_back(start);
    int prev = -1, cur = start;
    while (static_cast<int>(order.size()) < r) {
        int next = -1;
        for (int j = 0; j < r; ++j)
            if (q.adj[cur][j] && j != prev) next = j;
        if (next == -1) return std::nullopt;
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    return order;
}

} // namespace

std::optional<PartitionSolution> partition_oracle_path(const Graph& g) {
    if (!is_connected(g)) return std::nullopt;
    const int n = g.vertex_count();
    std::optional<PartitionSolution> best;
    for_each_partition(n, [&](const std::vector<std::vector<Vertex>>& parts) {
        int cost = n - static_cast<int>(parts.size());
        if (best && cost >= best->cost) return;
        auto q = quotient_info(g, parts);
        if (!q.connected_parts) return;
        auto order = path_order(q);
        if (!order) return;
        PartitionSolution sol;
        sol.cost = cost;
        for (int idx : *order) sol.parts.push_back(parts[idx]);
        best = std::move(sol);
    });
    return best;
}

std::optional<PartitionSolution> partition_oracle_tree(const Graph& g) {
    if (!is_connected(g)) return std::nullopt;
    const int n = g.vertex_count();
    std::optional<PartitionSolution> best;
    for_each_partition(n, [&](const std::vector<std::vector<Vertex>>& parts) {
        int cost = n - static_cast<int>(parts.size());
        if (best && cost >= best->cost) return;
        auto q = quotient_info(g, parts);
        if (!q.connected_parts) return;
        int edges = 0;
        for (int i = 0; i < q.parts; ++i)
            for (int j = i + 1; j < q.parts; ++j) edges += q.adj[i][j];
        if (edges != q.parts - 1) return;
        best = PartitionSolution{cost, parts};
    });
    return best;
}

int star_shatter_bruteforce(const Graph& g, const std::vector<Vertex>& X) {
    const int nx = static_cast<int>(X.size());
    if (nx > 20) throw std::invalid_argument("star_shatter_bruteforce: component too large");
    Graph h = induced_subgraph(g, X);
    std::vector<int> local_of(g.vertex_count(), -1);
    for (int i = 0; i < nx; ++i) local_of[X[i]] = i;
    std::uint32_t hat = 0;
    for (Vertex v : boundary(g, X)) hat |= 1u << local_of[v];
    auto hedges = h.edges();

    int best = nx;
    for (std::uint32_t mask = 1; mask < (1u << nx); ++mask) {
        if ((mask & hat) != hat) continue;
        if (std::popcount(mask) >= best) continue;
        bool covers = true;
        for (auto [u, v] : hedges)
            if (!((mask >> u) & 1) && !((mask >> v) & 1)) {
                covers = false;
                break;
            }
        if (!covers) continue;
        std::vector<Vertex> core;
        for (int v = 0; v < nx; ++v)
            if ((mask >> v) & 1) core.push_back(v);
        if (is_connected_subset(h, core)) best = std::popcount(mask);
    }
    return best;
}

} // namespace testsupport

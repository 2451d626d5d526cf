#include "contraction/graph.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <string>

namespace contraction {

bool Graph::has_edge(Vertex u, Vertex v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

void Graph::add_edge(Vertex u, Vertex v) {
    if (u == v) throw std::invalid_argument("add_edge: self-loop " + std::to_string(u));
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
        throw std::invalid_argument("add_edge: vertex out of range");
    auto& nu = adj_[u];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v) return;
    nu.insert(it, v);
    auto& nv = adj_[v];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++m_;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(m_);
    for (Vertex u = 0; u < vertex_count(); ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

VertexMapping VertexMapping::identity(int n) {
    VertexMapping m;
    m.to_new.resize(n);
    std::iota(m.to_new.begin(), m.to_new.end(), 0);
    m.new_count = n;
    return m;
}

VertexMapping VertexMapping::then(const VertexMapping& later) const {
    VertexMapping out;
    out.to_new.resize(to_new.size());
    for (std::size_t i = 0; i < to_new.size(); ++i) out.to_new[i] = later.to_new[to_new[i]];
    out.new_count = later.new_count;
    return out;
}

TwoColoring TwoColoring::constant(int n, std::uint8_t c) {
    TwoColoring t;
    t.color.assign(n, c);
    return t;
}

TwoColoring TwoColoring::random(int n, std::mt19937_64& rng) {
    TwoColoring t;
    t.color.resize(n);
    for (int i = 0; i < n; ++i) t.color[i] = static_cast<std::uint8_t>(1 + (rng() & 1));
    return t;
}

std::pair<Graph, VertexMapping> contract_edge(const Graph& g, Vertex u, Vertex v) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("contract_edge: edge not present");
    const int n = g.vertex_count();
    const Vertex a = std::min(u, v), b = std::max(u, v);

    VertexMapping map;
    map.to_new.resize(n);
    map.new_count = n - 1;
    for (Vertex w = 0; w < n; ++w) map.to_new[w] = w < b ? w : w - 1;
    map.to_new[b] = a; // merged vertex keeps the smaller endpoint's slot

    Graph h(n - 1);
    for (auto [x, y] : g.edges()) {
        Vertex nx = map.to_new[x], ny = map.to_new[y];
        if (nx != ny) h.add_edge(nx, ny);
    }
    return {std::move(h), std::move(map)};
}

namespace {

// BFS from `start`, restricted to vertices with allowed[v] != 0, marking seen.
void bfs_mark(const Graph& g, Vertex start, const std::vector<char>& allowed, std::vector<char>& seen) {
    std::vector<Vertex> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        for (Vertex y : g.neighbors(x))
            if (allowed[y] && !seen[y]) {
                seen[y] = 1;
                stack.push_back(y);
            }
    }
}

} // namespace

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<char> allowed(n, 1), seen(n, 0);
    bfs_mark(g, 0, allowed, seen);
    return std::count(seen.begin(), seen.end(), 1) == n;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<char> allowed(n, 1), seen(n, 0);
    std::vector<std::vector<Vertex>> comps;
    for (Vertex v = 0; v < n; ++v) {
        if (seen[v]) continue;
        std::vector<char> mark(n, 0);
        bfs_mark(g, v, allowed, mark);
        std::vector<Vertex> comp;
        for (Vertex w = 0; w < n; ++w)
            if (mark[w]) {
                comp.push_back(w);
                seen[w] = 1;
            }
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected_subset(const Graph& g, const std::vector<Vertex>& s) {
    if (s.empty()) return false;
    const int n = g.vertex_count();
    std::vector<char> allowed(n, 0), seen(n, 0);
    for (Vertex v : s) allowed[v] = 1;
    bfs_mark(g, s.front(), allowed, seen);
    for (Vertex v : s)
        if (!seen[v]) return false;
    return true;
}

std::vector<std::vector<Vertex>> components_within(const Graph& g, const std::vector<Vertex>& s) {
    const int n = g.vertex_count();
    std::vector<char> allowed(n, 0), seen(n, 0);
    for (Vertex v : s) allowed[v] = 1;
    std::vector<std::vector<Vertex>> comps;
    for (Vertex v : s) {
        if (seen[v]) continue;
        std::vector<char> mark(n, 0);
        bfs_mark(g, v, allowed, mark);
        std::vector<Vertex> comp;
        for (Vertex w : s)
            if (mark[w]) {
                comp.push_back(w);
                seen[w] = 1;
            }
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_path_graph(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return false;
    if (!is_connected(g)) return false;
    if (n <= 2) return g.edge_count() == n - 1;
    int deg1 = 0;
    for (Vertex v = 0; v < n; ++v) {
        int d = g.degree(v);
        if (d == 1)
            ++deg1;
        else if (d != 2)
            return false;
    }
    return deg1 == 2;
}

bool is_tree(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return false;
    return is_connected(g) && g.edge_count() == n - 1;
}

namespace {

struct LowLink {
    const Graph& g;
    std::vector<int> disc, low, parent;
    int timer = 0;
    std::vector<std::pair<Vertex, Vertex>> bridge_list;
    // edge stack for block extraction
    std::vector<std::pair<Vertex, Vertex>> estack;
    std::vector<std::vector<Vertex>> blocks;
    bool collect_blocks = false;

    explicit LowLink(const Graph& gr)
        : g(gr), disc(gr.vertex_count(), -1), low(gr.vertex_count(), -1), parent(gr.vertex_count(), -1) {}

    void pop_block(Vertex u, Vertex v) {
        std::vector<char> in(g.vertex_count(), 0);
        std::vector<Vertex> verts;
        while (true) {
            auto [x, y] = estack.back();
            estack.pop_back();
            for (Vertex z : {x, y})
                if (!in[z]) {
                    in[z] = 1;
                    verts.push_back(z);
                }
            if (x == u && y == v) break;
        }
        std::sort(verts.begin(), verts.end());
        blocks.push_back(std::move(verts));
    }

    void dfs(Vertex u) {
        disc[u] = low[u] = timer++;
        for (Vertex v : g.neighbors(u)) {
            if (disc[v] == -1) {
                parent[v] = u;
                if (collect_blocks) estack.emplace_back(u, v);
                dfs(v);
                low[u] = std::min(low[u], low[v]);
                if (low[v] > disc[u]) bridge_list.emplace_back(std::min(u, v), std::max(u, v));
                if (collect_blocks && low[v] >= disc[u]) pop_block(u, v);
            } else if (v != parent[u] && disc[v] < disc[u]) {
                low[u] = std::min(low[u], disc[v]);
                if (collect_blocks) estack.emplace_back(u, v);
            }
        }
    }
};

} // namespace

std::vector<std::pair<Vertex, Vertex>> bridges(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("bridges: disconnected input");
    LowLink ll(g);
    if (g.vertex_count() > 0) ll.dfs(0);
    std::sort(ll.bridge_list.begin(), ll.bridge_list.end());
    return ll.bridge_list;
}

std::vector<std::vector<Vertex>> biconnected_components(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("biconnected_components: disconnected input");
    LowLink ll(g);
    ll.collect_blocks = true;
    if (g.vertex_count() > 0) ll.dfs(0);
    std::sort(ll.blocks.begin(), ll.blocks.end());
    return ll.blocks;
}

std::vector<std::vector<Vertex>> monochromatic_components(const Graph& g, const TwoColoring& c) {
    const int n = g.vertex_count();
    if (c.size() != n) throw std::invalid_argument("monochromatic_components: coloring size mismatch");
    std::vector<char> seen(n, 0);
    std::vector<std::vector<Vertex>> comps;
    for (Vertex v = 0; v < n; ++v) {
        if (seen[v]) continue;
        std::vector<char> allowed(n, 0), mark(n, 0);
        for (Vertex w = 0; w < n; ++w) allowed[w] = c.color[w] == c.color[v];
        bfs_mark(g, v, allowed, mark);
        std::vector<Vertex> comp;
        for (Vertex w = 0; w < n; ++w)
            if (mark[w]) {
                comp.push_back(w);
                seen[w] = 1;
            }
        comps.push_back(std::move(comp));
    }
    return comps;
}

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& verts) {
    assert(std::is_sorted(verts.begin(), verts.end()));
    std::vector<int> local(g.vertex_count(), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
    Graph h(static_cast<int>(verts.size()));
    for (Vertex u : verts)
        for (Vertex v : g.neighbors(u))
            if (u < v && local[v] >= 0) h.add_edge(local[u], local[v]);
    return h;
}

namespace {

bool iso_backtrack(const Graph& a, const Graph& b, std::vector<int>& map, std::vector<char>& used, int i,
                   const std::vector<Vertex>& order) {
    const int n = a.vertex_count();
    if (i == n) return true;
    Vertex u = order[i];
    for (Vertex w = 0; w < n; ++w) {
        if (used[w] || a.degree(u) != b.degree(w)) continue;
        bool ok = true;
        for (int j = 0; j < i && ok; ++j) {
            Vertex prev = order[j];
            if (a.has_edge(u, prev) != b.has_edge(w, map[prev])) ok = false;
        }
        if (!ok) continue;
        map[u] = w;
        used[w] = 1;
        if (iso_backtrack(a, b, map, used, i + 1, order)) return true;
        used[w] = 0;
    }
    return false;
}

} // namespace

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    const int n = a.vertex_count();
    std::vector<int> da, db;
    for (Vertex v = 0; v < n; ++v) da.push_back(a.degree(v));
    for (Vertex v = 0; v < n; ++v) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    if (n > 8) return a.edges() == b.edges(); // canonical comparison on identical labels
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Vertex x, Vertex y) { return a.degree(x) > a.degree(y); });
    std::vector<int> map(n, -1);
    std::vector<char> used(n, 0);
    return iso_backtrack(a, b, map, used, 0, order);
}

} // namespace contraction

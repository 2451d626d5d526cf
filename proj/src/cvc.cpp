#include "contraction/cvc.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace contraction {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

bool lex_less(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Minimum number of extra vertices connecting the pieces of G[C], and one
// optimal set of them. Dynamic program over terminal subsets with the pieces
// contracted to zero-cost terminals and every other vertex costing one.
std::optional<std::vector<Vertex>> steiner_connect(const Graph& g, const std::vector<Vertex>& cover) {
    const int n = g.vertex_count();
    auto pieces = components_within(g, cover);
    const int p = static_cast<int>(pieces.size());
    if (p <= 1) return std::vector<Vertex>{};

    std::vector<char> in_cover(n, 0);
    for (Vertex v : cover) in_cover[v] = 1;
    std::vector<Vertex> outside;
    for (Vertex v = 0; v < n; ++v)
        if (!in_cover[v]) outside.push_back(v);

    // node ids: 0..p-1 terminals (pieces), then the outside vertices
    const int nodes = p + static_cast<int>(outside.size());
    std::vector<int> node_of(n, -1);
    for (int i = 0; i < p; ++i)
        for (Vertex v : pieces[i]) node_of[v] = i;
    for (std::size_t j = 0; j < outside.size(); ++j) node_of[outside[j]] = p + static_cast<int>(j);

    std::vector<std::vector<int>> nadj(nodes);
    for (auto [u, v] : g.edges()) {
        int a = node_of[u], b = node_of[v];
        if (a == b) continue;
        nadj[a].push_back(b);
        nadj[b].push_back(a);
    }
    for (auto& lst : nadj) {
        std::sort(lst.begin(), lst.end());
        lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
    }
    auto cost = [&](int node) { return node < p ? 0 : 1; };

    const int full = (1 << p) - 1;
    std::vector<std::vector<int>> dp(full + 1, std::vector<int>(nodes, kInf));
    struct Choice {
        int kind = 0; // 0 none, 1 merge, 2 extend
        int sub = 0;  // merge: submask
        int from = 0; // extend: predecessor node
    };
    std::vector<std::vector<Choice>> how(full + 1, std::vector<Choice>(nodes));

    for (int i = 0; i < p; ++i) dp[1 << i][i] = 0;

    for (int mask = 1; mask <= full; ++mask) {
        for (int v = 0; v < nodes; ++v) {
            for (int sub = (mask - 1) & mask; sub; sub = (sub - 1) & mask) {
                if (!(sub & (mask & (-mask)))) continue; // canonical split
                int other = mask ^ sub;
                if (dp[sub][v] >= kInf || dp[other][v] >= kInf) continue;
                int val = dp[sub][v] + dp[other][v] - cost(v);
                if (val < dp[mask][v]) {
                    dp[mask][v] = val;
                    how[mask][v] = {1, sub, 0};
                }
            }
        }
        // node-weighted shortest-path closure inside this mask
        std::vector<char> done(nodes, 0);
        while (true) {
            int best = -1;
            for (int v = 0; v < nodes; ++v)
                if (!done[v] && dp[mask][v] < kInf && (best == -1 || dp[mask][v] < dp[mask][best])) best = v;
            if (best == -1) break;
            done[best] = 1;
            for (int w : nadj[best]) {
                int val = dp[mask][best] + cost(w);
                if (val < dp[mask][w]) {
                    dp[mask][w] = val;
                    how[mask][w] = {2, 0, best};
                }
            }
        }
    }

    int best_node = -1;
    for (int v = 0; v < nodes; ++v)
        if (dp[full][v] < kInf && (best_node == -1 || dp[full][v] < dp[full][best_node])) best_node = v;
    if (best_node == -1) return std::nullopt;

    std::vector<Vertex> extra;
    std::vector<std::pair<int, int>> stack{{full, best_node}};
    while (!stack.empty()) {
        auto [mask, v] = stack.back();
        stack.pop_back();
        if (v >= p) extra.push_back(outside[v - p]);
        const Choice& c = how[mask][v];
        if (c.kind == 1) {
            stack.emplace_back(c.sub, v);
            stack.emplace_back(mask ^ c.sub, v);
        } else if (c.kind == 2) {
            stack.emplace_back(mask, c.from);
        }
    }
    std::sort(extra.begin(), extra.end());
    extra.erase(std::unique(extra.begin(), extra.end()), extra.end());
    return extra;
}

struct BranchState {
    const Graph& g;
    std::vector<std::pair<Vertex, Vertex>> edges;
    int upper_bound;
    std::vector<char> chosen, excluded;
    std::vector<Vertex> current;
    std::optional<std::pair<int, std::vector<Vertex>>> best;

    void offer(std::vector<Vertex> candidate) {
        std::sort(candidate.begin(), candidate.end());
        int size = static_cast<int>(candidate.size());
        if (size > upper_bound) return;
        if (!best || size < best->first || (size == best->first && lex_less(candidate, best->second)))
            best = {size, std::move(candidate)};
    }

    void leaf() {
        if (!is_connected_subset(g, current) || current.empty()) {
            if (current.empty()) return;
            auto extra = steiner_connect(g, current);
            if (!extra) return;
            std::vector<Vertex> candidate = current;
            candidate.insert(candidate.end(), extra->begin(), extra->end());
            offer(std::move(candidate));
        } else {
            offer(current);
        }
    }

    void branch() {
        if (static_cast<int>(current.size()) > upper_bound) return;
        if (best && static_cast<int>(current.size()) > best->first) return;
        Vertex bu = -1, bv = -1;
        for (auto [u, v] : edges)
            if (!chosen[u] && !chosen[v]) {
                bu = u;
                bv = v;
                break;
            }
        if (bu == -1) {
            leaf();
            return;
        }
        if (!excluded[bu]) {
            chosen[bu] = 1;
            current.push_back(bu);
            branch();
            current.pop_back();
            chosen[bu] = 0;
        }
        if (!excluded[bv]) {
            excluded[bu] = 1;
            chosen[bv] = 1;
            current.push_back(bv);
            branch();
            current.pop_back();
            chosen[bv] = 0;
            excluded[bu] = 0;
        }
    }
};

} // namespace

namespace detail {

std::optional<std::pair<int, std::vector<Vertex>>> min_cvc_subsets(const Graph& g, int upper_bound) {
    const int n = g.vertex_count();
    auto edges = g.edges();
    if (edges.empty()) return std::make_pair(0, std::vector<Vertex>{});
    // sizes ascending, so the first feasible size is the minimum
    for (int size = 1; size <= std::min(upper_bound, n); ++size) {
        std::optional<std::vector<Vertex>> best;
        std::uint32_t mask = (1u << size) - 1;
        const std::uint32_t limit = 1u << n;
        while (mask < limit) {
            bool covers = true;
            for (auto [u, v] : edges)
                if (!((mask >> u) & 1) && !((mask >> v) & 1)) {
                    covers = false;
                    break;
                }
            if (covers) {
                std::vector<Vertex> set;
                for (int v = 0; v < n; ++v)
                    if ((mask >> v) & 1) set.push_back(v);
                if (is_connected_subset(g, set) && (!best || lex_less(set, *best))) best = std::move(set);
            }
            std::uint32_t c = mask & (~mask + 1), r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
        if (best) return std::make_pair(size, std::move(*best));
    }
    return std::nullopt;
}

std::optional<std::pair<int, std::vector<Vertex>>> min_cvc_branching(const Graph& g, int upper_bound) {
    auto edges = g.edges();
    if (edges.empty()) return std::make_pair(0, std::vector<Vertex>{});
    BranchState st{g, std::move(edges), upper_bound, std::vector<char>(g.vertex_count(), 0),
                   std::vector<char>(g.vertex_count(), 0), {}, std::nullopt};
    st.branch();
    return st.best;
}

} // namespace detail

std::optional<std::pair<int, std::vector<Vertex>>> min_cvc(const Graph& g, int upper_bound) {
    if (!is_connected(g)) throw std::invalid_argument("min_cvc: disconnected input");
    if (upper_bound < 0) return std::nullopt;
    if (g.vertex_count() <= 15) return detail::min_cvc_subsets(g, upper_bound);
    return detail::min_cvc_branching(g, upper_bound);
}

} // namespace contraction

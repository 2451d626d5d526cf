#include "contraction/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "contraction/common.hpp"

namespace contraction {

namespace {

constexpr int kOracleVertexGuard = 12;

// What a ForestScan visitor wants next.
enum class Step { abort, descend, prune };

// Enumerates edge subsets F that are forests (cycle edges are never added,
// so every partition into contracted parts is visited exactly once) and
// reports each one. Contracting F costs |F|.
class ForestScan {
public:
    explicit ForestScan(const Graph& g)
        : g_(g), n_(g.vertex_count()), parent_(n_), label_(n_), edges_(g.edges()),
          pair_stamp_(static_cast<std::size_t>(n_) * n_, 0), deg_(n_) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    // visit(forest_size) is called for every forest; it steers the search.
    template <typename Visit>
    void scan(int max_edges, Visit&& visit) {
        dfs(0, 0, max_edges, visit);
    }

    int find(int x) const {
        while (parent_[x] != x) x = parent_[x];
        return x;
    }

    struct Shape {
        int parts = 0;
        int cross_pairs = 0;
        bool max_degree_le2 = true;
        int degree_one = 0;
    };

    // Quotient statistics of the current partition.
    Shape shape() {
        ++stamp_;
        int parts = 0;
        for (int v = 0; v < n_; ++v) {
            int r = find(v);
            if (v == r) label_[v] = parts++;
        }
        Shape s;
        s.parts = parts;
        std::fill(deg_.begin(), deg_.begin() + parts, 0);
        for (auto [u, v] : edges_) {
            int a = label_[find(u)], b = label_[find(v)];
            if (a == b) continue;
            auto& cell = pair_stamp_[static_cast<std::size_t>(std::min(a, b)) * n_ + std::max(a, b)];
            if (cell == stamp_) continue;
            cell = stamp_;
            ++s.cross_pairs;
            ++deg_[a];
            ++deg_[b];
        }
        for (int i = 0; i < parts; ++i) {
            if (deg_[i] > 2) s.max_degree_le2 = false;
            if (deg_[i] == 1) ++s.degree_one;
        }
        return s;
    }

    // Cheap acyclicity test: stop counting pairs once a cycle is certain.
    bool quotient_acyclic(int component_count) {
        ++stamp_;
        int parts = 0;
        for (int v = 0; v < n_; ++v) {
            int r = find(v);
            if (v == r) label_[v] = parts++;
        }
        const int budget = parts - component_count;
        int cross = 0;
        for (auto [u, v] : edges_) {
            int a = label_[find(u)], b = label_[find(v)];
            if (a == b) continue;
            auto& cell = pair_stamp_[static_cast<std::size_t>(std::min(a, b)) * n_ + std::max(a, b)];
            if (cell == stamp_) continue;
            cell = stamp_;
            if (++cross > budget) return false;
        }
        return cross == budget;
    }

private:
    template <typename Visit>
    bool dfs(std::size_t idx, int size, int max_edges, Visit&& visit) {
        Step step = visit(size);
        if (step == Step::abort) return false;
        if (step == Step::prune || size == max_edges) return true;
        for (std::size_t i = idx; i < edges_.size(); ++i) {
            int ru = find(edges_[i].first), rv = find(edges_[i].second);
            if (ru == rv) continue;
            parent_[ru] = rv;
            bool keep_going = dfs(i + 1, size + 1, max_edges, visit);
            parent_[ru] = ru;
            if (!keep_going) return false;
        }
        return true;
    }

    const Graph& g_;
    int n_;
    std::vector<int> parent_, label_;
    std::vector<std::pair<Vertex, Vertex>> edges_;
    std::vector<std::uint32_t> pair_stamp_;
    std::vector<int> deg_;
    std::uint32_t stamp_ = 0;
};

void guard_vertices(const Graph& g, const char* who) {
    if (g.vertex_count() > kOracleVertexGuard)
        throw input_too_large(std::string(who) + ": refusing n > 12");
}

int min_tree_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 2) return 0;
    int best = n - 1; // contracting everything to one vertex always works
    ForestScan scan(g);
    scan.scan(n - 1, [&](int size) {
        if (size < best && scan.quotient_acyclic(1)) best = size;
        return size + 1 < best ? Step::descend : Step::prune;
    });
    return best;
}

} // namespace

std::optional<int> min_contractions_to_path(const Graph& g) {
    guard_vertices(g, "min_contractions_to_path");
    if (!is_connected(g)) return std::nullopt;
    if (is_path_graph(g)) return 0;
    const int n = g.vertex_count();
    int best = n - 1;
    ForestScan scan(g);
    scan.scan(n - 1, [&](int size) {
        if (size < best) {
            auto q = scan.shape();
            bool path = q.cross_pairs == q.parts - 1 && q.max_degree_le2 && (q.parts <= 2 || q.degree_one == 2);
            if (path) best = size;
        }
        return size + 1 < best ? Step::descend : Step::prune;
    });
    return best;
}

int min_contractions_to_tree(const Graph& g) {
    guard_vertices(g, "min_contractions_to_tree");
    int total = 0;
    for (const auto& comp : connected_components(g)) total += min_tree_connected(induced_subgraph(g, comp));
    return total;
}

bool tree_contractible_within(const Graph& g, int k) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    if (k >= n - 1) return true;
    // rough visit-count estimate: sum of C(m, c) for c <= k
    double work = 1, term = 1;
    for (int c = 1; c <= k; ++c) {
        term *= static_cast<double>(m - c + 1) / c;
        work += term;
    }
    if (work > 3e8) throw input_too_large("tree_contractible_within: search space too large");

    const int comp_count = static_cast<int>(connected_components(g).size());
    bool found = false;
    ForestScan scan(g);
    scan.scan(k, [&](int size) {
        (void)size;
        if (scan.quotient_acyclic(comp_count)) {
            found = true;
            return Step::abort;
        }
        return Step::descend;
    });
    return found;
}

int min_cvc_bruteforce(const Graph& g) {
    guard_vertices(g, "min_cvc_bruteforce");
    if (!is_connected(g)) throw std::invalid_argument("min_cvc_bruteforce: disconnected input");
    const int n = g.vertex_count();
    auto edges = g.edges();
    if (edges.empty()) return 0;
    for (int size = 1; size <= n; ++size) {
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            if (std::popcount(mask) != size) continue;
            bool covers = true;
            for (auto [u, v] : edges)
                if (!((mask >> u) & 1) && !((mask >> v) & 1)) {
                    covers = false;
                    break;
                }
            if (!covers) continue;
            std::vector<Vertex> set;
            for (int v = 0; v < n; ++v)
                if ((mask >> v) & 1) set.push_back(v);
            if (is_connected_subset(g, set)) return size;
        }
    }
    return n;
}

namespace {

// All set partitions of {0..n-1} via restricted growth strings.
template <typename Fn>
void for_each_partition(int n, Fn&& fn) {
    if (n == 0) return;
    std::vector<int> assign(n, 0);
    std::vector<int> max_prefix(n, 0);
    auto emit = [&]() {
        int parts = *std::max_element(assign.begin(), assign.end()) + 1;
        std::vector<std::vector<Vertex>> out(parts);
        for (int v = 0; v < n; ++v) out[assign[v]].push_back(v);
        fn(out);
    };
    while (true) {
        emit();
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

} // namespace

int min_shatter_bruteforce(const Graph& gx, const std::vector<Vertex>& L, const std::vector<Vertex>& R) {
    const int n = gx.vertex_count();
    if (n > 8) throw input_too_large("min_shatter_bruteforce: refusing |X| > 8");
    if (!is_connected(gx)) throw std::invalid_argument("min_shatter_bruteforce: disconnected input");
    std::vector<char> inL(n, 0), inR(n, 0);
    for (Vertex v : L) inL[v] = 1;
    for (Vertex v : R) inR[v] = 1;

    int best = n; // {X} itself is always a shatter
    for_each_partition(n, [&](const std::vector<std::vector<Vertex>>& parts) {
        int big = 0, largest = 1;
        for (const auto& p : parts)
            if (p.size() > 1) {
                ++big;
                largest = std::max<int>(largest, static_cast<int>(p.size()));
            }
        if (big > 1 || largest >= best) return;
        for (const auto& p : parts)
            if (!is_connected_subset(gx, p)) return;

        const int t = static_cast<int>(parts.size());
        std::vector<int> order(t);
        std::iota(order.begin(), order.end(), 0);
        std::vector<std::vector<char>> adj(t, std::vector<char>(t, 0));
        std::vector<int> part_of(n);
        for (int i = 0; i < t; ++i)
            for (Vertex v : parts[i]) part_of[v] = i;
        for (auto [u, v] : gx.edges())
            if (part_of[u] != part_of[v]) adj[part_of[u]][part_of[v]] = adj[part_of[v]][part_of[u]] = 1;

        do {
            bool ok = true;
            for (int i = 0; i < t - 1 && ok; ++i)
                if (!adj[order[i]][order[i + 1]]) ok = false;
            for (int i = 0; i < t && ok; ++i)
                for (int j = i + 2; j < t && ok; ++j)
                    if (adj[order[i]][order[j]]) ok = false;
            if (ok) {
                for (Vertex v = 0; v < n && ok; ++v) {
                    if (inL[v] && part_of[v] != order[0]) ok = false;
                    if (inR[v] && part_of[v] != order[t - 1]) ok = false;
                }
                if (ok) best = std::min(best, largest);
            }
        } while (std::next_permutation(order.begin(), order.end()));
    });
    return best;
}

bool rbds_bruteforce(int a_size, int b_size, const std::vector<std::pair<int, int>>& edges, int t) {
    if (b_size > 20) throw input_too_large("rbds_bruteforce: refusing |B| > 20");
    if (a_size == 0) return true;
    std::vector<std::uint32_t> covers(b_size, 0);
    for (auto [a, b] : edges) {
        if (a < 0 || a >= a_size || b < 0 || b >= b_size) throw std::invalid_argument("rbds_bruteforce: bad edge");
        covers[b] |= 1u << a;
    }
    const std::uint32_t full = (1u << a_size) - 1;
    for (std::uint32_t mask = 0; mask < (1u << b_size); ++mask) {
        if (std::popcount(mask) > t) continue;
        std::uint32_t dominated = 0;
        for (int b = 0; b < b_size; ++b)
            if ((mask >> b) & 1) dominated |= covers[b];
        if (dominated == full) return true;
    }
    return false;
}

} // namespace contraction

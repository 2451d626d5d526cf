#include "contraction/path_solver.hpp"

#include <algorithm>
#include <cassert>

#include "contraction/universal.hpp"

namespace contraction {

std::optional<OrderedComponents> order_components(const Graph& g, const TwoColoring& c) {
    if (!is_connected(g)) throw std::invalid_argument("order_components: disconnected input");
    auto comps = monochromatic_components(g, c);
    const int r = static_cast<int>(comps.size());
    const int n = g.vertex_count();

    std::vector<int> comp_of(n, -1);
    for (int i = 0; i < r; ++i)
        for (Vertex v : comps[i]) comp_of[v] = i;

    std::vector<std::vector<char>> adj(r, std::vector<char>(r, 0));
    int quotient_edges = 0;
    for (auto [u, v] : g.edges()) {
        int a = comp_of[u], b = comp_of[v];
        if (a == b || adj[a][b]) continue;
        adj[a][b] = adj[b][a] = 1;
        ++quotient_edges;
    }
    std::vector<int> deg(r, 0);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) deg[i] += adj[i][j];

    // g connected => quotient connected; a path iff it is a tree of max degree 2
    if (quotient_edges != r - 1) return std::nullopt;
    for (int i = 0; i < r; ++i)
        if (deg[i] > 2) return std::nullopt;

    std::vector<int> order;
    if (r == 1) {
        order.push_back(0);
    } else {
        int start = -1;
        for (int i = 0; i < r; ++i)
            if (deg[i] == 1) {
                start = i;
                break;
            } // components are listed by smallest vertex, so this pick is canonical
        order.push_back(start);
        int prev = -1, cur = start;
        while (static_cast<int>(order.size()) < r) {
            int next = -1;
            for (int j = 0; j < r; ++j)
                if (adj[cur][j] && j != prev) next = j;
            order.push_back(next);
            prev = cur;
            cur = next;
        }
    }

    OrderedComponents oc;
    oc.components.resize(r);
    oc.left_boundary.resize(r);
    oc.right_boundary.resize(r);
    for (int pos = 0; pos < r; ++pos) oc.components[pos] = comps[order[pos]];
    for (int pos = 0; pos < r; ++pos) {
        auto boundary_toward = [&](int other_pos) {
            std::vector<Vertex> b;
            if (other_pos < 0 || other_pos >= r) return b;
            std::vector<char> in_other(n, 0);
            for (Vertex v : oc.components[other_pos]) in_other[v] = 1;
            for (Vertex v : oc.components[pos])
                for (Vertex w : g.neighbors(v))
                    if (in_other[w]) {
                        b.push_back(v);
                        break;
                    }
            return b;
        };
        oc.left_boundary[pos] = boundary_toward(pos - 1);
        oc.right_boundary[pos] = boundary_toward(pos + 1);
    }
    return oc;
}

namespace {

// H[chain] must be an induced path hanging off `anchor`: the anchor is
// adjacent to exactly one chain vertex, which starts the path. Returns the
// chain ordered from the anchor outward.
std::optional<std::vector<int>> hang_chain(const Graph& h, int anchor, const std::vector<int>& chain) {
    if (chain.empty()) return std::vector<int>{};
    std::vector<char> in_chain(h.vertex_count(), 0);
    for (int v : chain) in_chain[v] = 1;
    int start = -1;
    for (int v : h.neighbors(anchor))
        if (in_chain[v]) {
            if (start != -1) return std::nullopt;
            start = v;
        }
    if (start == -1) return std::nullopt;

    std::vector<int> order{start};
    std::vector<char> used(h.vertex_count(), 0);
    used[start] = 1;
    int cur = start, prev = -1;
    while (true) {
        int next = -1, forward = 0;
        for (int w : h.neighbors(cur))
            if (in_chain[w] && w != prev) {
                ++forward;
                next = w;
            }
        if (forward == 0) break;
        if (forward > 1 || used[next]) return std::nullopt;
        used[next] = 1;
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    if (order.size() != chain.size()) return std::nullopt;
    return order;
}

std::vector<int> path_order_of(const Graph& h) {
    const int n = h.vertex_count();
    if (n == 1) return {0};
    int start = -1;
    for (int v = 0; v < n; ++v)
        if (h.degree(v) == 1) {
            start = v;
            break;
        }
    std::vector<int> order{start};
    int prev = -1, cur = start;
    while (static_cast<int>(order.size()) < n) {
        int next = -1;
        for (int w : h.neighbors(cur))
            if (w != prev) next = w;
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    return order;
}

} // namespace

Shatter min_shatter(const Graph& g, const OrderedComponents& oc, int index) {
    const auto& X = oc.components[index];
    Graph h = induced_subgraph(g, X);
    const int nx = h.vertex_count();

    std::vector<int> local_of(g.vertex_count(), -1);
    for (int i = 0; i < nx; ++i) local_of[X[i]] = i;
    std::vector<int> L, R; // local ids
    for (Vertex v : oc.left_boundary[index]) L.push_back(local_of[v]);
    for (Vertex v : oc.right_boundary[index]) R.push_back(local_of[v]);

    auto only = [](const std::vector<int>& set, int v) {
        return std::all_of(set.begin(), set.end(), [&](int w) { return w == v; });
    };
    auto inside = [&](const std::vector<int>& set, const std::vector<char>& mark) {
        return std::all_of(set.begin(), set.end(), [&](int w) { return mark[w]; });
    };
    auto mark_of = [&](const std::vector<int>& verts) {
        std::vector<char> m(nx, 0);
        for (int v : verts) m[v] = 1;
        return m;
    };

    // type (ii) fallback: the component as a single part
    int best_size = nx;
    std::vector<std::vector<int>> best_parts;
    {
        std::vector<int> all(nx);
        for (int i = 0; i < nx; ++i) all[i] = i;
        best_parts.push_back(std::move(all));
    }
    auto consider = [&](int size, std::vector<std::vector<int>> parts) {
        if (size < best_size) {
            best_size = size;
            best_parts = std::move(parts);
        }
    };

    // type (i): everything singleton; needs H to be a path with the
    // boundaries at its two ends (either orientation)
    if (best_size > 1 && is_path_graph(h)) {
        auto order = path_order_of(h);
        for (int pass = 0; pass < 2; ++pass) {
            if (only(L, order.front()) && only(R, order.back())) {
                std::vector<std::vector<int>> parts;
                for (int v : order) parts.push_back({v});
                consider(1, std::move(parts));
                break;
            }
            std::reverse(order.begin(), order.end());
        }
    }

    // types (iii)/(iv): one big part at an end, a singleton chain to the
    // other end. `toward_right` distinguishes which boundary the chain serves.
    auto end_big = [&](bool toward_right) {
        const auto& near_bound = toward_right ? L : R; // inside the big part
        const auto& far_bound = toward_right ? R : L;  // at the chain's end
        for (int v = 0; v < nx; ++v) {
            std::vector<int> rest;
            for (int w = 0; w < nx; ++w)
                if (w != v) rest.push_back(w);
            if (rest.empty()) continue;
            auto comps = components_within(h, rest);
            if (comps.size() == 1) {
                const auto& big = comps[0];
                if (!inside(near_bound, mark_of(big)) || !only(far_bound, v)) continue;
                std::vector<std::vector<int>> parts{big, {v}};
                if (!toward_right) std::reverse(parts.begin(), parts.end());
                consider(static_cast<int>(big.size()), std::move(parts));
            } else if (comps.size() == 2) {
                for (int pick = 0; pick < 2; ++pick) {
                    const auto& big = comps[pick];
                    const auto& tail = comps[1 - pick];
                    auto chain = hang_chain(h, v, tail);
                    if (!chain) continue;
                    int far = chain->back();
                    if (!inside(near_bound, mark_of(big)) || !only(far_bound, far)) continue;
                    std::vector<std::vector<int>> parts{big, {v}};
                    for (int w : *chain) parts.push_back({w});
                    if (!toward_right) std::reverse(parts.begin(), parts.end());
                    consider(static_cast<int>(big.size()), std::move(parts));
                }
            }
        }
    };
    end_big(true);  // big part first, chain toward R
    end_big(false); // big part last, chain toward L

    // type (v): big part strictly inside, hanging chains on both sides.
    // x and y are the big part's singleton neighbors (possibly the far ends
    // themselves when a chain has length one).
    for (int x = 0; x < nx; ++x) {
        for (int y = 0; y < nx; ++y) {
            if (x == y || h.has_edge(x, y)) continue;
            std::vector<int> rest;
            for (int w = 0; w < nx; ++w)
                if (w != x && w != y) rest.push_back(w);
            if (rest.empty()) continue;
            auto comps = components_within(h, rest);
            int big_idx = -1;
            int left_idx = -1, right_idx = -1;
            bool bad = false;
            for (int ci = 0; ci < static_cast<int>(comps.size()) && !bad; ++ci) {
                bool ax = false, ay = false;
                for (int w : comps[ci]) {
                    if (h.has_edge(w, x)) ax = true;
                    if (h.has_edge(w, y)) ay = true;
                }
                if (ax && ay) {
                    if (big_idx != -1) bad = true;
                    big_idx = ci;
                } else if (ax) {
                    if (left_idx != -1) bad = true;
                    left_idx = ci;
                } else if (ay) {
                    if (right_idx != -1) bad = true;
                    right_idx = ci;
                } else {
                    bad = true;
                }
            }
            if (bad || big_idx == -1) continue;
            const auto& big = comps[big_idx];
            if (static_cast<int>(big.size()) >= best_size) continue;
            auto chainL = hang_chain(h, x, left_idx == -1 ? std::vector<int>{} : comps[left_idx]);
            auto chainR = hang_chain(h, y, right_idx == -1 ? std::vector<int>{} : comps[right_idx]);
            if (!chainL || !chainR) continue;
            int farL = chainL->empty() ? x : chainL->back();
            int farR = chainR->empty() ? y : chainR->back();
            if (!only(L, farL) || !only(R, farR)) continue;
            std::vector<std::vector<int>> parts;
            for (auto it = chainL->rbegin(); it != chainL->rend(); ++it) parts.push_back({*it});
            parts.push_back({x});
            parts.push_back(big);
            parts.push_back({y});
            for (int w : *chainR) parts.push_back({w});
            consider(static_cast<int>(big.size()), std::move(parts));
        }
    }

    Shatter s;
    s.size = best_size;
    for (auto& p : best_parts) {
        std::vector<Vertex> global;
        global.reserve(p.size());
        for (int v : p) global.push_back(X[v]);
        std::sort(global.begin(), global.end());
        s.parts.push_back(std::move(global));
    }
    return s;
}

std::optional<WitnessStructure> extract_path_witness(const Graph& g, const TwoColoring& c) {
    auto oc = order_components(g, c);
    if (!oc) return std::nullopt;
    WitnessStructure ws;
    for (int i = 0; i < static_cast<int>(oc->components.size()); ++i) {
        Shatter s = min_shatter(g, *oc, i);
        for (auto& p : s.parts) ws.parts.push_back(std::move(p));
    }
    return ws;
}

namespace {

// Undo one bridge contraction inside an ordered path witness: the part
// holding the merged vertex splits into its two bridge sides, oriented to
// match the neighboring parts.
WitnessStructure lift_one_step(const KernelStep& step, const WitnessStructure& after) {
    const Graph& gb = step.before;
    const int nb = gb.vertex_count();

    std::vector<std::vector<Vertex>> parts(after.parts.size());
    std::vector<int> part_of_new(nb > 0 ? step.map.new_count : 0, -1);
    for (std::size_t i = 0; i < after.parts.size(); ++i)
        for (Vertex v : after.parts[i]) part_of_new[v] = static_cast<int>(i);
    for (Vertex w = 0; w < nb; ++w) parts[part_of_new[step.map.to_new[w]]].push_back(w);

    const int merged_idx = part_of_new[step.map.to_new[step.u]];

    // the two sides of the bridge in the pre-contraction graph
    std::vector<char> side_u(nb, 0);
    {
        std::vector<Vertex> stack{step.u};
        side_u[step.u] = 1;
        while (!stack.empty()) {
            Vertex a = stack.back();
            stack.pop_back();
            for (Vertex b : gb.neighbors(a)) {
                if (a == step.u && b == step.v) continue;
                if (!side_u[b]) {
                    side_u[b] = 1;
                    stack.push_back(b);
                }
            }
        }
    }

    std::vector<Vertex> wl, wr;
    for (Vertex w : parts[merged_idx]) (side_u[w] ? wl : wr).push_back(w);

    bool u_side_first = true;
    if (merged_idx > 0)
        u_side_first = side_u[parts[merged_idx - 1].front()] != 0;
    else if (parts.size() > 1)
        u_side_first = side_u[parts[merged_idx + 1].front()] == 0;

    WitnessStructure out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (static_cast<int>(i) == merged_idx) {
            out.parts.push_back(u_side_first ? wl : wr);
            out.parts.push_back(u_side_first ? wr : wl);
        } else {
            out.parts.push_back(parts[i]);
        }
    }
    for (auto& p : out.parts) std::sort(p.begin(), p.end());
    return out;
}

} // namespace

WitnessStructure lift_through_kernel(const KernelResult& kr, const WitnessStructure& reduced_witness) {
    WitnessStructure ws = reduced_witness;
    for (auto it = kr.steps.rbegin(); it != kr.steps.rend(); ++it) ws = lift_one_step(*it, ws);
    return ws;
}

namespace {

std::optional<Verdict> path_front_checks(const Graph& g) {
    if (g.vertex_count() == 0) throw std::invalid_argument("solve_path: empty graph");
    if (!is_connected(g)) {
        Verdict v;
        v.answer = false;
        v.reason = "disconnected input cannot contract to a path";
        return v;
    }
    if (is_path_graph(g)) {
        Verdict v;
        v.answer = true;
        v.witness = singleton_witness(g.vertex_count());
        v.contractions_used = 0;
        return v;
    }
    return std::nullopt;
}

std::optional<Verdict> attempt_coloring(const Graph& g, const KernelResult& kr, const TwoColoring& c, int k) {
    auto ws = extract_path_witness(kr.reduced, c);
    if (!ws) return std::nullopt;
    int cost = kr.reduced.vertex_count() - ws->part_count();
    if (cost > k) return std::nullopt;
    WitnessStructure lifted = lift_through_kernel(kr, *ws);
    if (!verify_witness(g, lifted, TargetShape::path, k))
        throw std::logic_error("solve_path: lifted witness failed verification");
    Verdict v;
    v.answer = true;
    v.contractions_used = g.vertex_count() - lifted.part_count();
    assert(v.contractions_used == cost);
    v.witness = std::move(lifted);
    return v;
}

} // namespace

Verdict solve_path_randomized(const Graph& g, int k, std::uint64_t seed) {
    if (auto v = path_front_checks(g)) return *v;
    KernelResult kr = kernelize(g, k);
    Verdict out;
    if (kr.decided_no) {
        out.reason = "reduced graph exceeds the size bound";
        return out;
    }
    const int nr = kr.reduced.vertex_count();
    const std::uint64_t budget = std::min(saturating_pow2(2LL * k), saturating_pow2(nr));
    std::mt19937_64 rng(seed);
    for (std::uint64_t i = 0; i < budget; ++i) {
        TwoColoring c = TwoColoring::random(nr, rng);
        ++out.trials;
        if (auto v = attempt_coloring(g, kr, c, k)) {
            v->trials = out.trials;
            return *v;
        }
    }
    return out;
}

Verdict solve_path_deterministic(const Graph& g, int k) {
    if (auto v = path_front_checks(g)) return *v;
    KernelResult kr = kernelize(g, k);
    Verdict out;
    if (kr.decided_no) {
        out.reason = "reduced graph exceeds the size bound";
        return out;
    }
    const int nr = kr.reduced.vertex_count();
    const UniversalFamily& fam = universal_family_cached(nr, std::min(2 * k, nr));
    for (const TwoColoring& c : fam.members) {
        ++out.trials;
        if (auto v = attempt_coloring(g, kr, c, k)) {
            v->trials = out.trials;
            return *v;
        }
    }
    return out;
}

} // namespace contraction

#include "contraction/tree_solver.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>

#include "contraction/cvc.hpp"
#include "contraction/universal.hpp"

namespace contraction {

std::vector<Vertex> boundary(const Graph& g, const std::vector<Vertex>& X) {
    std::vector<char> in_x(g.vertex_count(), 0);
    for (Vertex v : X) in_x[v] = 1;
    std::vector<Vertex> b;
    for (Vertex v : X)
        for (Vertex w : g.neighbors(v))
            if (!in_x[w]) {
                b.push_back(v);
                break;
            }
    return b;
}

std::optional<StarShatter> min_star_shatter(const Graph& g, const std::vector<Vertex>& X, int d) {
    if (X.size() < 2) throw std::invalid_argument("min_star_shatter: |X| >= 2 required");
    Graph h = induced_subgraph(g, X);
    const int nx = h.vertex_count();
    if (!is_connected(h)) throw std::invalid_argument("min_star_shatter: G[X] disconnected");
    if (d < 1) return std::nullopt;

    std::vector<int> local_of(g.vertex_count(), -1);
    for (int i = 0; i < nx; ++i) local_of[X[i]] = i;

    // pendant-augmented auxiliary graph: one new leaf per boundary vertex
    auto hat = boundary(g, X);
    Graph aux(nx + static_cast<int>(hat.size()));
    for (auto [u, v] : h.edges()) aux.add_edge(u, v);
    for (std::size_t j = 0; j < hat.size(); ++j) aux.add_edge(local_of[hat[j]], nx + static_cast<int>(j));

    auto cover = min_cvc(aux, d);
    if (!cover) return std::nullopt;

    StarShatter s;
    std::vector<char> in_core(nx, 0);
    for (Vertex v : cover->second) {
        // a minimum cover never takes a pendant leaf: its neighbor does the job
        if (v >= nx) throw std::logic_error("min_star_shatter: cover picked a pendant");
        in_core[v] = 1;
        s.core.push_back(X[v]);
    }
    for (Vertex v : hat)
        if (!in_core[local_of[v]]) throw std::logic_error("min_star_shatter: boundary vertex left out of the core");
    std::sort(s.core.begin(), s.core.end());
    s.parts.push_back(s.core);
    for (int i = 0; i < nx; ++i)
        if (!in_core[i]) s.parts.push_back({X[i]});
    return s;
}

std::optional<WitnessStructure> extract_tree_witness(const Graph& g, const TwoColoring& c, int d) {
    if (!is_connected(g)) throw std::invalid_argument("extract_tree_witness: disconnected input");
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
    // g connected => quotient connected; a tree iff it has r-1 edges
    if (quotient_edges != r - 1) return std::nullopt;

    WitnessStructure ws;
    for (const auto& comp : comps) {
        if (comp.size() == 1) {
            ws.parts.push_back(comp);
            continue;
        }
        auto ss = min_star_shatter(g, comp, d);
        if (!ss) return std::nullopt;
        for (auto& p : ss->parts) ws.parts.push_back(std::move(p));
    }
    return ws;
}

namespace {

struct BlockOutcome {
    int cost = 0;
    WitnessStructure witness; // in block-local ids
};

// Minimum contractions turning one block into a tree, searched within
// `budget`. Randomized mode follows the d-loop trial schedule; deterministic
// mode sweeps a universal family once with the cap at its maximum.
std::optional<BlockOutcome> solve_block(const Graph& bg, int budget, SolveMode mode, std::mt19937_64& rng,
                                        std::uint64_t& calls) {
    const int nb = bg.vertex_count();
    std::optional<BlockOutcome> best;

    auto try_coloring = [&](const TwoColoring& c, int d) {
        ++calls;
        auto ws = extract_tree_witness(bg, c, d);
        if (!ws) return false;
        int cost = nb - ws->part_count();
        if (!best || cost < best->cost) best = BlockOutcome{cost, std::move(*ws)};
        return best->cost <= 1; // a block with a cycle can never do better
    };

    if (mode == SolveMode::randomized) {
        bool stop = false;
        for (int d = 1; d <= budget + 1 && !stop; ++d) {
            std::uint64_t count = saturating_pow2(2LL * budget - d - 2);
            for (std::uint64_t i = 0; i < count && !stop; ++i)
                stop = try_coloring(TwoColoring::random(nb, rng), d);
        }
    } else {
        const int t = std::min(nb, 2 * budget);
        const UniversalFamily& fam = universal_family_cached(nb, t);
        const int d = budget + 1;
        for (const TwoColoring& c : fam.members)
            if (try_coloring(c, d)) break;
    }

    if (!best || best->cost > budget) return std::nullopt;
    return best;
}

// Union parts that share a vertex (cut vertices tie blocks together).
std::vector<std::vector<Vertex>> merge_shared(int n, const std::vector<std::vector<Vertex>>& parts) {
    std::vector<int> root(parts.size());
    std::iota(root.begin(), root.end(), 0);
    std::function<int(int)> find = [&](int x) { return root[x] == x ? x : root[x] = find(root[x]); };
    std::vector<int> owner(n, -1);
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (Vertex v : parts[i]) {
            if (owner[v] == -1)
                owner[v] = static_cast<int>(i);
            else
                root[find(static_cast<int>(i))] = find(owner[v]);
        }
    std::vector<std::vector<Vertex>> merged(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        auto& dst = merged[find(static_cast<int>(i))];
        dst.insert(dst.end(), parts[i].begin(), parts[i].end());
    }
    std::vector<std::vector<Vertex>> out;
    for (auto& p : merged) {
        if (p.empty()) continue;
        std::sort(p.begin(), p.end());
        p.erase(std::unique(p.begin(), p.end()), p.end());
        out.push_back(std::move(p));
    }
    return out;
}

} // namespace

Verdict solve_tree(const Graph& g, int k, SolveMode mode, std::uint64_t seed, TreeSolveStats* stats) {
    if (g.vertex_count() == 0) throw std::invalid_argument("solve_tree: empty graph");
    std::mt19937_64 rng(seed);
    Verdict out;

    int remaining = k;
    WitnessStructure assembled;

    for (const auto& comp : connected_components(g)) {
        if (comp.size() == 1) {
            assembled.parts.push_back(comp);
            continue;
        }
        Graph cg = induced_subgraph(g, comp);
        const int nc = cg.vertex_count();

        std::vector<std::vector<Vertex>> comp_parts; // comp-local ids
        int comp_cost = 0;
        for (const auto& block : biconnected_components(cg)) {
            if (block.size() <= 2) {
                for (Vertex v : block) comp_parts.push_back({v});
                continue;
            }
            Graph bg = induced_subgraph(cg, block);
            const int budget = std::min(remaining, static_cast<int>(block.size()) - 1);
            std::uint64_t calls = 0;
            auto res = solve_block(bg, budget, mode, rng, calls);
            out.trials += calls;
            if (stats) stats->blocks.push_back({static_cast<int>(block.size()), budget, calls});
            if (!res) {
                out.reason = "some block needs more contractions than the remaining budget";
                return out;
            }
            comp_cost += res->cost;
            remaining -= res->cost;
            for (const auto& p : res->witness.parts) {
                std::vector<Vertex> translated;
                translated.reserve(p.size());
                for (Vertex v : p) translated.push_back(block[v]);
                std::sort(translated.begin(), translated.end());
                comp_parts.push_back(std::move(translated));
            }
        }

        WitnessStructure comp_ws;
        comp_ws.parts = merge_shared(nc, comp_parts);
        assert(nc - comp_ws.part_count() == comp_cost);
        if (!verify_witness(cg, comp_ws, TargetShape::tree, comp_cost))
            throw std::logic_error("solve_tree: assembled component witness failed verification");

        for (const auto& p : comp_ws.parts) {
            std::vector<Vertex> global;
            global.reserve(p.size());
            for (Vertex v : p) global.push_back(comp[v]);
            assembled.parts.push_back(std::move(global));
        }
    }

    out.answer = true;
    out.contractions_used = g.vertex_count() - assembled.part_count();
    assert(out.contractions_used <= k);
    out.witness = std::move(assembled);
    return out;
}

} // namespace contraction

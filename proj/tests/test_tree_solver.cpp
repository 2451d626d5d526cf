#include "doctest.h"

#include <random>

#include "contraction/generators.hpp"
#include "contraction/oracle.hpp"
#include "contraction/tree_solver.hpp"
#include "support.hpp"

using namespace contraction;

namespace {

TwoColoring coloring_of(std::vector<std::uint8_t> c) {
    TwoColoring t;
    t.color = std::move(c);
    return t;
}

Graph triangle() {
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    return g;
}

Graph two_triangles_shared_vertex() {
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    g.add_edge(2, 3);
    g.add_edge(3, 4);
    g.add_edge(4, 2);
    return g;
}

std::uint64_t tree_trial_ceiling(int k) {
    std::uint64_t total = 0;
    for (int d = 1; d <= k + 1; ++d) total += saturating_pow2(2LL * k - d - 2);
    return total;
}

} // namespace

TEST_CASE("boundary examples") {
    Graph c4 = gen_cycle(4);
    CHECK(boundary(c4, {0, 1, 2, 3}).empty());
    CHECK(boundary(c4, {0, 1}) == std::vector<Vertex>{0, 1});
    Graph star = gen_spider(4, 1);
    CHECK(boundary(star, {0, 1}) == std::vector<Vertex>{0});
}

TEST_CASE("min_star_shatter examples") {
    // a star component whose only boundary vertex is the center
    Graph g = gen_spider(4, 1); // center 0, leaves 1..4
    auto ss = min_star_shatter(g, {0, 1, 2, 3}, 4);
    REQUIRE(ss.has_value());
    CHECK(ss->core == std::vector<Vertex>{0});
    CHECK(ss->parts.size() == 4);

    // a path whose two endpoints both face outside: the cover must span it entirely
    Graph c4 = gen_cycle(4);
    auto p3 = min_star_shatter(c4, {0, 1, 2}, 3);
    REQUIRE(p3.has_value());
    CHECK(p3->core == std::vector<Vertex>{0, 1, 2});
    CHECK(!min_star_shatter(c4, {0, 1, 2}, 2).has_value());

    // triangle with a single boundary vertex, capped at 2
    Graph tri_tail(4);
    tri_tail.add_edge(0, 1);
    tri_tail.add_edge(1, 2);
    tri_tail.add_edge(2, 0);
    tri_tail.add_edge(0, 3);
    auto ts = min_star_shatter(tri_tail, {0, 1, 2}, 2);
    REQUIRE(ts.has_value());
    CHECK(ts->core.size() == 2);
    CHECK(std::binary_search(ts->core.begin(), ts->core.end(), 0));
}

TEST_CASE("min_star_shatter matches the subset brute force") {
    std::mt19937_64 rng(61);
    int checked = 0;
    while (checked < 250) {
        const int n = 4 + static_cast<int>(rng() % 6);
        Graph g = gen_random_connected(n, 0.35, rng);
        TwoColoring c = TwoColoring::random(n, rng);
        for (const auto& comp : monochromatic_components(g, c)) {
            if (comp.size() < 2 || comp.size() > 8) continue;
            ++checked;
            int brute = testsupport::star_shatter_bruteforce(g, comp);
            auto ss = min_star_shatter(g, comp, static_cast<int>(comp.size()));
            REQUIRE(ss.has_value());
            CHECK(static_cast<int>(ss->core.size()) == brute);
            if (brute > 1) CHECK(!min_star_shatter(g, comp, brute - 1).has_value());
        }
    }
}

TEST_CASE("extract_tree_witness examples") {
    auto ws = extract_tree_witness(triangle(), coloring_of({1, 1, 2}), 2);
    REQUIRE(ws.has_value());
    CHECK(ws->contraction_cost() == 1);
    CHECK(ws->parts == std::vector<std::vector<Vertex>>{{0, 1}, {2}});

    CHECK(!extract_tree_witness(gen_cycle(4), coloring_of({1, 2, 1, 2}), 3).has_value());

    Graph edge(2);
    edge.add_edge(0, 1);
    auto ews = extract_tree_witness(edge, coloring_of({1, 1}), 2);
    REQUIRE(ews.has_value());
    CHECK(ews->contraction_cost() <= 1);
}

TEST_CASE("solver examples") {
    CHECK(solve_tree(gen_spider(3, 2), 0, SolveMode::deterministic).answer);
    CHECK(!solve_tree(gen_cycle(5), 2, SolveMode::deterministic).answer);
    CHECK(solve_tree(gen_cycle(5), 3, SolveMode::deterministic).answer);
    CHECK(solve_tree(two_triangles_shared_vertex(), 2, SolveMode::deterministic).answer);
    CHECK(!solve_tree(two_triangles_shared_vertex(), 1, SolveMode::deterministic).answer);

    // disconnected input: per-component costs add up
    Graph two_tris(6);
    for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}}) two_tris.add_edge(u, v);
    CHECK(solve_tree(two_tris, 2, SolveMode::deterministic).answer);
    CHECK(!solve_tree(two_tris, 1, SolveMode::deterministic).answer);
}

TEST_CASE("block minima add up on small graphs") {
    for (int n = 2; n <= 7; ++n)
        for (const Graph& g : testsupport::connected_graphs_upto_iso(n)) {
            int whole = min_contractions_to_tree(g);
            int sum = 0;
            for (const auto& block : biconnected_components(g))
                sum += min_contractions_to_tree(induced_subgraph(g, block));
            CHECK(whole == sum);
        }
}

TEST_CASE("deterministic solver is exact on every small graph") {
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : testsupport::connected_graphs_upto_iso(n)) {
            int truth = min_contractions_to_tree(g);
            for (int k = 0; k < std::max(1, n); ++k) {
                Verdict v = solve_tree(g, k, SolveMode::deterministic);
                CHECK(v.answer == (truth <= k));
                if (v.answer) {
                    REQUIRE(v.witness.has_value());
                    CHECK(verify_witness(g, *v.witness, TargetShape::tree, k));
                }
            }
        }
}

TEST_CASE("deterministic solver is exact on random graphs") {
    std::mt19937_64 rng(67);
    for (int it = 0; it < 60; ++it) {
        const int n = 6 + static_cast<int>(rng() % 3);
        Graph g = gen_random_connected(n, 0.3, rng);
        int truth = min_contractions_to_tree(g);
        for (int k = 0; k <= std::min(n - 1, truth + 1); ++k)
            CHECK(solve_tree(g, k, SolveMode::deterministic).answer == (truth <= k));
    }
}

TEST_CASE("randomized mode respects the per-block trial ceiling") {
    std::mt19937_64 rng(71);
    for (int it = 0; it < 40; ++it) {
        const int n = 5 + static_cast<int>(rng() % 5);
        Graph g = gen_random_connected(n, 0.35, rng);
        int k = 1 + static_cast<int>(rng() % 4);
        TreeSolveStats stats;
        solve_tree(g, k, SolveMode::randomized, rng(), &stats);
        for (const auto& b : stats.blocks) CHECK(b.extraction_calls <= tree_trial_ceiling(k));
    }
}

TEST_CASE("randomized mode finds small certificates often") {
    int successes = 0;
    Graph g = two_triangles_shared_vertex();
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        Verdict v = solve_tree(g, 2, SolveMode::randomized, seed);
        if (v.answer) {
            ++successes;
            CHECK(verify_witness(g, *v.witness, TargetShape::tree, 2));
        }
    }
    CHECK(successes >= 20);
}

#include "doctest.h"

#include <random>

#include "contraction/cvc.hpp"
#include "contraction/generators.hpp"
#include "contraction/oracle.hpp"
#include "support.hpp"

using namespace contraction;

namespace {

void check_valid_cover(const Graph& g, const std::vector<Vertex>& cover, int ub) {
    CHECK(static_cast<int>(cover.size()) <= ub);
    for (auto [u, v] : g.edges()) {
        bool covered = std::binary_search(cover.begin(), cover.end(), u) ||
                       std::binary_search(cover.begin(), cover.end(), v);
        CHECK(covered);
    }
    if (!cover.empty()) CHECK(is_connected_subset(g, cover));
}

} // namespace

TEST_CASE("min_cvc examples") {
    auto star = min_cvc(gen_spider(3, 1), 1);
    REQUIRE(star.has_value());
    CHECK(star->first == 1);
    CHECK(star->second == std::vector<Vertex>{0});

    CHECK(!min_cvc(gen_cycle(4), 2).has_value());
    auto c4 = min_cvc(gen_cycle(4), 3);
    REQUIRE(c4.has_value());
    CHECK(c4->first == 3);

    auto p4 = min_cvc(gen_path(4), 2);
    REQUIRE(p4.has_value());
    CHECK(p4->first == 2);
    CHECK(p4->second == std::vector<Vertex>{1, 2});

    Graph disconnected(3);
    disconnected.add_edge(0, 1);
    CHECK_THROWS_AS(min_cvc(disconnected, 2), std::invalid_argument);
}

TEST_CASE("both strategies agree with the oracle on all small connected graphs") {
    for (int n = 2; n <= 7; ++n)
        for (const Graph& g : testsupport::connected_graphs_upto_iso(n)) {
            int truth = min_cvc_bruteforce(g);
            auto sub = detail::min_cvc_subsets(g, n);
            auto bra = detail::min_cvc_branching(g, n);
            REQUIRE(sub.has_value());
            REQUIRE(bra.has_value());
            CHECK(sub->first == truth);
            CHECK(bra->first == truth);
            check_valid_cover(g, sub->second, n);
            check_valid_cover(g, bra->second, n);
            // a bound below the optimum must come back empty
            if (truth > 1) {
                CHECK(!detail::min_cvc_subsets(g, truth - 1).has_value());
                CHECK(!detail::min_cvc_branching(g, truth - 1).has_value());
            }
        }
}

TEST_CASE("branching agrees with subset scan beyond the oracle guard") {
    std::mt19937_64 rng(53);
    for (int it = 0; it < 60; ++it) {
        const int n = 9 + static_cast<int>(rng() % 6); // 9..14
        Graph g = gen_random_connected(n, 0.2, rng);
        auto sub = detail::min_cvc_subsets(g, n);
        auto bra = detail::min_cvc_branching(g, n);
        REQUIRE(sub.has_value());
        REQUIRE(bra.has_value());
        CHECK(sub->first == bra->first);
        check_valid_cover(g, bra->second, n);
    }
    // a couple of instances on the branching side of the size cutoff
    for (int it = 0; it < 8; ++it) {
        const int n = 17 + static_cast<int>(rng() % 3);
        Graph g = gen_random_connected(n, 0.12, rng);
        auto sub = detail::min_cvc_subsets(g, n); // out-of-band ground truth
        REQUIRE(sub.has_value());
        auto viaapi = min_cvc(g, sub->first);
        REQUIRE(viaapi.has_value());
        CHECK(viaapi->first == sub->first);
        check_valid_cover(g, viaapi->second, sub->first);
        CHECK(!min_cvc(g, sub->first - 1).has_value());
    }
}

TEST_CASE("returned minimum covers of pendant-augmented graphs avoid degree-1 vertices") {
    std::mt19937_64 rng(59);
    for (int it = 0; it < 80; ++it) {
        const int nx = 3 + static_cast<int>(rng() % 6);
        Graph core = gen_random_connected(nx, 0.35, rng);
        int pendants = 1 + static_cast<int>(rng() % nx);
        Graph aux(nx + pendants);
        for (auto [u, v] : core.edges()) aux.add_edge(u, v);
        for (int j = 0; j < pendants; ++j) aux.add_edge(static_cast<int>(rng() % nx), nx + j);
        auto res = min_cvc(aux, nx + pendants);
        REQUIRE(res.has_value());
        for (Vertex v : res->second) CHECK(aux.degree(v) > 1);
    }
}

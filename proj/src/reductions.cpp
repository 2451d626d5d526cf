#include "contraction/reductions.hpp"

#include <istream>
#include <sstream>

#include "contraction/oracle.hpp"
#include "contraction/tree_solver.hpp"

namespace contraction {

void RbdsInstance::validate() const {
    if (a_size < 1 || b_size < 1) throw std::invalid_argument("rbds: both sides must be nonempty");
    if (t < 0 || t > a_size) throw std::invalid_argument("rbds: need 0 <= t <= |A|");
    std::vector<char> has_nbr(a_size, 0);
    for (auto [a, b] : edges) {
        if (a < 0 || a >= a_size || b < 0 || b >= b_size) throw std::invalid_argument("rbds: edge out of range");
        has_nbr[a] = 1;
    }
    for (int a = 0; a < a_size; ++a)
        if (!has_nbr[a]) throw std::invalid_argument("rbds: an A-vertex has no neighbor in B");
}

std::pair<Graph, int> rbds_to_tree_instance(const RbdsInstance& r) {
    r.validate();
    const int k = r.a_size + r.t;
    const int hub = r.a_size;
    const int b_base = r.a_size + 1;
    const int bundle_base = b_base + r.b_size;
    Graph g(r.a_size + 1 + r.b_size + r.a_size * (k + 1));
    for (auto [a, b] : r.edges) g.add_edge(a, b_base + b);
    for (int b = 0; b < r.b_size; ++b) g.add_edge(hub, b_base + b);
    for (int a = 0; a < r.a_size; ++a)
        for (int c = 0; c <= k; ++c) {
            int x = bundle_base + a * (k + 1) + c;
            g.add_edge(x, a);
            g.add_edge(x, hub);
        }
    return {std::move(g), k};
}

bool equivalence_check(const RbdsInstance& r) {
    r.validate();
    bool dominated = rbds_bruteforce(r.a_size, r.b_size, r.edges, r.t);
    auto [g, k] = rbds_to_tree_instance(r);

    bool contractible;
    if (g.vertex_count() <= 12) {
        contractible = min_contractions_to_tree(g) <= k;
    } else {
        contractible = false;
        for (std::uint64_t seed = 1; seed <= 4 && !contractible; ++seed)
            contractible = solve_tree(g, k, SolveMode::randomized, seed).answer;
        // a solver "yes" ships a verified witness; only "no" needs the full sweep
        if (!contractible) contractible = tree_contractible_within(g, k);
    }
    return dominated == contractible;
}

RbdsInstance parse_rbds_instance(std::istream& in) {
    RbdsInstance r;
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (!have_header) {
            if (ls >> r.a_size >> r.b_size >> r.t) have_header = true;
            continue;
        }
        int i, j;
        if (ls >> i >> j) r.edges.emplace_back(i, j);
    }
    if (!have_header) throw std::invalid_argument("rbds: missing '|A| |B| t' header");
    r.validate();
    return r;
}

} // namespace contraction

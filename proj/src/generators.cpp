#include "contraction/generators.hpp"

namespace contraction {

Graph gen_path(int n) {
    if (n < 1) throw std::invalid_argument("gen_path: n >= 1");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph gen_cycle(int n) {
    if (n < 3) throw std::invalid_argument("gen_cycle: n >= 3");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph gen_spider(int legs, int leg_length) {
    if (legs < 1 || leg_length < 1) throw std::invalid_argument("gen_spider: legs >= 1, leg_length >= 1");
    Graph g(1 + legs * leg_length);
    for (int l = 0; l < legs; ++l) {
        int prev = 0;
        for (int s = 0; s < leg_length; ++s) {
            int v = 1 + l * leg_length + s;
            g.add_edge(prev, v);
            prev = v;
        }
    }
    return g;
}

Graph gen_random_connected(int n, double p, std::mt19937_64& rng) {
    if (n < 1) throw std::invalid_argument("gen_random_connected: n >= 1");
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v, static_cast<int>(rng() % v));
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v) && coin(rng) < p) g.add_edge(u, v);
    return g;
}

Graph gen_random(int n, double p, std::mt19937_64& rng) {
    if (n < 1) throw std::invalid_argument("gen_random: n >= 1");
    Graph g(n);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) g.add_edge(u, v);
    return g;
}

} // namespace contraction

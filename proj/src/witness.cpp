#include "contraction/witness.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace contraction {

int WitnessStructure::total_vertices() const {
    int n = 0;
    for (const auto& p : parts) n += static_cast<int>(p.size());
    return n;
}

int WitnessStructure::big_part_count() const {
    int b = 0;
    for (const auto& p : parts)
        if (p.size() > 1) ++b;
    return b;
}

const char* fault_name(WitnessFault f) {
    switch (f) {
        case WitnessFault::none: return "ok";
        case WitnessFault::not_a_partition: return "not-a-partition";
        case WitnessFault::disconnected_part: return "disconnected-part";
        case WitnessFault::bad_quotient: return "bad-quotient";
        case WitnessFault::over_budget: return "over-budget";
    }
    return "?";
}

namespace {

bool is_partition(const Graph& g, const WitnessStructure& ws) {
    const int n = g.vertex_count();
    std::vector<char> seen(n, 0);
    int total = 0;
    for (const auto& p : ws.parts) {
        if (p.empty()) return false;
        for (Vertex v : p) {
            if (v < 0 || v >= n || seen[v]) return false;
            seen[v] = 1;
            ++total;
        }
    }
    return total == n;
}

Graph quotient_unchecked(const Graph& g, const WitnessStructure& ws) {
    std::vector<int> part_of(g.vertex_count(), -1);
    for (int i = 0; i < ws.part_count(); ++i)
        for (Vertex v : ws.parts[i]) part_of[v] = i;
    Graph q(ws.part_count());
    for (auto [u, v] : g.edges())
        if (part_of[u] != part_of[v]) q.add_edge(part_of[u], part_of[v]);
    return q;
}

} // namespace

Graph quotient(const Graph& g, const WitnessStructure& ws) {
    if (!is_partition(g, ws)) throw std::invalid_argument("quotient: not a partition of V");
    for (const auto& p : ws.parts)
        if (!is_connected_subset(g, p)) throw std::invalid_argument("quotient: part not connected");
    return quotient_unchecked(g, ws);
}

WitnessCheck verify_witness_detailed(const Graph& g, const WitnessStructure& ws, TargetShape target, int k) {
    WitnessCheck r;
    if (!is_partition(g, ws)) {
        r.fault = WitnessFault::not_a_partition;
        return r;
    }
    for (const auto& p : ws.parts)
        if (!is_connected_subset(g, p)) {
            r.fault = WitnessFault::disconnected_part;
            return r;
        }
    Graph q = quotient_unchecked(g, ws);
    bool shape_ok = target == TargetShape::path ? is_path_graph(q) : is_tree(q);
    if (!shape_ok) {
        r.fault = WitnessFault::bad_quotient;
        return r;
    }
    r.cost = ws.contraction_cost();
    if (r.cost > k) r.fault = WitnessFault::over_budget;
    return r;
}

bool verify_witness(const Graph& g, const WitnessStructure& ws, TargetShape target, int k) {
    return verify_witness_detailed(g, ws, target, k).ok();
}

bool check_budget_shape(const WitnessStructure& ws, int k) {
    int big_total = 0, big_count = 0;
    for (const auto& p : ws.parts) {
        if (static_cast<int>(p.size()) > k + 1) return false;
        if (p.size() > 1) {
            ++big_count;
            big_total += static_cast<int>(p.size());
        }
    }
    return big_count <= k && big_total <= 2 * k;
}

WitnessStructure singleton_witness(int n) {
    WitnessStructure ws;
    ws.parts.reserve(n);
    for (Vertex v = 0; v < n; ++v) ws.parts.push_back({v});
    return ws;
}

WitnessStructure parse_witness_text(std::istream& in) {
    WitnessStructure ws;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<Vertex> part;
        Vertex v;
        while (ls >> v) part.push_back(v);
        if (part.empty()) continue;
        std::sort(part.begin(), part.end());
        ws.parts.push_back(std::move(part));
    }
    return ws;
}

void write_witness_text(std::ostream& out, const WitnessStructure& ws) {
    for (const auto& p : ws.parts) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i) out << ' ';
            out << p[i];
        }
        out << '\n';
    }
}

} // namespace contraction

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "contraction/graph.hpp"

namespace contraction {

// Partition of V(G) into connected parts. The quotient graph (one vertex per
// part, edge iff some cross edge exists) certifies what G contracts to.
// Part order is meaningful for path witnesses: it is the path order.
struct WitnessStructure {
    std::vector<std::vector<Vertex>> parts; // each sorted ascending

    int part_count() const { return static_cast<int>(parts.size()); }
    int total_vertices() const;
    // n - #parts: the number of contractions realizing the quotient.
    int contraction_cost() const { return total_vertices() - part_count(); }
    int big_part_count() const;
};

enum class TargetShape { path, tree };

enum class WitnessFault { none, not_a_partition, disconnected_part, bad_quotient, over_budget };

struct WitnessCheck {
    WitnessFault fault = WitnessFault::none;
    int cost = 0;
    bool ok() const { return fault == WitnessFault::none; }
};

const char* fault_name(WitnessFault f);

// Quotient graph of a valid witness structure. Throws std::invalid_argument
// when the parts are not a partition of V or some part is disconnected.
Graph quotient(const Graph& g, const WitnessStructure& ws);

// Full check: partition valid, parts connected, quotient has the target
// shape, and contraction_cost <= k.
WitnessCheck verify_witness_detailed(const Graph& g, const WitnessStructure& ws, TargetShape target, int k);
bool verify_witness(const Graph& g, const WitnessStructure& ws, TargetShape target, int k);

// Size bounds every cost-<=k witness structure must satisfy: no part larger
// than k+1, at most k big parts, big parts holding at most 2k vertices total.
bool check_budget_shape(const WitnessStructure& ws, int k);

WitnessStructure singleton_witness(int n);

// Outcome of a solver query.
struct Verdict {
    bool answer = false;
    std::optional<WitnessStructure> witness;
    int contractions_used = 0;
    std::uint64_t trials = 0; // witness-extraction calls performed
    std::string reason;       // set on some "no" paths (e.g. disconnected input)
};

// Witness text format: one line per part, vertex ids separated by spaces.
WitnessStructure parse_witness_text(std::istream& in);
void write_witness_text(std::ostream& out, const WitnessStructure& ws);

} // namespace contraction

#pragma once

#include <vector>

#include "contraction/graph.hpp"

namespace contraction {

// Family of 2-colorings of {0..n-1} such that on every vertex subset of size
// t the restrictions of the members realize all 2^t color patterns.
struct UniversalFamily {
    int n = 0;
    int t = 0;
    std::vector<TwoColoring> members;
    std::size_t hash_family_size = 0; // 0 when the full/trivial family was used
};

// Build an (n,t)-universal family, 0 <= t <= n. Deterministic (builds from a
// fixed internal seed). Small n uses the full 2^n family; otherwise a
// perfect-hash-family composition whose universality holds by construction.
UniversalFamily build_universal(int n, int t);

// Exhaustive check of the universality property over all C(n,t) subsets.
// Guarded; throws input_too_large when the enumeration would be excessive.
bool verify_universal(const UniversalFamily& f);

// Memoized access used by the solvers.
const UniversalFamily& universal_family_cached(int n, int t);

} // namespace contraction

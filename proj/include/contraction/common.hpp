#pragma once

#include <cstdint>
#include <stdexcept>

namespace contraction {

using Vertex = int;

// Thrown by guarded exhaustive routines when the requested instance would
// blow past their intended desk-scale budget.
class input_too_large : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class SolveMode { deterministic, randomized };

// 2^e with saturation; exponents <= 0 give 1, large exponents cap at 2^62.
inline std::uint64_t saturating_pow2(long long e) {
    if (e <= 0) return 1;
    if (e >= 62) return std::uint64_t{1} << 62;
    return std::uint64_t{1} << e;
}

} // namespace contraction

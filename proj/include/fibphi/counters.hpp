#pragma once

#include <cstdint>

namespace fibphi {

// Semantic big-integer operation tallies. Squarings are tracked separately
// from general multiplications; a square is never counted as a mult.
// Counting happens at the pair/matrix operation layer, not inside the
// big-integer backend.
struct OpCounters {
    std::uint64_t squarings = 0;
    std::uint64_t mults = 0;
    std::uint64_t adds = 0;  // additions and subtractions
    std::uint64_t shifts = 0;

    void reset() { *this = OpCounters{}; }

    bool operator==(const OpCounters&) const = default;
};

}  // namespace fibphi

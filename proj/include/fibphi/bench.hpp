#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fibphi/algorithms.hpp"
#include "fibphi/counters.hpp"

namespace fibphi {

enum class Algo {
    iterative,
    lucas_linear,
    pair_fast,
    doubling,
    matrix,
    float_round,
};

// Canonical ids: iterative, lucas-linear, pair-fast, doubling, matrix, float.
std::optional<Algo> parse_algo(std::string_view name);
std::string_view algo_name(Algo algo);

// Cost contract of the pair power algorithm for exponent n: bitlen(n) pair
// squarings (bitlen(0) = 1) and popcount(n) multiplies by phi. At the
// big-integer level each pair squaring spends 2 squarings and 1 mult; the
// phi-multiplies spend none of either.
struct ExpectedCounts {
    std::uint64_t squarings;
    std::uint64_t phi_mults;
};

ExpectedCounts expected_counts(std::uint64_t n);

// Exact decimal digit count (1 for zero), from the integer itself.
std::uint64_t digit_count(const BigInt& x);

struct BenchRecord {
    std::string algo;
    std::uint64_t n = 0;
    std::uint64_t repeats = 0;
    std::uint64_t wall_time_ns = 0;  // median over repeats
    OpCounters counters;             // from one instrumented run
    std::uint64_t digits = 0;        // decimal length of the result
};

// Runs one algorithm `repeats` times on a monotonic clock. All repeats must
// produce the same value. Throws std::invalid_argument for an unknown algo
// id or repeats = 0, std::domain_error when n is out of range for float.
BenchRecord run_bench(std::string_view algo, std::uint64_t n, std::uint64_t repeats);

enum class ReportFormat { csv, json };

// Deterministic serialization, input order preserved. CSV columns (and JSON
// keys): algo, n, repeats, wall_time_ns, squarings, mults, adds, shifts,
// digits. Throws std::invalid_argument on an empty record list.
std::string emit_report(const std::vector<BenchRecord>& records, ReportFormat format);

}  // namespace fibphi

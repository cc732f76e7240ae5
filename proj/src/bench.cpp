#include "fibphi/bench.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <chrono>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include <json.hpp>

namespace fibphi {

std::optional<Algo> parse_algo(std::string_view name) {
    if (name == "iterative") return Algo::iterative;
    if (name == "lucas-linear") return Algo::lucas_linear;
    if (name == "pair-fast") return Algo::pair_fast;
    if (name == "doubling") return Algo::doubling;
    if (name == "matrix") return Algo::matrix;
    if (name == "float") return Algo::float_round;
    return std::nullopt;
}

std::string_view algo_name(Algo algo) {
    switch (algo) {
        case Algo::iterative: return "iterative";
        case Algo::lucas_linear: return "lucas-linear";
        case Algo::pair_fast: return "pair-fast";
        case Algo::doubling: return "doubling";
        case Algo::matrix: return "matrix";
        case Algo::float_round: return "float";
    }
    return "";
}

ExpectedCounts expected_counts(std::uint64_t n) {
    const std::uint64_t bitlen = n == 0 ? 1 : std::uint64_t(std::bit_width(n));
    return {bitlen, std::uint64_t(std::popcount(n))};
}

std::uint64_t digit_count(const BigInt& x) {
    assert(x >= 0);
    return x.get_str().size();
}

namespace {

BigInt run_algo(Algo algo, std::uint64_t n, OpCounters* counters) {
    switch (algo) {
        case Algo::iterative: return fib_iterative(n);
        case Algo::lucas_linear: return fib_lucas_linear(n).fib;
        case Algo::pair_fast: return fib_pair_fast(n, counters).fib;
        case Algo::doubling: return fib_fast_doubling(n, counters);
        case Algo::matrix: return fib_matrix(n, counters);
        case Algo::float_round: return fib_float(n).rounded;
    }
    throw std::logic_error("run_algo: bad enum");
}

}  // namespace

BenchRecord run_bench(std::string_view algo, std::uint64_t n, std::uint64_t repeats) {
    const std::optional<Algo> parsed = parse_algo(algo);
    if (!parsed) throw std::invalid_argument("unknown algorithm id: " + std::string(algo));
    if (repeats == 0) throw std::invalid_argument("repeats must be >= 1");

    using Clock = std::chrono::steady_clock;
    std::vector<std::uint64_t> times;
    times.reserve(repeats);
    BigInt result;
    OpCounters counters;
    for (std::uint64_t i = 0; i < repeats; ++i) {
        OpCounters c;
        const auto t0 = Clock::now();
        BigInt r = run_algo(*parsed, n, &c);
        const auto t1 = Clock::now();
        times.push_back(std::uint64_t(
            std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count()));
        if (i == 0) {
            result = std::move(r);
            counters = c;
        } else {
            assert(r == result);
        }
    }

    std::sort(times.begin(), times.end());
    const std::size_t mid = times.size() / 2;
    std::uint64_t median = times.size() % 2 == 1 ? times[mid] : (times[mid - 1] + times[mid]) / 2;
    if (median == 0) median = 1;  // sub-resolution run, keep wall_time_ns > 0

    BenchRecord rec;
    rec.algo = std::string(algo_name(*parsed));
    rec.n = n;
    rec.repeats = repeats;
    rec.wall_time_ns = median;
    rec.counters = counters;
    rec.digits = digit_count(result);
    return rec;
}

std::string emit_report(const std::vector<BenchRecord>& records, ReportFormat format) {
    if (records.empty()) throw std::invalid_argument("emit_report: empty record list");

    if (format == ReportFormat::csv) {
        std::ostringstream out;
        out << "algo,n,repeats,wall_time_ns,squarings,mults,adds,shifts,digits\n";
        for (const BenchRecord& r : records) {
            out << r.algo << ',' << r.n << ',' << r.repeats << ',' << r.wall_time_ns << ','
                << r.counters.squarings << ',' << r.counters.mults << ',' << r.counters.adds
                << ',' << r.counters.shifts << ',' << r.digits << '\n';
        }
        return out.str();
    }

    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const BenchRecord& r : records) {
        arr.push_back({
            {"algo", r.algo},
            {"n", r.n},
            {"repeats", r.repeats},
            {"wall_time_ns", r.wall_time_ns},
            {"squarings", r.counters.squarings},
            {"mults", r.counters.mults},
            {"adds", r.counters.adds},
            {"shifts", r.counters.shifts},
            {"digits", r.digits},
        });
    }
    return arr.dump(2) + "\n";
}

}  // namespace fibphi

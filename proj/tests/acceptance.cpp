// Acceptance suite: end-to-end checks with pinned tolerances, one line per
// criterion. Exits nonzero if any criterion fails.

#include <sys/wait.h>

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fibphi/algorithms.hpp"
#include "fibphi/bench.hpp"
#include "fibphi/phi_pair.hpp"

namespace {

using Clock = std::chrono::steady_clock;
using fibphi::BigInt;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        if (ok) {
            ok = false;
            detail = why;
        }
    }
};

struct CliResult {
    int status = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(FIBCALC_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {};
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
    const int rc = pclose(pipe);
    return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, std::move(out)};
}

std::string fmt_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f s", s);
    return buf;
}

// --- criteria ---------------------------------------------------------

// `table --max-n 8`: nine rows, estimates to 4 decimal places, exact values.
Outcome table_reproduction() {
    static const char* const kRows[] = {
        "0  0.4472  0",  "1  0.7236  1",  "2  1.1708  1",
        "3  1.8944  2",  "4  3.0652  3",  "5  4.9597  5",
        "6  8.0249  8",  "7  12.9846  13", "8  21.0095  21",
    };
    Outcome out;
    const auto t0 = Clock::now();
    const CliResult r = run_cli("table --max-n 8");
    const double elapsed = seconds_since(t0);
    if (r.status != 0) {
        out.fail("table command exited with status " + std::to_string(r.status));
        return out;
    }
    std::istringstream in(r.out);
    std::string line;
    for (int n = 0; n <= 8; ++n) {
        if (!std::getline(in, line) || line != kRows[n]) {
            out.fail("row " + std::to_string(n) + " is \"" + line + "\", want \"" + kRows[n] + "\"");
            return out;
        }
    }
    if (std::getline(in, line)) out.fail("unexpected extra row \"" + line + "\"");
    if (elapsed >= 1.0) out.fail("took " + fmt_seconds(elapsed) + ", budget 1 s");
    if (out.ok) out.detail = "9 rows exact, " + fmt_seconds(elapsed);
    return out;
}

Outcome lucas_list() {
    const long expected[] = {2, 1, 3, 4, 7, 11, 18, 29};
    Outcome out;
    const auto t0 = Clock::now();
    for (std::uint64_t n = 0; n < 8; ++n) {
        if (fibphi::lucas(n) != expected[n]) {
            out.fail("L_" + std::to_string(n) + " wrong");
            return out;
        }
    }
    const double elapsed = seconds_since(t0);
    if (elapsed >= 1.0) out.fail("took " + fmt_seconds(elapsed) + ", budget 1 s");
    if (out.ok) out.detail = "L_0..L_7 = 2,1,3,4,7,11,18,29, " + fmt_seconds(elapsed);
    return out;
}

// Five exact algorithms against the linear oracle for n <= 2000, then the
// three O(log n) algorithms pairwise on 100 sampled n <= 10^6.
Outcome oracle_equivalence() {
    Outcome out;
    const auto t0 = Clock::now();
    BigInt a = 0, b = 1;
    for (std::uint64_t n = 0; n <= 2000; ++n) {
        const BigInt& f = a;
        if (fibphi::fib_pair_fast(n).fib != f || fibphi::fib_fast_doubling(n) != f ||
            fibphi::fib_matrix(n) != f || fibphi::fib_lucas_linear(n).fib != f) {
            out.fail("disagreement at n = " + std::to_string(n));
            return out;
        }
        a += b;
        a.swap(b);
    }
    std::mt19937_64 rng(20251);
    std::uniform_int_distribution<std::uint64_t> dist(2001, 1000000);
    for (int i = 0; i < 100; ++i) {
        const std::uint64_t n = dist(rng);
        const BigInt f = fibphi::fib_pair_fast(n).fib;
        if (fibphi::fib_fast_doubling(n) != f || fibphi::fib_matrix(n) != f) {
            out.fail("log-time algorithms disagree at n = " + std::to_string(n));
            return out;
        }
    }
    const double elapsed = seconds_since(t0);
    if (elapsed >= 60.0) out.fail("took " + fmt_seconds(elapsed) + ", budget 60 s");
    if (out.ok) out.detail = "n <= 2000 dense + 100 sampled n <= 10^6, " + fmt_seconds(elapsed);
    return out;
}

// Pair power: bitlen(n) pair squarings (2 bigint squarings + 1 mult each)
// and popcount(n) phi-multiplies (adds/shifts only). Matrix power: 3 bitlen
// squarings, 2 bitlen mults. Pair mult total strictly below matrix for n >= 2.
Outcome counter_exactness() {
    Outcome out;
    const auto t0 = Clock::now();

    fibphi::OpCounters square_fp;
    fibphi::pair_square(fibphi::pair_phi(), &square_fp);
    fibphi::OpCounters phi_fp;
    fibphi::pair_mul_phi(fibphi::pair_phi(), &phi_fp);
    if (phi_fp.squarings != 0 || phi_fp.mults != 0) {
        out.fail("phi-multiply spends squarings or mults");
        return out;
    }

    for (std::uint64_t n = 1; n <= 4096; ++n) {
        const fibphi::ExpectedCounts want = fibphi::expected_counts(n);
        fibphi::OpCounters pc;
        fibphi::fib_pair_fast(n, &pc);
        if (pc.squarings != 2 * want.squarings || pc.mults != want.squarings ||
            pc.adds != want.squarings * square_fp.adds + want.phi_mults * phi_fp.adds ||
            pc.shifts != want.squarings * square_fp.shifts + want.phi_mults * phi_fp.shifts) {
            out.fail("pair-fast counters off at n = " + std::to_string(n));
            return out;
        }
        fibphi::OpCounters mc;
        fibphi::fib_matrix(n, &mc);
        if (mc.squarings != 3 * want.squarings || mc.mults != 2 * want.squarings) {
            out.fail("matrix counters off at n = " + std::to_string(n));
            return out;
        }
        if (n >= 2 && pc.mults >= mc.mults) {
            out.fail("pair mult total not below matrix at n = " + std::to_string(n));
            return out;
        }
        if (n == 49 && (pc.squarings != 12 || pc.mults != 6)) {
            out.fail("n = 49 spot case: want 6 pair squarings and 3 phi-multiplies");
            return out;
        }
    }
    const double elapsed = seconds_since(t0);
    if (elapsed >= 30.0) out.fail("took " + fmt_seconds(elapsed) + ", budget 30 s");
    if (out.ok) out.detail = "n <= 4096, spot case 49 -> (6, 3), " + fmt_seconds(elapsed);
    return out;
}

Outcome million_index(std::string* bench_report) {
    Outcome out;
    const auto t0 = Clock::now();
    const fibphi::FibLucas r = fibphi::fib_pair_fast(1000000);
    const double elapsed = seconds_since(t0);

    const std::string dec = r.fib.get_str();
    const double log10_phi = std::log10((1.0 + std::sqrt(5.0)) / 2.0);
    const double log10_sqrt5 = 0.5 * std::log10(5.0);
    const auto want_digits = std::uint64_t(std::floor(1e6 * log10_phi - log10_sqrt5)) + 1;
    if (dec.size() != want_digits) {
        out.fail("digit count " + std::to_string(dec.size()) + ", closed form says " +
                 std::to_string(want_digits));
    }

    std::uint64_t fm = 0;
    {
        std::uint64_t x = 0, y = 1;
        for (std::uint64_t i = 0; i < 1000000; ++i) {
            const std::uint64_t t = (x + y) % 1000000000;
            x = y;
            y = t;
        }
        fm = x;
    }
    char tail[16];
    std::snprintf(tail, sizeof(tail), "%09llu", static_cast<unsigned long long>(fm));
    if (out.ok && dec.substr(dec.size() - 9) != tail) {
        out.fail("last 9 digits " + dec.substr(dec.size() - 9) + ", oracle says " + tail);
    }
    if (elapsed >= 5.0) out.fail("took " + fmt_seconds(elapsed) + ", budget 5 s");

    *bench_report = fibphi::emit_report({fibphi::run_bench("pair-fast", 1000000, 3)},
                                        fibphi::ReportFormat::csv);
    if (out.ok) {
        out.detail = std::to_string(want_digits) + " digits, tail " + std::string(tail) + ", " +
                     fmt_seconds(elapsed);
    }
    return out;
}

Outcome norm_parity() {
    Outcome out;
    const auto t0 = Clock::now();
    for (std::uint64_t n = 0; n <= 2000; ++n) {
        const fibphi::PhiPair p = fibphi::pair_pow_phi(n);
        const bool parity = mpz_tstbit(p.a.get_mpz_t(), 0) == mpz_tstbit(p.b.get_mpz_t(), 0);
        const BigInt want = n % 2 == 0 ? 1 : -1;
        if (!parity || fibphi::pair_norm(p) != want) {
            out.fail("invariant broken at n = " + std::to_string(n));
            return out;
        }
    }
    const double elapsed = seconds_since(t0);
    if (elapsed >= 10.0) out.fail("took " + fmt_seconds(elapsed) + ", budget 10 s");
    if (out.ok) out.detail = "n <= 2000, " + fmt_seconds(elapsed);
    return out;
}

Outcome float_breakdown_check() {
    Outcome out;
    for (std::uint64_t n = 0; n <= 70; ++n) {
        if (!fibphi::fib_float(n).exact) {
            out.fail("estimate already wrong at n = " + std::to_string(n));
            return out;
        }
    }
    const std::optional<std::uint64_t> bk = fibphi::float_breakdown(200);
    if (!bk) {
        out.fail("no breakdown up to n = 200");
    } else if (*bk < 71 || *bk > 200) {
        out.fail("breakdown at n = " + std::to_string(*bk) + ", outside [71, 200]");
    } else {
        out.detail = "exact through n = 70, first mismatch at n = " + std::to_string(*bk);
    }
    return out;
}

Outcome doubling_formula() {
    Outcome out;
    const auto t0 = Clock::now();
    std::vector<BigInt> f;
    f.reserve(2001);
    BigInt a = 0, b = 1;
    for (int i = 0; i <= 2000; ++i) {
        f.push_back(a);
        a += b;
        a.swap(b);
    }
    for (std::size_t n = 1; n <= 1000; ++n) {
        if (f[n] * f[n] + f[n - 1] * f[n - 1] != f[2 * n - 1] ||
            (2 * f[n - 1] + f[n]) * f[n] != f[2 * n]) {
            out.fail("identity broken at n = " + std::to_string(n));
            return out;
        }
    }
    const double elapsed = seconds_since(t0);
    if (elapsed >= 5.0) out.fail("took " + fmt_seconds(elapsed) + ", budget 5 s");
    if (out.ok) out.detail = "n <= 1000, " + fmt_seconds(elapsed);
    return out;
}

}  // namespace

int main() {
    int failures = 0;
    std::string million_bench;

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"table-reproduction", table_reproduction},
        {"lucas-list", lucas_list},
        {"oracle-equivalence", oracle_equivalence},
        {"counter-exactness", counter_exactness},
        {"million-index", [&million_bench] { return million_index(&million_bench); }},
        {"norm-parity", norm_parity},
        {"float-breakdown", float_breakdown_check},
        {"doubling-formula", doubling_formula},
    };

    for (const auto& [name, fn] : criteria) {
        const Outcome out = fn();
        std::cout << (out.ok ? "[PASS] " : "[FAIL] ") << name;
        if (!out.detail.empty()) std::cout << ": " << out.detail;
        std::cout << "\n";
        if (name == "million-index" && !million_bench.empty()) {
            std::istringstream in(million_bench);
            for (std::string line; std::getline(in, line);) std::cout << "       " << line << "\n";
        }
        if (!out.ok) ++failures;
    }

    if (failures != 0) std::cout << failures << " criterion(s) failed\n";
    return failures == 0 ? 0 : 1;
}

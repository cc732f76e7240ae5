// fibcalc: exact Fibonacci and Lucas numbers at large indices, competitor
// algorithms, operation-count benchmarks, and a built-in self test.
//
// Exit codes: 0 success, 1 self-test failure, 2 usage or range error.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fibphi/algorithms.hpp"
#include "fibphi/bench.hpp"
#include "fibphi/phi_pair.hpp"

namespace {

using fibphi::Algo;
using fibphi::BigInt;

struct OutputFormat {
    enum class Kind { dec, hex, digits, last };
    Kind kind = Kind::dec;
    std::uint64_t k = 0;  // suffix length for last:k
};

std::optional<OutputFormat> parse_format(std::string_view s) {
    if (s == "dec") return OutputFormat{OutputFormat::Kind::dec, 0};
    if (s == "hex") return OutputFormat{OutputFormat::Kind::hex, 0};
    if (s == "digits") return OutputFormat{OutputFormat::Kind::digits, 0};
    constexpr std::string_view prefix = "last:";
    if (s.substr(0, prefix.size()) == prefix) {
        const std::string_view num = s.substr(prefix.size());
        std::uint64_t k = 0;
        const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), k);
        if (ec != std::errc{} || ptr != num.data() + num.size() || k == 0) return std::nullopt;
        return OutputFormat{OutputFormat::Kind::last, k};
    }
    return std::nullopt;
}

std::string format_value(const BigInt& v, const OutputFormat& fmt) {
    switch (fmt.kind) {
        case OutputFormat::Kind::dec:
            return v.get_str();
        case OutputFormat::Kind::hex:
            return v.get_str(16);
        case OutputFormat::Kind::digits:
            return std::to_string(fibphi::digit_count(v));
        case OutputFormat::Kind::last: {
            std::string s = v.get_str();
            if (s.size() >= fmt.k) return s.substr(s.size() - fmt.k);
            return std::string(fmt.k - s.size(), '0') + s;
        }
    }
    return {};
}

// L_n = 2 F_{n+1} - F_n, for algorithms that only produce Fibonacci values.
template <typename FibFn>
BigInt lucas_from_fib(FibFn&& fib, std::uint64_t n) {
    BigInt next = fib(n + 1);
    next <<= 1;
    return next - fib(n);
}

int cmd_compute(std::uint64_t n, const std::string& algo_str, const std::string& format_str,
                bool want_lucas) {
    const std::optional<Algo> algo = fibphi::parse_algo(algo_str);
    if (!algo) {
        std::cerr << "fibcalc: unknown algorithm id: " << algo_str << "\n";
        return 2;
    }
    const std::optional<OutputFormat> fmt = parse_format(format_str);
    if (!fmt) {
        std::cerr << "fibcalc: bad format: " << format_str
                  << " (expected dec, hex, digits or last:k)\n";
        return 2;
    }
    if (want_lucas && *algo == Algo::float_round) {
        std::cerr << "fibcalc: --lucas is not supported with the float estimator\n";
        return 2;
    }

    BigInt value;
    try {
        if (want_lucas) {
            switch (*algo) {
                case Algo::iterative:
                    value = lucas_from_fib(fibphi::fib_iterative, n);
                    break;
                case Algo::lucas_linear:
                    value = fibphi::fib_lucas_linear(n).lucas;
                    break;
                case Algo::pair_fast:
                    value = fibphi::fib_pair_fast(n).lucas;
                    break;
                case Algo::doubling:
                    value = lucas_from_fib([](std::uint64_t m) { return fibphi::fib_fast_doubling(m); }, n);
                    break;
                case Algo::matrix:
                    value = lucas_from_fib([](std::uint64_t m) { return fibphi::fib_matrix(m); }, n);
                    break;
                case Algo::float_round:
                    return 2;  // rejected above
            }
        } else {
            switch (*algo) {
                case Algo::iterative:
                    value = fibphi::fib_iterative(n);
                    break;
                case Algo::lucas_linear:
                    value = fibphi::fib_lucas_linear(n).fib;
                    break;
                case Algo::pair_fast:
                    value = fibphi::fib_pair_fast(n).fib;
                    break;
                case Algo::doubling:
                    value = fibphi::fib_fast_doubling(n);
                    break;
                case Algo::matrix:
                    value = fibphi::fib_matrix(n);
                    break;
                case Algo::float_round:
                    value = fibphi::fib_float(n).rounded;
                    break;
            }
        }
    } catch (const std::domain_error& e) {
        std::cerr << "fibcalc: " << e.what() << "\n";
        return 2;
    }

    std::cout << format_value(value, *fmt) << "\n";
    return 0;
}

int cmd_table(std::uint64_t max_n) {
    if (max_n > fibphi::kMaxFloatIndex) {
        std::cerr << "fibcalc: table max-n = " << max_n
                  << " exceeds the binary64 range (max n = " << fibphi::kMaxFloatIndex << ")\n";
        return 2;
    }
    BigInt f = 0;       // F_n
    BigInt f_next = 1;  // F_{n+1}
    char g_buf[400];
    for (std::uint64_t n = 0; n <= max_n; ++n) {
        const fibphi::FloatEstimate est = fibphi::fib_float(n);
        std::snprintf(g_buf, sizeof(g_buf), "%.4f", est.g);
        std::cout << n << "  " << g_buf << "  " << f.get_str() << "\n";
        f += f_next;
        f.swap(f_next);
    }
    return 0;
}

int cmd_bench(const std::vector<std::string>& algos, const std::vector<std::uint64_t>& ns,
              std::uint64_t repeats, const std::string& format_str, const std::string& out_path) {
    fibphi::ReportFormat fmt;
    if (format_str == "csv") {
        fmt = fibphi::ReportFormat::csv;
    } else if (format_str == "json") {
        fmt = fibphi::ReportFormat::json;
    } else {
        std::cerr << "fibcalc: bad report format: " << format_str << " (expected csv or json)\n";
        return 2;
    }

    // All-or-nothing: reject every invalid combination before running anything.
    for (const std::string& a : algos) {
        const std::optional<Algo> algo = fibphi::parse_algo(a);
        if (!algo) {
            std::cerr << "fibcalc: unknown algorithm id: " << a << "\n";
            return 2;
        }
        if (*algo == Algo::float_round) {
            for (std::uint64_t n : ns) {
                if (n > fibphi::kMaxFloatIndex) {
                    std::cerr << "fibcalc: n = " << n << " is out of range for float (max n = "
                              << fibphi::kMaxFloatIndex << ")\n";
                    return 2;
                }
            }
        }
    }

    std::vector<fibphi::BenchRecord> records;
    records.reserve(algos.size() * ns.size());
    for (const std::string& a : algos) {
        for (std::uint64_t n : ns) {
            records.push_back(fibphi::run_bench(a, n, repeats));
        }
    }

    const std::string text = fibphi::emit_report(records, fmt);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "fibcalc: cannot open " << out_path << " for writing\n";
            return 2;
        }
        out << text;
    }
    return 0;
}

int cmd_selftest(std::uint64_t depth) {
    int failures = 0;
    const auto report = [&failures](const std::string& name, bool ok, const std::string& detail) {
        std::cout << (ok ? "ok" : "FAIL") << ": " << name;
        if (!detail.empty()) std::cout << " (" << detail << ")";
        std::cout << "\n";
        if (!ok) ++failures;
    };

    // Cross-algorithm equivalence against the linear oracle, then sampled
    // pairwise agreement of the O(log n) algorithms above the dense range.
    {
        const std::uint64_t dense = std::min<std::uint64_t>(depth, 2000);
        bool ok = true;
        std::string detail = "n <= " + std::to_string(dense) + ", 5 algorithms";
        BigInt f = 0;
        BigInt f_next = 1;
        for (std::uint64_t n = 0; n <= dense && ok; ++n) {
            const char* bad = nullptr;
            if (fibphi::fib_pair_fast(n).fib != f) bad = "pair-fast";
            else if (fibphi::fib_fast_doubling(n) != f) bad = "doubling";
            else if (fibphi::fib_matrix(n) != f) bad = "matrix";
            else if (fibphi::fib_lucas_linear(n).fib != f) bad = "lucas-linear";
            if (bad) {
                ok = false;
                detail = std::string(bad) + " disagrees with the iterative oracle at n = " +
                         std::to_string(n);
            }
            f += f_next;
            f.swap(f_next);
        }
        if (ok && depth > dense) {
            std::mt19937_64 rng(20258);
            std::uniform_int_distribution<std::uint64_t> dist(dense + 1, depth);
            detail += ", 100 sampled n <= " + std::to_string(depth) + ", 3 algorithms";
            for (int i = 0; i < 100 && ok; ++i) {
                const std::uint64_t n = dist(rng);
                const BigInt fp = fibphi::fib_pair_fast(n).fib;
                if (fibphi::fib_fast_doubling(n) != fp || fibphi::fib_matrix(n) != fp) {
                    ok = false;
                    detail = "log-time algorithms disagree at n = " + std::to_string(n);
                }
            }
        }
        report("oracle equivalence", ok, detail);
    }

    // Norm (-1)^n and shared parity of phi^n components.
    {
        const std::uint64_t limit = std::min<std::uint64_t>(depth, 2000);
        bool ok = true;
        std::string detail = "n <= " + std::to_string(limit);
        for (std::uint64_t n = 0; n <= limit && ok; ++n) {
            const fibphi::PhiPair p = fibphi::pair_pow_phi(n);
            const bool parity =
                mpz_tstbit(p.a.get_mpz_t(), 0) == mpz_tstbit(p.b.get_mpz_t(), 0);
            const BigInt want = n % 2 == 0 ? 1 : -1;
            if (!parity || fibphi::pair_norm(p) != want) {
                ok = false;
                detail = "invariant broken at n = " + std::to_string(n);
            }
        }
        report("norm and parity invariants", ok, detail);
    }

    // Counter exactness for the two square-and-multiply algorithms.
    {
        const std::uint64_t limit = std::min<std::uint64_t>(depth, 4096);
        bool ok = true;
        std::string detail = "n <= " + std::to_string(limit);
        for (std::uint64_t n = 1; n <= limit && ok; ++n) {
            const fibphi::ExpectedCounts want = fibphi::expected_counts(n);
            fibphi::OpCounters pair_c;
            fibphi::fib_pair_fast(n, &pair_c);
            fibphi::OpCounters mat_c;
            fibphi::fib_matrix(n, &mat_c);
            if (pair_c.squarings != 2 * want.squarings || pair_c.mults != want.squarings) {
                ok = false;
                detail = "pair-fast counters off at n = " + std::to_string(n);
            } else if (mat_c.squarings != 3 * want.squarings ||
                       mat_c.mults != 2 * want.squarings) {
                ok = false;
                detail = "matrix counters off at n = " + std::to_string(n);
            } else if (n >= 2 && pair_c.mults >= mat_c.mults) {
                ok = false;
                detail = "pair-fast mult count not below matrix at n = " + std::to_string(n);
            }
        }
        report("counter exactness", ok, detail);
    }

    // Binary64 estimator: exact through n = 70, breaks somewhere by 200.
    {
        bool ok = true;
        std::string detail = "n <= 70";
        for (std::uint64_t n = 0; n <= 70 && ok; ++n) {
            if (!fibphi::fib_float(n).exact) {
                ok = false;
                detail = "estimate wrong at n = " + std::to_string(n);
            }
        }
        report("float agreement", ok, detail);

        const std::optional<std::uint64_t> bk = fibphi::float_breakdown(200);
        if (bk) {
            report("float breakdown", *bk >= 71 && *bk <= 200,
                   "first mismatch at n = " + std::to_string(*bk));
        } else {
            report("float breakdown", false, "no mismatch up to n = 200");
        }
    }

    if (failures == 0) {
        std::cout << "all checks passed (depth " << depth << ")\n";
        return 0;
    }
    std::cout << failures << " check(s) failed\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Fibonacci and Lucas numbers at large indices"};
    app.require_subcommand(1);

    std::uint64_t n = 0;
    std::string algo = "pair-fast";
    std::string format = "dec";
    bool lucas_flag = false;
    CLI::App* compute = app.add_subcommand("compute", "print F_n (or L_n with --lucas)");
    compute->add_option("n", n, "index")->required();
    compute->add_option("--algo", algo, "iterative, lucas-linear, pair-fast, doubling, matrix or float")
        ->capture_default_str();
    compute->add_option("--format", format, "dec, hex, digits or last:k")->capture_default_str();
    compute->add_flag("--lucas", lucas_flag, "print the Lucas number L_n instead of F_n");

    std::uint64_t max_n = 8;
    CLI::App* table = app.add_subcommand("table", "rows n, g_n, f_n of the float estimate");
    table->add_option("--max-n", max_n, "last index")->capture_default_str();

    std::vector<std::string> bench_algos;
    std::vector<std::uint64_t> bench_ns;
    std::uint64_t repeats = 3;
    std::string bench_format = "csv";
    std::string out_path;
    CLI::App* bench = app.add_subcommand("bench", "time algorithms and count operations");
    bench->add_option("--n", bench_ns, "indices (comma separated)")->required()->delimiter(',');
    bench->add_option("--algos", bench_algos, "algorithm ids (comma separated)")
        ->required()
        ->delimiter(',');
    bench->add_option("--repeats", repeats, "samples per point")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    bench->add_option("--format", bench_format, "csv or json")->capture_default_str();
    bench->add_option("--out", out_path, "write the report here instead of stdout");

    std::uint64_t depth = 2000;
    CLI::App* selftest = app.add_subcommand("selftest", "run the built-in oracle suite");
    selftest->add_option("--depth", depth, "equivalence sweep limit")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (compute->parsed()) return cmd_compute(n, algo, format, lucas_flag);
        if (table->parsed()) return cmd_table(max_n);
        if (bench->parsed()) return cmd_bench(bench_algos, bench_ns, repeats, bench_format, out_path);
        if (selftest->parsed()) return cmd_selftest(depth);
    } catch (const std::exception& e) {
        std::cerr << "fibcalc: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

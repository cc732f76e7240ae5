#include "fibphi/algorithms.hpp"

#include <bit>
#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace fibphi {

BigInt fib_iterative(std::uint64_t n) {
    BigInt prev = 0;  // F_0
    BigInt cur = 1;   // F_1
    for (std::uint64_t i = 0; i < n; ++i) {
        prev += cur;
        prev.swap(cur);
    }
    return prev;
}

FibLucas fib_lucas_linear(std::uint64_t n) {
    BigInt e = 2;  // L_0
    BigInt f = 0;  // F_0
    for (std::uint64_t i = 0; i < n; ++i) {
        BigInt five_f = (f << 2) + f;
        BigInt e_next = e + five_f;
        BigInt f_next = e + f;
        assert(mpz_even_p(e_next.get_mpz_t()) && mpz_even_p(f_next.get_mpz_t()));
        e_next >>= 1;
        f_next >>= 1;
        e = std::move(e_next);
        f = std::move(f_next);
    }
    return {std::move(f), std::move(e)};
}

FibLucas fib_pair_fast(std::uint64_t n, OpCounters* counters) {
    PhiPair p = pair_pow_phi(n, counters);
    return {std::move(p.b), std::move(p.a)};
}

BigInt fib_fast_doubling(std::uint64_t n, OpCounters* counters) {
    // State (f_k, f_{k+1}) where k is the prefix of n's bits scanned so far.
    BigInt fk = 0;
    BigInt fk1 = 1;
    const int bits = n == 0 ? 1 : std::bit_width(n);
    for (int i = bits - 1; i >= 0; --i) {
        BigInt odd = fk * fk;  // f_{2k+1} = f_k^2 + f_{k+1}^2
        odd += fk1 * fk1;
        BigInt even = fk << 1;  // f_{2k+2} = (2 f_k + f_{k+1}) f_{k+1}
        even += fk1;
        even *= fk1;
        if (counters) {
            counters->squarings += 2;
            counters->mults += 1;
            counters->adds += 2;
            counters->shifts += 1;
        }
        if ((n >> i) & 1u) {
            fk = std::move(odd);
            fk1 = std::move(even);
        } else {
            even -= odd;  // f_{2k}
            if (counters) counters->adds += 1;
            fk = std::move(even);
            fk1 = std::move(odd);
        }
    }
    return fk;
}

SymFibMatrix mat_mul_M(const SymFibMatrix& x, OpCounters* counters) {
    assert(x.a == x.b + x.c);
    BigInt top = x.a + x.b;
    if (counters) counters->adds += 1;
    return {std::move(top), x.a, x.b};
}

SymFibMatrix mat_square(const SymFibMatrix& x, OpCounters* counters) {
    BigInt aa = x.a * x.a;
    BigInt bb = x.b * x.b;
    BigInt cc = x.c * x.c;
    BigInt ab = x.a * x.b;
    BigInt bc = x.b * x.c;
    if (counters) {
        counters->squarings += 3;
        counters->mults += 2;
        counters->adds += 3;
    }
    return {aa + bb, ab + bc, bb + cc};
}

BigInt fib_matrix(std::uint64_t n, OpCounters* counters) {
    SymFibMatrix m{1, 0, 1};  // identity; off-diagonal already F_0 = 0
    const int bits = n == 0 ? 1 : std::bit_width(n);
    for (int i = bits - 1; i >= 0; --i) {
        m = mat_square(m, counters);
        if ((n >> i) & 1u) m = mat_mul_M(m, counters);
    }
    return std::move(m.b);
}

FloatEstimate fib_float(std::uint64_t n) {
    if (n > kMaxFloatIndex) {
        throw std::domain_error("fib_float: n = " + std::to_string(n) +
                                " exceeds the binary64 range (max n = " +
                                std::to_string(kMaxFloatIndex) + ")");
    }
    const double sqrt5 = std::sqrt(5.0);
    const double phi = (1.0 + sqrt5) / 2.0;
    // phi^n by repeated squaring in binary64, same bit scan as the exact path.
    double p = 1.0;
    const int bits = n == 0 ? 1 : std::bit_width(n);
    for (int i = bits - 1; i >= 0; --i) {
        p *= p;
        if ((n >> i) & 1u) p *= phi;
    }
    const double g = p / sqrt5;
    const double r = std::round(g);  // ties away from zero
    FloatEstimate est;
    est.n = n;
    est.g = g;
    est.rounded = BigInt(r);
    est.exact = est.rounded == fib_iterative(n);
    return est;
}

std::optional<std::uint64_t> float_breakdown(std::uint64_t limit) {
    if (limit > kMaxFloatIndex) {
        throw std::domain_error("float_breakdown: limit = " + std::to_string(limit) +
                                " exceeds the binary64 range (max n = " +
                                std::to_string(kMaxFloatIndex) + ")");
    }
    for (std::uint64_t n = 0; n <= limit; ++n) {
        if (!fib_float(n).exact) return n;
    }
    return std::nullopt;
}

BigInt lucas(std::uint64_t n) { return fib_pair_fast(n).lucas; }

}  // namespace fibphi

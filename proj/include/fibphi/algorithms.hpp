#pragma once

#include <cstdint>
#include <optional>

#include "fibphi/phi_pair.hpp"

namespace fibphi {

struct FibLucas {
    BigInt fib;
    BigInt lucas;
};

// Symmetric 2x2 matrix [[a, b], [b, c]]. Powers of the Fibonacci matrix
// [[1,1],[1,0]] stay symmetric and satisfy a = b + c, with b = F_n and
// a = F_{n+1} for the n-th power.
struct SymFibMatrix {
    BigInt a;
    BigInt b;
    BigInt c;

    bool operator==(const SymFibMatrix&) const = default;
};

// x * [[1,1],[1,0]] for x with a = b + c: just (a+b, a, b), one addition.
SymFibMatrix mat_mul_M(const SymFibMatrix& x, OpCounters* counters = nullptr);

// x^2 = (a^2 + b^2, ab + bc, b^2 + c^2): 3 squarings and 2 mults.
SymFibMatrix mat_square(const SymFibMatrix& x, OpCounters* counters = nullptr);

// Binary64 estimate of F_n via phi^n / sqrt(5).
struct FloatEstimate {
    std::uint64_t n = 0;
    double g = 0.0;  // phi^n / sqrt(5)
    BigInt rounded;  // nearest integer to g, ties away from zero
    bool exact = false;  // rounded == F_n
};

// Largest n for which phi^n stays finite in binary64.
inline constexpr std::uint64_t kMaxFloatIndex = 1474;

// Linear iteration of f_n = f_{n-1} + f_{n-2}. The ground-truth oracle.
BigInt fib_iterative(std::uint64_t n);

// Linear double recurrence e_k = (e_{k-1} + 5 f_{k-1})/2,
// f_k = (e_{k-1} + f_{k-1})/2 from (e_0, f_0) = (2, 0); returns (F_n, L_n).
FibLucas fib_lucas_linear(std::uint64_t n);

// Square-and-multiply over PhiPair; O(lg n) steps. Returns (F_n, L_n).
FibLucas fib_pair_fast(std::uint64_t n, OpCounters* counters = nullptr);

// Iterative MSB-first doubling on the adjacent pair (f_k, f_{k+1}) using
// f_{2k+1} = f_{k+1}^2 + f_k^2 and f_{2k+2} = (2 f_k + f_{k+1}) f_{k+1}.
// Each bit costs 2 squarings and 1 mult. No recursion, no memoization.
BigInt fib_fast_doubling(std::uint64_t n, OpCounters* counters = nullptr);

// Square-and-multiply over SymFibMatrix; F_n is the off-diagonal of M^n.
BigInt fib_matrix(std::uint64_t n, OpCounters* counters = nullptr);

// phi^n by binary64 repeated squaring, divided by sqrt(5), rounded.
// Throws std::domain_error for n > kMaxFloatIndex.
FloatEstimate fib_float(std::uint64_t n);

// Smallest n <= limit where fib_float stops matching F_n, if any.
std::optional<std::uint64_t> float_breakdown(std::uint64_t limit);

BigInt lucas(std::uint64_t n);

}  // namespace fibphi

#pragma once

#include <cstdint>

#include <gmpxx.h>

#include "fibphi/counters.hpp"

namespace fibphi {

using BigInt = mpz_class;

// Element of the ring of half-integer combinations of 1 and sqrt(5):
// the pair (a, b) stands for (a + b*sqrt(5)) / 2, with a and b sharing
// parity (both even or both odd). That parity invariant makes every
// halving in the operations below exact.
//
// Powers of the golden ratio live in this ring: phi^n <-> (L_n, F_n),
// the n-th Lucas and Fibonacci numbers.
struct PhiPair {
    BigInt a;  // real part numerator
    BigInt b;  // algebraic part numerator

    bool operator==(const PhiPair&) const = default;
};

PhiPair pair_one();  // 1 <-> (2, 0)
PhiPair pair_phi();  // (1 + sqrt(5))/2 <-> (1, 1)
PhiPair pair_psi();  // (1 - sqrt(5))/2 <-> (1, -1)

// General product. Costs 4 mults; the pow path below never needs it.
PhiPair pair_mul(const PhiPair& x, const PhiPair& y, OpCounters* counters = nullptr);

// x^2 as ((a^2 + 5 b^2)/2, a*b). Exactly 2 squarings and 1 mult.
PhiPair pair_square(const PhiPair& x, OpCounters* counters = nullptr);

// x * phi as ((a + 5b)/2, (a + b)/2). Additions and shifts only: 5b is
// built as (b << 2) + b, never by a general multiplication.
PhiPair pair_mul_phi(const PhiPair& x, OpCounters* counters = nullptr);

// x * psi as ((a - 5b)/2, (b - a)/2), the sign-flipped twin of the above.
PhiPair pair_mul_psi(const PhiPair& x, OpCounters* counters = nullptr);

// phi^n by an MSB-first bit scan over all bits of n (n = 0 scans the
// single bit 0). Starting from the identity, every bit squares the state
// and every 1-bit multiplies by phi, so a counters sink sees exactly
// bitlen(n) pair squarings and popcount(n) phi-multiplies.
PhiPair pair_pow_phi(std::uint64_t n, OpCounters* counters = nullptr);

// (a^2 - 5 b^2) / 4, exact. Equals (-1)^n for phi^n.
BigInt pair_norm(const PhiPair& x);

}  // namespace fibphi

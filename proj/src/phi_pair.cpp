#include "fibphi/phi_pair.hpp"

#include <bit>
#include <cassert>

namespace fibphi {

namespace {

// The parity invariant guarantees every halved value is even; a violation
// is a defect, caught here in testing builds. Release builds just shift.
BigInt half(BigInt v, OpCounters* c) {
    assert(mpz_even_p(v.get_mpz_t()));
    v >>= 1;
    if (c) c->shifts += 1;
    return v;
}

// 5*v as (v << 2) + v; no general multiplication.
BigInt times5(const BigInt& v, OpCounters* c) {
    BigInt r = v << 2;
    r += v;
    if (c) {
        c->shifts += 1;
        c->adds += 1;
    }
    return r;
}

bool parity_ok(const PhiPair& x) {
    return mpz_tstbit(x.a.get_mpz_t(), 0) == mpz_tstbit(x.b.get_mpz_t(), 0);
}

}  // namespace

PhiPair pair_one() { return {2, 0}; }
PhiPair pair_phi() { return {1, 1}; }
PhiPair pair_psi() { return {1, -1}; }

PhiPair pair_mul(const PhiPair& x, const PhiPair& y, OpCounters* counters) {
    assert(parity_ok(x) && parity_ok(y));
    BigInt ac = x.a * y.a;
    BigInt bd = x.b * y.b;
    BigInt ad = x.a * y.b;
    BigInt bc = x.b * y.a;
    if (counters) {
        counters->mults += 4;
        counters->adds += 2;  // ac + 5bd, ad + bc
    }
    return {half(ac + times5(bd, counters), counters), half(ad + bc, counters)};
}

PhiPair pair_square(const PhiPair& x, OpCounters* counters) {
    assert(parity_ok(x));
    BigInt aa = x.a * x.a;
    BigInt bb = x.b * x.b;
    BigInt ab = x.a * x.b;
    if (counters) {
        counters->squarings += 2;
        counters->mults += 1;
        counters->adds += 1;  // aa + 5bb
    }
    return {half(aa + times5(bb, counters), counters), std::move(ab)};
}

PhiPair pair_mul_phi(const PhiPair& x, OpCounters* counters) {
    assert(parity_ok(x));
    if (counters) counters->adds += 2;  // a + 5b, a + b
    return {half(x.a + times5(x.b, counters), counters), half(x.a + x.b, counters)};
}

PhiPair pair_mul_psi(const PhiPair& x, OpCounters* counters) {
    assert(parity_ok(x));
    if (counters) counters->adds += 2;  // a - 5b, b - a
    return {half(x.a - times5(x.b, counters), counters), half(x.b - x.a, counters)};
}

PhiPair pair_pow_phi(std::uint64_t n, OpCounters* counters) {
    const int bits = n == 0 ? 1 : std::bit_width(n);
    PhiPair acc = pair_one();
    for (int i = bits - 1; i >= 0; --i) {
        acc = pair_square(acc, counters);
        if ((n >> i) & 1u) acc = pair_mul_phi(acc, counters);
    }
    return acc;
}

BigInt pair_norm(const PhiPair& x) {
    assert(parity_ok(x));
    BigInt v = x.a * x.a - times5(x.b * x.b, nullptr);
    assert(mpz_divisible_2exp_p(v.get_mpz_t(), 2));
    v >>= 2;
    return v;
}

}  // namespace fibphi

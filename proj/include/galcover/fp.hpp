#ifndef GALCOVER_FP_HPP
#define GALCOVER_FP_HPP

#include <cstdint>
#include <string>

#include "galcover/errors.hpp"

namespace galcover {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128_t;

// Deterministic Miller-Rabin, valid for all n < 2^64.
bool is_prime(u64 n);

// Throws NotPrime unless q passed is_prime. Results are memoized in a small
// thread-local ring so per-element construction stays cheap.
void require_prime(u64 q);

u64 mul_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 base, u64 exp, u64 m);

// base^exp as an exact 128-bit integer; throws Overflow past 2^127.
u128 checked_pow_u128(u64 base, u64 exp);
u128 checked_mul_u128(u128 a, u128 b);

std::string to_string_u128(u128 v);

// Element of the prime field F_q, canonical representative in [0, q).
// The modulus travels with the value; every binary operation checks it.
struct FpElem {
    u64 value = 0;
    u64 modulus = 2;

    FpElem() = default;
    FpElem(u64 v, u64 q) : value(v % q), modulus(q) { require_prime(q); }

    static FpElem from_int(i64 v, u64 q);
    static FpElem zero(u64 q) { return FpElem(0, q); }
    static FpElem one(u64 q) { return FpElem(1, q); }

    bool is_zero() const noexcept { return value == 0; }

    FpElem operator-() const;
    FpElem inverse() const;
    FpElem pow(u64 e) const;

    friend FpElem operator+(FpElem a, FpElem b);
    friend FpElem operator-(FpElem a, FpElem b);
    friend FpElem operator*(FpElem a, FpElem b);
    friend FpElem operator/(FpElem a, FpElem b);

    friend bool operator==(FpElem a, FpElem b) {
        return a.value == b.value && a.modulus == b.modulus;
    }
    friend bool operator!=(FpElem a, FpElem b) { return !(a == b); }
};

// Multiplicative order of l modulo p; the "a" of the whole construction.
// Throws EqualPrimes when l == p.
u64 ord_mod(u64 l, u64 p);

} // namespace galcover

#endif // GALCOVER_FP_HPP

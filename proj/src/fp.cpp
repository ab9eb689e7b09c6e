#include "galcover/fp.hpp"

#include <array>
#include <vector>

namespace galcover {

u64 mul_mod(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<u128>(a) * b) % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m) {
    u64 result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1)
            result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

namespace {

bool miller_rabin_witness(u64 n, u64 a, u64 d, int r) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1)
        return true;
    for (int i = 1; i < r; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1)
            return true;
    }
    return false;
}

} // namespace

bool is_prime(u64 n) {
    if (n < 2)
        return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                  29ull, 31ull, 37ull}) {
        if (n == p)
            return true;
        if (n % p == 0)
            return false;
    }
    u64 d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // This witness set is deterministic for all n < 2^64.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                  29ull, 31ull, 37ull}) {
        if (!miller_rabin_witness(n, a, d, r))
            return false;
    }
    return true;
}

void require_prime(u64 q) {
    thread_local std::array<u64, 4> verified = {0, 0, 0, 0};
    thread_local unsigned next = 0;
    for (u64 v : verified)
        if (v == q)
            return;
    if (!is_prime(q))
        throw NotPrime("modulus " + std::to_string(q) + " is not prime");
    verified[next] = q;
    next = (next + 1) % verified.size();
}

u128 checked_mul_u128(u128 a, u128 b) {
    if (a != 0 && b > static_cast<u128>(-1) / a)
        throw Overflow("128-bit integer overflow in multiplication");
    return a * b;
}

u128 checked_pow_u128(u64 base, u64 exp) {
    u128 result = 1;
    u128 b = base;
    while (exp > 0) {
        if (exp & 1)
            result = checked_mul_u128(result, b);
        exp >>= 1;
        if (exp > 0)
            b = checked_mul_u128(b, b);
    }
    return result;
}

std::string to_string_u128(u128 v) {
    if (v == 0)
        return "0";
    std::string s;
    while (v > 0) {
        s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    return s;
}

FpElem FpElem::from_int(i64 v, u64 q) {
    require_prime(q);
    i64 r = v % static_cast<i64>(q);
    if (r < 0)
        r += static_cast<i64>(q);
    return FpElem(static_cast<u64>(r), q);
}

namespace {

void require_same_modulus(FpElem a, FpElem b) {
    if (a.modulus != b.modulus)
        throw ModulusMismatch("mixed moduli " + std::to_string(a.modulus) +
                              " and " + std::to_string(b.modulus));
}

} // namespace

FpElem FpElem::operator-() const {
    FpElem r = *this;
    r.value = value == 0 ? 0 : modulus - value;
    return r;
}

FpElem FpElem::inverse() const {
    if (value == 0)
        throw DivisionByZero("inverse of zero in F_" + std::to_string(modulus));
    FpElem r = *this;
    r.value = pow_mod(value, modulus - 2, modulus);
    return r;
}

FpElem FpElem::pow(u64 e) const {
    FpElem r = *this;
    r.value = pow_mod(value, e, modulus);
    return r;
}

FpElem operator+(FpElem a, FpElem b) {
    require_same_modulus(a, b);
    const u64 gap = a.modulus - b.value; // in [1, m], so no wraparound below
    a.value = a.value >= gap ? a.value - gap : a.value + b.value;
    return a;
}

FpElem operator-(FpElem a, FpElem b) {
    require_same_modulus(a, b);
    a.value = a.value >= b.value ? a.value - b.value
                                 : a.value + (a.modulus - b.value);
    return a;
}

FpElem operator*(FpElem a, FpElem b) {
    require_same_modulus(a, b);
    a.value = mul_mod(a.value, b.value, a.modulus);
    return a;
}

FpElem operator/(FpElem a, FpElem b) {
    require_same_modulus(a, b);
    return a * b.inverse();
}

namespace {

// Trial-division factorization into (prime, exponent) pairs.
std::vector<std::pair<u64, int>> factorize(u64 n) {
    std::vector<std::pair<u64, int>> out;
    for (u64 d = 2; static_cast<u128>(d) * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            out.emplace_back(d, e);
        }
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

} // namespace

u64 ord_mod(u64 l, u64 p) {
    require_prime(l);
    require_prime(p);
    if (l == p)
        throw EqualPrimes("ord_mod requires l != p, got " + std::to_string(p));
    // Start from the Lagrange bound p-1 and strip prime factors while
    // l^(e/q) stays 1.
    u64 e = p - 1;
    for (auto [q, k] : factorize(p - 1)) {
        (void)k;
        while (e % q == 0 && pow_mod(l, e / q, p) == 1)
            e /= q;
    }
    return e;
}

} // namespace galcover

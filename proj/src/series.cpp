#include "galcover/series.hpp"

#include <algorithm>

namespace galcover {

SeriesFp::SeriesFp(u64 p, std::size_t truncation_order)
    : modulus_(p), coeffs_(truncation_order + 1, 0) {
    require_prime(p);
}

SeriesFp::SeriesFp(u64 p, std::size_t truncation_order, std::vector<u64> coeffs)
    : modulus_(p), coeffs_(std::move(coeffs)) {
    require_prime(p);
    coeffs_.resize(truncation_order + 1, 0);
    for (u64& c : coeffs_)
        c %= modulus_;
}

FpElem SeriesFp::coeff(std::size_t i) const {
    return FpElem(i < coeffs_.size() ? coeffs_[i] : 0, modulus_);
}

void SeriesFp::set_coeff(std::size_t i, FpElem c) {
    if (c.modulus != modulus_)
        throw ModulusMismatch("series coefficient modulus differs");
    if (i < coeffs_.size())
        coeffs_[i] = c.value;
}

std::optional<std::size_t> SeriesFp::valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0)
            return i;
    return std::nullopt;
}

namespace {

void require_compatible(const SeriesFp& a, const SeriesFp& b) {
    if (a.modulus() != b.modulus())
        throw ModulusMismatch("mixed series moduli");
    if (a.truncation_order() != b.truncation_order())
        throw TruncationTooShort("series truncation orders differ");
}

} // namespace

SeriesFp operator+(const SeriesFp& a, const SeriesFp& b) {
    require_compatible(a, b);
    SeriesFp r(a.modulus(), a.truncation_order());
    for (std::size_t i = 0; i <= a.truncation_order(); ++i)
        r.set_coeff(i, a.coeff(i) + b.coeff(i));
    return r;
}

SeriesFp operator-(const SeriesFp& a, const SeriesFp& b) {
    require_compatible(a, b);
    SeriesFp r(a.modulus(), a.truncation_order());
    for (std::size_t i = 0; i <= a.truncation_order(); ++i)
        r.set_coeff(i, a.coeff(i) - b.coeff(i));
    return r;
}

SeriesFp operator*(const SeriesFp& a, const SeriesFp& b) {
    require_compatible(a, b);
    const u64 q = a.modulus();
    SeriesFp r(q, a.truncation_order());
    for (std::size_t i = 0; i <= a.truncation_order(); ++i) {
        if (a.coeffs()[i] == 0)
            continue;
        for (std::size_t j = 0; i + j <= a.truncation_order(); ++j) {
            u64 t = (r.coeffs()[i + j] +
                     static_cast<u128>(a.coeffs()[i]) * b.coeffs()[j]) % q;
            r.set_coeff(i + j, FpElem(t, q));
        }
    }
    return r;
}

namespace {

// Split a nonzero integer as +-p^v * u with p coprime to u; returns
// (v, u mod p).
std::pair<u64, u64> padic_split(i128 x, u64 p) {
    u64 v = 0;
    bool neg = x < 0;
    u128 m = neg ? static_cast<u128>(-x) : static_cast<u128>(x);
    while (m % p == 0) {
        m /= p;
        ++v;
    }
    u64 u = static_cast<u64>(m % p);
    if (neg)
        u = (p - u) % p;
    return {v, u};
}

} // namespace

SeriesFp binomial_series(i64 num, i64 den, u64 p, std::size_t N) {
    require_prime(p);
    if (den % static_cast<i64>(p) == 0)
        throw DenominatorDivisibleByP("exponent denominator " + std::to_string(den) +
                                      " is divisible by p = " + std::to_string(p));
    SeriesFp out(p, N);
    out.set_coeff(0, FpElem::one(p));

    // C(a, k) = prod_{j<k} (num - j*den) / (den^k * k!). Valuations of the
    // integer numerator and of k! are tracked separately; the difference is
    // >= 0 because binomial coefficients of p-adic integers are p-adic
    // integers, and the coefficient is a unit mod p exactly when it is zero.
    u64 val_num = 0, unit_num = 1;
    u64 val_fact = 0, unit_fact = 1;
    u64 den_pow = 1;
    const u64 den_unit = padic_split(den, p).second;
    bool vanished = false;
    for (std::size_t k = 1; k <= N; ++k) {
        const i128 factor = static_cast<i128>(num) -
                            static_cast<i128>(k - 1) * den;
        if (factor == 0)
            vanished = true; // exponent is the integer k-1; all later terms are 0
        if (vanished)
            continue;
        auto [v1, u1] = padic_split(factor, p);
        val_num += v1;
        unit_num = mul_mod(unit_num, u1, p);
        auto [v2, u2] = padic_split(static_cast<i128>(k), p);
        val_fact += v2;
        unit_fact = mul_mod(unit_fact, u2, p);
        den_pow = mul_mod(den_pow, den_unit, p);
        if (val_num < val_fact)
            throw Error("NegativeValuation",
                        "binomial coefficient left Z_p; exponent bookkeeping is wrong");
        if (val_num > val_fact)
            continue; // coefficient divisible by p
        u64 denom = mul_mod(unit_fact, den_pow, p);
        u64 c = mul_mod(unit_num, pow_mod(denom, p - 2, p), p);
        out.set_coeff(k, FpElem(c, p));
    }
    return out;
}

} // namespace galcover

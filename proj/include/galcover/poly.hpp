#ifndef GALCOVER_POLY_HPP
#define GALCOVER_POLY_HPP

#include <string>
#include <vector>

#include "galcover/fp.hpp"

namespace galcover {

// Dense polynomial over F_q, coefficients stored lowest degree first.
// Normal form: no trailing (leading-coefficient) zeros; the zero polynomial
// has an empty coefficient vector and degree() == -1.
class PolyFp {
public:
    explicit PolyFp(u64 q) : modulus_(q) { require_prime(q); }
    PolyFp(u64 q, std::vector<u64> coeffs);

    static PolyFp zero(u64 q) { return PolyFp(q); }
    static PolyFp one(u64 q) { return PolyFp(q, {1}); }
    static PolyFp t(u64 q) { return PolyFp(q, {0, 1}); }
    static PolyFp constant(FpElem c) { return PolyFp(c.modulus, {c.value}); }

    u64 modulus() const noexcept { return modulus_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }

    // Coefficient of t^i, zero beyond the degree.
    FpElem coeff(std::size_t i) const;
    const std::vector<u64>& coeffs() const noexcept { return coeffs_; }

    FpElem leading() const;
    PolyFp monic() const;
    PolyFp derivative() const;
    FpElem eval(FpElem x) const;

    PolyFp operator-() const;
    friend PolyFp operator+(const PolyFp& a, const PolyFp& b);
    friend PolyFp operator-(const PolyFp& a, const PolyFp& b);
    friend PolyFp operator*(const PolyFp& a, const PolyFp& b);
    PolyFp operator*(FpElem c) const;

    // Euclidean division; divisor must be nonzero.
    friend std::pair<PolyFp, PolyFp> divmod(const PolyFp& a, const PolyFp& b);
    friend PolyFp operator/(const PolyFp& a, const PolyFp& b);
    friend PolyFp operator%(const PolyFp& a, const PolyFp& b);

    // Exact division; throws if the remainder is nonzero.
    PolyFp divide_exact(const PolyFp& b) const;
    bool divides(const PolyFp& other) const;

    friend bool operator==(const PolyFp& a, const PolyFp& b) {
        return a.modulus_ == b.modulus_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const PolyFp& a, const PolyFp& b) { return !(a == b); }

    // Canonical order: degree first, then coefficient tuples lowest degree
    // first. Pins factor listings and golden output.
    static bool canonical_less(const PolyFp& a, const PolyFp& b);

    std::string to_string(const std::string& var = "t") const;

private:
    void normalize();

    u64 modulus_;
    std::vector<u64> coeffs_;
};

// The p-th cyclotomic polynomial 1 + t + ... + t^(p-1) over F_l.
// Throws EqualPrimes when l == p.
PolyFp cyclotomic_mod(u64 p, u64 l);

// Monic gcd; poly_gcd(f, 0) = monic(f).
PolyFp poly_gcd(PolyFp f, PolyFp g);

// f^e mod m by square-and-multiply. m must be nonconstant.
PolyFp poly_powmod(const PolyFp& f, u64 e, const PolyFp& m);

// Same with a 128-bit exponent (Frobenius powers q^d overflow u64 quickly).
PolyFp poly_powmod_u128(const PolyFp& f, u128 e, const PolyFp& m);

} // namespace galcover

#endif // GALCOVER_POLY_HPP

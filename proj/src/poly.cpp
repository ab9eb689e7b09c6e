#include "galcover/poly.hpp"

#include <algorithm>

namespace galcover {

PolyFp::PolyFp(u64 q, std::vector<u64> coeffs) : modulus_(q), coeffs_(std::move(coeffs)) {
    require_prime(q);
    for (u64& c : coeffs_)
        c %= modulus_;
    normalize();
}

void PolyFp::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

FpElem PolyFp::coeff(std::size_t i) const {
    return FpElem(i < coeffs_.size() ? coeffs_[i] : 0, modulus_);
}

FpElem PolyFp::leading() const {
    if (is_zero())
        throw ZeroPolynomial("leading coefficient of the zero polynomial");
    return FpElem(coeffs_.back(), modulus_);
}

PolyFp PolyFp::monic() const {
    if (is_zero())
        return *this;
    if (is_monic())
        return *this;
    return *this * leading().inverse();
}

PolyFp PolyFp::derivative() const {
    if (coeffs_.size() <= 1)
        return PolyFp::zero(modulus_);
    std::vector<u64> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        d[i - 1] = mul_mod(coeffs_[i], i % modulus_, modulus_);
    return PolyFp(modulus_, std::move(d));
}

FpElem PolyFp::eval(FpElem x) const {
    if (x.modulus != modulus_)
        throw ModulusMismatch("eval point modulus differs from polynomial");
    FpElem acc = FpElem::zero(modulus_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + FpElem(*it, modulus_);
    return acc;
}

PolyFp PolyFp::operator-() const {
    std::vector<u64> c(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        c[i] = coeffs_[i] == 0 ? 0 : modulus_ - coeffs_[i];
    return PolyFp(modulus_, std::move(c));
}

namespace {

void require_same_modulus(const PolyFp& a, const PolyFp& b) {
    if (a.modulus() != b.modulus())
        throw ModulusMismatch("mixed polynomial moduli " +
                              std::to_string(a.modulus()) + " and " +
                              std::to_string(b.modulus()));
}

} // namespace

PolyFp operator+(const PolyFp& a, const PolyFp& b) {
    require_same_modulus(a, b);
    const u64 q = a.modulus();
    std::vector<u64> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        u64 s = (i < a.coeffs().size() ? a.coeffs()[i] : 0) +
                (i < b.coeffs().size() ? b.coeffs()[i] : 0);
        c[i] = s >= q ? s - q : s;
    }
    return PolyFp(q, std::move(c));
}

PolyFp operator-(const PolyFp& a, const PolyFp& b) {
    return a + (-b);
}

PolyFp operator*(const PolyFp& a, const PolyFp& b) {
    require_same_modulus(a, b);
    const u64 q = a.modulus();
    if (a.is_zero() || b.is_zero())
        return PolyFp::zero(q);
    std::vector<u64> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
            u64 t = (c[i + j] + static_cast<u128>(a.coeffs()[i]) * b.coeffs()[j]) % q;
            c[i + j] = t;
        }
    }
    return PolyFp(q, std::move(c));
}

PolyFp PolyFp::operator*(FpElem c) const {
    if (c.modulus != modulus_)
        throw ModulusMismatch("scalar modulus differs from polynomial");
    std::vector<u64> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out[i] = mul_mod(coeffs_[i], c.value, modulus_);
    return PolyFp(modulus_, std::move(out));
}

std::pair<PolyFp, PolyFp> divmod(const PolyFp& a, const PolyFp& b) {
    require_same_modulus(a, b);
    if (b.is_zero())
        throw DivisionByZero("polynomial division by zero");
    const u64 q = a.modulus();
    if (a.degree() < b.degree())
        return {PolyFp::zero(q), a};
    std::vector<u64> rem = a.coeffs_;
    std::vector<u64> quo(a.coeffs_.size() - b.coeffs_.size() + 1, 0);
    const u64 lead_inv = FpElem(b.coeffs_.back(), q).inverse().value;
    for (std::size_t k = quo.size(); k-- > 0;) {
        u64 c = mul_mod(rem[k + b.coeffs_.size() - 1], lead_inv, q);
        if (c == 0)
            continue;
        quo[k] = c;
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) {
            u64 sub = mul_mod(c, b.coeffs_[i], q);
            u64& r = rem[k + i];
            r = r >= sub ? r - sub : r + (q - sub);
        }
    }
    return {PolyFp(q, std::move(quo)), PolyFp(q, std::move(rem))};
}

PolyFp operator/(const PolyFp& a, const PolyFp& b) { return divmod(a, b).first; }
PolyFp operator%(const PolyFp& a, const PolyFp& b) { return divmod(a, b).second; }

PolyFp PolyFp::divide_exact(const PolyFp& b) const {
    auto [q, r] = divmod(*this, b);
    if (!r.is_zero())
        throw Error("InexactDivision", "division left a nonzero remainder");
    return q;
}

bool PolyFp::divides(const PolyFp& other) const {
    return (other % *this).is_zero();
}

bool PolyFp::canonical_less(const PolyFp& a, const PolyFp& b) {
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    return a.coeffs_ < b.coeffs_;
}

std::string PolyFp::to_string(const std::string& var) const {
    if (is_zero())
        return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i] == 0)
            continue;
        if (!out.empty())
            out += " + ";
        const bool show_coeff = coeffs_[i] != 1 || i == 0;
        if (show_coeff)
            out += std::to_string(coeffs_[i]);
        if (i > 0) {
            if (show_coeff)
                out += "*";
            out += var;
            if (i > 1)
                out += "^" + std::to_string(i);
        }
    }
    return out;
}

PolyFp cyclotomic_mod(u64 p, u64 l) {
    require_prime(p);
    require_prime(l);
    if (p == l)
        throw EqualPrimes("cyclotomic_mod requires l != p (the reduction of the "
                          "p-th cyclotomic polynomial mod p is not squarefree)");
    return PolyFp(l, std::vector<u64>(p, 1));
}

PolyFp poly_gcd(PolyFp f, PolyFp g) {
    require_same_modulus(f, g);
    while (!g.is_zero()) {
        PolyFp r = f % g;
        f = std::move(g);
        g = std::move(r);
    }
    return f.monic();
}

PolyFp poly_powmod_u128(const PolyFp& f, u128 e, const PolyFp& m) {
    require_same_modulus(f, m);
    if (m.degree() < 1)
        throw ConstantModulus("poly_powmod requires a nonconstant modulus");
    PolyFp base = f % m;
    PolyFp result = PolyFp::one(f.modulus());
    while (e > 0) {
        if (e & 1)
            result = (result * base) % m;
        e >>= 1;
        if (e > 0)
            base = (base * base) % m;
    }
    return result;
}

PolyFp poly_powmod(const PolyFp& f, u64 e, const PolyFp& m) {
    return poly_powmod_u128(f, e, m);
}

} // namespace galcover

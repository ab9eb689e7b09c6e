#include "galcover/factor.hpp"

#include <algorithm>
#include <random>

namespace galcover {

PolyFp Factorization::product() const {
    PolyFp acc = PolyFp::one(modulus);
    for (const Part& part : factors)
        for (u64 i = 0; i < part.multiplicity; ++i)
            acc = acc * part.factor;
    return acc;
}

namespace {

// f = h(t)^q over the prime field F_q pulls back to h with the same
// coefficients at indices divisible by q (Frobenius fixes F_q).
PolyFp qth_root(const PolyFp& f) {
    const u64 q = f.modulus();
    std::vector<u64> h(static_cast<std::size_t>(f.degree()) / q + 1);
    for (std::size_t i = 0; i < h.size(); ++i)
        h[i] = f.coeff(i * q).value;
    return PolyFp(q, std::move(h));
}

} // namespace

PolyFp squarefree_part(const PolyFp& f) {
    if (f.is_zero())
        throw ZeroPolynomial("squarefree_part of the zero polynomial");
    PolyFp m = f.monic();
    if (m.degree() == 0)
        return PolyFp::one(f.modulus());
    PolyFp d = m.derivative();
    if (d.is_zero())
        return squarefree_part(qth_root(m));
    PolyFp g = poly_gcd(m, d);
    if (g.is_one())
        return m;
    // w collects every factor whose multiplicity is prime to q, once.
    PolyFp w = m.divide_exact(g);
    PolyFp rest = m;
    for (;;) {
        PolyFp c = poly_gcd(rest, w);
        if (c.is_one())
            break;
        rest = rest.divide_exact(c);
    }
    // rest holds the factors with multiplicity divisible by q, as a q-th power.
    if (rest.degree() == 0)
        return w;
    return w * squarefree_part(rest);
}

std::vector<std::pair<u64, PolyFp>> distinct_degree_factorize(const PolyFp& f) {
    if (f.is_zero() || f.degree() < 1)
        throw ZeroPolynomial("distinct_degree_factorize needs a nonconstant input");
    if (!f.is_monic())
        throw NotMonic("distinct_degree_factorize expects a monic input");
    if (!poly_gcd(f, f.derivative()).is_one())
        throw NotSquarefree("input has a repeated factor");

    const u64 q = f.modulus();
    std::vector<std::pair<u64, PolyFp>> parts;
    PolyFp rest = f;
    PolyFp frob = PolyFp::t(q) % rest; // t^(q^d) mod rest, advanced once per d
    for (u64 d = 1; rest.degree() >= static_cast<int>(2 * d); ++d) {
        frob = poly_powmod(frob, q, rest);
        PolyFp g = poly_gcd(frob - PolyFp::t(q), rest);
        if (!g.is_one()) {
            parts.emplace_back(d, g);
            rest = rest.divide_exact(g);
            frob = frob % rest;
        }
    }
    if (rest.degree() > 0)
        parts.emplace_back(static_cast<u64>(rest.degree()), rest);
    return parts;
}

namespace {

PolyFp random_poly_below(u64 q, int degree_bound, std::mt19937_64& rng) {
    // Raw engine output reduced mod q: uniform_int_distribution is not
    // pinned by the standard, and byte-identical runs matter here.
    std::vector<u64> c(static_cast<std::size_t>(degree_bound));
    for (u64& x : c)
        x = rng() % q;
    return PolyFp(q, std::move(c));
}

void edf_split(const PolyFp& f, u64 d, std::mt19937_64& rng,
               std::vector<PolyFp>& out) {
    const u64 q = f.modulus();
    if (static_cast<u64>(f.degree()) == d) {
        out.push_back(f.monic());
        return;
    }
    for (;;) {
        PolyFp u = random_poly_below(q, f.degree(), rng);
        if (u.degree() < 1)
            continue;
        PolyFp g = poly_gcd(u, f);
        if (g.is_one()) {
            if (q == 2) {
                // Trace map sum_{i<d} u^(2^i); lands in F_2 on each factor.
                PolyFp tr = u;
                PolyFp pw = u;
                for (u64 i = 1; i < d; ++i) {
                    pw = (pw * pw) % f;
                    tr = tr + pw;
                }
                g = poly_gcd(tr, f);
            } else {
                u128 e = (checked_pow_u128(q, d) - 1) / 2;
                PolyFp w = poly_powmod_u128(u, e, f);
                g = poly_gcd(w - PolyFp::one(q), f);
            }
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            edf_split(g, d, rng, out);
            edf_split(f.divide_exact(g), d, rng, out);
            return;
        }
    }
}

} // namespace

std::vector<PolyFp> equal_degree_factorize(const PolyFp& f, u64 d, u64 seed) {
    if (f.is_zero() || f.degree() < 1)
        throw ZeroPolynomial("equal_degree_factorize needs a nonconstant input");
    if (d == 0 || static_cast<u64>(f.degree()) % d != 0)
        throw MixedDegrees("degree " + std::to_string(f.degree()) +
                           " is not a multiple of the factor degree " +
                           std::to_string(d));
    std::mt19937_64 rng(seed);
    std::vector<PolyFp> out;
    edf_split(f.monic(), d, rng, out);
    std::sort(out.begin(), out.end(), PolyFp::canonical_less);
    return out;
}

Factorization factor(const PolyFp& f, u64 seed) {
    if (f.is_zero() || f.degree() < 1)
        throw ZeroPolynomial("factor needs a nonzero nonconstant input");
    const PolyFp m = f.monic();
    Factorization result{{}, f.modulus()};

    PolyFp sf = squarefree_part(m);
    for (auto& [d, part] : distinct_degree_factorize(sf)) {
        for (PolyFp& irr : equal_degree_factorize(part, d, seed)) {
            u64 mult = 0;
            PolyFp rest = m;
            while (irr.divides(rest)) {
                rest = rest.divide_exact(irr);
                ++mult;
            }
            result.factors.push_back({std::move(irr), mult});
        }
    }
    std::sort(result.factors.begin(), result.factors.end(),
              [](const Factorization::Part& a, const Factorization::Part& b) {
                  return PolyFp::canonical_less(a.factor, b.factor);
              });
    if (result.product() != m)
        throw Error("FactorizationCheckFailed",
                    "re-multiplied factors do not reproduce the input");
    return result;
}

bool is_irreducible(const PolyFp& f) {
    if (f.is_zero() || f.degree() < 1)
        throw ZeroPolynomial("is_irreducible needs a nonconstant input");
    const u64 q = f.modulus();
    const u64 n = static_cast<u64>(f.degree());
    const PolyFp m = f.monic();
    const PolyFp t = PolyFp::t(q);
    if (n == 1)
        return true;

    // Frobenius ladder: frob[j] = t^(q^(j+1)) mod m.
    std::vector<PolyFp> frob;
    PolyFp cur = t % m;
    for (u64 j = 0; j < n; ++j) {
        cur = poly_powmod(cur, q, m);
        frob.push_back(cur);
    }
    if (frob[n - 1] != t)
        return false;
    u64 rest = n;
    for (u64 r = 2; r * r <= n; ++r) {
        if (rest % r != 0)
            continue;
        while (rest % r == 0)
            rest /= r;
        if (!poly_gcd(frob[n / r - 1] - t, m).is_one())
            return false;
    }
    if (rest > 1)
        if (!poly_gcd(frob[n / rest - 1] - t, m).is_one())
            return false;
    return true;
}

} // namespace galcover

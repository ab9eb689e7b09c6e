#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "galcover/fp.hpp"
#include "galcover/poly.hpp"
#include "galcover/series.hpp"
#include "support/oracles.hpp"

using namespace galcover;

TEST_CASE("is_prime on small and known values") {
    CHECK(is_prime(7));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91)); // 7 * 13
    CHECK_FALSE(is_prime(0));
    CHECK(is_prime(2));
    CHECK_FALSE(is_prime(561));  // Carmichael
    CHECK(is_prime(2147483647)); // 2^31 - 1
    CHECK(is_prime(9223372036854775783ull));
    CHECK_FALSE(is_prime(9223372036854775781ull)); // 773 * 2713 * 19993 * 219979633
}

TEST_CASE("is_prime against trial division up to 10000") {
    for (u64 n = 1; n < 10000; ++n) {
        bool expected = n >= 2;
        for (u64 d = 2; d * d <= n; ++d)
            if (n % d == 0) {
                expected = false;
                break;
            }
        CAPTURE(n);
        REQUIRE(is_prime(n) == expected);
    }
}

TEST_CASE("FpElem arithmetic and guards") {
    FpElem a(3, 5), b(4, 5);
    CHECK((a + b).value == 2);
    CHECK((a - b).value == 4);
    CHECK((a * b).value == 2);
    CHECK((a / b).value == (3 * 4) % 5); // 4^-1 = 4 mod 5
    CHECK((-a).value == 2);
    CHECK(a.pow(3).value == 2);
    CHECK(FpElem::from_int(-7, 5).value == 3);

    CHECK_THROWS_AS(FpElem(1, 6), NotPrime);
    CHECK_THROWS_AS(FpElem(1, 5) + FpElem(1, 7), ModulusMismatch);
    CHECK_THROWS_AS(FpElem::zero(5).inverse(), DivisionByZero);
    CHECK_THROWS_AS(FpElem(2, 7) / FpElem::zero(7), DivisionByZero);
}

TEST_CASE("ord_mod examples and properties") {
    CHECK(ord_mod(2, 7) == 3);
    CHECK(ord_mod(2, 3) == 2);
    CHECK(ord_mod(11, 5) == 1);
    CHECK_THROWS_AS(ord_mod(5, 5), EqualPrimes);

    // a divides p-1 and is genuinely minimal.
    for (u64 p : {3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull}) {
        for (u64 l : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
            if (l == p)
                continue;
            const u64 a = ord_mod(l, p);
            CAPTURE(p);
            CAPTURE(l);
            REQUIRE((p - 1) % a == 0);
            REQUIRE(pow_mod(l, a, p) == 1);
            for (u64 e = 1; e < a; ++e)
                REQUIRE(pow_mod(l, e, p) != 1);
        }
    }
}

TEST_CASE("cyclotomic_mod examples") {
    CHECK(cyclotomic_mod(3, 2) == PolyFp(2, {1, 1, 1}));
    CHECK(cyclotomic_mod(7, 2) == PolyFp(2, {1, 1, 1, 1, 1, 1, 1}));
    CHECK(cyclotomic_mod(5, 3) == PolyFp(3, {1, 1, 1, 1, 1}));
    CHECK_THROWS_AS(cyclotomic_mod(5, 5), EqualPrimes);
}

TEST_CASE("cyclotomic times (t - 1) is t^p - 1") {
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull}) {
        for (u64 l : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
            if (l == p)
                continue;
            PolyFp lhs = cyclotomic_mod(p, l) * (PolyFp::t(l) - PolyFp::one(l));
            std::vector<u64> tp(p + 1, 0);
            tp[0] = l - 1;
            tp[p] = 1;
            REQUIRE(lhs == PolyFp(l, tp));
        }
    }
}

TEST_CASE("polynomial basics") {
    PolyFp f(5, {1, 0, 3, 0, 0}); // normal form strips zeros
    CHECK(f.degree() == 2);
    CHECK(PolyFp::zero(5).degree() == -1);
    CHECK(f.coeff(7).value == 0);
    CHECK(f.to_string() == "3*t^2 + 1");
    CHECK(PolyFp(2, {1, 1, 0, 1}).to_string() == "t^3 + t + 1");
    CHECK(PolyFp::zero(3).to_string() == "0");

    PolyFp g(5, {2, 1});
    auto [q, r] = divmod(f, g);
    CHECK(q * g + r == f);
    CHECK(r.degree() < g.degree());
    CHECK_THROWS_AS(divmod(f, PolyFp::zero(5)), DivisionByZero);
    CHECK_THROWS_AS(f + PolyFp::one(7), ModulusMismatch);
}

TEST_CASE("polynomial division properties, randomized") {
    std::mt19937_64 rng(12345);
    for (u64 q : {2ull, 3ull, 5ull, 13ull}) {
        for (int iter = 0; iter < 200; ++iter) {
            auto rand_poly = [&](int max_deg) {
                std::vector<u64> c(static_cast<std::size_t>(rng() % (max_deg + 1)) + 1);
                for (u64& x : c)
                    x = rng() % q;
                return PolyFp(q, std::move(c));
            };
            PolyFp a = rand_poly(8);
            PolyFp b = rand_poly(4);
            if (b.is_zero())
                continue;
            auto [quo, rem] = divmod(a, b);
            REQUIRE(quo * b + rem == a);
            REQUIRE(rem.degree() < b.degree());
        }
    }
}

TEST_CASE("poly_gcd examples") {
    // (t^2 - 1, t - 1) over F_5
    PolyFp f(5, {4, 0, 1});
    PolyFp g(5, {4, 1});
    CHECK(poly_gcd(f, g) == g);

    CHECK(poly_gcd(cyclotomic_mod(7, 2), PolyFp(2, {1, 1})).is_one());

    PolyFp h(3, {2, 1, 1});
    CHECK(poly_gcd(h, h) == h.monic());
    CHECK(poly_gcd(h, PolyFp::zero(3)) == h.monic());
    CHECK_THROWS_AS(poly_gcd(PolyFp::one(3), PolyFp::one(5)), ModulusMismatch);
}

TEST_CASE("poly_gcd properties, randomized") {
    std::mt19937_64 rng(777);
    for (u64 q : {2ull, 3ull, 5ull}) {
        for (int iter = 0; iter < 150; ++iter) {
            auto rand_poly = [&](int max_deg) {
                std::vector<u64> c(static_cast<std::size_t>(rng() % (max_deg + 1)) + 1);
                for (u64& x : c)
                    x = rng() % q;
                return PolyFp(q, std::move(c));
            };
            PolyFp a = rand_poly(6), b = rand_poly(6), c = rand_poly(6);
            PolyFp g = poly_gcd(a, b);
            REQUIRE(poly_gcd(b, a) == g);
            REQUIRE(poly_gcd(g, c) == poly_gcd(a, poly_gcd(b, c)));
            if (!g.is_zero()) {
                REQUIRE(g.is_monic());
                if (!a.is_zero())
                    REQUIRE((a % g).is_zero());
                if (!b.is_zero())
                    REQUIRE((b % g).is_zero());
            }
        }
    }
}

TEST_CASE("poly_powmod examples") {
    PolyFp m(2, {1, 1, 1});
    CHECK(poly_powmod(PolyFp::t(2), 2, m) == PolyFp(2, {1, 1}));
    PolyFp big(5, {1, 2, 0, 1});
    CHECK(poly_powmod(PolyFp::t(5), 1, big) == PolyFp::t(5));
    CHECK(poly_powmod(big, 0, big) == PolyFp::one(5));
    CHECK_THROWS_AS(poly_powmod(PolyFp::t(5), 2, PolyFp::one(5)), ConstantModulus);
    CHECK_THROWS_AS(poly_powmod(PolyFp::t(5), 2, PolyFp(3, {1, 1})), ModulusMismatch);
}

TEST_CASE("Frobenius fixed points: t^(q^a) = t mod every irreducible of degree a") {
    for (u64 q : {2ull, 3ull}) {
        for (u64 a = 1; a <= 4; ++a) {
            for (const PolyFp& f : oracles::all_irreducible_polys(q, a)) {
                const u64 e = static_cast<u64>(checked_pow_u128(q, a));
                CAPTURE(f.to_string());
                REQUIRE(poly_powmod(PolyFp::t(q), e, f) == PolyFp::t(q) % f);
            }
        }
    }
}

TEST_CASE("series arithmetic truncates consistently") {
    SeriesFp a(5, 3, {1, 2, 3, 4});
    SeriesFp b(5, 3, {4, 3, 2, 1});
    CHECK((a + b).coeffs() == std::vector<u64>{0, 0, 0, 0});
    SeriesFp prod = a * b;
    CHECK(prod.coeff(0).value == 4);
    CHECK(prod.coeff(3).value == (1 * 1 + 2 * 2 + 3 * 3 + 4 * 4) % 5);
    CHECK(a.valuation() == 0);
    SeriesFp z(5, 2);
    CHECK_FALSE(z.valuation().has_value());
}

TEST_CASE("binomial_series examples") {
    CHECK(binomial_series(1, 1, 5, 3).coeffs() == std::vector<u64>{1, 1, 0, 0});
    CHECK(binomial_series(-1, 2, 3, 2).coeffs() == std::vector<u64>{1, 1, 0});
    CHECK(binomial_series(-1, 3, 5, 3).coeff(1).value == 3);
    CHECK_THROWS_AS(binomial_series(1, 5, 5, 3), DenominatorDivisibleByP);
}

TEST_CASE("binomial_series integer exponents match Pascal's triangle") {
    for (u64 p : {2ull, 3ull, 5ull, 7ull}) {
        for (u64 n = 0; n <= 8; ++n) {
            SeriesFp s = binomial_series(static_cast<i64>(n), 1, p, 8);
            std::vector<u64> expected = oracles::pascal_row_mod(n, 8, p);
            CAPTURE(p);
            CAPTURE(n);
            REQUIRE(s.coeffs() == expected);
        }
    }
}

TEST_CASE("binomial_series coefficients past k = p need valuation tracking") {
    // C(-1, k) = (-1)^k in any Z_p, including k >= p.
    SeriesFp s = binomial_series(-1, 1, 3, 7);
    CHECK(s.coeffs() == std::vector<u64>{1, 2, 1, 2, 1, 2, 1, 2});
    // C(-1/2, k) mod 3: frozen from exact rational arithmetic.
    CHECK(binomial_series(-1, 2, 3, 4).coeffs() == std::vector<u64>{1, 1, 0, 1, 1});
}

TEST_CASE("binomial_series satisfies B^s (1 + x) = 1 for B = (1+x)^(-1/s)") {
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
        for (u64 s : {2ull, 3ull, 5ull, 7ull, 11ull}) {
            if (s % p == 0)
                continue;
            const std::size_t N = 12;
            SeriesFp b = binomial_series(-1, static_cast<i64>(s), p, N);
            SeriesFp acc(p, N);
            acc.set_coeff(0, FpElem::one(p));
            for (u64 i = 0; i < s; ++i)
                acc = acc * b;
            SeriesFp one_plus_x(p, N);
            one_plus_x.set_coeff(0, FpElem::one(p));
            one_plus_x.set_coeff(1, FpElem::one(p));
            acc = acc * one_plus_x;
            SeriesFp one(p, N);
            one.set_coeff(0, FpElem::one(p));
            CAPTURE(p);
            CAPTURE(s);
            REQUIRE(acc == one);
        }
    }
}

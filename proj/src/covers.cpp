#include "galcover/covers.hpp"

#include <algorithm>

namespace galcover {

u64 RamificationFiltration::order_at(i64 i) const {
    for (const Segment& seg : segments)
        if (seg.lo <= i && i <= seg.hi)
            return seg.group_order;
    return 1;
}

RamificationFiltration ramification_filtration(u64 p, u64 s) {
    require_prime(p);
    if (s == 0 || s % p == 0)
        throw SDivisibleByP("exponent s must be positive and prime to p");
    return RamificationFiltration{{{-1, static_cast<i64>(s), p}}, p};
}

u64 rh_genus_from_filtration(const RamificationFiltration& f) {
    // 2g - 2 = p(-2) + sum_{i>=0} (|I_i| - 1), summed over the stored
    // segments (the trivial tail contributes nothing).
    i128 wild = 0;
    for (const auto& seg : f.segments) {
        const i64 lo = std::max<i64>(seg.lo, 0);
        if (seg.hi < lo || seg.group_order <= 1)
            continue;
        wild += static_cast<i128>(seg.hi - lo + 1) *
                static_cast<i128>(seg.group_order - 1);
    }
    const i128 two_g = 2 - 2 * static_cast<i128>(f.cover_degree) + wild;
    if (two_g < 0 || two_g % 2 != 0)
        throw InconsistentFiltration(
            "filtration does not yield a non-negative integral genus");
    return static_cast<u64>(two_g / 2);
}

u64 artin_schreier_genus(u64 p, u64 s) {
    require_prime(p);
    if (s == 0 || s % p == 0)
        throw SDivisibleByP("exponent s must be positive and prime to p");
    const u64 g = (p - 1) * (s - 1) / 2; // (p-1)(s-1) is even: p or s is odd
    const u64 check = rh_genus_from_filtration(ramification_filtration(p, s));
    if (g != check)
        throw Error("GenusCheckFailed",
                    "closed form and Riemann-Hurwitz route disagree");
    return g;
}

JumpSeriesResult ramification_jump_series_check(u64 p, u64 s, std::size_t N) {
    require_prime(p);
    require_prime(s);
    if (s == p)
        throw UnsupportedParameters("jump check requires s != p");
    if (N < s + 2)
        throw TruncationTooShort("need truncation order at least s + 2 = " +
                                 std::to_string(s + 2));

    // tau(pi) = pi * (1 + pi^s)^(-1/s); substitute x = pi^s into the binomial
    // series and shift by one.
    const std::size_t terms = (N - 1) / s;
    const SeriesFp b = binomial_series(-1, static_cast<i64>(s), p, terms);
    SeriesFp tau_pi(p, N);
    for (std::size_t k = 0; k <= terms; ++k)
        tau_pi.set_coeff(1 + s * k, b.coeff(k));
    SeriesFp pi(p, N);
    pi.set_coeff(1, FpElem::one(p));
    const SeriesFp diff = tau_pi - pi;
    auto v = diff.valuation();
    if (!v.has_value())
        throw InconsistentFiltration("tau fixes the uniformizer to order N");
    return {static_cast<u64>(*v), diff.coeff(*v)};
}

u64 minimal_genus_exponent(u64 p) {
    return p == 2 ? 3 : 2;
}

namespace {

void validate_tau_params(const CoverParameters& params) {
    require_prime(params.p);
    require_prime(params.l);
    if (params.l == params.p)
        throw EqualPrimes("torsion prime l must differ from p");
    if (!is_prime(params.s) || params.s == params.p)
        throw UnsupportedParameters(
            "torsion action needs s prime and distinct from p, got s = " +
            std::to_string(params.s));
}

} // namespace

TauAction tau_on_torsion(const CoverParameters& params) {
    validate_tau_params(params);
    const u64 p = params.p, l = params.l, s = params.s;

    const MatrixFp block = companion_matrix(cyclotomic_mod(p, l));
    std::vector<MatrixFp> blocks(s - 1, block);
    MatrixFp m = block_diagonal(blocks);

    std::string label;
    if (p != 2 && s == 2)
        label = "divisor-class basis D_0..D_{p-2}";
    else if (p == 2 && s == 3)
        label = "diagonal basis, both eigenvalues -1";
    else
        label = "canonical block model: s-1 companion blocks of the p-th "
                "cyclotomic polynomial";

    // Invariant checks: exact order p, characteristic polynomial
    // Phi_p^(s-1), no eigenvalue 1.
    if (!m.pow(p).is_identity() || m.is_identity())
        throw Error("TauCheckFailed", "torsion action is not of exact order p");
    PolyFp expected_charpoly = PolyFp::one(l);
    const PolyFp phi = cyclotomic_mod(p, l);
    for (u64 i = 0; i + 1 < s; ++i)
        expected_charpoly = expected_charpoly * phi;
    if (characteristic_polynomial(m) != expected_charpoly)
        throw Error("TauCheckFailed",
                    "characteristic polynomial is not the expected cyclotomic power");
    if (has_eigenvalue_one(m))
        throw Error("TauCheckFailed", "torsion action fixes a line");

    return TauAction{std::move(m), std::move(label), params};
}

u64 count_invariant_covers(const CoverParameters& params) {
    validate_tau_params(params);
    if (params.s != minimal_genus_exponent(params.p))
        throw UnsupportedParameters(
            "cover counting is defined at the minimal-genus exponent s = " +
            std::to_string(minimal_genus_exponent(params.p)));
    const TauAction tau = tau_on_torsion(params);
    const u64 dim = params.p == 2 ? 1 : ord_mod(params.l, params.p);
    return invariant_subspaces_of_dim(tau.matrix, dim,
                                      SubspaceSearchMode::algebraic)
        .size();
}

u128 unramified_cover_genus(u64 g_y, u64 l, u64 b) {
    require_prime(l);
    if (g_y == 0)
        throw GenusZeroBase(
            "no nontrivial unramified abelian cover exists over genus 0");
    return 1 + checked_mul_u128(checked_pow_u128(l, b),
                                static_cast<u128>(g_y - 1));
}

u128 minimal_genus(u64 p, u64 l) {
    require_prime(p);
    require_prime(l);
    if (p == l)
        throw EqualPrimes("minimal genus requires l != p");
    u128 g;
    if (p == 2) {
        g = 1;
    } else {
        const u64 a = ord_mod(l, p);
        g = 1 + checked_mul_u128(checked_pow_u128(l, a),
                                 static_cast<u128>((p - 3) / 2));
    }
    // Independent route: genus of the unramified cover of the minimal
    // Artin-Schreier base.
    const u64 s = minimal_genus_exponent(p);
    const u64 b = p == 2 ? 1 : ord_mod(l, p);
    const u128 check = unramified_cover_genus(artin_schreier_genus(p, s), l, b);
    if (g != check)
        throw Error("GenusCheckFailed",
                    "closed form and unramified-cover route disagree");
    return g;
}

u64 class_count_bound(u64 p, u64 l) {
    require_prime(p);
    require_prime(l);
    if (p == l)
        throw EqualPrimes("class count bound requires l != p");
    const u64 bound = p == 2 ? l + 1 : (p - 1) / ord_mod(l, p);
    const u64 counted =
        count_invariant_covers({p, l, minimal_genus_exponent(p)});
    if (bound != counted)
        throw Error("ClassCountCheckFailed",
                    "closed form and subspace enumeration disagree");
    return bound;
}

CoverReport build_report(u64 p, u64 l, u64 seed, u64 group_cap) {
    require_prime(p);
    require_prime(l);
    if (p == l)
        throw EqualPrimes("report requires l != p");

    CoverReport r;
    r.params = {p, l, minimal_genus_exponent(p)};
    r.a = ord_mod(l, p);
    r.phi_factors = factor(cyclotomic_mod(p, l), seed);

    const TauAction tau = tau_on_torsion(r.params);
    r.tau_matrix = tau.matrix.to_rows();
    r.tau_basis_label = tau.basis_label;
    for (const auto& [f, space] : primary_decomposition(tau.matrix)) {
        const std::size_t copies = space.dim() / static_cast<std::size_t>(f.degree());
        for (std::size_t i = 0; i < copies; ++i)
            r.tau_blocks.push_back(f);
    }

    r.g_y = artin_schreier_genus(p, r.params.s);
    r.g_z_min = minimal_genus(p, l);
    r.class_count_bound = class_count_bound(p, l);

    const u64 b = p == 2 ? 1 : r.a;
    if (checked_mul_u128(checked_pow_u128(l, b), p) <= group_cap) {
        MatrixFp action = order_p_element_glb(l, b, p).value();
        SemidirectDescriptor g(l, b, p, std::move(action));
        QuasiPResult qp = quasi_p_check(g, group_cap);
        r.quasi_p = qp.quasi_p ? CoverReport::QuasiPStatus::yes
                               : CoverReport::QuasiPStatus::no;
        r.quasi_p_closure = qp.closure_size;
    } else {
        r.quasi_p = CoverReport::QuasiPStatus::skipped;
        r.quasi_p_closure = 0;
    }

    r.jump = ramification_jump_series_check(p, r.params.s, 2 * r.params.s + 2);
    return r;
}

} // namespace galcover

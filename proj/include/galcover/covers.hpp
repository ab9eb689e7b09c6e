#ifndef GALCOVER_COVERS_HPP
#define GALCOVER_COVERS_HPP

#include <string>
#include <vector>

#include "galcover/factor.hpp"
#include "galcover/group.hpp"
#include "galcover/matrix.hpp"
#include "galcover/series.hpp"

namespace galcover {

// The primes (p, l) and the Artin-Schreier exponent s of a cover family
// y^p - y = x^s.
struct CoverParameters {
    u64 p; // characteristic
    u64 l; // torsion prime, l != p
    u64 s; // exponent, prime to p
};

// Higher ramification filtration at the totally ramified point of a degree-p
// cover: group order `cover_degree` for -1 <= i <= break_index, trivial after.
struct RamificationFiltration {
    struct Segment {
        i64 lo;
        i64 hi;
        u64 group_order;
    };
    std::vector<Segment> segments; // nontrivial part, ascending, disjoint
    u64 cover_degree;

    u64 order_at(i64 i) const;
};

// The torsion action of the order-p automorphism on the l-torsion of the
// Jacobian, dimension (p-1)(s-1) over F_l.
struct TauAction {
    MatrixFp matrix;
    std::string basis_label;
    CoverParameters params;
};

struct JumpSeriesResult {
    u64 valuation;
    FpElem leading_coeff;
};

struct CoverReport {
    CoverParameters params;
    u64 a = 0;
    Factorization phi_factors{{}, 2};
    std::vector<std::vector<u64>> tau_matrix;
    std::vector<PolyFp> tau_blocks; // one entry per irreducible block
    u64 g_y = 0;
    u128 g_z_min = 0;
    u64 class_count_bound = 0;
    enum class QuasiPStatus { yes, no, skipped } quasi_p = QuasiPStatus::skipped;
    u64 quasi_p_closure = 0;
    JumpSeriesResult jump{0, FpElem(0, 2)};
    std::string tau_basis_label;
};

RamificationFiltration ramification_filtration(u64 p, u64 s);

// Solves 2g - 2 = -2p + sum_{i>=0} (|I_i| - 1) for g; throws
// InconsistentFiltration when no non-negative integer solution exists.
u64 rh_genus_from_filtration(const RamificationFiltration& f);

// (p-1)(s-1)/2, checked against the Riemann-Hurwitz route on every call.
u64 artin_schreier_genus(u64 p, u64 s);

// Expands the action on a uniformizer through (1 + pi^s)^(-1/s) and reads off
// the first nonzero coefficient of tau(pi) - pi. Expected: valuation s + 1
// with leading coefficient -1/s mod p.
JumpSeriesResult ramification_jump_series_check(u64 p, u64 s, std::size_t N);

// The torsion action: companion matrix of the p-th cyclotomic polynomial for
// s = 2, minus-identity of size 2 for p = 2 and s = 3, and block-diagonal
// copies of the companion block in general (all three agree where they
// overlap). Invariants (order p, characteristic polynomial, no eigenvalue 1)
// are verified before returning.
TauAction tau_on_torsion(const CoverParameters& params);

// Number of tau-invariant subspaces that correspond to connected covers at
// the minimal-genus parameters: dimension-a subspaces for odd p, lines for
// p = 2. Computed by enumeration, not by the closed form.
u64 count_invariant_covers(const CoverParameters& params);

// g = 1 + l^b (g_y - 1); throws GenusZeroBase when g_y = 0.
u128 unramified_cover_genus(u64 g_y, u64 l, u64 b);

// 1 + l^a (p-3)/2 for odd p, 1 for p = 2; cross-checked against the
// unramified-cover route on every call.
u128 minimal_genus(u64 p, u64 l);

// (p-1)/a for odd p, l + 1 for p = 2. An upper bound on isomorphism classes,
// checked against count_invariant_covers.
u64 class_count_bound(u64 p, u64 l);

// Default exponent at the minimal-genus settings: 2 for odd p, 3 for p = 2.
u64 minimal_genus_exponent(u64 p);

CoverReport build_report(u64 p, u64 l, u64 seed = 0,
                         u64 group_cap = kDefaultGroupCap);

} // namespace galcover

#endif // GALCOVER_COVERS_HPP

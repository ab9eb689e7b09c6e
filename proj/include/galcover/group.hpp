#ifndef GALCOVER_GROUP_HPP
#define GALCOVER_GROUP_HPP

#include <optional>
#include <vector>

#include "galcover/matrix.hpp"

namespace galcover {

// The semidirect product (Z/lZ)^b x| Z/pZ defined by an action matrix of
// exact multiplicative order p in GL_b(F_l).
class SemidirectDescriptor {
public:
    SemidirectDescriptor(u64 l, u64 b, u64 p, MatrixFp action);

    u64 l() const noexcept { return l_; }
    u64 b() const noexcept { return b_; }
    u64 p() const noexcept { return p_; }
    const MatrixFp& action() const noexcept { return action_; }
    // action^c with 0 <= c < p, from a precomputed table.
    const MatrixFp& action_power(u64 c) const { return powers_[c % p_]; }

    u128 order() const { return checked_mul_u128(checked_pow_u128(l_, b_), p_); }
    bool is_direct_product() const { return action_.is_identity(); }

private:
    u64 l_, b_, p_;
    MatrixFp action_;
    std::vector<MatrixFp> powers_;
};

// (vector, twist) with multiplication
// (v1, c1) (v2, c2) = (v1 + action^c1 v2, c1 + c2).
struct GroupElement {
    std::vector<u64> vector;
    u64 twist = 0;

    friend bool operator==(const GroupElement& a, const GroupElement& b) {
        return a.twist == b.twist && a.vector == b.vector;
    }
};

GroupElement group_identity(const SemidirectDescriptor& g);
GroupElement group_mul(const SemidirectDescriptor& g, const GroupElement& x,
                       const GroupElement& y);
GroupElement group_inverse(const SemidirectDescriptor& g, const GroupElement& x);

// Least n >= 1 with x^n = identity; divides l^b * p.
u64 element_order(const GroupElement& x, const SemidirectDescriptor& g);

// A b x b matrix of exact order p over F_l when one exists (b >= ord_p(l)),
// built as blockdiag(companion(first irreducible factor of the p-th
// cyclotomic polynomial mod l), identity). Verified M^p = I, M != I.
std::optional<MatrixFp> order_p_element_glb(u64 l, u64 b, u64 p);

inline constexpr u64 kDefaultGroupCap = 1'000'000;

struct QuasiPResult {
    bool quasi_p;
    u64 closure_size; // order of the subgroup generated by all order-p elements
};

// Checks the definition directly: enumerate the elements of order p and close
// them under multiplication; the group is quasi-p iff the closure is all of G.
QuasiPResult quasi_p_check(const SemidirectDescriptor& g, u64 cap = kDefaultGroupCap);

// ord_p(l), the least rank b admitting a quasi-p semidirect product; checked
// on every call against order_p_element_glb at b = a and b = a - 1.
u64 minimal_rank(u64 l, u64 p);

} // namespace galcover

#endif // GALCOVER_GROUP_HPP

#include "galcover/group.hpp"

#include <algorithm>
#include <queue>

#include "galcover/factor.hpp"

namespace galcover {

SemidirectDescriptor::SemidirectDescriptor(u64 l, u64 b, u64 p, MatrixFp action)
    : l_(l), b_(b), p_(p), action_(std::move(action)) {
    require_prime(l);
    require_prime(p);
    if (l == p)
        throw EqualPrimes("semidirect product requires l != p");
    if (b == 0)
        throw InvalidAction("rank b must be positive");
    if (!action_.is_square() || action_.rows() != b)
        throw InvalidAction("action must be a b x b matrix");
    if (action_.modulus() != l)
        throw ModulusMismatch("action matrix must live over F_l");
    powers_.reserve(p);
    powers_.push_back(MatrixFp::identity(b, l));
    for (u64 c = 1; c < p; ++c)
        powers_.push_back(powers_.back() * action_);
    if (!(powers_.back() * action_).is_identity())
        throw InvalidAction("action matrix does not satisfy action^p = identity");
}

GroupElement group_identity(const SemidirectDescriptor& g) {
    return GroupElement{std::vector<u64>(g.b(), 0), 0};
}

GroupElement group_mul(const SemidirectDescriptor& g, const GroupElement& x,
                       const GroupElement& y) {
    const u64 l = g.l();
    std::vector<u64> v = g.action_power(x.twist).apply(y.vector);
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] += x.vector[i];
        if (v[i] >= l)
            v[i] -= l;
    }
    return GroupElement{std::move(v), (x.twist + y.twist) % g.p()};
}

GroupElement group_inverse(const SemidirectDescriptor& g, const GroupElement& x) {
    const u64 c_inv = (g.p() - x.twist) % g.p();
    std::vector<u64> v = g.action_power(c_inv).apply(x.vector);
    for (u64& e : v)
        e = e == 0 ? 0 : g.l() - e;
    return GroupElement{std::move(v), c_inv};
}

u64 element_order(const GroupElement& x, const SemidirectDescriptor& g) {
    const GroupElement id = group_identity(g);
    GroupElement cur = x;
    u64 n = 1;
    while (!(cur == id)) {
        cur = group_mul(g, cur, x);
        ++n;
    }
    return n;
}

std::optional<MatrixFp> order_p_element_glb(u64 l, u64 b, u64 p) {
    require_prime(l);
    require_prime(p);
    if (l == p)
        throw EqualPrimes("order_p_element_glb requires l != p");
    if (b == 0)
        throw InvalidAction("rank b must be positive");
    const u64 a = ord_mod(l, p);
    if (b < a)
        return std::nullopt;
    const PolyFp first = factor(cyclotomic_mod(p, l), 0).factors.front().factor;
    std::vector<MatrixFp> blocks{companion_matrix(first)};
    if (b > a)
        blocks.push_back(MatrixFp::identity(b - a, l));
    MatrixFp m = block_diagonal(blocks);
    if (!m.pow(p).is_identity() || m.is_identity())
        throw Error("OrderCheckFailed", "constructed matrix is not of order p");
    return m;
}

namespace {

u64 encode(const GroupElement& x, u64 l, u64 b) {
    u64 idx = x.twist;
    for (std::size_t i = b; i-- > 0;)
        idx = idx * l + x.vector[i];
    return idx;
}

} // namespace

QuasiPResult quasi_p_check(const SemidirectDescriptor& g, u64 cap) {
    const u128 order = g.order();
    if (order > cap)
        throw GroupTooLarge("group order " + to_string_u128(order) +
                            " exceeds the cap " + std::to_string(cap));
    const u64 l = g.l(), b = g.b(), p = g.p();
    const u64 total = static_cast<u64>(order);

    // (v, c)^p = (N v, 0) with N = sum_j action^j, independently of c != 0
    // because c is invertible mod p. So the order-p elements are exactly the
    // (v, c) with c != 0 and v in ker N.
    MatrixFp norm(b, b, l);
    for (u64 j = 0; j < p; ++j)
        norm = norm + g.action_power(j);
    const Subspace ker = kernel(norm);
    const u64 ker_count = static_cast<u64>(checked_pow_u128(l, ker.dim()));
    auto kernel_vector = [&](u64 idx) {
        std::vector<u64> v(b, 0);
        for (std::size_t r = 0; r < ker.dim(); ++r) {
            const u64 digit = idx % l;
            idx /= l;
            if (digit == 0)
                continue;
            std::vector<u64> bv = ker.basis_vector(r);
            for (std::size_t i = 0; i < b; ++i)
                v[i] = (v[i] + digit * bv[i]) % l;
        }
        return v;
    };

    // Grow the closure one unused generator at a time; a generator already in
    // the closure cannot enlarge it, so only a few rebuilds ever happen.
    std::vector<GroupElement> generators;
    std::vector<bool> in_closure(total, false);
    u64 closure_size = 0;
    auto rebuild_closure = [&]() {
        std::fill(in_closure.begin(), in_closure.end(), false);
        std::queue<GroupElement> work;
        GroupElement id = group_identity(g);
        in_closure[encode(id, l, b)] = true;
        closure_size = 1;
        work.push(id);
        while (!work.empty()) {
            GroupElement cur = work.front();
            work.pop();
            for (const GroupElement& s : generators) {
                GroupElement next = group_mul(g, cur, s);
                u64 idx = encode(next, l, b);
                if (!in_closure[idx]) {
                    in_closure[idx] = true;
                    ++closure_size;
                    work.push(next);
                }
            }
        }
    };
    rebuild_closure();
    for (u64 c = 1; c < p && closure_size < total; ++c) {
        for (u64 idx = 0; idx < ker_count && closure_size < total; ++idx) {
            GroupElement s{kernel_vector(idx), c};
            if (in_closure[encode(s, l, b)])
                continue;
            generators.push_back(std::move(s));
            rebuild_closure();
        }
    }
    return {closure_size == total, closure_size};
}

u64 minimal_rank(u64 l, u64 p) {
    const u64 a = ord_mod(l, p);
    if (!order_p_element_glb(l, a, p).has_value())
        throw Error("MinimalRankCheckFailed",
                    "no order-p matrix found at the predicted minimal rank");
    if (a >= 2 && order_p_element_glb(l, a - 1, p).has_value())
        throw Error("MinimalRankCheckFailed",
                    "order-p matrix exists below the predicted minimal rank");
    return a;
}

} // namespace galcover

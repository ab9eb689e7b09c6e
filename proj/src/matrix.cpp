#include "galcover/matrix.hpp"

#include <algorithm>
#include <numeric>

#include "galcover/factor.hpp"

namespace galcover {

MatrixFp::MatrixFp(std::size_t rows, std::size_t cols, u64 q)
    : rows_(rows), cols_(cols), modulus_(q), entries_(rows * cols, 0) {
    require_prime(q);
}

MatrixFp MatrixFp::identity(std::size_t n, u64 q) {
    MatrixFp m(n, n, q);
    for (std::size_t i = 0; i < n; ++i)
        m.entries_[i * n + i] = 1;
    return m;
}

MatrixFp MatrixFp::from_rows(u64 q, const std::vector<std::vector<u64>>& rows) {
    if (rows.empty())
        return MatrixFp(0, 0, q);
    MatrixFp m(rows.size(), rows[0].size(), q);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_)
            throw DimensionMismatch("ragged rows in matrix literal");
        for (std::size_t j = 0; j < m.cols_; ++j)
            m.entries_[i * m.cols_ + j] = rows[i][j] % q;
    }
    return m;
}

FpElem MatrixFp::at(std::size_t i, std::size_t j) const {
    return FpElem(entries_[i * cols_ + j], modulus_);
}

void MatrixFp::set(std::size_t i, std::size_t j, FpElem v) {
    if (v.modulus != modulus_)
        throw ModulusMismatch("entry modulus differs from matrix");
    entries_[i * cols_ + j] = v.value;
}

std::vector<std::vector<u64>> MatrixFp::to_rows() const {
    std::vector<std::vector<u64>> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        out[i].assign(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                      entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    return out;
}

bool MatrixFp::is_identity() const {
    if (!is_square())
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (entries_[i * cols_ + j] != (i == j ? 1u : 0u))
                return false;
    return true;
}

bool MatrixFp::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](u64 v) { return v == 0; });
}

namespace {

void require_compatible(const MatrixFp& a, const MatrixFp& b) {
    if (a.modulus() != b.modulus())
        throw ModulusMismatch("mixed matrix moduli");
}

} // namespace

MatrixFp operator+(const MatrixFp& a, const MatrixFp& b) {
    require_compatible(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("matrix addition shape mismatch");
    MatrixFp r(a.rows(), a.cols(), a.modulus());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            r.set(i, j, a.at(i, j) + b.at(i, j));
    return r;
}

MatrixFp operator-(const MatrixFp& a, const MatrixFp& b) {
    require_compatible(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("matrix subtraction shape mismatch");
    MatrixFp r(a.rows(), a.cols(), a.modulus());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            r.set(i, j, a.at(i, j) - b.at(i, j));
    return r;
}

MatrixFp operator*(const MatrixFp& a, const MatrixFp& b) {
    require_compatible(a, b);
    if (a.cols() != b.rows())
        throw DimensionMismatch("matrix product shape mismatch");
    const u64 q = a.modulus();
    MatrixFp r(a.rows(), b.cols(), q);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const u64 aik = a.raw(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                u64 v = (r.raw(i, j) + static_cast<u128>(aik) * b.raw(k, j)) % q;
                r.set_raw(i, j, v);
            }
        }
    return r;
}

std::vector<u64> MatrixFp::apply(const std::vector<u64>& v) const {
    if (v.size() != cols_)
        throw DimensionMismatch("vector length differs from column count");
    std::vector<u64> out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        u128 acc = 0;
        for (std::size_t j = 0; j < cols_; ++j)
            acc += static_cast<u128>(entries_[i * cols_ + j]) * (v[j] % modulus_);
        out[i] = static_cast<u64>(acc % modulus_);
    }
    return out;
}

MatrixFp MatrixFp::pow(u64 e) const {
    if (!is_square())
        throw DimensionMismatch("matrix power of a non-square matrix");
    MatrixFp base = *this;
    MatrixFp result = MatrixFp::identity(rows_, modulus_);
    while (e > 0) {
        if (e & 1)
            result = result * base;
        e >>= 1;
        if (e > 0)
            base = base * base;
    }
    return result;
}

std::string MatrixFp::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j > 0)
                out += ' ';
            out += std::to_string(raw(i, j));
        }
        out += '\n';
    }
    return out;
}

std::vector<std::size_t> reduce_to_rref(MatrixFp& m) {
    const u64 q = m.modulus();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m.raw(pivot, col) == 0)
            ++pivot;
        if (pivot == m.rows())
            continue;
        if (pivot != row)
            for (std::size_t j = 0; j < m.cols(); ++j) {
                u64 tmp = m.raw(row, j);
                m.set_raw(row, j, m.raw(pivot, j));
                m.set_raw(pivot, j, tmp);
            }
        const u64 inv = pow_mod(m.raw(row, col), q - 2, q);
        for (std::size_t j = col; j < m.cols(); ++j)
            m.set_raw(row, j, mul_mod(m.raw(row, j), inv, q));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.raw(i, col) == 0)
                continue;
            const u64 c = m.raw(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) {
                u64 sub = mul_mod(c, m.raw(row, j), q);
                u64 cur = m.raw(i, j);
                m.set_raw(i, j, cur >= sub ? cur - sub : cur + (q - sub));
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(MatrixFp m) {
    return reduce_to_rref(m).size();
}

Subspace::Subspace(std::size_t ambient_dim, u64 q) : basis_(0, ambient_dim, q) {}

Subspace Subspace::full(std::size_t ambient_dim, u64 q) {
    Subspace s(ambient_dim, q);
    s.basis_ = MatrixFp::identity(ambient_dim, q);
    return s;
}

Subspace Subspace::from_vectors(std::size_t ambient_dim, u64 q,
                                const std::vector<std::vector<u64>>& vectors) {
    if (vectors.empty())
        return Subspace(ambient_dim, q);
    MatrixFp m = MatrixFp::from_rows(q, vectors);
    if (m.cols() != ambient_dim)
        throw DimensionMismatch("vector length differs from ambient dimension");
    std::size_t r = reduce_to_rref(m).size();
    Subspace s(ambient_dim, q);
    MatrixFp basis(r, ambient_dim, q);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < ambient_dim; ++j)
            basis.set_raw(i, j, m.raw(i, j));
    s.basis_ = std::move(basis);
    return s;
}

std::vector<u64> Subspace::basis_vector(std::size_t i) const {
    std::vector<u64> v(ambient_dim());
    for (std::size_t j = 0; j < ambient_dim(); ++j)
        v[j] = basis_.raw(i, j);
    return v;
}

bool Subspace::contains(const std::vector<u64>& v) const {
    if (v.size() != ambient_dim())
        throw DimensionMismatch("vector length differs from ambient dimension");
    const u64 q = modulus();
    std::vector<u64> w(v);
    for (u64& x : w)
        x %= q;
    // Reduce by each RREF row; rows have unit pivots with cleared columns.
    for (std::size_t i = 0; i < dim(); ++i) {
        std::size_t pivot = 0;
        while (pivot < ambient_dim() && basis_.raw(i, pivot) == 0)
            ++pivot;
        if (pivot == ambient_dim())
            continue;
        const u64 c = w[pivot];
        if (c == 0)
            continue;
        for (std::size_t j = pivot; j < ambient_dim(); ++j) {
            u64 sub = mul_mod(c, basis_.raw(i, j), q);
            w[j] = w[j] >= sub ? w[j] - sub : w[j] + (q - sub);
        }
    }
    return std::all_of(w.begin(), w.end(), [](u64 x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_vector(i)))
            return false;
    return true;
}

bool Subspace::is_invariant_under(const MatrixFp& m) const {
    for (std::size_t i = 0; i < dim(); ++i)
        if (!contains(m.apply(basis_vector(i))))
            return false;
    return true;
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim() || a.modulus() != b.modulus())
        throw DimensionMismatch("subspace sum in different ambient spaces");
    std::vector<std::vector<u64>> rows;
    for (std::size_t i = 0; i < a.dim(); ++i)
        rows.push_back(a.basis_vector(i));
    for (std::size_t i = 0; i < b.dim(); ++i)
        rows.push_back(b.basis_vector(i));
    return Subspace::from_vectors(a.ambient_dim(), a.modulus(), rows);
}

bool Subspace::canonical_less(const Subspace& a, const Subspace& b) {
    if (a.dim() != b.dim())
        return a.dim() < b.dim();
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.ambient_dim(); ++j) {
            u64 x = a.basis_.raw(i, j), y = b.basis_.raw(i, j);
            if (x != y)
                return x < y;
        }
    return false;
}

MatrixFp companion_matrix(const PolyFp& f) {
    if (!f.is_monic())
        throw NotMonic("companion matrix requires a monic polynomial");
    const int n = f.degree();
    if (n < 1)
        throw ZeroPolynomial("companion matrix requires degree >= 1");
    MatrixFp m(static_cast<std::size_t>(n), static_cast<std::size_t>(n), f.modulus());
    for (int i = 0; i + 1 < n; ++i)
        m.set(static_cast<std::size_t>(i) + 1, static_cast<std::size_t>(i),
              FpElem::one(f.modulus()));
    for (int i = 0; i < n; ++i)
        m.set(static_cast<std::size_t>(i), static_cast<std::size_t>(n) - 1,
              -f.coeff(static_cast<std::size_t>(i)));
    return m;
}

Subspace kernel(const MatrixFp& m) {
    MatrixFp r = m;
    std::vector<std::size_t> pivots = reduce_to_rref(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots)
        is_pivot[c] = true;

    std::vector<std::vector<u64>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        std::vector<u64> v(m.cols(), 0);
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            u64 e = r.raw(i, free);
            v[pivots[i]] = e == 0 ? 0 : m.modulus() - e;
        }
        basis.push_back(std::move(v));
    }
    return Subspace::from_vectors(m.cols(), m.modulus(), basis);
}

MatrixFp poly_eval_matrix(const PolyFp& f, const MatrixFp& m) {
    if (!m.is_square())
        throw DimensionMismatch("polynomial of a non-square matrix");
    if (f.modulus() != m.modulus())
        throw ModulusMismatch("polynomial and matrix moduli differ");
    MatrixFp acc(m.rows(), m.cols(), m.modulus());
    for (int i = f.degree(); i >= 0; --i) {
        acc = acc * m;
        FpElem c = f.coeff(static_cast<std::size_t>(i));
        for (std::size_t k = 0; k < m.rows(); ++k)
            acc.set(k, k, acc.at(k, k) + c);
    }
    return acc;
}

namespace {

// Echelon accumulator for Krylov chains: stores reduced vectors together
// with the polynomial that produced them from the seed vector.
struct AnnihilatorBuilder {
    const u64 q;
    std::vector<std::vector<u64>> rows;
    std::vector<PolyFp> combos;
    std::vector<std::size_t> pivots;

    explicit AnnihilatorBuilder(u64 modulus) : q(modulus) {}

    // Reduces (v, poly) by the stored rows; if v vanishes, returns the monic
    // annihilator, otherwise stores the reduced pair.
    std::pair<bool, PolyFp> feed(std::vector<u64> v, PolyFp poly) {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const u64 c = v[pivots[r]];
            if (c == 0)
                continue;
            for (std::size_t j = 0; j < v.size(); ++j) {
                u64 sub = mul_mod(c, rows[r][j], q);
                v[j] = v[j] >= sub ? v[j] - sub : v[j] + (q - sub);
            }
            poly = poly - combos[r] * FpElem(c, q);
        }
        std::size_t pivot = 0;
        while (pivot < v.size() && v[pivot] == 0)
            ++pivot;
        if (pivot == v.size())
            return {true, poly.monic()};
        const FpElem inv = FpElem(v[pivot], q).inverse();
        for (u64& x : v)
            x = mul_mod(x, inv.value, q);
        rows.push_back(std::move(v));
        combos.push_back(poly * inv);
        pivots.push_back(pivot);
        return {false, PolyFp::zero(q)};
    }
};

PolyFp poly_lcm(const PolyFp& a, const PolyFp& b) {
    if (a.is_zero() || b.is_zero())
        return PolyFp::zero(a.modulus());
    return (a * b).divide_exact(poly_gcd(a, b)).monic();
}

} // namespace

PolyFp minimal_polynomial(const MatrixFp& m) {
    if (!m.is_square())
        throw DimensionMismatch("minimal polynomial of a non-square matrix");
    const u64 q = m.modulus();
    const std::size_t n = m.rows();
    PolyFp result = PolyFp::one(q);
    if (n == 0)
        return result;
    for (std::size_t seed = 0; seed < n; ++seed) {
        AnnihilatorBuilder chain(q);
        std::vector<u64> v(n, 0);
        v[seed] = 1;
        PolyFp label = PolyFp::one(q);
        for (;;) {
            auto [done, ann] = chain.feed(v, label);
            if (done) {
                result = poly_lcm(result, ann);
                break;
            }
            v = m.apply(chain.rows.back());
            label = chain.combos.back() * PolyFp::t(q);
        }
        if (result.degree() == static_cast<int>(n))
            break;
    }
    if (!poly_eval_matrix(result, m).is_zero())
        throw Error("MinimalPolynomialCheckFailed",
                    "computed annihilator does not vanish on the matrix");
    return result;
}

PolyFp characteristic_polynomial(const MatrixFp& m) {
    if (!m.is_square())
        throw DimensionMismatch("characteristic polynomial of a non-square matrix");
    const u64 q = m.modulus();
    const std::size_t n = m.rows();
    if (n == 0)
        return PolyFp::one(q);

    // Similarity reduction to upper Hessenberg form.
    MatrixFp h = m;
    for (std::size_t col = 0; col + 2 < n; ++col) {
        std::size_t pivot = col + 1;
        while (pivot < n && h.raw(pivot, col) == 0)
            ++pivot;
        if (pivot == n)
            continue;
        if (pivot != col + 1) {
            for (std::size_t j = 0; j < n; ++j) {
                u64 tmp = h.raw(col + 1, j);
                h.set_raw(col + 1, j, h.raw(pivot, j));
                h.set_raw(pivot, j, tmp);
            }
            for (std::size_t i = 0; i < n; ++i) {
                u64 tmp = h.raw(i, col + 1);
                h.set_raw(i, col + 1, h.raw(i, pivot));
                h.set_raw(i, pivot, tmp);
            }
        }
        const FpElem inv = h.at(col + 1, col).inverse();
        for (std::size_t i = col + 2; i < n; ++i) {
            if (h.raw(i, col) == 0)
                continue;
            const FpElem lam = h.at(i, col) * inv;
            for (std::size_t j = 0; j < n; ++j)
                h.set(i, j, h.at(i, j) - lam * h.at(col + 1, j));
            for (std::size_t j = 0; j < n; ++j)
                h.set(j, col + 1, h.at(j, col + 1) + lam * h.at(j, i));
        }
    }

    // Leading principal charpolys of a Hessenberg matrix satisfy a
    // short recurrence in the subdiagonal products.
    std::vector<PolyFp> p;
    p.reserve(n + 1);
    p.push_back(PolyFp::one(q));
    const PolyFp t = PolyFp::t(q);
    for (std::size_t k = 1; k <= n; ++k) {
        PolyFp pk = (t - PolyFp::constant(h.at(k - 1, k - 1))) * p[k - 1];
        FpElem prod = FpElem::one(q);
        for (std::size_t i = k - 1; i >= 1; --i) {
            prod = prod * h.at(i, i - 1);
            FpElem c = h.at(i - 1, k - 1) * prod;
            pk = pk - p[i - 1] * c;
            if (i == 1)
                break;
        }
        p.push_back(std::move(pk));
    }
    return p[n];
}

std::vector<std::pair<PolyFp, Subspace>> primary_decomposition(const MatrixFp& m) {
    if (!m.is_square())
        throw DimensionMismatch("primary decomposition of a non-square matrix");
    const PolyFp mp = minimal_polynomial(m);
    if (!poly_gcd(mp, mp.derivative()).is_one())
        throw NotSemisimple("minimal polynomial " + mp.to_string() +
                            " has a repeated factor");
    std::vector<std::pair<PolyFp, Subspace>> out;
    std::size_t total = 0;
    for (const auto& part : factor(mp, 0).factors) {
        Subspace component = kernel(poly_eval_matrix(part.factor, m));
        total += component.dim();
        out.emplace_back(part.factor, std::move(component));
    }
    if (total != m.rows())
        throw Error("DecompositionCheckFailed",
                    "primary components do not fill the space");
    return out;
}

bool has_eigenvalue_one(const MatrixFp& m) {
    if (!m.is_square())
        throw DimensionMismatch("eigenvalue test on a non-square matrix");
    return kernel(m - MatrixFp::identity(m.rows(), m.modulus())).dim() > 0;
}

MatrixFp block_diagonal(const std::vector<MatrixFp>& blocks) {
    if (blocks.empty())
        throw DimensionMismatch("block_diagonal needs at least one block");
    const u64 q = blocks.front().modulus();
    std::size_t n = 0;
    for (const MatrixFp& b : blocks) {
        if (!b.is_square())
            throw DimensionMismatch("block_diagonal blocks must be square");
        if (b.modulus() != q)
            throw ModulusMismatch("block_diagonal blocks have mixed moduli");
        n += b.rows();
    }
    MatrixFp m(n, n, q);
    std::size_t off = 0;
    for (const MatrixFp& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j)
                m.set_raw(off + i, off + j, b.raw(i, j));
        off += b.rows();
    }
    return m;
}

namespace {

// Enumerates every RREF matrix of shape d x n with entries drawn from a
// field of `field_size` elements, reported as index tuples. The callback
// receives rows of entry indices (0 = zero element, 1 = one).
//
// Candidate counting and enumeration share the pivot-set walk so the budget
// check matches the work actually done.
struct RrefShapeEnumerator {
    std::size_t n, d;
    u64 field_size;

    u128 count() const {
        if (d > n)
            return 0;
        u128 total = 0;
        std::vector<std::size_t> pivots(d);
        std::iota(pivots.begin(), pivots.end(), 0);
        for (;;) {
            total += checked_pow_u128(field_size, free_slots(pivots));
            if (!advance(pivots))
                break;
        }
        return total;
    }

    template <typename Fn>
    void enumerate(Fn&& fn) const {
        if (d > n) {
            return;
        }
        if (d == 0) {
            fn(std::vector<std::vector<u64>>{});
            return;
        }
        std::vector<std::size_t> pivots(d);
        std::iota(pivots.begin(), pivots.end(), 0);
        for (;;) {
            emit_for_pivots(pivots, fn);
            if (!advance(pivots))
                break;
        }
    }

private:
    u64 free_slots(const std::vector<std::size_t>& pivots) const {
        std::vector<bool> is_pivot(n, false);
        for (std::size_t c : pivots)
            is_pivot[c] = true;
        u64 free = 0;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = pivots[i] + 1; j < n; ++j)
                if (!is_pivot[j])
                    ++free;
        return free;
    }

    bool advance(std::vector<std::size_t>& pivots) const {
        // Next combination in lexicographic order.
        std::size_t i = d;
        while (i-- > 0) {
            if (pivots[i] + (d - i) <= n - 1) {
                ++pivots[i];
                for (std::size_t k = i + 1; k < d; ++k)
                    pivots[k] = pivots[k - 1] + 1;
                return true;
            }
            if (i == 0)
                break;
        }
        return false;
    }

    template <typename Fn>
    void emit_for_pivots(const std::vector<std::size_t>& pivots, Fn&& fn) const {
        std::vector<bool> is_pivot(n, false);
        for (std::size_t c : pivots)
            is_pivot[c] = true;
        std::vector<std::pair<std::size_t, std::size_t>> slots;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = pivots[i] + 1; j < n; ++j)
                if (!is_pivot[j])
                    slots.emplace_back(i, j);

        std::vector<std::vector<u64>> rows(d, std::vector<u64>(n, 0));
        for (std::size_t i = 0; i < d; ++i)
            rows[i][pivots[i]] = 1;
        std::vector<u64> odo(slots.size(), 0);
        for (;;) {
            fn(rows);
            std::size_t k = 0;
            while (k < slots.size()) {
                if (++odo[k] < field_size) {
                    rows[slots[k].first][slots[k].second] = odo[k];
                    break;
                }
                odo[k] = 0;
                rows[slots[k].first][slots[k].second] = 0;
                ++k;
            }
            if (k == slots.size())
                break;
        }
    }
};

std::vector<Subspace> invariant_subspaces_brute_force(const MatrixFp& m,
                                                      std::size_t d, u64 budget) {
    const std::size_t n = m.rows();
    RrefShapeEnumerator shapes{n, d, m.modulus()};
    u128 candidates = shapes.count();
    if (candidates > budget)
        throw BudgetExceeded("brute-force enumeration would visit " +
                             to_string_u128(candidates) +
                             " candidate bases; budget is " +
                             std::to_string(budget));
    std::vector<Subspace> out;
    shapes.enumerate([&](const std::vector<std::vector<u64>>& rows) {
        Subspace s = Subspace::from_vectors(n, m.modulus(), rows);
        if (s.is_invariant_under(m))
            out.push_back(std::move(s));
    });
    std::sort(out.begin(), out.end(), Subspace::canonical_less);
    return out;
}

// One isotypic (primary) component, prepared for submodule enumeration:
// module generators w_1..w_k over K = F_q[t]/(f), each spanning an
// a-dimensional Krylov block.
struct IsotypicComponent {
    PolyFp factor;                       // irreducible f, deg a
    std::vector<std::vector<u64>> gens;  // k module generators
    std::size_t copies() const { return gens.size(); }
};

IsotypicComponent prepare_component(const MatrixFp& m, const PolyFp& f,
                                    const Subspace& space) {
    const std::size_t a = static_cast<std::size_t>(f.degree());
    IsotypicComponent comp{f, {}};
    Subspace covered(space.ambient_dim(), space.modulus());
    for (std::size_t i = 0; i < space.dim(); ++i) {
        std::vector<u64> w = space.basis_vector(i);
        if (covered.contains(w))
            continue;
        comp.gens.push_back(w);
        std::vector<std::vector<u64>> orbit;
        std::vector<u64> cur = w;
        for (std::size_t e = 0; e < a; ++e) {
            orbit.push_back(cur);
            cur = m.apply(cur);
        }
        for (std::size_t r = 0; r < covered.dim(); ++r)
            orbit.push_back(covered.basis_vector(r));
        covered = Subspace::from_vectors(space.ambient_dim(), space.modulus(), orbit);
        if (covered.dim() == space.dim())
            break;
    }
    if (comp.copies() * a != space.dim())
        throw Error("DecompositionCheckFailed",
                    "module generators do not span the isotypic component");
    return comp;
}

// All submodules of K^k of K-dimension j, returned as ambient F_q-subspaces.
// Scalars live in K = F_q[t]/(f) and act through powers of M, so no
// extension-field type is needed.
std::vector<Subspace> component_submodules(const MatrixFp& m,
                                           const IsotypicComponent& comp,
                                           std::size_t j) {
    const u64 q = m.modulus();
    const std::size_t a = static_cast<std::size_t>(comp.factor.degree());
    const std::size_t k = comp.copies();
    const std::size_t n = m.cols();

    std::vector<Subspace> out;
    if (j > k)
        return out;
    if (j == 0) {
        out.emplace_back(n, q);
        return out;
    }

    // Field elements of K indexed 0..q^a-1, as coefficient vectors base q.
    const u64 field_size = static_cast<u64>(checked_pow_u128(q, a));
    auto scalar_apply = [&](u64 index, const std::vector<u64>& w) {
        // alpha(M) w for alpha with base-q digits of `index`.
        std::vector<u64> acc(n, 0);
        std::vector<u64> cur = w;
        u64 rest = index;
        for (std::size_t e = 0; e < a; ++e) {
            const u64 digit = rest % q;
            rest /= q;
            if (digit != 0)
                for (std::size_t i = 0; i < n; ++i)
                    acc[i] = (acc[i] + static_cast<u128>(digit) * cur[i]) % q;
            if (e + 1 < a)
                cur = m.apply(cur);
        }
        return acc;
    };

    RrefShapeEnumerator shapes{k, j, field_size};
    shapes.enumerate([&](const std::vector<std::vector<u64>>& krows) {
        std::vector<std::vector<u64>> vectors;
        for (const std::vector<u64>& krow : krows) {
            std::vector<u64> v(n, 0);
            for (std::size_t c = 0; c < k; ++c) {
                if (krow[c] == 0)
                    continue;
                std::vector<u64> term = scalar_apply(krow[c], comp.gens[c]);
                for (std::size_t i = 0; i < n; ++i)
                    v[i] = (v[i] + term[i]) % q;
            }
            // The F_q-span of a K-line needs the whole Krylov orbit.
            std::vector<u64> cur = v;
            for (std::size_t e = 0; e < a; ++e) {
                vectors.push_back(cur);
                cur = m.apply(cur);
            }
        }
        out.push_back(Subspace::from_vectors(n, q, vectors));
    });
    return out;
}

std::vector<Subspace> invariant_subspaces_algebraic(const MatrixFp& m,
                                                    std::size_t d) {
    const std::size_t n = m.rows();
    const u64 q = m.modulus();
    std::vector<IsotypicComponent> comps;
    for (auto& [f, space] : primary_decomposition(m))
        comps.push_back(prepare_component(m, f, space));

    // Submodule lists per component and per K-dimension.
    std::vector<std::vector<std::vector<Subspace>>> choices(comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i) {
        choices[i].resize(comps[i].copies() + 1);
        for (std::size_t j = 0; j <= comps[i].copies(); ++j)
            choices[i][j] = component_submodules(m, comps[i], j);
    }

    std::vector<Subspace> out;
    std::vector<Subspace> stack;
    auto dfs = [&](auto&& self, std::size_t idx, std::size_t remaining) -> void {
        if (idx == comps.size()) {
            if (remaining != 0)
                return;
            Subspace acc(n, q);
            for (const Subspace& part : stack)
                acc = sum(acc, part);
            out.push_back(std::move(acc));
            return;
        }
        const std::size_t a = static_cast<std::size_t>(comps[idx].factor.degree());
        for (std::size_t j = 0; j <= comps[idx].copies(); ++j) {
            if (j * a > remaining)
                break;
            for (const Subspace& choice : choices[idx][j]) {
                stack.push_back(choice);
                self(self, idx + 1, remaining - j * a);
                stack.pop_back();
            }
        }
    };
    dfs(dfs, 0, d);
    std::sort(out.begin(), out.end(), Subspace::canonical_less);
    return out;
}

} // namespace

std::vector<Subspace> invariant_subspaces_of_dim(const MatrixFp& m, std::size_t d,
                                                 SubspaceSearchMode mode,
                                                 u64 budget) {
    if (!m.is_square())
        throw DimensionMismatch("invariant subspaces of a non-square matrix");
    if (d > m.rows())
        return {};
    if (mode == SubspaceSearchMode::brute_force)
        return invariant_subspaces_brute_force(m, d, budget);
    return invariant_subspaces_algebraic(m, d);
}

} // namespace galcover

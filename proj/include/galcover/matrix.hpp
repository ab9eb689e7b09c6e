#ifndef GALCOVER_MATRIX_HPP
#define GALCOVER_MATRIX_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "galcover/poly.hpp"

namespace galcover {

// Dense matrix over F_q, row-major.
class MatrixFp {
public:
    MatrixFp(std::size_t rows, std::size_t cols, u64 q);

    static MatrixFp identity(std::size_t n, u64 q);
    static MatrixFp from_rows(u64 q, const std::vector<std::vector<u64>>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    u64 modulus() const noexcept { return modulus_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    FpElem at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, FpElem v);
    u64 raw(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    void set_raw(std::size_t i, std::size_t j, u64 v) { entries_[i * cols_ + j] = v % modulus_; }

    std::vector<std::vector<u64>> to_rows() const;

    bool is_identity() const;
    bool is_zero() const;

    friend MatrixFp operator+(const MatrixFp& a, const MatrixFp& b);
    friend MatrixFp operator-(const MatrixFp& a, const MatrixFp& b);
    friend MatrixFp operator*(const MatrixFp& a, const MatrixFp& b);
    std::vector<u64> apply(const std::vector<u64>& v) const;
    MatrixFp pow(u64 e) const;

    friend bool operator==(const MatrixFp& a, const MatrixFp& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
               a.modulus_ == b.modulus_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const MatrixFp& a, const MatrixFp& b) { return !(a == b); }

    std::string to_string() const;

private:
    std::size_t rows_, cols_;
    u64 modulus_;
    std::vector<u64> entries_;
};

// In-place Gauss-Jordan; returns the pivot columns of the reduced matrix.
std::vector<std::size_t> reduce_to_rref(MatrixFp& m);

std::size_t rank(MatrixFp m);

// Subspace of F_q^n held as an RREF basis (rows). RREF is a canonical form,
// so equality of subspaces is equality of bases.
class Subspace {
public:
    Subspace(std::size_t ambient_dim, u64 q); // zero subspace

    static Subspace full(std::size_t ambient_dim, u64 q);
    static Subspace from_vectors(std::size_t ambient_dim, u64 q,
                                 const std::vector<std::vector<u64>>& vectors);

    std::size_t dim() const noexcept { return basis_.rows(); }
    std::size_t ambient_dim() const noexcept { return basis_.cols(); }
    u64 modulus() const noexcept { return basis_.modulus(); }
    const MatrixFp& basis() const noexcept { return basis_; }
    std::vector<u64> basis_vector(std::size_t i) const;

    bool contains(const std::vector<u64>& v) const;
    bool contains(const Subspace& other) const;
    bool is_invariant_under(const MatrixFp& m) const;

    friend Subspace sum(const Subspace& a, const Subspace& b);

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }
    static bool canonical_less(const Subspace& a, const Subspace& b);

private:
    MatrixFp basis_;
};

// Companion matrix of a monic f: subdiagonal 1s, last column the negated
// low-order coefficients. Characteristic and minimal polynomial both equal f.
MatrixFp companion_matrix(const PolyFp& f);

// RREF basis of the right null space {v : Mv = 0}.
Subspace kernel(const MatrixFp& m);

// f(M) by Horner.
MatrixFp poly_eval_matrix(const PolyFp& f, const MatrixFp& m);

// Monic least-degree annihilator, by Krylov iteration with lcm accumulation
// over the standard basis; the result is verified to annihilate M.
PolyFp minimal_polynomial(const MatrixFp& m);

// det(tI - M) via Hessenberg reduction.
PolyFp characteristic_polynomial(const MatrixFp& m);

// For each irreducible factor f_i of the (squarefree) minimal polynomial,
// the invariant subspace ker f_i(M). Throws NotSemisimple on repeated
// factors.
std::vector<std::pair<PolyFp, Subspace>> primary_decomposition(const MatrixFp& m);

enum class SubspaceSearchMode { algebraic, brute_force };

inline constexpr u64 kDefaultSubspaceBudget = 10'000'000;

// All d-dimensional M-invariant subspaces, canonically sorted. The algebraic
// mode walks submodules of the primary components (requires a squarefree
// minimal polynomial); the brute-force mode enumerates every echelon basis
// and filters by invariance, and exists as the oracle for the former.
std::vector<Subspace> invariant_subspaces_of_dim(const MatrixFp& m, std::size_t d,
                                                 SubspaceSearchMode mode,
                                                 u64 budget = kDefaultSubspaceBudget);

// ker(M - I) != 0.
bool has_eigenvalue_one(const MatrixFp& m);

// Square block-diagonal assembly.
MatrixFp block_diagonal(const std::vector<MatrixFp>& blocks);

} // namespace galcover

#endif // GALCOVER_MATRIX_HPP

#ifndef GALCOVER_FACTOR_HPP
#define GALCOVER_FACTOR_HPP

#include <vector>

#include "galcover/poly.hpp"

namespace galcover {

// Complete factorization into monic irreducibles. Factors are pairwise
// distinct and sorted canonically (degree, then coefficient order), so equal
// inputs print identically.
struct Factorization {
    struct Part {
        PolyFp factor;
        u64 multiplicity;
    };
    std::vector<Part> factors;
    u64 modulus;

    PolyFp product() const;
};

// Monic product of the distinct irreducible factors of f. Handles the
// characteristic-q quirks: pure q-th powers are deflated via root extraction.
PolyFp squarefree_part(const PolyFp& f);

// Partition of a squarefree monic f into degree-homogeneous parts, via
// gcd(f, t^(q^d) - t). Pairs (d, product of all irreducible factors of
// degree d), ascending in d. Throws NotSquarefree.
std::vector<std::pair<u64, PolyFp>> distinct_degree_factorize(const PolyFp& f);

// Splits f, all of whose irreducible factors have degree exactly d, into that
// complete list. Cantor-Zassenhaus power map for odd q, trace-map splitting
// for q = 2. Randomness comes only from `seed`, so runs are reproducible.
std::vector<PolyFp> equal_degree_factorize(const PolyFp& f, u64 d, u64 seed = 0);

// Full canonical factorization of a nonzero nonconstant f; the re-multiplied
// product is checked against monic(f) before returning.
Factorization factor(const PolyFp& f, u64 seed = 0);

// Rabin irreducibility test (Frobenius fixed-point conditions).
bool is_irreducible(const PolyFp& f);

} // namespace galcover

#endif // GALCOVER_FACTOR_HPP

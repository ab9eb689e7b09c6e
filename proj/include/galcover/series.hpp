#ifndef GALCOVER_SERIES_HPP
#define GALCOVER_SERIES_HPP

#include <optional>
#include <vector>

#include "galcover/fp.hpp"

namespace galcover {

// Formal power series over F_p truncated at a fixed order N: exactly N+1
// stored coefficients, degrees 0..N. Arithmetic truncates consistently.
class SeriesFp {
public:
    SeriesFp(u64 p, std::size_t truncation_order);
    SeriesFp(u64 p, std::size_t truncation_order, std::vector<u64> coeffs);

    u64 modulus() const noexcept { return modulus_; }
    std::size_t truncation_order() const noexcept { return coeffs_.size() - 1; }

    FpElem coeff(std::size_t i) const;
    void set_coeff(std::size_t i, FpElem c);
    const std::vector<u64>& coeffs() const noexcept { return coeffs_; }

    // Index of the lowest nonzero coefficient, if any survives truncation.
    std::optional<std::size_t> valuation() const;

    friend SeriesFp operator+(const SeriesFp& a, const SeriesFp& b);
    friend SeriesFp operator-(const SeriesFp& a, const SeriesFp& b);
    friend SeriesFp operator*(const SeriesFp& a, const SeriesFp& b);

    friend bool operator==(const SeriesFp& a, const SeriesFp& b) {
        return a.modulus_ == b.modulus_ && a.coeffs_ == b.coeffs_;
    }

private:
    u64 modulus_;
    std::vector<u64> coeffs_;
};

// (1 + x)^(num/den) over F_p, truncated at degree N. The exponent num/den is
// read as a p-adic integer (den prime to p), and each binomial coefficient
// C(num/den, k) is reduced mod p with explicit p-adic valuation bookkeeping,
// so coefficients beyond k = p are exact. Throws DenominatorDivisibleByP.
SeriesFp binomial_series(i64 num, i64 den, u64 p, std::size_t N);

} // namespace galcover

#endif // GALCOVER_SERIES_HPP

#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace hilb3 {

/// Power series c_0 + c_1 t + ... + c_N t^N over Z, truncated at order N.
/// Binary operations require both operands to share N.
class IntSeries {
public:
    /// The constant series 1 at order N.
    static IntSeries one(int order);
    /// Throws hilb3::error on an empty coefficient list.
    static IntSeries from_coefficients(std::vector<mpz_class> coefficients);

    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const mpz_class& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
    const std::vector<mpz_class>& coefficients() const noexcept { return coeffs_; }

    IntSeries truncate(int order) const;
    /// f(t) -> f(-t).
    IntSeries alternate() const;

    friend bool operator==(const IntSeries&, const IntSeries&) = default;

private:
    std::vector<mpz_class> coeffs_;
};

/// Cauchy product; throws hilb3::error if the orders differ.
IntSeries mul(const IntSeries& a, const IntSeries& b);

/// Multiplicative inverse of a series with constant term 1.
IntSeries inverse(const IntSeries& a);

/// a^k. Negative k inverts first and needs constant term 1.
IntSeries int_pow(const IntSeries& a, long k);

/// prod_{k=1..N} (1 - t^k)^{-k}, truncated at N.
IntSeries macmahon_series(int order);

/// sum_n chi(Hilb^n Y) t^n = M(t)^chi.
IntSeries euler_series(long chi, int order);

/// Degree-zero DT series M(-t)^chi.
IntSeries dt_series(long chi, int order);

/// Partitions of n as weakly decreasing part lists, in decreasing lexicographic order.
std::vector<std::vector<int>> integer_partitions(int n);

/// |G_alpha| = prod over distinct parts of (multiplicity)!.
mpz_class aut_order(const std::vector<int>& alpha);

/// Euler characteristic of ordered r-tuples of pairwise distinct points on a
/// space with Euler characteristic chi: chi (chi-1) ... (chi-r+1).
mpz_class config_euler(long chi, int r);

/// Weighted Euler characteristic of Hilb^n Y assembled from the strata by
/// support type:
///   (-1)^n sum_{alpha |- n} config_euler(chi, len alpha) / |G_alpha| prod_i p_{alpha_i}.
/// Individual terms are rational; the sum is checked to be an integer.
mpz_class stratification_sum(long chi, int n);

} // namespace hilb3

#include "hilb3/series.hpp"

#include <map>
#include <utility>

#include "hilb3/error.hpp"
#include "hilb3/partitions.hpp"

namespace hilb3 {

IntSeries IntSeries::one(int order)
{
    if (order < 0)
        throw error("series order must be nonnegative");
    IntSeries s;
    s.coeffs_.assign(static_cast<std::size_t>(order) + 1, 0);
    s.coeffs_[0] = 1;
    return s;
}

IntSeries IntSeries::from_coefficients(std::vector<mpz_class> coefficients)
{
    if (coefficients.empty())
        throw error("series needs at least a constant term");
    IntSeries s;
    s.coeffs_ = std::move(coefficients);
    return s;
}

IntSeries IntSeries::truncate(int order) const
{
    if (order < 0 || order > this->order())
        throw error("cannot truncate a series to a larger or negative order");
    IntSeries s;
    s.coeffs_.assign(coeffs_.begin(), coeffs_.begin() + order + 1);
    return s;
}

IntSeries IntSeries::alternate() const
{
    IntSeries s = *this;
    for (std::size_t n = 1; n < s.coeffs_.size(); n += 2)
        s.coeffs_[n] = -s.coeffs_[n];
    return s;
}

IntSeries mul(const IntSeries& a, const IntSeries& b)
{
    if (a.order() != b.order())
        throw error("series order mismatch");
    const int N = a.order();
    std::vector<mpz_class> c(static_cast<std::size_t>(N) + 1, 0);
    for (int i = 0; i <= N; ++i) {
        if (sgn(a[i]) == 0)
            continue;
        for (int j = 0; i + j <= N; ++j)
            c[i + j] += a[i] * b[j];
    }
    return IntSeries::from_coefficients(std::move(c));
}

IntSeries inverse(const IntSeries& a)
{
    if (a[0] != 1)
        throw error("non-unit series");
    const int N = a.order();
    std::vector<mpz_class> b(static_cast<std::size_t>(N) + 1, 0);
    b[0] = 1;
    for (int n = 1; n <= N; ++n) {
        mpz_class acc = 0;
        for (int k = 1; k <= n; ++k)
            acc += a[k] * b[n - k];
        b[n] = -acc;
    }
    return IntSeries::from_coefficients(std::move(b));
}

IntSeries int_pow(const IntSeries& a, long k)
{
    IntSeries base = a;
    if (k < 0) {
        base = inverse(a);
        k = -k;
    }
    IntSeries result = IntSeries::one(a.order());
    while (k > 0) {
        if (k & 1)
            result = mul(result, base);
        k >>= 1;
        if (k > 0)
            base = mul(base, base);
    }
    return result;
}

IntSeries macmahon_series(int order)
{
    if (order < 0)
        throw error("series order must be nonnegative");
    // Multiply by 1/(1 - t^k) k times for each k: c[n] += c[n - k] in place.
    std::vector<mpz_class> c(static_cast<std::size_t>(order) + 1, 0);
    c[0] = 1;
    for (int k = 1; k <= order; ++k)
        for (int rep = 0; rep < k; ++rep)
            for (int n = k; n <= order; ++n)
                c[n] += c[n - k];
    return IntSeries::from_coefficients(std::move(c));
}

IntSeries euler_series(long chi, int order)
{
    return int_pow(macmahon_series(order), chi);
}

IntSeries dt_series(long chi, int order)
{
    return euler_series(chi, order).alternate();
}

namespace {

void partitions_into(int remaining, int max_part, std::vector<int>& prefix, std::vector<std::vector<int>>& out)
{
    if (remaining == 0) {
        out.push_back(prefix);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        partitions_into(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<std::vector<int>> integer_partitions(int n)
{
    if (n < 0)
        throw error("n must be nonnegative");
    std::vector<std::vector<int>> out;
    std::vector<int> prefix;
    partitions_into(n, n, prefix, out);
    return out;
}

mpz_class aut_order(const std::vector<int>& alpha)
{
    std::map<int, unsigned long> multiplicity;
    for (int part : alpha) {
        if (part <= 0)
            throw error("partition parts must be positive");
        ++multiplicity[part];
    }
    mpz_class order = 1;
    for (const auto& [part, m] : multiplicity) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), m);
        order *= f;
    }
    return order;
}

mpz_class config_euler(long chi, int r)
{
    if (r < 0)
        throw error("tuple length must be nonnegative");
    mpz_class value = 1;
    for (int i = 0; i < r; ++i)
        value *= mpz_class(chi) - i;
    return value;
}

mpz_class stratification_sum(long chi, int n)
{
    if (n < 0)
        throw error("n must be nonnegative");
    std::vector<mpz_class> p;
    for (int k = 0; k <= n; ++k)
        p.push_back(partition_count(k));

    mpq_class total = 0;
    for (const auto& alpha : integer_partitions(n)) {
        mpz_class fibre = 1;
        for (int part : alpha)
            fibre *= p[static_cast<std::size_t>(part)];
        mpq_class term(config_euler(chi, static_cast<int>(alpha.size())) * fibre, aut_order(alpha));
        term.canonicalize();
        total += term;
    }
    if (total.get_den() != 1)
        throw error("stratification sum is not integral");
    mpz_class value = total.get_num();
    return n % 2 == 0 ? value : mpz_class(-value);
}

} // namespace hilb3

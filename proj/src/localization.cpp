#include "hilb3/localization.hpp"

#include <cstdlib>

#include "hilb3/error.hpp"
#include "hilb3/parallel.hpp"

namespace hilb3 {

OneParamSubgroup OneParamSubgroup::make(int l1, int l2, int l3)
{
    if (l1 + l2 + l3 != 0)
        throw error("one-parameter subgroup must lie in T_0 (components sum to 0)");
    if (l1 == 0 && l2 == 0 && l3 == 0)
        throw error("one-parameter subgroup must be nonzero");
    return {l1, l2, l3};
}

OneParamSubgroup generic_subtorus(const std::vector<Weight>& weights)
{
    for (const auto& w : weights)
        if (w.is_diagonal())
            throw error("no generic subtorus exists");

    // Each weight vanishes on a line in the (a,b)-plane, so a ring of radius
    // larger than the number of weights always contains a hit.
    for (int r = 1;; ++r) {
        for (int a = r; a >= -r; --a)
            for (int b = -r; b <= r; ++b) {
                if (std::max(std::abs(a), std::abs(b)) != r)
                    continue;
                OneParamSubgroup lambda{a, b, -a - b};
                bool generic = true;
                for (const auto& w : weights)
                    if (lambda.pairing(w) == 0) {
                        generic = false;
                        break;
                    }
                if (generic)
                    return lambda;
            }
    }
}

int nu_at_fixed_point(const MonomialIdeal& ideal)
{
    auto character = tangent_character(ideal);
    for (const auto& [w, mult] : character.entries())
        if (w.is_diagonal())
            throw error("diagonal tangent weight: fixed point is not isolated");
    return character.total_dim() % 2 == 0 ? 1 : -1;
}

LocalizationResult weighted_euler_hilb(int n, unsigned threads)
{
    if (n < 0)
        throw error("n must be nonnegative");
    LocalizationResult result;
    result.n = n;
    auto ideals = enumerate_ideals(n);
    result.fixed_point_count = ideals.size();

    // Hilb^0 is a reduced point.
    if (n == 0) {
        result.per_point.push_back({ideals.front(), 1});
        result.weighted_euler = 1;
        return result;
    }

    auto signs = parallel_map(ideals, [](const MonomialIdeal& I) { return nu_at_fixed_point(I); }, threads);
    for (std::size_t i = 0; i < ideals.size(); ++i) {
        result.weighted_euler += signs[i];
        result.per_point.push_back({ideals[i], signs[i]});
    }
    return result;
}

long weighted_euler_stratum(int n, const std::function<bool(const MonomialIdeal&)>& selector, unsigned threads)
{
    auto all = weighted_euler_hilb(n, threads);
    long total = 0;
    for (const auto& point : all.per_point)
        if (selector(point.ideal))
            total += point.sign;
    return total;
}

} // namespace hilb3

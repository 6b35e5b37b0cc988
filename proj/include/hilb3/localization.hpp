#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "hilb3/partitions.hpp"
#include "hilb3/tangent.hpp"

namespace hilb3 {

/// Cocharacter G_m -> T_0, t -> (t^l1, t^l2, t^l3) with l1 + l2 + l3 = 0.
struct OneParamSubgroup {
    int l1 = 1, l2 = -1, l3 = 0;

    /// Throws hilb3::error unless the components sum to zero and are not all zero.
    static OneParamSubgroup make(int l1, int l2, int l3);

    long pairing(const Weight& w) const noexcept
    {
        return static_cast<long>(w.w1) * l1 + static_cast<long>(w.w2) * l2 + static_cast<long>(w.w3) * l3;
    }

    friend bool operator==(const OneParamSubgroup&, const OneParamSubgroup&) = default;
};

struct FixedPointSign {
    MonomialIdeal ideal;
    int sign; // (-1)^{dim T}
};

struct LocalizationResult {
    int n = 0;
    std::size_t fixed_point_count = 0;
    long weighted_euler = 0;
    std::vector<FixedPointSign> per_point;
};

/// The ring of candidates (a, b) with max(|a|,|b|) = r, r = 1, 2, ..., in
/// order of decreasing a then increasing b; returns (a, b, -a-b) for the
/// first candidate pairing nontrivially with every weight. Throws
/// hilb3::error("no generic subtorus exists") if some weight is a multiple
/// of (1,1,1).
OneParamSubgroup generic_subtorus(const std::vector<Weight>& weights);

/// Behrend function value at the fixed point I: (-1)^{dim T_I}.
int nu_at_fixed_point(const MonomialIdeal& ideal);

/// Signed count over the T_0-fixed points of Hilb^n(A^3). Per-ideal tangent
/// computations are spread over `threads` workers (0 = hardware
/// concurrency); the result does not depend on the thread count.
LocalizationResult weighted_euler_hilb(int n, unsigned threads = 1);

/// Weighted Euler characteristic of the invariant locus whose fixed points
/// are the colength-n ideals accepted by `selector`.
long weighted_euler_stratum(int n, const std::function<bool(const MonomialIdeal&)>& selector,
                            unsigned threads = 1);

} // namespace hilb3

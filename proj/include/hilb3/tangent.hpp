#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <vector>

#include "hilb3/partitions.hpp"

namespace hilb3 {

/// A character t1^w1 t2^w2 t3^w3 of the torus T = G_m^3.
struct Weight {
    int w1 = 0, w2 = 0, w3 = 0;

    auto operator<=>(const Weight&) const = default;

    bool is_zero() const noexcept { return w1 == 0 && w2 == 0 && w3 == 0; }
    bool is_diagonal() const noexcept { return w1 == w2 && w2 == w3; } // multiple of (1,1,1)
    bool all_nonnegative() const noexcept { return w1 >= 0 && w2 >= 0 && w3 >= 0; }
    bool all_negative() const noexcept { return w1 < 0 && w2 < 0 && w3 < 0; }
};

/// Character of a finite-dimensional T-representation: weights with
/// multiplicities, iterated in lexicographic weight order.
class WeightMultiset {
public:
    void add(const Weight& w, std::size_t multiplicity = 1);

    std::size_t total_dim() const noexcept { return total_; }
    std::size_t multiplicity(const Weight& w) const;
    const std::map<Weight, std::size_t>& entries() const noexcept { return entries_; }

    friend bool operator==(const WeightMultiset&, const WeightMultiset&) = default;

private:
    std::map<Weight, std::size_t> entries_;
    std::size_t total_ = 0;
};

struct SyzygyPair {
    std::size_t first, second; // generator indices, first < second
    Exponent lcm;

    friend bool operator==(const SyzygyPair&, const SyzygyPair&) = default;
};

struct TangentReport {
    MonomialIdeal ideal;
    WeightMultiset character;
    std::size_t dim = 0;
    bool parity_ok = false;
    bool cone_ok = false;
    bool diagonal_free = false;
};

std::vector<SyzygyPair> syzygy_pairs(const MonomialIdeal& ideal);

/// T-character of Hom_A(I, A/I), the Zariski tangent space of Hilb^n(A^3)
/// at I.
///
/// A homomorphism of weight w sends each generator m_g to c_g x^(m_g + w);
/// c_g is forced to vanish unless m_g + w is a standard monomial. Each
/// pairwise syzygy with lcm L imposes that both images, pushed to x^(L + w),
/// agree in A/I. The multiplicity of w is the nullity of that system over Q.
/// Only weights of the form b - m_g (b standard) can carry a nonzero map.
///
/// Throws hilb3::error for the unit ideal or an ideal of infinite colength.
WeightMultiset tangent_character(const MonomialIdeal& ideal);

std::size_t tangent_dim(const MonomialIdeal& ideal);

/// Independent check of tangent_dim: the kernel dimension of the ungraded map
/// (A/I)^gens -> (A/I)^pairs given by the syzygy defects, in the monomial
/// basis of A/I. No weights are involved.
std::size_t dense_tangent_dim_oracle(const MonomialIdeal& ideal);

/// No tangent weight lies in the closed positive orthant or the open negative one.
bool check_weight_cone(const MonomialIdeal& ideal);
bool check_diagonal_free(const MonomialIdeal& ideal);

/// (-1)^dim == (-1)^colength. Throws hilb3::error if a tangent weight is zero,
/// since the sign identity prod(-w)/prod(w) is then meaningless.
bool check_parity(const MonomialIdeal& ideal);

/// Computes the character once and derives every flag from it.
TangentReport tangent_report(const MonomialIdeal& ideal);

/// Relabels the coordinate axes: axis k of the result is axis perm[k] of the input.
Exponent permute(const Exponent& e, const std::array<int, 3>& perm);
Weight permute(const Weight& w, const std::array<int, 3>& perm);
MonomialIdeal permute(const MonomialIdeal& ideal, const std::array<int, 3>& perm);

} // namespace hilb3

#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace hilb3 {

/// Exponent vector of a monomial x^a y^b z^c in C[x,y,z].
using Exponent = std::array<int, 3>;

/// A plane partition, stored as its height map h(i,j).
///
/// Rows are indexed by the x-exponent i, columns by the y-exponent j, and the
/// height counts boxes along z: the box set is {(i,j,k) : k < h(i,j)}. The map
/// is trimmed so that every stored row is non-empty and every stored entry is
/// positive; heights are weakly decreasing along rows and down columns.
class PlanePartition {
public:
    PlanePartition() = default;

    /// Throws hilb3::error if the heights are not a valid staircase. Trailing
    /// zeros and empty rows are trimmed.
    explicit PlanePartition(std::vector<std::vector<int>> heights);

    const std::vector<std::vector<int>>& heights() const noexcept { return heights_; }
    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }

    /// Height at (i,j); zero outside the support.
    int height(std::size_t i, std::size_t j) const noexcept;

    bool contains(const Exponent& box) const noexcept;

    /// Boxes in row-major order, stacked bottom-up.
    std::vector<Exponent> boxes() const;

    friend bool operator==(const PlanePartition&, const PlanePartition&) = default;
    friend std::strong_ordering operator<=>(const PlanePartition& a, const PlanePartition& b)
    {
        return a.heights_ <=> b.heights_;
    }

private:
    std::vector<std::vector<int>> heights_;
    std::size_t size_ = 0;
};

/// A monomial ideal of C[x,y,z] given by its minimal generators.
///
/// Generators are kept minimal (an antichain under divisibility) and sorted in
/// decreasing lexicographic order, so two ideals are equal iff their generator
/// lists are. The unit ideal is the single generator (0,0,0).
class MonomialIdeal {
public:
    /// The unit ideal.
    MonomialIdeal() : generators_{Exponent{0, 0, 0}}, colength_(0) {}

    /// Builds the ideal generated by `generators`, discarding redundant ones.
    /// Throws hilb3::error on an empty list or a negative exponent.
    static MonomialIdeal from_generators(std::vector<Exponent> generators);

    const std::vector<Exponent>& generators() const noexcept { return generators_; }

    bool has_finite_colength() const noexcept { return colength_.has_value(); }

    /// dim A/I. Throws hilb3::error("infinite colength") if a pure power is missing.
    std::size_t colength() const;

    bool contains(const Exponent& monomial) const noexcept;

    /// Exponent of the smallest pure power of the given variable in I, if any.
    std::optional<int> pure_power(int axis) const noexcept;

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b)
    {
        return a.generators_ == b.generators_;
    }
    friend auto operator<=>(const MonomialIdeal& a, const MonomialIdeal& b)
    {
        return a.generators_ <=> b.generators_;
    }

private:
    std::vector<Exponent> generators_;
    std::optional<std::size_t> colength_;
};

bool divides(const Exponent& a, const Exponent& b) noexcept;

/// All plane partitions of n, ordered lexicographically on the row-major
/// height sequence (rows compared as sequences, shorter prefix first).
std::vector<PlanePartition> enumerate_partitions(int n);

/// Streaming form of enumerate_partitions; the visitor sees the same order.
void for_each_partition(int n, const std::function<void(const PlanePartition&)>& visit);

/// Number of plane partitions of n, by memoized recursion on row profiles.
mpz_class partition_count(int n);

MonomialIdeal to_ideal(const PlanePartition& pp);
PlanePartition from_ideal(const MonomialIdeal& ideal);

/// Standard monomials of I in graded order: total degree ascending, then
/// decreasing lexicographic within a degree.
std::vector<Exponent> quotient_basis(const MonomialIdeal& ideal);

/// Convenience: every monomial ideal of colength n, in enumeration order.
std::vector<MonomialIdeal> enumerate_ideals(int n);

} // namespace hilb3

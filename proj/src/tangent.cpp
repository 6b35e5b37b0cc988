#include "hilb3/tangent.hpp"

#include <algorithm>
#include <set>

#include "hilb3/error.hpp"
#include "hilb3/rational_matrix.hpp"

namespace hilb3 {

void WeightMultiset::add(const Weight& w, std::size_t multiplicity)
{
    if (multiplicity == 0)
        return;
    entries_[w] += multiplicity;
    total_ += multiplicity;
}

std::size_t WeightMultiset::multiplicity(const Weight& w) const
{
    auto it = entries_.find(w);
    return it == entries_.end() ? 0 : it->second;
}

namespace {

// Index of the standard monomials of a finite-colength ideal, looked up by
// exponent inside the bounding box cut out by the pure powers.
class StandardMonomials {
public:
    explicit StandardMonomials(const MonomialIdeal& ideal) : basis_(quotient_basis(ideal))
    {
        for (int k = 0; k < 3; ++k)
            bound_[k] = *ideal.pure_power(k);
        index_.assign(static_cast<std::size_t>(bound_[0] * bound_[1] * bound_[2]), -1);
        for (std::size_t i = 0; i < basis_.size(); ++i)
            index_[slot(basis_[i])] = static_cast<int>(i);
    }

    const std::vector<Exponent>& basis() const noexcept { return basis_; }

    // -1 when e has a negative coordinate or lies in the ideal.
    int find(const Exponent& e) const noexcept
    {
        for (int k = 0; k < 3; ++k)
            if (e[k] < 0 || e[k] >= bound_[k])
                return -1;
        return index_[slot(e)];
    }

private:
    std::size_t slot(const Exponent& e) const noexcept
    {
        return static_cast<std::size_t>((e[0] * bound_[1] + e[1]) * bound_[2] + e[2]);
    }

    std::vector<Exponent> basis_;
    std::array<int, 3> bound_{};
    std::vector<int> index_;
};

void require_nonunit(const MonomialIdeal& ideal)
{
    if (ideal.colength() == 0)
        throw error("unit ideal has no tangent theory here");
}

Exponent shift(const Exponent& e, const Weight& w)
{
    return {e[0] + w.w1, e[1] + w.w2, e[2] + w.w3};
}

Exponent sub(const Exponent& a, const Exponent& b)
{
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

Exponent add(const Exponent& a, const Exponent& b)
{
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

std::size_t graded_multiplicity(const Weight& w, const std::vector<Exponent>& gens,
                                const std::vector<SyzygyPair>& pairs, const StandardMonomials& std_monos)
{
    // Unknown c_g survives only if x^(m_g + w) is a nonzero element of A/I.
    std::vector<int> column(gens.size(), -1);
    std::size_t unknowns = 0;
    for (std::size_t g = 0; g < gens.size(); ++g)
        if (std_monos.find(shift(gens[g], w)) >= 0)
            column[g] = static_cast<int>(unknowns++);
    if (unknowns == 0)
        return 0;

    std::vector<const SyzygyPair*> active;
    for (const auto& p : pairs) {
        if (column[p.first] < 0 && column[p.second] < 0)
            continue;
        if (std_monos.find(shift(p.lcm, w)) < 0)
            continue;
        active.push_back(&p);
    }

    RationalMatrix system(active.size(), unknowns);
    for (std::size_t r = 0; r < active.size(); ++r) {
        if (column[active[r]->first] >= 0)
            system(r, static_cast<std::size_t>(column[active[r]->first])) += 1;
        if (column[active[r]->second] >= 0)
            system(r, static_cast<std::size_t>(column[active[r]->second])) -= 1;
    }
    return system.nullity();
}

} // namespace

std::vector<SyzygyPair> syzygy_pairs(const MonomialIdeal& ideal)
{
    const auto& gens = ideal.generators();
    std::vector<SyzygyPair> pairs;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            Exponent l;
            for (int k = 0; k < 3; ++k)
                l[k] = std::max(gens[i][k], gens[j][k]);
            pairs.push_back({i, j, l});
        }
    return pairs;
}

WeightMultiset tangent_character(const MonomialIdeal& ideal)
{
    require_nonunit(ideal);
    StandardMonomials std_monos(ideal);
    const auto& gens = ideal.generators();
    auto pairs = syzygy_pairs(ideal);

    std::set<Weight> candidates;
    for (const auto& b : std_monos.basis())
        for (const auto& g : gens) {
            Exponent d = sub(b, g);
            candidates.insert({d[0], d[1], d[2]});
        }

    WeightMultiset character;
    for (const auto& w : candidates)
        character.add(w, graded_multiplicity(w, gens, pairs, std_monos));
    return character;
}

std::size_t tangent_dim(const MonomialIdeal& ideal)
{
    return tangent_character(ideal).total_dim();
}

std::size_t dense_tangent_dim_oracle(const MonomialIdeal& ideal)
{
    require_nonunit(ideal);
    StandardMonomials std_monos(ideal);
    const auto& basis = std_monos.basis();
    const auto& gens = ideal.generators();
    auto pairs = syzygy_pairs(ideal);
    const std::size_t n = basis.size();

    // Column (g, b): coefficient of x^b in phi(m_g). Row (pair, b'): coefficient
    // of x^b' in (L/m_g) phi(m_g) - (L/m_g') phi(m_g').
    RationalMatrix map(pairs.size() * n, gens.size() * n);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        const auto& pair = pairs[p];
        Exponent cofactor_first = sub(pair.lcm, gens[pair.first]);
        Exponent cofactor_second = sub(pair.lcm, gens[pair.second]);
        for (std::size_t b = 0; b < n; ++b) {
            int image = std_monos.find(add(basis[b], cofactor_first));
            if (image >= 0)
                map(p * n + static_cast<std::size_t>(image), pair.first * n + b) += 1;
            image = std_monos.find(add(basis[b], cofactor_second));
            if (image >= 0)
                map(p * n + static_cast<std::size_t>(image), pair.second * n + b) -= 1;
        }
    }
    return map.nullity();
}

namespace {

bool cone_ok(const WeightMultiset& character)
{
    for (const auto& [w, mult] : character.entries())
        if (w.all_nonnegative() || w.all_negative())
            return false;
    return true;
}

bool diagonal_free(const WeightMultiset& character)
{
    for (const auto& [w, mult] : character.entries())
        if (w.is_diagonal())
            return false;
    return true;
}

bool parity_ok(const WeightMultiset& character, std::size_t colength)
{
    for (const auto& [w, mult] : character.entries())
        if (w.is_zero())
            throw error("zero weight: fixed point not isolated under T");
    return character.total_dim() % 2 == colength % 2;
}

} // namespace

bool check_weight_cone(const MonomialIdeal& ideal)
{
    return cone_ok(tangent_character(ideal));
}

bool check_diagonal_free(const MonomialIdeal& ideal)
{
    return diagonal_free(tangent_character(ideal));
}

bool check_parity(const MonomialIdeal& ideal)
{
    return parity_ok(tangent_character(ideal), ideal.colength());
}

TangentReport tangent_report(const MonomialIdeal& ideal)
{
    TangentReport report;
    report.ideal = ideal;
    report.character = tangent_character(ideal);
    report.dim = report.character.total_dim();
    report.cone_ok = cone_ok(report.character);
    report.diagonal_free = diagonal_free(report.character);
    try {
        report.parity_ok = parity_ok(report.character, ideal.colength());
    } catch (const error&) {
        report.parity_ok = false;
    }
    return report;
}

Exponent permute(const Exponent& e, const std::array<int, 3>& perm)
{
    return {e[perm[0]], e[perm[1]], e[perm[2]]};
}

Weight permute(const Weight& w, const std::array<int, 3>& perm)
{
    Exponent e = permute(Exponent{w.w1, w.w2, w.w3}, perm);
    return {e[0], e[1], e[2]};
}

MonomialIdeal permute(const MonomialIdeal& ideal, const std::array<int, 3>& perm)
{
    std::vector<Exponent> gens;
    for (const auto& g : ideal.generators())
        gens.push_back(permute(g, perm));
    return MonomialIdeal::from_generators(std::move(gens));
}

} // namespace hilb3

#include "hilb3/partitions.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "hilb3/error.hpp"

namespace hilb3 {

PlanePartition::PlanePartition(std::vector<std::vector<int>> heights)
{
    for (auto& row : heights) {
        while (!row.empty() && row.back() == 0)
            row.pop_back();
    }
    while (!heights.empty() && heights.back().empty())
        heights.pop_back();

    for (std::size_t i = 0; i < heights.size(); ++i) {
        const auto& row = heights[i];
        if (row.empty())
            throw error("plane partition: empty row inside the support");
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (row[j] <= 0)
                throw error("plane partition: heights must be positive inside the support");
            if (j > 0 && row[j] > row[j - 1])
                throw error("plane partition: heights increase along a row");
            if (i > 0) {
                const auto& above = heights[i - 1];
                if (j >= above.size() || row[j] > above[j])
                    throw error("plane partition: heights increase down a column");
            }
            size_ += static_cast<std::size_t>(row[j]);
        }
    }
    heights_ = std::move(heights);
}

int PlanePartition::height(std::size_t i, std::size_t j) const noexcept
{
    if (i >= heights_.size() || j >= heights_[i].size())
        return 0;
    return heights_[i][j];
}

bool PlanePartition::contains(const Exponent& box) const noexcept
{
    if (box[0] < 0 || box[1] < 0 || box[2] < 0)
        return false;
    return box[2] < height(static_cast<std::size_t>(box[0]), static_cast<std::size_t>(box[1]));
}

std::vector<Exponent> PlanePartition::boxes() const
{
    std::vector<Exponent> out;
    out.reserve(size_);
    for (std::size_t i = 0; i < heights_.size(); ++i)
        for (std::size_t j = 0; j < heights_[i].size(); ++j)
            for (int k = 0; k < heights_[i][j]; ++k)
                out.push_back({static_cast<int>(i), static_cast<int>(j), k});
    return out;
}

bool divides(const Exponent& a, const Exponent& b) noexcept
{
    return a[0] <= b[0] && a[1] <= b[1] && a[2] <= b[2];
}

MonomialIdeal MonomialIdeal::from_generators(std::vector<Exponent> generators)
{
    if (generators.empty())
        throw error("monomial ideal: no generators");
    for (const auto& g : generators)
        if (g[0] < 0 || g[1] < 0 || g[2] < 0)
            throw error("monomial ideal: negative exponent");

    std::sort(generators.begin(), generators.end(), std::greater<>());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

    MonomialIdeal ideal;
    ideal.generators_.clear();
    for (const auto& g : generators) {
        bool redundant = std::any_of(generators.begin(), generators.end(), [&](const Exponent& h) {
            return h != g && divides(h, g);
        });
        if (!redundant)
            ideal.generators_.push_back(g);
    }

    ideal.colength_.reset();
    auto px = ideal.pure_power(0), py = ideal.pure_power(1), pz = ideal.pure_power(2);
    if (px && py && pz) {
        std::size_t count = 0;
        for (int a = 0; a < *px; ++a)
            for (int b = 0; b < *py; ++b)
                for (int c = 0; c < *pz; ++c)
                    if (!ideal.contains({a, b, c}))
                        ++count;
        ideal.colength_ = count;
    }
    return ideal;
}

std::size_t MonomialIdeal::colength() const
{
    if (!colength_)
        throw error("infinite colength");
    return *colength_;
}

bool MonomialIdeal::contains(const Exponent& monomial) const noexcept
{
    return std::any_of(generators_.begin(), generators_.end(),
                       [&](const Exponent& g) { return divides(g, monomial); });
}

std::optional<int> MonomialIdeal::pure_power(int axis) const noexcept
{
    std::optional<int> best;
    for (const auto& g : generators_) {
        bool pure = true;
        for (int k = 0; k < 3; ++k)
            if (k != axis && g[k] != 0)
                pure = false;
        if (pure && (!best || g[axis] < *best))
            best = g[axis];
    }
    return best;
}

namespace {

using Row = std::vector<int>;

// Visits every non-empty row dominated entrywise by `bound` with total at most
// `budget`, in lexicographic order (a prefix precedes its extensions).
template <class Visit>
void rows_below(const Row& bound, int budget, Row& row, int used, Visit&& visit)
{
    std::size_t j = row.size();
    if (j >= bound.size())
        return;
    int cap = std::min(bound[j], budget - used);
    if (j > 0)
        cap = std::min(cap, row.back());
    for (int v = 1; v <= cap; ++v) {
        row.push_back(v);
        visit(row, used + v);
        rows_below(bound, budget, row, used + v, visit);
        row.pop_back();
    }
}

void extend(std::vector<Row>& rows, const Row& bound, int remaining,
            const std::function<void(const PlanePartition&)>& visit)
{
    if (remaining == 0) {
        visit(PlanePartition(rows));
        return;
    }
    Row row;
    rows_below(bound, remaining, row, 0, [&](const Row& r, int total) {
        rows.push_back(r);
        extend(rows, r, remaining - total, visit);
        rows.pop_back();
    });
}

class ProfileCounter {
public:
    mpz_class count(const Row& bound, int remaining)
    {
        if (remaining == 0)
            return 1;
        auto key = std::make_pair(bound, remaining);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
        mpz_class total = 0;
        Row row;
        rows_below(bound, remaining, row, 0, [&](const Row& r, int used) {
            total += count(r, remaining - used);
        });
        memo_.emplace(std::move(key), total);
        return total;
    }

private:
    std::map<std::pair<Row, int>, mpz_class> memo_;
};

} // namespace

void for_each_partition(int n, const std::function<void(const PlanePartition&)>& visit)
{
    if (n < 0)
        throw error("partition size must be nonnegative");
    std::vector<Row> rows;
    extend(rows, Row(static_cast<std::size_t>(n), n), n, visit);
}

std::vector<PlanePartition> enumerate_partitions(int n)
{
    std::vector<PlanePartition> out;
    for_each_partition(n, [&](const PlanePartition& pp) { out.push_back(pp); });
    return out;
}

mpz_class partition_count(int n)
{
    if (n < 0)
        throw error("partition size must be nonnegative");
    ProfileCounter counter;
    return counter.count(Row(static_cast<std::size_t>(n), n), n);
}

MonomialIdeal to_ideal(const PlanePartition& pp)
{
    const auto& h = pp.heights();
    int rows = static_cast<int>(h.size());
    int cols = rows == 0 ? 0 : static_cast<int>(h[0].size());
    int top = rows == 0 ? 0 : h[0][0];

    // Minimal non-boxes: outside the staircase, every lower neighbour inside.
    std::vector<Exponent> gens;
    for (int a = 0; a <= rows; ++a)
        for (int b = 0; b <= cols; ++b)
            for (int c = 0; c <= top; ++c) {
                Exponent e{a, b, c};
                if (pp.contains(e))
                    continue;
                bool minimal = true;
                for (int k = 0; k < 3 && minimal; ++k) {
                    if (e[k] == 0)
                        continue;
                    Exponent lower = e;
                    --lower[k];
                    minimal = pp.contains(lower);
                }
                if (minimal)
                    gens.push_back(e);
            }
    return MonomialIdeal::from_generators(std::move(gens));
}

PlanePartition from_ideal(const MonomialIdeal& ideal)
{
    if (!ideal.has_finite_colength())
        throw error("infinite colength");
    int px = *ideal.pure_power(0), py = *ideal.pure_power(1), pz = *ideal.pure_power(2);
    std::vector<std::vector<int>> heights(static_cast<std::size_t>(px), Row(static_cast<std::size_t>(py), 0));
    for (int a = 0; a < px; ++a)
        for (int b = 0; b < py; ++b)
            for (int c = 0; c < pz; ++c)
                if (!ideal.contains({a, b, c}))
                    ++heights[a][b];
    return PlanePartition(std::move(heights));
}

std::vector<Exponent> quotient_basis(const MonomialIdeal& ideal)
{
    std::vector<Exponent> basis = from_ideal(ideal).boxes();
    std::sort(basis.begin(), basis.end(), [](const Exponent& u, const Exponent& v) {
        int du = u[0] + u[1] + u[2], dv = v[0] + v[1] + v[2];
        if (du != dv)
            return du < dv;
        return u > v;
    });
    return basis;
}

std::vector<MonomialIdeal> enumerate_ideals(int n)
{
    std::vector<MonomialIdeal> out;
    for_each_partition(n, [&](const PlanePartition& pp) { out.push_back(to_ideal(pp)); });
    return out;
}

} // namespace hilb3

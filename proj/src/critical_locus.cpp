#include "hilb3/critical_locus.hpp"

#include <numeric>
#include <utility>

#include "hilb3/error.hpp"
#include "hilb3/rational_matrix.hpp"

namespace hilb3 {

QuasiHomogPoly::QuasiHomogPoly(std::size_t num_vars, std::vector<int> weights) : weights_(std::move(weights))
{
    if (weights_.size() != num_vars)
        throw error("expected " + std::to_string(num_vars) + " weights, got " + std::to_string(weights_.size()));
}

void QuasiHomogPoly::add_term(const Monomial& e, const mpq_class& c)
{
    if (e.size() != num_vars())
        throw error("monomial has the wrong number of variables");
    for (int k : e)
        if (k < 0)
            throw error("negative exponent in polynomial");
    if (sgn(c) == 0)
        return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0)
            terms_.erase(it);
    }
}

long QuasiHomogPoly::weighted_degree(const Monomial& e) const
{
    long d = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
        d += static_cast<long>(e[i]) * weights_[i];
    return d;
}

QuasiHomogPoly QuasiHomogPoly::scaled(const mpq_class& c) const
{
    QuasiHomogPoly out(num_vars(), weights_);
    for (const auto& [e, coeff] : terms_)
        out.add_term(e, coeff * c);
    return out;
}

QuasiHomogPoly QuasiHomogPoly::derivative(std::size_t var) const
{
    if (var >= num_vars())
        throw error("variable index out of range");
    QuasiHomogPoly out(num_vars(), weights_);
    for (const auto& [e, coeff] : terms_) {
        if (e[var] == 0)
            continue;
        Monomial d = e;
        --d[var];
        out.add_term(d, coeff * e[var]);
    }
    return out;
}

bool is_invariant(const QuasiHomogPoly& f)
{
    for (const auto& [e, c] : f.terms())
        if (f.weighted_degree(e) != 0)
            return false;
    return true;
}

bool in_m_cubed(const QuasiHomogPoly& f)
{
    for (const auto& [e, c] : f.terms())
        if (std::accumulate(e.begin(), e.end(), 0) < 3)
            return false;
    return true;
}

int nu_isolated(const QuasiHomogPoly& f)
{
    for (int r : f.weights())
        if (r == 0)
            throw error("fixed point not isolated: some weight is zero");
    if (!in_m_cubed(f))
        throw error("tangent space not all of ambient space: f is not in m^3; use the Hessian tangent dimension");
    if (!is_invariant(f))
        throw error("polynomial is not invariant under the weighted action");
    return f.num_vars() % 2 == 0 ? 1 : -1;
}

std::size_t hessian_tangent_dim(const QuasiHomogPoly& f)
{
    const std::size_t n = f.num_vars();
    RationalMatrix hessian(n, n);
    for (const auto& [e, c] : f.terms()) {
        if (std::accumulate(e.begin(), e.end(), 0) != 2)
            continue;
        std::vector<std::size_t> vars;
        for (std::size_t i = 0; i < n; ++i)
            for (int k = 0; k < e[i]; ++k)
                vars.push_back(i);
        if (vars[0] == vars[1]) {
            hessian(vars[0], vars[0]) += 2 * c;
        } else {
            hessian(vars[0], vars[1]) += c;
            hessian(vars[1], vars[0]) += c;
        }
    }
    return n - hessian.rank();
}

std::vector<QuasiHomogPoly> jacobian_generators(const QuasiHomogPoly& f)
{
    std::vector<QuasiHomogPoly> out;
    for (std::size_t i = 0; i < f.num_vars(); ++i)
        out.push_back(f.derivative(i));
    return out;
}

} // namespace hilb3

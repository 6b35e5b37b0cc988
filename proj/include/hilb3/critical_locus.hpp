#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include <gmpxx.h>

namespace hilb3 {

/// Polynomial in x1..xn over Q, together with integer weights r_i for a
/// diagonal G_m-action t . x_i = t^{r_i} x_i.
class QuasiHomogPoly {
public:
    using Monomial = std::vector<int>;

    /// Throws hilb3::error if weights.size() != num_vars.
    QuasiHomogPoly(std::size_t num_vars, std::vector<int> weights);

    std::size_t num_vars() const noexcept { return weights_.size(); }
    const std::vector<int>& weights() const noexcept { return weights_; }
    const std::map<Monomial, mpq_class>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Adds c x^e; terms that cancel are dropped.
    void add_term(const Monomial& e, const mpq_class& c);

    long weighted_degree(const Monomial& e) const;

    QuasiHomogPoly scaled(const mpq_class& c) const;
    QuasiHomogPoly derivative(std::size_t var) const;

    friend bool operator==(const QuasiHomogPoly&, const QuasiHomogPoly&) = default;

private:
    std::vector<int> weights_;
    std::map<Monomial, mpq_class> terms_;
};

/// Every monomial has weighted degree zero.
bool is_invariant(const QuasiHomogPoly& f);

/// Every monomial has total degree at least 3.
bool in_m_cubed(const QuasiHomogPoly& f);

/// nu of Z(df) at the origin for invariant f in m^3 with all weights nonzero.
/// The Milnor fibre carries a free circle action, so chi(F) = 0 and
/// nu = (-1)^n. Throws hilb3::error naming the failed precondition.
int nu_isolated(const QuasiHomogPoly& f);

/// dim of the Zariski tangent space of Z(df) at 0: n - rank Hess(f)(0).
std::size_t hessian_tangent_dim(const QuasiHomogPoly& f);

/// The partials df/dx_i, each carrying the weights of f.
std::vector<QuasiHomogPoly> jacobian_generators(const QuasiHomogPoly& f);

} // namespace hilb3

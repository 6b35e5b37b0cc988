#include <doctest.h>

#include "hilb3/critical_locus.hpp"
#include "hilb3/error.hpp"
#include "hilb3/io.hpp"

using namespace hilb3;

namespace {

QuasiHomogPoly poly(const std::string& text, std::vector<int> weights)
{
    return io::parse_polynomial(text, weights);
}

} // namespace

TEST_CASE("is_invariant")
{
    CHECK(is_invariant(poly("x^2*y", {1, -2})));
    CHECK_FALSE(is_invariant(poly("x^2 + y", {1, -2})));
    CHECK(is_invariant(poly("x*y*z", {1, 1, -2})));
}

TEST_CASE("in_m_cubed")
{
    CHECK(in_m_cubed(poly("x^2*y", {1, -2})));
    CHECK_FALSE(in_m_cubed(poly("x^2", {1})));
    CHECK(in_m_cubed(QuasiHomogPoly(2, {1, -2})));
}

TEST_CASE("nu_isolated")
{
    CHECK(nu_isolated(poly("x^2*y", {1, -2})) == 1);
    CHECK(nu_isolated(poly("x*y*z", {1, 1, -2})) == -1);
    CHECK_THROWS_AS(nu_isolated(poly("x^2", {1})), error);
    CHECK_THROWS_AS(nu_isolated(poly("x^2*y", {0, -2})), error);
    CHECK_THROWS_AS(nu_isolated(poly("x^3 + y", {1, -2})), error);
}

TEST_CASE("hessian_tangent_dim")
{
    CHECK(hessian_tangent_dim(poly("x*y*z + x^3*z", {1, 1, -2})) == 3);
    CHECK(hessian_tangent_dim(poly("x^2", {1})) == 0);
    CHECK(hessian_tangent_dim(poly("x^2 + x*y", {1, -1})) == 0);
    CHECK(hessian_tangent_dim(poly("x*y + y*z", {1, -1, 1})) == 1);
    CHECK(hessian_tangent_dim(QuasiHomogPoly(3, {1, 1, 1})) == 3);
}

TEST_CASE("jacobian_generators")
{
    auto f = poly("x^2*y", {1, -2});
    auto d = jacobian_generators(f);
    REQUIRE(d.size() == 2);
    CHECK(d[0] == poly("2*x*y", {1, -2}));
    CHECK(d[1] == poly("x^2", {1, -2}));
    for (std::size_t i = 0; i < d.size(); ++i)
        for (const auto& [e, c] : d[i].terms())
            CHECK(d[i].weighted_degree(e) == -f.weights()[i]);

    auto zero = jacobian_generators(QuasiHomogPoly(3, {1, 1, -2}));
    REQUIRE(zero.size() == 3);
    for (const auto& z : zero)
        CHECK(z.is_zero());

    auto g = jacobian_generators(poly("x*y*z", {1, 1, -2}));
    CHECK(g[0] == poly("y*z", {1, 1, -2}));
    CHECK(g[1] == poly("x*z", {1, 1, -2}));
    CHECK(g[2] == poly("x*y", {1, 1, -2}));
}

TEST_CASE("weight bookkeeping of partials on invariant polynomials")
{
    auto f = poly("x1^2*x2*x4 - 3*x1*x3^2*x4^2 + 1/2*x2^3*x3*x4^4", {1, 1, 1, -1});
    // Degrees: 2+1-1, 1+2-2, 3+1-4.
    REQUIRE(f.num_vars() == 4);
    CHECK_FALSE(is_invariant(f));
    auto h = poly("x1^2*x2*x4^3 + x1*x3^2*x4^3 - 1/2*x2^3*x4^3", {1, 1, 1, -1});
    CHECK(is_invariant(h));
    auto partials = jacobian_generators(h);
    for (std::size_t i = 0; i < partials.size(); ++i)
        for (const auto& [e, c] : partials[i].terms())
            CHECK(partials[i].weighted_degree(e) == -h.weights()[i]);
}

TEST_CASE("scaling leaves nu and the tangent dimension unchanged")
{
    for (const auto& [text, weights] : std::vector<std::pair<std::string, std::vector<int>>>{
             {"x^2*y", {1, -2}}, {"x*y*z + x^2*z^2", {1, 1, -1}}, {"x^2 + x*y", {1, -1}}}) {
        auto f = poly(text, weights);
        for (const mpq_class& c : {mpq_class(-1), mpq_class(3, 7), mpq_class(100)}) {
            auto g = f.scaled(c);
            CHECK(hessian_tangent_dim(g) == hessian_tangent_dim(f));
            if (in_m_cubed(f) && is_invariant(f))
                CHECK(nu_isolated(g) == nu_isolated(f));
        }
    }
}

TEST_CASE("nu agrees with (-1)^dim T for invariant cubic-order polynomials")
{
    for (const auto& [text, weights] : std::vector<std::pair<std::string, std::vector<int>>>{
             {"x^2*y", {1, -2}}, {"x*y*z", {1, 1, -2}}, {"x1*x2*x3*x4 + x1^2*x4^2", {1, 2, -2, -1}}}) {
        auto f = poly(text, weights);
        int sign = hessian_tangent_dim(f) % 2 == 0 ? 1 : -1;
        CHECK(nu_isolated(f) == sign);
    }
}

TEST_CASE("polynomial arithmetic edge cases")
{
    QuasiHomogPoly f(2, {1, -1});
    f.add_term({1, 1}, 2);
    f.add_term({1, 1}, -2);
    CHECK(f.is_zero());
    CHECK_THROWS_AS(f.add_term({1}, 1), error);
    CHECK_THROWS_AS(f.derivative(2), error);
    CHECK_THROWS_AS(QuasiHomogPoly(2, {1}), error);
}

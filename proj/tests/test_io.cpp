#include <doctest.h>

#include "hilb3/error.hpp"
#include "hilb3/io.hpp"

using namespace hilb3;

TEST_CASE("ideal text formats")
{
    auto a = io::parse_ideal("2,0,0;0,1,0;0,0,1");
    auto b = io::parse_ideal("x^2; y; z");
    CHECK(a == b);
    CHECK(a.colength() == 2);
    CHECK(io::format_ideal(a) == "2,0,0;0,1,0;0,0,1");
    CHECK(io::parse_ideal("x^2;x*y;y^2;z") == io::parse_ideal("xx;xy;yy;z"));
    CHECK(io::parse_ideal("1") == MonomialIdeal());

    CHECK_THROWS_WITH_AS(io::parse_ideal("x;w;z"), "invalid monomial 'w': unexpected 'w'", error);
    CHECK_THROWS_WITH_AS(io::parse_ideal("1,0;0,1,0"), "generator '1,0' must have three exponents", error);
    CHECK_THROWS_WITH_AS(io::parse_ideal("1,a,0"), "invalid integer 'a'", error);
    CHECK_THROWS_AS(io::parse_ideal("x;;z"), error);
    CHECK_THROWS_AS(io::parse_ideal("-1,0,0"), error);
}

TEST_CASE("integer lists")
{
    CHECK(io::parse_int_list("1,-2, 3") == std::vector<int>{1, -2, 3});
    CHECK_THROWS_AS(io::parse_int_list("1,,2"), error);
    CHECK_THROWS_AS(io::parse_int_list("1.5"), error);
}

TEST_CASE("polynomial parsing")
{
    auto f = io::parse_polynomial("2*x^2*y - x*z^3", {1, 1, 1});
    CHECK(f.terms().size() == 2);
    CHECK(f.terms().at({2, 1, 0}) == 2);
    CHECK(f.terms().at({1, 0, 3}) == -1);
    CHECK(io::format_polynomial(f) == "-x*z^3 + 2*x^2*y");

    auto g = io::parse_polynomial("-1/2*x1^2*x4 + x2 * x3 + 3", {1, 1, 1, 1});
    CHECK(g.terms().at({2, 0, 0, 1}) == mpq_class(-1, 2));
    CHECK(g.terms().at({0, 0, 0, 0}) == 3);
    CHECK(io::parse_polynomial("x*y - y*x", {1, -1}).is_zero());
    CHECK(io::format_polynomial(io::parse_polynomial("0", {1})) == "0");

    CHECK_THROWS_WITH_AS(io::parse_polynomial("x*w", {1, 1}), "unknown variable 'w' for 2 variable(s)", error);
    CHECK_THROWS_WITH_AS(io::parse_polynomial("x y", {1, 1}), "unexpected token 'y' at position 2", error);
    CHECK_THROWS_AS(io::parse_polynomial("z", {1, 1}), error);
    CHECK_THROWS_AS(io::parse_polynomial("x1^2*x5", {1, 1, 1, 1}), error);
    CHECK_THROWS_AS(io::parse_polynomial("", {1}), error);
    CHECK_THROWS_AS(io::parse_polynomial("x^", {1}), error);
    CHECK_THROWS_AS(io::parse_polynomial("1/0", {1}), error);
}

TEST_CASE("polynomial text round trip")
{
    for (const auto& text : {"2*x^2*y - x*z^3", "-1/3*x*y*z + 7", "x^5"}) {
        auto f = io::parse_polynomial(text, {1, 2, 3});
        CHECK(io::parse_polynomial(io::format_polynomial(f), {1, 2, 3}) == f);
    }
}

TEST_CASE("json records")
{
    auto pp = PlanePartition({{1}, {1}});
    CHECK(io::partition_json(pp).dump() == R"({"n":2,"generators":[[2,0,0],[0,1,0],[0,0,1]],"heights":[[1],[1]]})");
    CHECK(io::partition_json(PlanePartition()).dump() == R"({"n":0,"generators":[[0,0,0]],"heights":[]})");

    auto report = tangent_report(io::parse_ideal("x;y;z"));
    CHECK(io::tangent_json(report).dump() ==
          R"({"n":1,"generators":[[1,0,0],[0,1,0],[0,0,1]],"dim":3,)"
          R"("weights":[[-1,0,0,1],[0,-1,0,1],[0,0,-1,1]],"parity_ok":true,"cone_ok":true,"diagonal_free":true})");

    auto loc = weighted_euler_hilb(3);
    CHECK(io::localization_json(loc, false).dump() == R"({"n":3,"weighted_euler":-6,"fixed_point_count":6})");
    CHECK(io::localization_json(loc, true)["per_point"].size() == 6);
}

TEST_CASE("series formats")
{
    auto s = dt_series(1, 3);
    CHECK(io::format_series(s, "dt", 1, io::SeriesFormat::text) == "1,-1,3,-6\n");
    CHECK(io::format_series(s, "dt", 1, io::SeriesFormat::csv) == "n,coefficient\n0,1\n1,-1\n2,3\n3,-6\n");
    CHECK(io::format_series(s, "dt", 1, io::SeriesFormat::json) ==
          "{\"kind\":\"dt\",\"chi\":1,\"order\":3,\"coefficients\":[1,-1,3,-6]}\n");

    // Coefficients beyond 64 bits stay exact.
    auto big = io::format_series(euler_series(1, 200), "euler", 1, io::SeriesFormat::text);
    CHECK(big.size() > 200 * 10);
}

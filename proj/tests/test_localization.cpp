#include <doctest.h>

#include "hilb3/error.hpp"
#include "hilb3/localization.hpp"
#include "oracles.hpp"

using namespace hilb3;

TEST_CASE("one-parameter subgroup construction")
{
    CHECK(OneParamSubgroup::make(2, -1, -1) == OneParamSubgroup{2, -1, -1});
    CHECK_THROWS_AS(OneParamSubgroup::make(1, 1, 1), error);
    CHECK_THROWS_AS(OneParamSubgroup::make(0, 0, 0), error);
    CHECK(OneParamSubgroup{1, 2, -3}.pairing({1, 1, 1}) == 0);
}

TEST_CASE("generic_subtorus")
{
    CHECK(generic_subtorus({}) == OneParamSubgroup{1, -1, 0});
    CHECK_THROWS_WITH_AS(generic_subtorus({{1, 1, 1}}), "no generic subtorus exists", error);
    CHECK_THROWS_AS(generic_subtorus({{0, 0, 0}}), error);
    CHECK_THROWS_AS(generic_subtorus({{1, 0, 0}, {-2, -2, -2}}), error);

    // Frozen from oracle::brute_force_subtorus.
    std::vector<Weight> negative_units{{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}};
    CHECK(oracle::brute_force_subtorus({{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}}, 4) == std::array<int, 3>{1, 1, -2});
    CHECK(generic_subtorus(negative_units) == OneParamSubgroup{1, 1, -2});
}

TEST_CASE("generic_subtorus agrees with the brute-force scan")
{
    for (int n = 1; n <= 5; ++n) {
        std::vector<Weight> weights;
        std::vector<std::array<int, 3>> raw;
        for (const auto& I : enumerate_ideals(n)) {
            auto character = tangent_character(I);
            for (const auto& [w, m] : character.entries()) {
                weights.push_back(w);
                raw.push_back({w.w1, w.w2, w.w3});
            }
        }
        auto lambda = generic_subtorus(weights);
        CHECK(lambda.l1 + lambda.l2 + lambda.l3 == 0);
        for (const auto& w : weights)
            CHECK(lambda.pairing(w) != 0);
        auto expected = oracle::brute_force_subtorus(raw, 40);
        CHECK(std::array<int, 3>{lambda.l1, lambda.l2, lambda.l3} == expected);
    }
}

TEST_CASE("nu at fixed points")
{
    CHECK(nu_at_fixed_point(MonomialIdeal::from_generators({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == -1);
    for (const auto& I : enumerate_ideals(2))
        CHECK(nu_at_fixed_point(I) == 1);
    for (int n = 1; n <= 6; ++n)
        for (const auto& I : enumerate_ideals(n))
            CHECK(nu_at_fixed_point(I) == (n % 2 == 0 ? 1 : -1));
    CHECK_THROWS_AS(nu_at_fixed_point(MonomialIdeal()), error);
}

TEST_CASE("weighted_euler_hilb")
{
    auto zero = weighted_euler_hilb(0);
    CHECK(zero.weighted_euler == 1);
    CHECK(zero.fixed_point_count == 1);

    CHECK(weighted_euler_hilb(1).weighted_euler == -1);
    auto three = weighted_euler_hilb(3);
    CHECK(three.weighted_euler == -6);
    CHECK(three.fixed_point_count == 6);
    CHECK(weighted_euler_hilb(4).weighted_euler == 13);

    for (int n = 1; n <= 6; ++n) {
        auto r = weighted_euler_hilb(n, 3);
        long sum = 0;
        for (const auto& p : r.per_point) {
            CHECK((p.sign == 1 || p.sign == -1));
            CHECK(p.sign == nu_at_fixed_point(p.ideal));
            sum += p.sign;
        }
        CHECK(sum == r.weighted_euler);
        CHECK(r.per_point.size() == r.fixed_point_count);
    }
    CHECK_THROWS_AS(weighted_euler_hilb(-1), error);
}

TEST_CASE("result is independent of the thread count")
{
    auto serial = weighted_euler_hilb(6, 1);
    auto parallel = weighted_euler_hilb(6, 4);
    CHECK(serial.weighted_euler == parallel.weighted_euler);
    REQUIRE(serial.per_point.size() == parallel.per_point.size());
    for (std::size_t i = 0; i < serial.per_point.size(); ++i) {
        CHECK(serial.per_point[i].ideal == parallel.per_point[i].ideal);
        CHECK(serial.per_point[i].sign == parallel.per_point[i].sign);
    }
}

TEST_CASE("weighted_euler_stratum")
{
    auto always = [](const MonomialIdeal&) { return true; };
    auto never = [](const MonomialIdeal&) { return false; };
    auto planar = [](const MonomialIdeal& I) { return I.contains({0, 0, 1}); };
    CHECK(weighted_euler_stratum(2, always) == 3);
    CHECK(weighted_euler_stratum(2, never) == 0);
    CHECK(weighted_euler_stratum(2, planar) == 2);

    for (int n = 1; n <= 6; ++n) {
        auto not_planar = [&](const MonomialIdeal& I) { return !planar(I); };
        CHECK(weighted_euler_stratum(n, planar) + weighted_euler_stratum(n, not_planar) ==
              weighted_euler_hilb(n).weighted_euler);
    }
}

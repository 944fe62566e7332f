#include <algorithm>
#include <set>

#include "doctest.h"

#include "ginlab/gin.hpp"
#include "ginlab/hilbert.hpp"

using namespace ginlab;

namespace {

std::vector<Monomial> gens(std::initializer_list<std::pair<Int, Int>> list) {
    std::vector<Monomial> out;
    for (auto [x, y] : list) out.push_back({x, y});
    return out;
}

// Minimal generators by brute force over all monomials up to degree `top`, where the degree-t
// part of the ideal is the top H(t) - H(t-1) monomials in x-exponent.
std::vector<Monomial> brute_force_generators(const PointConfig& config, Int m, Int top) {
    std::set<std::pair<Int, Int>> ideal;
    Int previous = 0;
    for (Int t = 0; t <= top; ++t) {
        Int h = hilbert_fn(config, m, t).value;
        for (Int j = 0; j < h - previous; ++j) ideal.insert({t - j, j});
        previous = h;
    }
    std::vector<Monomial> out;
    for (auto [x, y] : ideal) {
        bool minimal = !ideal.count({x - 1, y}) && !ideal.count({x, y - 1});
        if (minimal) out.push_back({x, y});
    }
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return a.x > b.x; });
    return out;
}

} // namespace

TEST_CASE("xy_count") {
    const auto six = PointConfig::general(6);
    CHECK(xy_count(six, 10, 25) == 20);
    CHECK(xy_count(six, 10, 24) == 1);
    CHECK(xy_count(six, 10, 26) == 27);
    CHECK(xy_count(six, 10, 0) == 0);
}

TEST_CASE("staircase examples") {
    const auto nine = gin_staircase(PointConfig::shgh(9), 1);
    CHECK(nine.generators() == gens({{3, 0}, {2, 2}, {1, 3}, {0, 4}}));
    CHECK(nine.evidence() == Evidence::conjectural);

    const auto two = gin_staircase(PointConfig::general(2), 1);
    CHECK(two.generators() == gens({{1, 0}, {0, 2}}));

    const auto six = gin_staircase(PointConfig::general(6), 10);
    CHECK(six.alpha == 24);
    CHECK(six.zeta() == 26);
    CHECK(six.max_generator_degree() == 26);
    CHECK(six.min_generator_degree() == 24);
}

TEST_CASE("SHGH closed form") {
    const auto one = shgh_gin_closed_form(9, 1);
    CHECK(one.alpha == 3);
    CHECK(expected_dimension(9, 1, 3) == 1);
    CHECK(one.generators() == gens({{3, 0}, {2, 2}, {1, 3}, {0, 4}}));

    const auto five = shgh_gin_closed_form(9, 5);
    CHECK(five.alpha == 15);
    CHECK(expected_dimension(9, 5, 15) == 1);

    // Every case with eta = alpha + 1 puts all generators in degree alpha.
    int single_degree_cases = 0;
    for (int r = 9; r <= 60; ++r)
        for (Int m = 1; m <= 50; ++m) {
            const Int a = alpha_shgh(r, m);
            if (expected_dimension(r, m, a) != a + 1) continue;
            ++single_degree_cases;
            const auto s = shgh_gin_closed_form(r, m);
            for (const auto& g : s.generators()) CHECK(g.degree() == a);
        }
    CHECK(single_degree_cases > 0);

    for (int r = 9; r <= 14; ++r)
        for (Int m = 1; m <= 30; ++m) CHECK(shgh_gin_closed_form(r, m) == gin_staircase(PointConfig::shgh(r), m));
}

TEST_CASE("colength") {
    CHECK(colength(gin_staircase(PointConfig::general(6), 10)) == 330);
    CHECK(colength(gin_staircase(PointConfig::general(2), 1)) == 2);
    CHECK(colength(gin_staircase(PointConfig::collinear(3), 6)) == 84);
    auto broken = gin_staircase(PointConfig::general(2), 1);
    broken.lambdas[0] = 3;
    CHECK_THROWS_AS(colength(broken), InvariantViolation);
}

TEST_CASE("staircase structure for all configurations") {
    std::vector<PointConfig> configs;
    for (int r = 2; r <= 8; ++r) configs.push_back(PointConfig::general(r));
    for (int r = 9; r <= 12; ++r) configs.push_back(PointConfig::shgh(r));
    for (int l = 3; l <= 5; ++l) configs.push_back(PointConfig::collinear(l));
    for (const auto& config : configs) {
        for (Int m = 1; m <= 12; ++m) {
            CAPTURE(config.to_string());
            CAPTURE(m);
            const auto s = gin_staircase(config, m);
            CHECK(s.alpha == alpha(config, m));
            CHECK(s.generators().size() == static_cast<std::size_t>(s.alpha + 1));
            for (std::size_t i = 1; i < s.lambdas.size(); ++i) CHECK(s.lambdas[i] < s.lambdas[i - 1]);
            if (!s.lambdas.empty()) CHECK(s.lambdas.back() >= 1);
            CHECK(colength(s) == config.point_count() * m * (m + 1) / 2);
            CHECK(s.generators() == brute_force_generators(config, m, s.max_generator_degree() + 2));
        }
    }
}

TEST_CASE("products of generators land in the 2m staircase") {
    for (int r = 2; r <= 8; ++r) {
        const auto config = PointConfig::general(r);
        for (Int m = 1; m <= 8; ++m) {
            const auto s = gin_staircase(config, m);
            CHECK(products_contained(s, s, gin_staircase(config, 2 * m)));
            CHECK(products_contained(s, gin_staircase(config, m + 1), gin_staircase(config, 2 * m + 1)));
        }
    }
}

TEST_CASE("membership") {
    const auto s = gin_staircase(PointConfig::general(2), 1); // (x, y^2)
    CHECK(s.contains({1, 0}));
    CHECK(s.contains({0, 2}));
    CHECK_FALSE(s.contains({0, 1}));
    CHECK_FALSE(s.contains({0, 0}));
}

TEST_CASE("reconstruction rejects data that is not a saturated Borel-fixed ideal") {
    const auto config = PointConfig::general(2);
    // First difference drops from 1 to 1 at consecutive degrees: y * x^t is missing.
    CHECK_THROWS_AS(staircase_from_hilbert(config, 1, [](Int t) { return t < 1 ? Int{0} : t; }), InvariantViolation);
    // Difference larger than t + 1.
    CHECK_THROWS_AS(staircase_from_hilbert(config, 1, [](Int t) { return t < 1 ? Int{0} : Int{5} * t; }), InvariantViolation);
    CHECK_THROWS_AS(gin_staircase(config, 0), UsageError);
}

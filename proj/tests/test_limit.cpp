#include "doctest.h"

#include "ginlab/export.hpp"
#include "ginlab/limit.hpp"

using namespace ginlab;

TEST_CASE("predicted intercepts") {
    auto six = theoretical_shape(PointConfig::general(6));
    CHECK(six.gamma1 == ExactReal(Rational(12, 5)));
    CHECK(six.gamma2 == ExactReal(Rational(5, 2)));
    auto eight = theoretical_shape(PointConfig::general(8));
    CHECK(eight.gamma1 == ExactReal(Rational(48, 17)));
    CHECK(eight.gamma2 == ExactReal(Rational(17, 6)));
    auto four = theoretical_shape(PointConfig::general(4));
    CHECK(four.gamma1 == ExactReal(Rational(2)));
    CHECK(four.gamma2 == ExactReal(Rational(2)));
    auto three = theoretical_shape(PointConfig::general(3));
    CHECK(three.gamma1 == ExactReal(Rational(3, 2)));
    CHECK(three.gamma2 == ExactReal(Rational(2)));
    CHECK(theoretical_shape(PointConfig::shgh(16)).gamma1 == ExactReal(Rational(4)));
    auto ten = theoretical_shape(PointConfig::shgh(10));
    CHECK_FALSE(ten.gamma1.is_rational());
    CHECK(ten.gamma1.squared() == Rational(10));
    CHECK_THROWS_AS(theoretical_shape(PointConfig::collinear(3)), UnsupportedConfig);

    for (int r = 2; r <= 8; ++r) CHECK(intercept_product(theoretical_shape(PointConfig::general(r))) == Rational(r));
    for (int r = 9; r <= 30; ++r) CHECK(intercept_product(theoretical_shape(PointConfig::shgh(r))) == Rational(r));
}

TEST_CASE("exact closeness test against a surd") {
    const auto root10 = ExactReal::sqrt(10); // 3.1622...
    CHECK(within(Rational(316, 100), root10, Rational(1, 100)));
    CHECK_FALSE(within(Rational(315, 100), root10, Rational(1, 100)));
    CHECK(within(Rational(0), root10, Rational(4)));
    CHECK_FALSE(within(Rational(-1), root10, Rational(1)));
    CHECK(within(Rational(26, 10), ExactReal(Rational(5, 2)), Rational(3, 10)));
}

TEST_CASE("shape report records") {
    auto report = shape_report(PointConfig::general(6), {10});
    REQUIRE(report.records.size() == 1);
    const auto& rec = report.records[0];
    CHECK(rec.x_intercept == Rational(12, 5));
    CHECK(rec.y_intercept == Rational(13, 5));
    CHECK(rec.colength_over_m2 == Rational(33, 10));
    CHECK(rec.corners.front().x == Rational(12, 5));
    CHECK(rec.corners.back().y == Rational(13, 5));
    CHECK(report.seshadri_estimate == Rational(2, 5));

    auto nine = shape_report(PointConfig::shgh(9), {5});
    CHECK(nine.records[0].x_intercept == Rational(3));
    CHECK(nine.records[0].colength == 135);
    CHECK(nine.records[0].colength_over_m2 == Rational(27, 5));
}

TEST_CASE("colength over m^2 is exactly r(m+1)/(2m)") {
    for (const auto& config : {PointConfig::general(5), PointConfig::shgh(11), PointConfig::collinear(4)}) {
        auto report = shape_report(config, {1, 2, 3, 7, 12});
        for (const auto& rec : report.records)
            CHECK(rec.colength_over_m2 == Rational(config.point_count() * (rec.m + 1), 2 * rec.m));
    }
}

TEST_CASE("scaled Newton polytopes are nested from m to 2m") {
    for (const auto& config : {PointConfig::general(6), PointConfig::general(8), PointConfig::shgh(10), PointConfig::collinear(3)}) {
        auto report = shape_report(config, {1, 2, 3, 4, 6, 8, 12});
        CHECK(report.nesting.size() == 5);
        for (const auto& n : report.nesting) CHECK(n.contained);
    }
}

TEST_CASE("Newton hull geometry") {
    auto s = gin_staircase(PointConfig::general(2), 1); // (x, y^2)
    CHECK(twice_hull_complement_area(s) == 2);
    CHECK(in_newton_polytope(s, {1, 0}));
    CHECK(in_newton_polytope(s, {0, 2}));
    CHECK_FALSE(in_newton_polytope(s, {0, 1}));
    // (x^3, x^2 y^2, x y^3, y^4): both middle generators lie above the segment (0,4)-(3,0)
    auto nine = gin_staircase(PointConfig::shgh(9), 1);
    auto hull = newton_hull(nine);
    CHECK(hull.front() == Monomial{0, 4});
    CHECK(hull.back() == Monomial{3, 0});
    CHECK(hull.size() == 2);
    CHECK(twice_hull_complement_area(nine) == 12);
    CHECK(twice_hull_complement_area(nine) <= 2 * colength(nine));
}

TEST_CASE("convergence checks") {
    auto six = check_convergence(PointConfig::general(6), {10});
    REQUIRE(six.rows.size() == 1);
    CHECK(six.passed());
    CHECK((six.rows[0].x_intercept - Rational(12, 5)).abs() == Rational(0));
    CHECK((six.rows[0].y_intercept - Rational(5, 2)).abs() == Rational(1, 10));

    auto seven = check_convergence(PointConfig::general(7), {24});
    CHECK(seven.rows[0].x_intercept == Rational(63, 24));
    CHECK(seven.rows[0].y_intercept == Rational(65, 24));
    CHECK((seven.rows[0].y_intercept - Rational(8, 3)).abs() == Rational(1, 24));
    CHECK(seven.passed());

    CHECK(check_convergence(PointConfig::shgh(10), {10, 20, 30}).passed());
    CHECK(check_convergence(PointConfig::shgh(50), {10, 20}).passed());
    CHECK(convergence_tolerance(PointConfig::shgh(16), 10) == Rational(3, 10));
}

TEST_CASE("small m stays inside the tolerance") {
    CHECK(check_convergence(PointConfig::general(6), {1, 2, 3}).passed());
    CHECK(check_convergence(PointConfig::shgh(400), {1, 2}).passed());
}

TEST_CASE("collinear example") {
    auto three = collinear_shape_check(3, {6});
    REQUIRE(three.rows.size() == 1);
    CHECK(three.rows[0].x_intercept == Rational(5, 3));
    CHECK(three.rows[0].y_intercept == Rational(3));
    CHECK(three.single_segment_area == Rational(5, 2));
    CHECK(three.limit_area == Rational(2));
    CHECK(three.single_segment_fails);
    CHECK(three.passed());
    CHECK_FALSE(three.corners.empty());
    CHECK_THROWS_AS(collinear_shape_check(3, {7}), UsageError);
}

TEST_CASE("exports are deterministic and newline-terminated") {
    auto report = shape_report(PointConfig::general(6), {10, 20});
    const auto csv = shape_csv(report);
    CHECK(csv == "m,alpha,zeta,x_intercept,y_intercept,colength\n"
                 "10,24,26,12/5,13/5,330\n"
                 "20,48,51,12/5,51/20,1260\n");
    const auto svg = shape_svg(report);
    CHECK(svg.back() == '\n');
    CHECK(svg.find("data-m=\"10\"") < svg.find("data-m=\"20\""));
    CHECK(svg.find("class=\"predicted\"") != std::string::npos);
    CHECK(svg == shape_svg(shape_report(PointConfig::general(6), {20, 10})));

    auto j = staircase_json(gin_staircase(PointConfig::shgh(9), 1));
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"config", "m", "alpha", "lambdas", "generators", "colength", "conjectural", "evidence"});
    CHECK(j["conjectural"] == true);
    CHECK(j["generators"].dump() == "[[3,0],[2,2],[1,3],[0,4]]");
}

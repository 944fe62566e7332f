#include "doctest.h"

#include "fat_point_oracle.hpp"
#include "ginlab/hilbert.hpp"
#include "ginlab/oracle.hpp"

using namespace ginlab;

TEST_CASE("SHGH formula") {
    CHECK(shgh_hilbert(9, 1, 3) == HilbertValue{1, Evidence::conjectural});
    CHECK(shgh_hilbert(9, 1, 2).value == 0);
    CHECK(shgh_hilbert(10, 2, 7).value == 6);
    CHECK(shgh_hilbert(9, 1, 3).conjectural());
    CHECK_THROWS_AS(shgh_hilbert(8, 1, 3), UnsupportedConfig);
}

TEST_CASE("alpha closed form for r >= 9") {
    CHECK(alpha_shgh(9, 1) == 3);
    CHECK(alpha_shgh(9, 5) == 15);
    for (int r = 9; r <= 40; ++r)
        for (Int m = 1; m <= 60; ++m) {
            CAPTURE(r);
            CAPTURE(m);
            CHECK(alpha_shgh(r, m) == oracle::scan_expected_alpha(r, m));
            CHECK(alpha(PointConfig::shgh(r), m) == alpha_shgh(r, m));
        }
    // alpha(m)/m tends to 4 for sixteen points.
    for (Int m : {Int{100}, Int{1000}, Int{100000}}) {
        Int a = alpha_shgh(16, m);
        CHECK(a >= 4 * m);
        CHECK(a <= 4 * m + 2);
    }
    CHECK_THROWS_AS(alpha_shgh(8, 1), UnsupportedConfig);
}

TEST_CASE("Hilbert function values from the blow-up engine") {
    CHECK(hilbert_fn(PointConfig::general(6), 10, 25).value == 21);
    CHECK(hilbert_fn(PointConfig::general(6), 10, 23).value == 0);
    CHECK(hilbert_fn(PointConfig::general(8), 102, 289).value == 171);
    CHECK(hilbert_fn(PointConfig::general(6), 10, -1).value == 0);
    CHECK(hilbert_fn(PointConfig::general(6), 10, 25).evidence == Evidence::proven);
    CHECK(hilbert_fn(PointConfig::collinear(3), 6, 9).evidence == Evidence::empirical);
    CHECK_THROWS_AS(hilbert_fn(PointConfig::general(6), 0, 3), UsageError);
}

TEST_CASE("alpha by scan") {
    CHECK(alpha(PointConfig::general(6), 10) == 24);
    CHECK(alpha(PointConfig::general(7), 24) == 63);
    CHECK(alpha(PointConfig::collinear(3), 6) == 10);
}

TEST_CASE("nef threshold") {
    CHECK(nef_threshold(PointConfig::general(6), 10) == 25);
    CHECK(nef_threshold(PointConfig::general(7), 24) == 64);
    CHECK(nef_threshold(PointConfig::general(8), 6) == 17);
    CHECK(nef_threshold(PointConfig::collinear(4), 12) == 48);
    CHECK_THROWS_AS(nef_threshold(PointConfig::shgh(9), 1), UnsupportedConfig);
}

TEST_CASE("first differences and engine agreement past the nef threshold") {
    for (int r = 2; r <= 8; ++r) {
        const auto config = PointConfig::general(r);
        for (Int m = 1; m <= 12; ++m) {
            const Int n = nef_threshold(config, m);
            const auto table = hilbert_table(config, m, 0, n + 6);
            for (Int t = 1; t < static_cast<Int>(table.size()); ++t) {
                Int diff = table[static_cast<std::size_t>(t)] - table[static_cast<std::size_t>(t - 1)];
                CHECK(diff >= 0);
                CHECK(diff <= t + 1);
                if (t - 1 >= n) CHECK(diff == t + 1);
            }
            for (Int t = n; t <= n + 6; ++t) CHECK(table[static_cast<std::size_t>(t)] == expected_dimension(r, m, t));
        }
    }
}

TEST_CASE("scaled alpha stays near the predicted slope on divisibility sequences") {
    struct Case {
        int r;
        Int step;
        Rational slope;
    };
    for (const auto& c : {Case{6, 10, Rational(12, 5)}, Case{7, 24, Rational(21, 8)}, Case{8, 102, Rational(48, 17)}}) {
        for (Int m = c.step; m <= 3 * c.step; m += c.step) {
            const Rational dev = (Rational(alpha(PointConfig::general(c.r), m), m) - c.slope).abs();
            CHECK(dev <= Rational(3, m));
        }
    }
}

TEST_CASE("blow-up engine matches linear algebra at random points") {
    for (int r = 2; r <= 8; ++r) {
        const auto pts = oracle_test::random_points(r, 1000 + static_cast<std::uint64_t>(r));
        const auto config = PointConfig::general(r);
        for (int m = 1; m <= 4; ++m)
            for (int t = 0; t <= 3 * m + 2; ++t) {
                CAPTURE(r);
                CAPTURE(m);
                CAPTURE(t);
                CHECK(hilbert_fn(config, m, t).value == oracle_test::fat_point_hilbert(pts, m, t));
            }
    }
}

TEST_CASE("collinear engine matches linear algebra") {
    for (int l = 3; l <= 5; ++l) {
        const auto pts = oracle_test::collinear_points(l, 77 + static_cast<std::uint64_t>(l));
        const auto config = PointConfig::collinear(l);
        for (int m = 1; m <= 4; ++m)
            for (int t = 0; t <= l * m + 2; ++t) {
                CAPTURE(l);
                CAPTURE(m);
                CAPTURE(t);
                CHECK(hilbert_fn(config, m, t).value == oracle_test::fat_point_hilbert(pts, m, t));
            }
    }
}

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ginlab/arith.hpp"
#include "ginlab/config.hpp"
#include "ginlab/gin.hpp"

namespace ginlab {

/// Either an exact rational or sqrt(radicand) for a non-square radicand.
class ExactReal {
public:
    ExactReal(Rational q) : rational_(q) {} // NOLINT
    /// sqrt(n); collapses to a rational when n is a perfect square.
    static ExactReal sqrt(Int n);

    bool is_rational() const { return !radicand_; }
    const Rational& rational() const;
    Int radicand() const;

    /// Square of the value, always rational.
    Rational squared() const;
    double to_double() const;
    std::string to_string() const;

    friend bool operator==(const ExactReal&, const ExactReal&) = default;

private:
    ExactReal() = default;
    Rational rational_;
    std::optional<Int> radicand_;
};

/// |x - target| <= tolerance, decided exactly (squared comparisons for a surd target).
bool within(const Rational& x, const ExactReal& target, const Rational& tolerance);

/// Intercepts (gamma1, gamma2) of the predicted boundary line of the limiting shape.
struct PredictedShape {
    ExactReal gamma1;
    ExactReal gamma2;
};

/// Predicted intercepts for general points; UnsupportedConfig for the collinear arrangement.
PredictedShape theoretical_shape(const PointConfig& config);

/// gamma1 * gamma2 as an exact rational.
Rational intercept_product(const PredictedShape& shape);

struct ScaledPoint {
    Rational x;
    Rational y;
};

struct ShapeRecord {
    Int m = 0;
    Int alpha = 0;
    Int zeta = 0;
    Int colength = 0;
    Int max_generator_degree = 0;
    Rational x_intercept;
    Rational y_intercept;
    Rational colength_over_m2;
    /// Area of the region cut off by the Newton polytope, over m^2.
    Rational hull_area_over_m2;
    /// Generator exponents scaled by 1/m, descending x.
    std::vector<ScaledPoint> corners;
};

struct NestingCheck {
    Int m = 0; ///< checked (1/m)P_m inside (1/2m)P_2m
    bool contained = false;
};

struct ShapeReport {
    PointConfig config;
    std::vector<ShapeRecord> records; ///< ascending m
    std::optional<PredictedShape> predicted;
    /// alpha(m)/(r*m) for the largest m.
    Rational seshadri_estimate;
    std::vector<NestingCheck> nesting;
    std::vector<MonomialStaircase> staircases; ///< parallel to records
};

/// Lower-left convex hull of the generator exponents, from (0, zeta) to (alpha, 0).
std::vector<Monomial> newton_hull(const MonomialStaircase& s);
/// Twice the area of the bounded region between the axes and the Newton polygon boundary.
Int twice_hull_complement_area(const MonomialStaircase& s);
/// Whether the lattice point lies in the Newton polytope (conv(ideal exponents)).
bool in_newton_polytope(const MonomialStaircase& s, const Monomial& p);

/// Builds one record per m (deduplicated, ascending) and checks nesting for every m, 2m pair.
ShapeReport shape_report(const PointConfig& config, std::vector<Int> m_list);

struct ConvergenceRow {
    Int m = 0;
    Rational x_intercept;
    Rational y_intercept;
    Rational tolerance;
    bool x_ok = false;
    bool y_ok = false;
    bool area_ok = false;
};

struct ConvergenceReport {
    PointConfig config;
    PredictedShape predicted;
    std::vector<ConvergenceRow> rows;
    /// One entry per violated check, naming m and the deviation.
    std::vector<std::string> failures;
    bool passed() const { return failures.empty(); }
};

/// Intercept tolerance used by check_convergence: 3/m, widened to ceil((ceil(sqrt r) + 1)/2)/m
/// for r > 25 in SHGH mode, where zeta(m) - sqrt(r)*m alone approaches (sqrt(r) + 1)/2.
Rational convergence_tolerance(const PointConfig& config, Int m);

/// Checks both intercepts against the prediction within convergence_tolerance and
/// |colength/m^2 - r/2| <= r/m.
ConvergenceReport check_convergence(const PointConfig& config, const std::vector<Int>& m_list);

struct CollinearRow {
    Int m = 0;
    Int min_generator_degree = 0;
    Int max_generator_degree = 0;
    Rational x_intercept;
    Rational y_intercept;
    Rational colength_over_m2;
    bool degrees_ok = false;
    bool intercepts_ok = false;
    bool area_ok = false;
};

struct CollinearReport {
    int l = 0;
    std::vector<CollinearRow> rows;
    Rational predicted_x_intercept; ///< 2 - 1/l
    Rational predicted_y_intercept; ///< l
    Rational single_segment_area;   ///< l(2 - 1/l)/2
    Rational limit_area;            ///< (l+1)/2
    bool single_segment_fails = false;
    /// Scaled generator exponents for the largest m: the empirical limiting shape.
    std::vector<ScaledPoint> corners;
    std::vector<std::string> failures;
    bool passed() const { return failures.empty(); }
};

/// Checks the l-collinear-plus-one example; every m must be divisible by l(l-1).
CollinearReport collinear_shape_check(int l, const std::vector<Int>& m_list);

} // namespace ginlab

#include "ginlab/limit.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>

#include "ginlab/errors.hpp"
#include "ginlab/parallel.hpp"

namespace ginlab {

namespace {

Int cross(const Monomial& o, const Monomial& a, const Monomial& b) {
    return checked_sub(checked_mul(a.x - o.x, b.y - o.y), checked_mul(a.y - o.y, b.x - o.x));
}

std::string approx(double v) {
    std::ostringstream os;
    os << std::setprecision(6) << v;
    return os.str();
}

} // namespace

ExactReal ExactReal::sqrt(Int n) {
    if (n < 0) throw InvariantViolation("sqrt of a negative number");
    Int s = isqrt(n);
    if (s * s == n) return ExactReal(Rational(s));
    ExactReal out;
    out.radicand_ = n;
    return out;
}

const Rational& ExactReal::rational() const {
    if (radicand_) throw InvariantViolation("irrational value has no rational form");
    return rational_;
}

Int ExactReal::radicand() const {
    if (!radicand_) throw InvariantViolation("rational value has no radicand");
    return *radicand_;
}

Rational ExactReal::squared() const { return radicand_ ? Rational(*radicand_) : rational_ * rational_; }

double ExactReal::to_double() const {
    return radicand_ ? std::sqrt(static_cast<double>(*radicand_)) : rational_.to_double();
}

std::string ExactReal::to_string() const {
    return radicand_ ? "sqrt(" + std::to_string(*radicand_) + ")" : rational_.to_string();
}

bool within(const Rational& x, const ExactReal& target, const Rational& tolerance) {
    if (target.is_rational()) return (x - target.rational()).abs() <= tolerance;
    // x - tol <= sqrt(n) <= x + tol, with sqrt(n) > 0.
    const Rational n(target.radicand());
    const Rational lo = x - tolerance;
    const Rational hi = x + tolerance;
    if (hi < Rational(0) || hi * hi < n) return false;
    return lo <= Rational(0) || lo * lo <= n;
}

PredictedShape theoretical_shape(const PointConfig& config) {
    if (config.is_collinear())
        throw UnsupportedConfig("no single-line limiting shape is predicted for " + config.to_string());
    const int r = config.point_count();
    if (r >= 9) return {ExactReal::sqrt(r), ExactReal::sqrt(r)};
    switch (r) {
    case 2:
    case 3: return {Rational(r, 2), Rational(2)};
    case 4:
    case 5: return {Rational(2), Rational(r, 2)};
    case 6: return {Rational(12, 5), Rational(5, 2)};
    case 7: return {Rational(21, 8), Rational(8, 3)};
    case 8: return {Rational(48, 17), Rational(17, 6)};
    default: break;
    }
    throw UnsupportedConfig("no predicted shape for " + config.to_string());
}

Rational intercept_product(const PredictedShape& shape) {
    if (shape.gamma1.is_rational() && shape.gamma2.is_rational())
        return shape.gamma1.rational() * shape.gamma2.rational();
    if (!shape.gamma1.is_rational() && !shape.gamma2.is_rational() &&
        shape.gamma1.radicand() == shape.gamma2.radicand())
        return Rational(shape.gamma1.radicand());
    throw InvariantViolation("intercept product is not rational");
}

std::vector<Monomial> newton_hull(const MonomialStaircase& s) {
    auto gens = s.generators();
    std::reverse(gens.begin(), gens.end()); // ascending x
    std::vector<Monomial> hull;
    for (const auto& p : gens) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
        hull.push_back(p);
    }
    return hull;
}

Int twice_hull_complement_area(const MonomialStaircase& s) {
    const auto hull = newton_hull(s);
    Int twice = 0;
    for (std::size_t i = 0; i + 1 < hull.size(); ++i)
        twice = checked_add(twice, checked_mul(hull[i + 1].x - hull[i].x, hull[i].y + hull[i + 1].y));
    return twice;
}

bool in_newton_polytope(const MonomialStaircase& s, const Monomial& p) {
    if (p.x < 0 || p.y < 0) return false;
    const auto hull = newton_hull(s);
    for (std::size_t i = 0; i + 1 < hull.size(); ++i)
        if (cross(hull[i], hull[i + 1], p) < 0) return false;
    return true;
}

ShapeReport shape_report(const PointConfig& config, std::vector<Int> m_list) {
    std::sort(m_list.begin(), m_list.end());
    m_list.erase(std::unique(m_list.begin(), m_list.end()), m_list.end());
    if (m_list.empty()) throw UsageError("empty m list");
    if (m_list.front() < 1) throw UsageError("multiplicities must be positive");

    ShapeReport report{config, {}, std::nullopt, Rational(0), {}, {}};
    if (!config.is_collinear()) {
        report.predicted = theoretical_shape(config);
        if (intercept_product(*report.predicted) != Rational(config.point_count()))
            throw InvariantViolation("predicted intercepts do not multiply to r");
    }

    report.staircases.resize(m_list.size(), MonomialStaircase{config, 0, 0, {}});
    parallel_for(m_list.size(), [&](std::size_t i) { report.staircases[i] = gin_staircase(config, m_list[i]); });

    std::map<Int, std::size_t> index_of;
    for (std::size_t i = 0; i < m_list.size(); ++i) {
        const auto& s = report.staircases[i];
        const Int m = m_list[i];
        const Int m2 = checked_mul(m, m);
        ShapeRecord rec;
        rec.m = m;
        rec.alpha = s.alpha;
        rec.zeta = s.zeta();
        rec.colength = colength(s);
        rec.max_generator_degree = s.max_generator_degree();
        rec.x_intercept = Rational(s.alpha, m);
        rec.y_intercept = Rational(s.zeta(), m);
        rec.colength_over_m2 = Rational(rec.colength, m2);
        rec.hull_area_over_m2 = Rational(twice_hull_complement_area(s), checked_mul(2, m2));
        for (const auto& g : s.generators()) rec.corners.push_back({Rational(g.x, m), Rational(g.y, m)});
        report.records.push_back(std::move(rec));
        index_of[m] = i;
    }

    for (std::size_t i = 0; i < m_list.size(); ++i) {
        auto twice = index_of.find(checked_mul(2, m_list[i]));
        if (twice == index_of.end()) continue;
        const auto& big = report.staircases[twice->second];
        bool contained = true;
        for (const auto& v : newton_hull(report.staircases[i]))
            contained = contained && in_newton_polytope(big, {2 * v.x, 2 * v.y});
        report.nesting.push_back({m_list[i], contained});
    }

    const auto& last = report.records.back();
    report.seshadri_estimate = Rational(last.alpha, checked_mul(config.point_count(), last.m));
    return report;
}

Rational convergence_tolerance(const PointConfig& config, Int m) {
    Int numerator = 3;
    if (config.is_shgh() && config.point_count() > 25)
        numerator = std::max<Int>(3, ceil_div(ceil_sqrt(config.point_count()) + 1, 2));
    return {numerator, m};
}

ConvergenceReport check_convergence(const PointConfig& config, const std::vector<Int>& m_list) {
    ConvergenceReport report{config, theoretical_shape(config), {}, {}};
    const int r = config.point_count();
    const auto shape = shape_report(config, m_list);
    for (const auto& rec : shape.records) {
        ConvergenceRow row;
        row.m = rec.m;
        row.x_intercept = rec.x_intercept;
        row.y_intercept = rec.y_intercept;
        row.tolerance = convergence_tolerance(config, rec.m);
        row.x_ok = within(rec.x_intercept, report.predicted.gamma1, row.tolerance);
        row.y_ok = within(rec.y_intercept, report.predicted.gamma2, row.tolerance);
        row.area_ok = within(rec.colength_over_m2, Rational(r, 2), Rational(r, rec.m));

        auto fail = [&](const std::string& what, const Rational& got, const ExactReal& want) {
            std::ostringstream os;
            os << "m=" << rec.m << ": " << what << " " << got << " vs " << want.to_string() << ", deviation ";
            if (want.is_rational())
                os << (got - want.rational()).abs();
            else
                os << "~" << approx(std::abs(got.to_double() - want.to_double()));
            os << " > " << row.tolerance;
            report.failures.push_back(os.str());
        };
        if (!row.x_ok) fail("x-intercept", rec.x_intercept, report.predicted.gamma1);
        if (!row.y_ok) fail("y-intercept", rec.y_intercept, report.predicted.gamma2);
        if (!row.area_ok) {
            std::ostringstream os;
            os << "m=" << rec.m << ": colength/m^2 " << rec.colength_over_m2 << " deviates from r/2 = "
               << Rational(r, 2) << " by more than " << Rational(r, rec.m);
            report.failures.push_back(os.str());
        }
        report.rows.push_back(row);
    }
    return report;
}

CollinearReport collinear_shape_check(int l, const std::vector<Int>& m_list) {
    const auto config = PointConfig::collinear(l);
    const Int step = static_cast<Int>(l) * (l - 1);
    for (Int m : m_list)
        if (m < 1 || m % step != 0)
            throw UsageError("collinear check needs m divisible by l(l-1) = " + std::to_string(step) +
                             ", got " + std::to_string(m));

    CollinearReport report;
    report.l = l;
    report.predicted_x_intercept = Rational(2) - Rational(1, l);
    report.predicted_y_intercept = Rational(l);
    report.single_segment_area = Rational(l) * report.predicted_x_intercept / Rational(2);
    report.limit_area = Rational(l + 1, 2);
    report.single_segment_fails = report.single_segment_area > report.limit_area;
    if (!report.single_segment_fails)
        report.failures.push_back("single-segment area does not exceed (l+1)/2");

    const auto shape = shape_report(config, m_list);
    for (const auto& rec : shape.records) {
        const auto& s = shape.staircases[&rec - shape.records.data()];
        CollinearRow row;
        row.m = rec.m;
        row.min_generator_degree = s.min_generator_degree();
        row.max_generator_degree = rec.max_generator_degree;
        row.x_intercept = rec.x_intercept;
        row.y_intercept = rec.y_intercept;
        row.colength_over_m2 = rec.colength_over_m2;
        const Int low = 2 * rec.m - rec.m / l;
        const Int high = l * rec.m;
        row.degrees_ok = row.min_generator_degree == low && row.max_generator_degree == high;
        row.intercepts_ok = rec.x_intercept == report.predicted_x_intercept && rec.y_intercept == report.predicted_y_intercept;
        row.area_ok = within(rec.colength_over_m2, report.limit_area, Rational(l + 1, rec.m));
        std::ostringstream os;
        if (!row.degrees_ok)
            os << "m=" << rec.m << ": generator degrees [" << row.min_generator_degree << ", "
               << row.max_generator_degree << "], expected [" << low << ", " << high << "]";
        else if (!row.intercepts_ok)
            os << "m=" << rec.m << ": intercepts (" << rec.x_intercept << ", " << rec.y_intercept << ")";
        else if (!row.area_ok)
            os << "m=" << rec.m << ": colength/m^2 " << rec.colength_over_m2 << " far from " << report.limit_area;
        if (!os.str().empty()) report.failures.push_back(os.str());
        report.rows.push_back(row);
    }
    if (!shape.records.empty()) report.corners = shape.records.back().corners;
    return report;
}

} // namespace ginlab

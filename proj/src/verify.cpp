#include "ginlab/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ginlab/divisor_lattice.hpp"
#include "ginlab/errors.hpp"
#include "ginlab/gin.hpp"
#include "ginlab/hilbert.hpp"
#include "ginlab/limit.hpp"
#include "ginlab/oracle.hpp"
#include "ginlab/parallel.hpp"

namespace ginlab {

namespace {

constexpr Int kEngineAgreementMaxM = 30;
constexpr Int kEngineAgreementWindow = 20;

template <class Body>
CheckResult run_check(std::string name, Body&& body) {
    CheckResult result{std::move(name), true, false, {}};
    try {
        body(result);
    } catch (const ArithmeticOverflow&) {
        throw;
    } catch (const std::exception& e) {
        result.failures.push_back(std::string("exception: ") + e.what());
    }
    result.passed = result.failures.empty();
    return result;
}

CheckResult skipped(std::string name) { return {std::move(name), true, true, {}}; }

std::string m_tag(Int m) { return "m=" + std::to_string(m) + ": "; }

} // namespace

bool VerificationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::vector<Int> convergence_sequence(const PointConfig& config, Int max_m) {
    Int step = 10;
    if (config.is_general() && config.point_count() == 6) step = 10;
    if (config.is_general() && config.point_count() == 7) step = 24;
    if (config.is_general() && config.point_count() == 8) step = 102;
    std::vector<Int> out;
    for (Int m = step; m <= max_m; m += step) out.push_back(m);
    if (out.empty()) out.push_back(max_m);
    return out;
}

VerificationReport verify(const PointConfig& config, Int max_m) {
    if (max_m < 1) throw UsageError("--max-m must be positive");
    VerificationReport report{config, max_m, {}};
    const int r = config.point_count();

    if (config.is_general()) {
        report.checks.push_back(run_check("exceptional-classes", [&](CheckResult& res) {
            const auto& classes = exceptional_classes(config);
            if (classes != oracle::brute_force_minus_one_classes(r))
                res.failures.push_back("class list differs from the brute-force enumeration");
            const auto k = canonical_class(static_cast<std::size_t>(r));
            for (const auto& c : classes)
                if (intersect(c, c) != -1 || intersect(c, k) != -1)
                    res.failures.push_back(c.to_string() + " is not a (-1)-class");
        }));
    } else if (config.is_collinear()) {
        report.checks.push_back(run_check("exceptional-classes", [&](CheckResult& res) {
            const auto& classes = exceptional_classes(config);
            const auto l = static_cast<std::size_t>(config.collinear_count());
            if (classes.size() != 2 * l + 2)
                res.failures.push_back("expected " + std::to_string(2 * l + 2) + " classes, got " + std::to_string(classes.size()));
            for (const auto& c : classes)
                if (intersect(c, c) >= 0) res.failures.push_back(c.to_string() + " has nonnegative self-intersection");
        }));
    } else {
        report.checks.push_back(skipped("exceptional-classes"));
    }

    // Staircases for m = 1..max_m, shared by the checks below.
    std::vector<MonomialStaircase> stairs(static_cast<std::size_t>(max_m), MonomialStaircase{config, 0, 0, {}});
    std::vector<std::string> build_errors(static_cast<std::size_t>(max_m));
    parallel_for(stairs.size(), [&](std::size_t i) {
        try {
            stairs[i] = gin_staircase(config, static_cast<Int>(i) + 1);
        } catch (const ArithmeticOverflow&) {
            throw;
        } catch (const std::exception& e) {
            build_errors[i] = e.what();
        }
    });
    auto built = [&](Int m) { return build_errors[static_cast<std::size_t>(m - 1)].empty(); };
    auto stair = [&](Int m) -> const MonomialStaircase& { return stairs[static_cast<std::size_t>(m - 1)]; };

    report.checks.push_back(run_check("colength", [&](CheckResult& res) {
        for (Int m = 1; m <= max_m; ++m) {
            if (!built(m)) {
                res.failures.push_back(m_tag(m) + build_errors[static_cast<std::size_t>(m - 1)]);
                continue;
            }
            try {
                colength(stair(m));
            } catch (const InvariantViolation& e) {
                res.failures.push_back(m_tag(m) + e.what());
            }
        }
    }));

    if (config.finite_classes()) {
        report.checks.push_back(run_check("engine-agreement", [&](CheckResult& res) {
            for (Int m = 1; m <= std::min(max_m, kEngineAgreementMaxM); ++m) {
                const Int n = nef_threshold(config, m);
                for (Int t = n; t <= n + kEngineAgreementWindow; ++t) {
                    Int got = hilbert_fn(config, m, t).value;
                    Int want = expected_dimension(r, m, t);
                    if (got != want)
                        res.failures.push_back(m_tag(m) + "H(" + std::to_string(t) + ") = " + std::to_string(got) +
                                               ", binomial formula gives " + std::to_string(want));
                }
            }
        }));
    } else {
        report.checks.push_back(run_check("alpha-closed-form", [&](CheckResult& res) {
            for (Int m = 1; m <= max_m; ++m)
                if (alpha(config, m) != alpha_shgh(r, m)) res.failures.push_back(m_tag(m) + "alpha scan disagrees");
        }));
        report.checks.push_back(run_check("shgh-closed-form", [&](CheckResult& res) {
            for (Int m = 1; m <= max_m; ++m)
                if (!built(m) || shgh_gin_closed_form(r, m) != stair(m))
                    res.failures.push_back(m_tag(m) + "closed-form generators differ from the reconstruction");
        }));
    }

    report.checks.push_back(run_check("graded-system", [&](CheckResult& res) {
        for (Int m = 1; 2 * m <= max_m; ++m) {
            if (!built(m) || !built(2 * m)) continue; // reported under colength
            if (!products_contained(stair(m), stair(m), stair(2 * m)))
                res.failures.push_back(m_tag(m) + "gin(m)^2 not inside gin(2m)");
            bool nested = true;
            for (const auto& v : newton_hull(stair(m)))
                nested = nested && in_newton_polytope(stair(2 * m), {2 * v.x, 2 * v.y});
            if (!nested) res.failures.push_back(m_tag(m) + "scaled Newton polytope not nested in the 2m one");
        }
    }));

    if (config.is_collinear()) {
        const int l = config.collinear_count();
        std::vector<Int> ms;
        for (Int m = static_cast<Int>(l) * (l - 1); m <= max_m; m += static_cast<Int>(l) * (l - 1)) ms.push_back(m);
        if (ms.empty()) {
            report.checks.push_back(skipped("collinear-degrees"));
        } else {
            report.checks.push_back(run_check("collinear-degrees", [&](CheckResult& res) {
                auto check = collinear_shape_check(l, ms);
                res.failures = check.failures;
            }));
        }
    } else {
        report.checks.push_back(run_check("convergence", [&](CheckResult& res) {
            auto conv = check_convergence(config, convergence_sequence(config, max_m));
            res.failures = conv.failures;
        }));
    }
    return report;
}

} // namespace ginlab

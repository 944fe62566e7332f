#include "ginlab/hilbert.hpp"

#include <algorithm>

#include "ginlab/divisor_lattice.hpp"
#include "ginlab/errors.hpp"

namespace ginlab {

namespace {

void require_positive_m(Int m) {
    if (m < 1) throw UsageError("multiplicity m must be positive, got " + std::to_string(m));
}

} // namespace

Int expected_dimension(int r, Int m, Int t) {
    return checked_sub(choose2(checked_add(t, 2)), checked_mul(r, choose2(checked_add(m, 1))));
}

HilbertValue shgh_hilbert(int r, Int m, Int t) {
    if (r < 9) throw UnsupportedConfig("SHGH formula applies to r >= 9; use the blow-up engine for r = " + std::to_string(r));
    require_positive_m(m);
    if (t < 0) return {0, Evidence::conjectural};
    return {std::max<Int>(expected_dimension(r, m, t), 0), Evidence::conjectural};
}

Int alpha_shgh(int r, Int m) {
    if (r < 9) throw UnsupportedConfig("alpha_shgh applies to r >= 9");
    require_positive_m(m);
    // floor(-1/2 + sqrt(1/4 + q)) = floor((sqrt(1 + 4q) - 1) / 2) = floor((isqrt(1 + 4q) - 1) / 2).
    Int q = checked_mul(r, checked_mul(m, checked_add(m, 1)));
    Int s = isqrt(checked_add(checked_mul(4, q), 1));
    return (s - 1) / 2;
}

HilbertValue hilbert_fn(const PointConfig& config, Int m, Int t) {
    require_positive_m(m);
    if (config.is_shgh()) return shgh_hilbert(config.point_count(), m, t);
    if (t < 0) return {0, config.evidence()};
    auto f = DivisorClass::uniform(t, m, static_cast<std::size_t>(config.point_count()));
    return {h0(f, config), config.evidence()};
}

std::vector<Int> hilbert_table(const PointConfig& config, Int m, Int first, Int last) {
    std::vector<Int> out;
    for (Int t = first; t <= last; ++t) out.push_back(hilbert_fn(config, m, t).value);
    return out;
}

Int alpha(const PointConfig& config, Int m) {
    require_positive_m(m);
    const Int guard = checked_add(checked_add(ceil_sqrt(checked_mul(config.point_count(), checked_mul(m, m))), m), 3);
    for (Int t = 0; t <= guard; ++t) {
        if (hilbert_fn(config, m, t).value > 0) {
            if (config.is_shgh() && t != alpha_shgh(config.point_count(), m))
                throw InvariantViolation("alpha scan disagrees with the closed form for " + config.to_string());
            return t;
        }
    }
    throw InvariantViolation("no nonzero Hilbert value below the guard for " + config.to_string() +
                             ", m = " + std::to_string(m));
}

Int nef_threshold(const PointConfig& config, Int m) {
    require_positive_m(m);
    Int threshold = 0;
    // F_t.C = t*C.d - m*sum(C.a_i) >= 0  <=>  t >= m*sum(C.a_i)/C.d when C.d > 0.
    for (const auto& c : exceptional_classes(config)) {
        Int weight = 0;
        for (Int a : c.mults) weight = checked_add(weight, a);
        if (c.d > 0)
            threshold = std::max(threshold, ceil_div(checked_mul(m, weight), c.d));
        else if (checked_mul(m, weight) > 0)
            throw InvariantViolation("degree-zero class pairs negatively with every F_t: " + c.to_string());
    }
    return threshold;
}

} // namespace ginlab

#include "ginlab/gin.hpp"

#include <algorithm>

#include "ginlab/errors.hpp"
#include "ginlab/hilbert.hpp"

namespace ginlab {

namespace {

// Degrees past the first full one that must stay full.
constexpr Int kFullWindow = 3;

void require_positive_m(Int m) {
    if (m < 1) throw UsageError("multiplicity m must be positive, got " + std::to_string(m));
}

std::string where(const PointConfig& config, Int m) {
    return config.to_string() + ", m = " + std::to_string(m);
}

} // namespace

std::vector<Monomial> MonomialStaircase::generators() const {
    std::vector<Monomial> out;
    out.reserve(lambdas.size() + 1);
    out.push_back({alpha, 0});
    for (Int i = alpha - 1; i >= 0; --i) out.push_back({i, lambdas[static_cast<std::size_t>(i)]});
    return out;
}

Int MonomialStaircase::max_generator_degree() const {
    Int best = alpha;
    for (std::size_t i = 0; i < lambdas.size(); ++i) best = std::max(best, static_cast<Int>(i) + lambdas[i]);
    return best;
}

Int MonomialStaircase::min_generator_degree() const {
    Int best = alpha;
    for (std::size_t i = 0; i < lambdas.size(); ++i) best = std::min(best, static_cast<Int>(i) + lambdas[i]);
    return best;
}

bool MonomialStaircase::contains(const Monomial& mono) const {
    if (mono.x < 0 || mono.y < 0) return false;
    if (mono.x >= alpha) return true;
    return mono.y >= lambdas[static_cast<std::size_t>(mono.x)];
}

Int xy_count(const PointConfig& config, Int m, Int t) {
    if (t < 0) throw UsageError("degree must be nonnegative");
    Int k = checked_sub(hilbert_fn(config, m, t).value, hilbert_fn(config, m, t - 1).value);
    if (k < 0 || k > t + 1)
        throw InvariantViolation("xy_count out of range at t = " + std::to_string(t) + " for " + where(config, m));
    return k;
}

MonomialStaircase staircase_from_hilbert(const PointConfig& config, Int m, const std::function<Int(Int)>& hilbert) {
    require_positive_m(m);
    // counts[t - alpha] = number of degree-t monomials in x, y lying in the ideal.
    std::vector<Int> counts;
    Int alpha = -1;
    Int previous = 0;
    Int full_at = -1;
    for (Int t = 0;; ++t) {
        Int value = hilbert(t);
        Int k = checked_sub(value, previous);
        previous = value;
        if (k < 0 || k > t + 1)
            throw InvariantViolation("Hilbert first difference out of range at t = " + std::to_string(t) + " for " + where(config, m));
        if (alpha < 0) {
            if (k == 0) {
                if (value != 0) throw InvariantViolation("Hilbert function not starting at zero for " + where(config, m));
                continue;
            }
            alpha = t;
        } else if (counts.back() > 0 && k < counts.back() + 1) {
            // Multiplying the degree t-1 segment by x and y yields counts.back() + 1 monomials.
            throw InvariantViolation("segment sizes not closed under multiplication at t = " + std::to_string(t) + " for " + where(config, m));
        }
        counts.push_back(k);
        if (full_at < 0 && k == t + 1) full_at = t;
        if (full_at >= 0 && t == full_at + kFullWindow) break;
        if (t > checked_mul(4, checked_add(checked_mul(m, config.point_count()), 4)))
            throw InvariantViolation("staircase never fills up for " + where(config, m));
    }

    auto count_at = [&](Int t) -> Int {
        if (t < alpha) return 0;
        if (t > full_at) return t + 1;
        return counts[static_cast<std::size_t>(t - alpha)];
    };

    MonomialStaircase s{config, m, alpha, {}};
    s.lambdas.resize(static_cast<std::size_t>(alpha));
    for (Int i = 0; i < alpha; ++i) {
        // x^i y^j is in degree i+j's top segment iff j < count(i+j).
        Int j = std::max<Int>(0, alpha - i);
        while (j >= count_at(i + j)) ++j;
        s.lambdas[static_cast<std::size_t>(i)] = j;
    }
    for (std::size_t i = 0; i < s.lambdas.size(); ++i) {
        if (s.lambdas[i] < 1 || (i > 0 && s.lambdas[i] >= s.lambdas[i - 1]))
            throw InvariantViolation("staircase exponents not strictly decreasing for " + where(config, m));
    }
    return s;
}

MonomialStaircase gin_staircase(const PointConfig& config, Int m) {
    return staircase_from_hilbert(config, m, [&](Int t) { return hilbert_fn(config, m, t).value; });
}

MonomialStaircase shgh_gin_closed_form(int r, Int m) {
    const auto config = PointConfig::shgh(r);
    require_positive_m(m);
    const Int a = alpha_shgh(r, m);
    const Int eta = expected_dimension(r, m, a);
    if (eta < 1 || eta > a + 1) throw InvariantViolation("eta out of range for " + where(config, m));

    MonomialStaircase s{config, m, a, std::vector<Int>(static_cast<std::size_t>(a))};
    // Degree-alpha generators x^alpha, ..., x^(alpha-eta+1) y^(eta-1); the rest sit in degree alpha+1,
    // or everything is in degree alpha when eta = alpha+1.
    for (Int i = 0; i < a; ++i) {
        bool in_degree_alpha = eta == a + 1 || i >= a - eta + 1;
        s.lambdas[static_cast<std::size_t>(i)] = in_degree_alpha ? a - i : a + 1 - i;
    }
    return s;
}

Int colength(const MonomialStaircase& s) {
    Int total = 0;
    for (Int lambda : s.lambdas) total = checked_add(total, lambda);
    Int expected = checked_mul(s.config.point_count(), choose2(checked_add(s.m, 1)));
    if (total != expected)
        throw InvariantViolation("colength " + std::to_string(total) + " differs from r*m(m+1)/2 = " +
                                 std::to_string(expected) + " for " + where(s.config, s.m));
    return total;
}

bool products_contained(const MonomialStaircase& a, const MonomialStaircase& b, const MonomialStaircase& c) {
    const auto gens_b = b.generators();
    for (const auto& g1 : a.generators())
        for (const auto& g2 : gens_b)
            if (!c.contains({g1.x + g2.x, g1.y + g2.y})) return false;
    return true;
}

} // namespace ginlab

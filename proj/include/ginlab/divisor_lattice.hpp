#pragma once

// Divisor classes on the blow-up X of P^2 at r points.
//
// A class is stored as (d; a_1..a_r) and stands for d*e0 - sum a_i*e_i, where e0 is the pullback of
// a line and e_i are the exceptional divisors over the points. The pairing is e0^2 = 1,
// e_i^2 = -1, all cross terms zero. With this sign convention the fat-point divisors
// F_t = t*e0 - m*(e_1 + ... + e_r) have nonnegative entries.

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "ginlab/arith.hpp"
#include "ginlab/config.hpp"

namespace ginlab {

struct DivisorClass {
    Int d = 0;
    std::vector<Int> mults;

    DivisorClass() = default;
    DivisorClass(Int degree, std::vector<Int> multiplicities) : d(degree), mults(std::move(multiplicities)) {}

    /// t*e0 - m*(e_1 + ... + e_r).
    static DivisorClass uniform(Int t, Int m, std::size_t r) { return {t, std::vector<Int>(r, m)}; }
    /// The exceptional divisor e_i (1-based index), i.e. (0; ..., -1, ...).
    static DivisorClass exceptional_divisor(std::size_t i, std::size_t r);
    static DivisorClass zero(std::size_t r) { return {0, std::vector<Int>(r, 0)}; }

    std::size_t r() const { return mults.size(); }
    bool is_zero() const;

    friend DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
    friend DivisorClass operator-(const DivisorClass& a, const DivisorClass& b);
    friend DivisorClass operator*(Int k, const DivisorClass& a);

    /// Lexicographic on (d, mults); used for deterministic tie-breaking.
    friend auto operator<=>(const DivisorClass&, const DivisorClass&) = default;
    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

    /// Human-readable form, e.g. "2e0-e1-e2-e3-e4-e5".
    std::string to_string() const;
};

std::ostream& operator<<(std::ostream& os, const DivisorClass& c);

/// A.d*B.d - sum A.a_i*B.a_i. Throws UsageError on mismatched r.
Int intersect(const DivisorClass& a, const DivisorClass& b);

/// K_X = -3e0 + e_1 + ... + e_r, stored as (-3; -1, ..., -1).
DivisorClass canonical_class(std::size_t r);

/// All exceptional classes (smooth rational curves of negative self-intersection used as
/// nef tests) for a configuration with finitely many of them, sorted by (d, mults).
/// For general position these are the (-1)-curves; for l collinear points plus one they are
/// the e_i, the line through the l points, and the lines joining each of them to the last point.
/// Results are cached per configuration; the cache is thread safe.
const std::vector<DivisorClass>& exceptional_classes(const PointConfig& config);

bool is_nef(const DivisorClass& f, const PointConfig& config);

/// (F^2 - F.K)/2 + 1 for nef F.
Int riemann_roch_h0(const DivisorClass& f, const PointConfig& config);

struct TraceEntry {
    DivisorClass subtracted;
    Int count = 0;
    friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

struct Effective {
    Int h0 = 0;
    DivisorClass nef_remainder;
};

struct NotEffective {
    /// The class reached with negative degree; it pairs negatively with the nef class e0.
    DivisorClass witness;
};

struct EffectivityResult {
    std::variant<Effective, NotEffective> status;
    std::vector<TraceEntry> trace;

    bool effective() const { return std::holds_alternative<Effective>(status); }
    /// Sum of count * subtracted over the trace.
    DivisorClass trace_sum(std::size_t r) const;
};

/// Reduces F to a nef class with the same h^0, or certifies that F is not effective.
///
/// Each round clamps negative a_i to zero (subtracting e_i), stops with NotEffective once
/// d < 0, stops with Effective once F meets every exceptional class nonnegatively, and
/// otherwise subtracts the class C with the most negative pairing as many times as
/// F.C stays negative before each subtraction. Ties go to the smallest C in (d, mults) order.
EffectivityResult reduce_to_nef(const DivisorClass& f, const PointConfig& config);

/// h^0(X, F) for any F on a finite-class configuration.
Int h0(const DivisorClass& f, const PointConfig& config);

} // namespace ginlab

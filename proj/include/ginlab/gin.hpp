#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "ginlab/arith.hpp"
#include "ginlab/config.hpp"

namespace ginlab {

/// Exponent pair (x-exponent, y-exponent) of a monomial in K[x,y].
struct Monomial {
    Int x = 0;
    Int y = 0;
    Int degree() const { return x + y; }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// The revlex generic initial ideal of I^(m), seen in K[x,y]. Its minimal generators are
/// x^alpha and x^i*y^lambdas[i] for i = 0..alpha-1, with lambdas strictly decreasing and >= 1.
struct MonomialStaircase {
    PointConfig config;
    Int m = 0;
    Int alpha = 0;
    std::vector<Int> lambdas;

    /// Smallest power of y in the ideal.
    Int zeta() const { return lambdas.empty() ? 0 : lambdas.front(); }
    Evidence evidence() const { return config.evidence(); }

    /// Minimal generators, descending x-exponent: x^alpha first, y^zeta last.
    std::vector<Monomial> generators() const;
    Int max_generator_degree() const;
    Int min_generator_degree() const;

    bool contains(const Monomial& mono) const;

    friend bool operator==(const MonomialStaircase&, const MonomialStaircase&) = default;
};

/// Number of degree-t monomials of gin(I^(m)) in x and y alone: H(t) - H(t-1).
Int xy_count(const PointConfig& config, Int m, Int t);

/// Rebuilds the staircase from any Hilbert function, using that each degree of a Borel-fixed
/// ideal in x, y is the top segment in x-exponent. Throws InvariantViolation if the data does
/// not describe a saturated Borel-fixed ideal.
MonomialStaircase staircase_from_hilbert(const PointConfig& config, Int m, const std::function<Int(Int)>& hilbert);

/// gin(I^(m)) for the configuration's own Hilbert function engine.
MonomialStaircase gin_staircase(const PointConfig& config, Int m);

/// Direct construction for r >= 9 from alpha and eta = H(alpha) under SHGH.
MonomialStaircase shgh_gin_closed_form(int r, Int m);

/// length K[x,y]/gin(I^(m)); checked against r*m(m+1)/2.
Int colength(const MonomialStaircase& s);

/// Whether every product g1*g2 of generators of a and b lies in c.
bool products_contained(const MonomialStaircase& a, const MonomialStaircase& b, const MonomialStaircase& c);

} // namespace ginlab

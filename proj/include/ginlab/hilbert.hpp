#pragma once

#include <vector>

#include "ginlab/arith.hpp"
#include "ginlab/config.hpp"

namespace ginlab {

/// A Hilbert function value together with the trust level of the engine that produced it.
struct HilbertValue {
    Int value = 0;
    Evidence evidence = Evidence::proven;
    bool conjectural() const { return evidence == Evidence::conjectural; }
    friend bool operator==(const HilbertValue&, const HilbertValue&) = default;
};

/// C(t+2, 2) - r*C(m+1, 2): the expected dimension of forms of degree t with r points of
/// multiplicity m. May be negative.
Int expected_dimension(int r, Int m, Int t);

/// max{C(t+2,2) - r*C(m+1,2), 0}; requires r >= 9. Always conjectural.
HilbertValue shgh_hilbert(int r, Int m, Int t);

/// floor(-1/2 + sqrt(1/4 + r*m^2 + r*m)) in exact integer arithmetic; requires r >= 9.
Int alpha_shgh(int r, Int m);

/// dim (I^(m))_t. Uses h^0 on the blow-up for finite-class configurations and the SHGH
/// formula otherwise. t < 0 gives 0.
HilbertValue hilbert_fn(const PointConfig& config, Int m, Int t);

/// hilbert_fn for t = first..last inclusive.
std::vector<Int> hilbert_table(const PointConfig& config, Int m, Int first, Int last);

/// Least t with H(t) > 0.
Int alpha(const PointConfig& config, Int m);

/// Least N such that t*e0 - m*sum e_i is nef for every t >= N.
Int nef_threshold(const PointConfig& config, Int m);

} // namespace ginlab

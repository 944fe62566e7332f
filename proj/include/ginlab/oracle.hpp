#pragma once

// Reference computations that share no code path with the engines they check.

#include <vector>

#include "ginlab/divisor_lattice.hpp"

namespace ginlab::oracle {

/// Every (d; a_1..a_r) with 0 <= d <= 6, -1 <= a_i <= d, C^2 = -1 and C.K = -1, by exhaustive
/// search. Sorted by (d, mults).
std::vector<DivisorClass> brute_force_minus_one_classes(int r);

/// Least t with C(t+2,2) - r*C(m+1,2) > 0, by linear scan.
Int scan_expected_alpha(int r, Int m);

} // namespace ginlab::oracle

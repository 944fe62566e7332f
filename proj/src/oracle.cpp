#include "ginlab/oracle.hpp"

#include <algorithm>
#include <functional>

namespace ginlab::oracle {

std::vector<DivisorClass> brute_force_minus_one_classes(int r) {
    std::vector<DivisorClass> out;
    std::vector<Int> a(static_cast<std::size_t>(r));
    for (Int d = 0; d <= 6; ++d) {
        // C^2 = d^2 - sum a_i^2 = -1 and C.K = -3d + sum a_i = -1.
        const Int target_sq = d * d + 1;
        const Int target_sum = 3 * d - 1;
        std::function<void(std::size_t, Int, Int)> rec = [&](std::size_t i, Int sq, Int sum) {
            if (sq > target_sq) return;
            if (i == a.size()) {
                if (sq == target_sq && sum == target_sum) out.emplace_back(d, a);
                return;
            }
            for (Int v = -1; v <= d; ++v) {
                a[i] = v;
                rec(i + 1, sq + v * v, sum + v);
            }
        };
        rec(0, 0, 0);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Int scan_expected_alpha(int r, Int m) {
    for (Int t = 0;; ++t) {
        Int binom = (t + 2) * (t + 1) / 2;
        if (binom - r * (m * (m + 1) / 2) > 0) return t;
    }
}

} // namespace ginlab::oracle

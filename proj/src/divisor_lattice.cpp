#include "ginlab/divisor_lattice.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>

#include "ginlab/errors.hpp"

namespace ginlab {

namespace {

void require_same_rank(const DivisorClass& a, const DivisorClass& b) {
    if (a.r() != b.r())
        throw UsageError("divisor classes on different surfaces: r = " + std::to_string(a.r()) +
                         " vs " + std::to_string(b.r()));
}

// Nonzero multiplicities of the (-1)-curve templates on the blow-up at 8 points. Blowing up
// fewer points keeps exactly the permutations supported on the first r indices.
struct Template {
    Int d;
    std::vector<Int> nonzero;
};

const std::vector<Template>& minus_one_templates() {
    static const std::vector<Template> templates = {
        {0, {-1}},
        {1, {1, 1}},
        {2, {1, 1, 1, 1, 1}},
        {3, {2, 1, 1, 1, 1, 1, 1}},
        {4, {2, 2, 2, 1, 1, 1, 1, 1}},
        {5, {2, 2, 2, 2, 2, 2, 1, 1}},
        {6, {3, 2, 2, 2, 2, 2, 2, 2}},
    };
    return templates;
}

std::vector<DivisorClass> general_position_classes(int r) {
    std::vector<DivisorClass> out;
    for (const auto& t : minus_one_templates()) {
        if (t.nonzero.size() > static_cast<std::size_t>(r)) continue;
        std::vector<Int> mults = t.nonzero;
        mults.resize(static_cast<std::size_t>(r), 0);
        std::sort(mults.begin(), mults.end());
        do {
            out.emplace_back(t.d, mults);
        } while (std::next_permutation(mults.begin(), mults.end()));
    }
    return out;
}

std::vector<DivisorClass> collinear_classes(int l) {
    const auto r = static_cast<std::size_t>(l + 1);
    std::vector<DivisorClass> out;
    for (std::size_t i = 1; i <= r; ++i) out.push_back(DivisorClass::exceptional_divisor(i, r));
    DivisorClass line(1, std::vector<Int>(r, 1));
    line.mults[r - 1] = 0;
    out.push_back(line);
    for (std::size_t i = 0; i + 1 < r; ++i) {
        DivisorClass joining(1, std::vector<Int>(r, 0));
        joining.mults[i] = 1;
        joining.mults[r - 1] = 1;
        out.push_back(joining);
    }
    return out;
}

std::vector<DivisorClass> build_classes(const PointConfig& config) {
    std::vector<DivisorClass> out;
    if (auto* g = std::get_if<GeneralPosition>(&config.kind()))
        out = general_position_classes(g->r);
    else if (auto* c = std::get_if<CollinearPlusOne>(&config.kind()))
        out = collinear_classes(c->l);
    else
        throw UnsupportedConfig("exceptional classes are infinite for " + config.to_string());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

DivisorClass DivisorClass::exceptional_divisor(std::size_t i, std::size_t r) {
    if (i < 1 || i > r) throw UsageError("exceptional divisor index out of range");
    DivisorClass e = zero(r);
    e.mults[i - 1] = -1;
    return e;
}

bool DivisorClass::is_zero() const {
    return d == 0 && std::all_of(mults.begin(), mults.end(), [](Int a) { return a == 0; });
}

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
    require_same_rank(a, b);
    DivisorClass out(checked_add(a.d, b.d), a.mults);
    for (std::size_t i = 0; i < out.r(); ++i) out.mults[i] = checked_add(out.mults[i], b.mults[i]);
    return out;
}

DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
    require_same_rank(a, b);
    DivisorClass out(checked_sub(a.d, b.d), a.mults);
    for (std::size_t i = 0; i < out.r(); ++i) out.mults[i] = checked_sub(out.mults[i], b.mults[i]);
    return out;
}

DivisorClass operator*(Int k, const DivisorClass& a) {
    DivisorClass out(checked_mul(k, a.d), a.mults);
    for (auto& x : out.mults) x = checked_mul(k, x);
    return out;
}

std::string DivisorClass::to_string() const {
    std::ostringstream os;
    bool first = true;
    auto term = [&](Int coeff, const std::string& symbol) {
        if (coeff == 0) return;
        if (coeff < 0)
            os << '-';
        else if (!first)
            os << '+';
        Int mag = coeff < 0 ? -coeff : coeff;
        if (mag != 1) os << mag;
        os << symbol;
        first = false;
    };
    term(d, "e0");
    for (std::size_t i = 0; i < mults.size(); ++i) term(checked_neg(mults[i]), "e" + std::to_string(i + 1));
    if (first) os << '0';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const DivisorClass& c) {
    os << '(' << c.d << ';';
    for (std::size_t i = 0; i < c.mults.size(); ++i) os << (i ? "," : "") << c.mults[i];
    return os << ')';
}

Int intersect(const DivisorClass& a, const DivisorClass& b) {
    require_same_rank(a, b);
    Int sum = checked_mul(a.d, b.d);
    for (std::size_t i = 0; i < a.r(); ++i) sum = checked_sub(sum, checked_mul(a.mults[i], b.mults[i]));
    return sum;
}

DivisorClass canonical_class(std::size_t r) {
    if (r < 1) throw UsageError("canonical class needs at least one point");
    return {-3, std::vector<Int>(r, -1)};
}

const std::vector<DivisorClass>& exceptional_classes(const PointConfig& config) {
    static std::mutex mutex;
    static std::map<std::string, std::unique_ptr<const std::vector<DivisorClass>>> cache;
    if (!config.finite_classes())
        throw UnsupportedConfig("exceptional classes are infinite for " + config.to_string());
    std::lock_guard lock(mutex);
    auto& slot = cache[config.to_string()];
    if (!slot) slot = std::make_unique<const std::vector<DivisorClass>>(build_classes(config));
    return *slot;
}

bool is_nef(const DivisorClass& f, const PointConfig& config) {
    const auto& classes = exceptional_classes(config);
    if (f.r() != static_cast<std::size_t>(config.point_count()))
        throw UsageError("class has r = " + std::to_string(f.r()) + " but " + config.to_string() +
                         " has " + std::to_string(config.point_count()) + " points");
    return std::all_of(classes.begin(), classes.end(), [&](const DivisorClass& c) { return intersect(f, c) >= 0; });
}

Int riemann_roch_h0(const DivisorClass& f, const PointConfig& config) {
    if (!is_nef(f, config)) throw UsageError("riemann_roch_h0 needs a nef class, got " + f.to_string());
    Int twice = checked_sub(intersect(f, f), intersect(f, canonical_class(f.r())));
    if (twice % 2 != 0) throw InvariantViolation("odd F^2 - F.K for " + f.to_string());
    return checked_add(twice / 2, 1);
}

DivisorClass EffectivityResult::trace_sum(std::size_t r) const {
    DivisorClass sum = DivisorClass::zero(r);
    for (const auto& e : trace) sum = sum + e.count * e.subtracted;
    return sum;
}

EffectivityResult reduce_to_nef(const DivisorClass& f, const PointConfig& config) {
    const auto& classes = exceptional_classes(config);
    const std::size_t r = f.r();
    if (r != static_cast<std::size_t>(config.point_count()))
        throw UsageError("class has r = " + std::to_string(r) + " but " + config.to_string() + " has " +
                         std::to_string(config.point_count()) + " points");

    Int negative_mults = 0;
    for (Int a : f.mults)
        if (a < 0) negative_mults = checked_sub(negative_mults, a);
    const Int guard = checked_add(
        checked_mul(checked_add(std::max<Int>(f.d, 0), 1), static_cast<Int>(classes.size())), negative_mults);

    EffectivityResult result;
    DivisorClass current = f;
    for (Int round = 0; round <= guard; ++round) {
        for (std::size_t i = 0; i < r; ++i) {
            if (current.mults[i] < 0) {
                result.trace.push_back({DivisorClass::exceptional_divisor(i + 1, r), checked_neg(current.mults[i])});
                current.mults[i] = 0;
            }
        }
        if (current.d < 0) {
            result.status = NotEffective{current};
            return result;
        }

        const DivisorClass* worst = nullptr;
        Int worst_pairing = 0;
        for (const auto& c : classes) {
            Int p = intersect(current, c);
            if (p < worst_pairing) {
                worst_pairing = p;
                worst = &c;
            }
        }
        if (worst == nullptr) {
            result.status = Effective{riemann_roch_h0(current, config), current};
            return result;
        }

        // Each subtraction raises the pairing by -C^2 > 0; subtract while it is still negative.
        Int raise = checked_neg(intersect(*worst, *worst));
        if (raise <= 0) throw InvariantViolation("exceptional class with nonnegative self-intersection: " + worst->to_string());
        Int count = ceil_div(checked_neg(worst_pairing), raise);
        current = current - count * *worst;
        result.trace.push_back({*worst, count});
    }
    throw InvariantViolation("reduce_to_nef exceeded its iteration bound on " + f.to_string());
}

Int h0(const DivisorClass& f, const PointConfig& config) {
    auto result = reduce_to_nef(f, config);
    if (auto* e = std::get_if<Effective>(&result.status)) return e->h0;
    return 0;
}

} // namespace ginlab

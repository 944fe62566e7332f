#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>

namespace ginlab {

/// r points of P^2 in general position, 2 <= r <= 8. Blow-up engine, proven results.
struct GeneralPosition {
    int r;
    friend bool operator==(const GeneralPosition&, const GeneralPosition&) = default;
};

/// r >= 9 general points. Hilbert functions come from the SHGH formula and are conjectural.
struct GeneralShgh {
    int r;
    friend bool operator==(const GeneralShgh&, const GeneralShgh&) = default;
};

/// l >= 3 points on a line plus one point off it (r = l + 1).
struct CollinearPlusOne {
    int l;
    friend bool operator==(const CollinearPlusOne&, const CollinearPlusOne&) = default;
};

/// How much trust a computed value carries.
enum class Evidence {
    proven,     ///< blow-up engine on general points, r <= 8
    conjectural,///< SHGH formula, r >= 9
    empirical,  ///< blow-up engine applied to the collinear arrangement
};

std::string_view to_string(Evidence e);

class PointConfig {
public:
    using Kind = std::variant<GeneralPosition, GeneralShgh, CollinearPlusOne>;

    /// Validates ranges; throws UsageError when out of range.
    explicit PointConfig(Kind kind);

    static PointConfig general(int r);
    static PointConfig shgh(int r);
    static PointConfig collinear(int l);

    /// Parses "general:R", "shgh:R" or "collinear:L".
    static PointConfig parse(std::string_view spec);

    const Kind& kind() const { return kind_; }
    int point_count() const;
    Evidence evidence() const;
    bool conjectural() const { return evidence() == Evidence::conjectural; }
    /// True when the exceptional curves form a finite list and the blow-up engine applies.
    bool finite_classes() const { return !std::holds_alternative<GeneralShgh>(kind_); }

    bool is_general() const { return std::holds_alternative<GeneralPosition>(kind_); }
    bool is_shgh() const { return std::holds_alternative<GeneralShgh>(kind_); }
    bool is_collinear() const { return std::holds_alternative<CollinearPlusOne>(kind_); }
    /// Number of collinear points; only meaningful for CollinearPlusOne.
    int collinear_count() const;

    /// Inverse of parse().
    std::string to_string() const;

    friend bool operator==(const PointConfig&, const PointConfig&) = default;

private:
    Kind kind_;
};

} // namespace ginlab

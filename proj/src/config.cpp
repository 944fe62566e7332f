#include "ginlab/config.hpp"

#include <charconv>

#include "ginlab/errors.hpp"

namespace ginlab {

std::string_view to_string(Evidence e) {
    switch (e) {
    case Evidence::proven: return "proven";
    case Evidence::conjectural: return "conjectural";
    case Evidence::empirical: return "empirically validated";
    }
    return "unknown";
}

PointConfig::PointConfig(Kind kind) : kind_(kind) {
    if (auto* g = std::get_if<GeneralPosition>(&kind_); g && (g->r < 2 || g->r > 8))
        throw UsageError("general position needs 2 <= r <= 8 (use shgh:R for r >= 9)");
    if (auto* s = std::get_if<GeneralShgh>(&kind_); s && s->r < 9)
        throw UsageError("shgh mode needs r >= 9");
    if (auto* c = std::get_if<CollinearPlusOne>(&kind_); c && c->l < 3)
        throw UsageError("collinear configuration needs l >= 3");
}

PointConfig PointConfig::general(int r) { return PointConfig(GeneralPosition{r}); }
PointConfig PointConfig::shgh(int r) { return PointConfig(GeneralShgh{r}); }
PointConfig PointConfig::collinear(int l) { return PointConfig(CollinearPlusOne{l}); }

PointConfig PointConfig::parse(std::string_view spec) {
    auto colon = spec.find(':');
    if (colon == std::string_view::npos)
        throw UsageError("config spec must look like general:R, shgh:R or collinear:L, got '" +
                         std::string(spec) + "'");
    std::string_view name = spec.substr(0, colon);
    std::string_view digits = spec.substr(colon + 1);
    int value = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || end != digits.data() + digits.size() || digits.empty())
        throw UsageError("bad integer in config spec '" + std::string(spec) + "'");
    if (name == "general") return general(value);
    if (name == "shgh") return shgh(value);
    if (name == "collinear") return collinear(value);
    throw UsageError("unknown configuration kind '" + std::string(name) + "'");
}

int PointConfig::point_count() const {
    return std::visit(
        [](const auto& k) -> int {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, CollinearPlusOne>)
                return k.l + 1;
            else
                return k.r;
        },
        kind_);
}

Evidence PointConfig::evidence() const {
    if (is_shgh()) return Evidence::conjectural;
    if (is_collinear()) return Evidence::empirical;
    return Evidence::proven;
}

int PointConfig::collinear_count() const {
    if (auto* c = std::get_if<CollinearPlusOne>(&kind_)) return c->l;
    throw UnsupportedConfig("not a collinear configuration");
}

std::string PointConfig::to_string() const {
    if (auto* g = std::get_if<GeneralPosition>(&kind_)) return "general:" + std::to_string(g->r);
    if (auto* s = std::get_if<GeneralShgh>(&kind_)) return "shgh:" + std::to_string(s->r);
    return "collinear:" + std::to_string(std::get<CollinearPlusOne>(kind_).l);
}

} // namespace ginlab

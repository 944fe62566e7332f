#include "ginlab/export.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace ginlab {

namespace {

Json rational_json(const Rational& q) { return q.to_string(); }

Json exact_json(const ExactReal& v) { return v.to_string(); }

// Fixed-precision decimal; SVG has no rationals.
std::string fixed(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

} // namespace

Json staircase_json(const MonomialStaircase& s) {
    Json gens = Json::array();
    for (const auto& g : s.generators()) gens.push_back(Json::array({g.x, g.y}));
    Json out;
    out["config"] = s.config.to_string();
    out["m"] = s.m;
    out["alpha"] = s.alpha;
    out["lambdas"] = s.lambdas;
    out["generators"] = std::move(gens);
    out["colength"] = colength(s);
    out["conjectural"] = s.config.conjectural();
    out["evidence"] = std::string(to_string(s.evidence()));
    return out;
}

Json shape_json(const ShapeReport& report) {
    Json out;
    out["config"] = report.config.to_string();
    out["conjectural"] = report.config.conjectural();
    out["evidence"] = std::string(to_string(report.config.evidence()));
    if (report.predicted) {
        out["predicted"] = {{"gamma1", exact_json(report.predicted->gamma1)},
                            {"gamma2", exact_json(report.predicted->gamma2)}};
    } else {
        out["predicted"] = nullptr;
    }
    Json records = Json::array();
    for (const auto& rec : report.records) {
        Json corners = Json::array();
        for (const auto& c : rec.corners) corners.push_back(Json::array({rational_json(c.x), rational_json(c.y)}));
        Json j;
        j["m"] = rec.m;
        j["alpha"] = rec.alpha;
        j["zeta"] = rec.zeta;
        j["x_intercept"] = rational_json(rec.x_intercept);
        j["y_intercept"] = rational_json(rec.y_intercept);
        j["colength"] = rec.colength;
        j["colength_over_m2"] = rational_json(rec.colength_over_m2);
        j["hull_area_over_m2"] = rational_json(rec.hull_area_over_m2);
        j["max_generator_degree"] = rec.max_generator_degree;
        j["corners"] = std::move(corners);
        records.push_back(std::move(j));
    }
    out["records"] = std::move(records);
    out["seshadri_estimate"] = rational_json(report.seshadri_estimate);
    Json nesting = Json::array();
    for (const auto& n : report.nesting) nesting.push_back({{"m", n.m}, {"contained_in_2m", n.contained}});
    out["nesting"] = std::move(nesting);
    return out;
}

std::string shape_csv(const ShapeReport& report) {
    std::ostringstream os;
    os << "m,alpha,zeta,x_intercept,y_intercept,colength\n";
    for (const auto& rec : report.records)
        os << rec.m << ',' << rec.alpha << ',' << rec.zeta << ',' << rec.x_intercept << ',' << rec.y_intercept
           << ',' << rec.colength << '\n';
    return os.str();
}

std::string shape_svg(const ShapeReport& report) {
    // Plot window in scaled coordinates, with a margin around the largest intercept.
    double extent = 1.0;
    for (const auto& rec : report.records)
        extent = std::max({extent, rec.x_intercept.to_double(), rec.y_intercept.to_double()});
    if (report.predicted)
        extent = std::max({extent, report.predicted->gamma1.to_double(), report.predicted->gamma2.to_double()});
    extent *= 1.1;
    const double size = 400.0;
    const double scale = size / extent;
    auto px = [&](double x) { return fixed(x * scale); };
    auto py = [&](double y) { return fixed(size - y * scale); };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
       << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
    os << "  <title>" << report.config.to_string() << " scaled gin staircases</title>\n";
    os << "  <line x1=\"0\" y1=\"" << fixed(size) << "\" x2=\"" << fixed(size) << "\" y2=\"" << fixed(size)
       << "\" stroke=\"black\"/>\n";
    os << "  <line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"" << fixed(size) << "\" stroke=\"black\"/>\n";
    for (const auto& rec : report.records) {
        os << "  <polyline data-m=\"" << rec.m << "\" fill=\"none\" stroke=\"steelblue\" stroke-width=\"1\" points=\"";
        // Outline of the staircase: start on the y-axis at zeta/m, step down to (alpha/m, 0).
        const auto& c = rec.corners; // descending x
        bool first = true;
        for (auto it = c.rbegin(); it != c.rend(); ++it) {
            if (!first) {
                // horizontal run to this corner's x, then drop to its y
                os << ' ' << px(it->x.to_double()) << ',' << py(std::prev(it)->y.to_double());
            }
            os << (first ? "" : " ") << px(it->x.to_double()) << ',' << py(it->y.to_double());
            first = false;
        }
        os << "\"/>\n";
    }
    if (report.predicted) {
        os << "  <line class=\"predicted\" x1=\"" << px(report.predicted->gamma1.to_double()) << "\" y1=\"" << py(0)
           << "\" x2=\"" << px(0) << "\" y2=\"" << py(report.predicted->gamma2.to_double())
           << "\" stroke=\"crimson\" stroke-dasharray=\"4 3\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace ginlab

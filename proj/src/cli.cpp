#include "ginlab/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ginlab/divisor_lattice.hpp"
#include "ginlab/errors.hpp"
#include "ginlab/export.hpp"
#include "ginlab/gin.hpp"
#include "ginlab/hilbert.hpp"
#include "ginlab/limit.hpp"
#include "ginlab/verify.hpp"

namespace ginlab {

namespace {

struct RunConfig {
    std::string command;
    std::string config_spec;
    std::optional<Int> m;
    std::string m_list;
    std::optional<Int> t;
    std::string t_range;
    std::string format;
    std::string out;
    std::string svg_out;
    std::optional<Int> max_m;
    std::string config_file;
    int verbosity = 0;
};

Int parse_int(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw UsageError("bad integer '" + text + "' in " + what);
    }
}

std::pair<Int, Int> parse_range(const std::string& text, const std::string& what) {
    auto dots = text.find("..");
    if (dots == std::string::npos) throw UsageError(what + " must look like A..B, got '" + text + "'");
    Int a = parse_int(text.substr(0, dots), what);
    Int b = parse_int(text.substr(dots + 2), what);
    if (a > b) throw UsageError(what + " is empty: " + text);
    return {a, b};
}

/// "10,20,30" or "A..B" or "A..B:step".
std::vector<Int> parse_m_list(const std::string& text) {
    std::vector<Int> out;
    if (text.find("..") != std::string::npos) {
        std::string range = text;
        Int step = 1;
        if (auto colon = text.find(':'); colon != std::string::npos) {
            range = text.substr(0, colon);
            step = parse_int(text.substr(colon + 1), "--m-list step");
            if (step < 1) throw UsageError("--m-list step must be positive");
        }
        auto [a, b] = parse_range(range, "--m-list");
        for (Int m = a; m <= b; m += step) out.push_back(m);
    } else {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) out.push_back(parse_int(item, "--m-list"));
    }
    if (out.empty()) throw UsageError("--m-list is empty");
    for (Int m : out)
        if (m < 1) throw UsageError("multiplicities must be positive");
    return out;
}

// Fields from --config-file fill whatever the command line left unset.
void merge_config_file(RunConfig& rc) {
    std::ifstream in(rc.config_file);
    if (!in) throw UsageError("cannot open config file " + rc.config_file);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError("config file is not valid JSON: " + std::string(e.what()));
    }
    try {
        if (rc.command.empty() && j.contains("command")) rc.command = j["command"].get<std::string>();
        if (rc.config_spec.empty() && j.contains("config")) rc.config_spec = j["config"].get<std::string>();
        if (!rc.m && j.contains("m")) rc.m = j["m"].get<Int>();
        if (rc.m_list.empty() && j.contains("m_list")) {
            if (j["m_list"].is_array()) {
                std::string joined;
                for (const auto& v : j["m_list"]) joined += (joined.empty() ? "" : ",") + std::to_string(v.get<Int>());
                rc.m_list = joined;
            } else {
                rc.m_list = j["m_list"].get<std::string>();
            }
        }
        if (!rc.t && j.contains("t")) rc.t = j["t"].get<Int>();
        if (rc.t_range.empty() && j.contains("t_range")) rc.t_range = j["t_range"].get<std::string>();
        if (rc.format.empty() && j.contains("format")) rc.format = j["format"].get<std::string>();
        if (rc.out.empty() && j.contains("out")) rc.out = j["out"].get<std::string>();
        if (!rc.max_m && j.contains("max_m")) rc.max_m = j["max_m"].get<Int>();
    } catch (const nlohmann::json::exception& e) {
        throw UsageError("bad field in config file: " + std::string(e.what()));
    }
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (format == a) return;
    std::string list;
    for (const char* a : allowed) list += (list.empty() ? "" : "|") + std::string(a);
    throw UsageError("format '" + format + "' not supported here; use " + list);
}

Int require_m(const RunConfig& rc) {
    if (!rc.m) throw UsageError("--m is required");
    if (*rc.m < 1) throw UsageError("--m must be positive");
    return *rc.m;
}

std::string with_newline(std::string s) {
    if (s.empty() || s.back() != '\n') s.push_back('\n');
    return s;
}

std::string cmd_classes(const PointConfig& config, const std::string& format) {
    require_format(format, {"text", "json", "csv"});
    const auto& classes = exceptional_classes(config);
    const auto k = canonical_class(static_cast<std::size_t>(config.point_count()));
    std::ostringstream os;
    if (format == "json") {
        Json j;
        j["config"] = config.to_string();
        j["count"] = classes.size();
        Json list = Json::array();
        for (const auto& c : classes)
            list.push_back({{"d", c.d}, {"mults", c.mults}, {"class", c.to_string()},
                            {"self_intersection", intersect(c, c)}, {"canonical_pairing", intersect(c, k)}});
        j["classes"] = std::move(list);
        os << j.dump(2);
    } else if (format == "csv") {
        os << "d";
        for (int i = 1; i <= config.point_count(); ++i) os << ",a" << i;
        os << ",self_intersection,canonical_pairing\n";
        for (const auto& c : classes) {
            os << c.d;
            for (Int a : c.mults) os << ',' << a;
            os << ',' << intersect(c, c) << ',' << intersect(c, k) << '\n';
        }
    } else {
        os << "# " << config.to_string() << ": " << classes.size() << " exceptional classes\n";
        for (const auto& c : classes)
            os << c << "  " << c.to_string() << "  C^2=" << intersect(c, c) << "  C.K=" << intersect(c, k) << '\n';
    }
    return os.str();
}

std::string cmd_hilbert(const PointConfig& config, const RunConfig& rc, const std::string& format) {
    require_format(format, {"text", "json", "csv"});
    const Int m = require_m(rc);
    Int first = 0;
    Int last = 0;
    if (rc.t && !rc.t_range.empty()) throw UsageError("give either --t or --t-range, not both");
    if (rc.t) {
        first = last = *rc.t;
    } else if (!rc.t_range.empty()) {
        std::tie(first, last) = parse_range(rc.t_range, "--t-range");
    } else {
        throw UsageError("--t or --t-range is required");
    }
    if (first < 0) throw UsageError("degrees must be nonnegative");
    const auto values = hilbert_table(config, m, first, last);
    std::ostringstream os;
    if (format == "json") {
        Json j;
        j["config"] = config.to_string();
        j["m"] = m;
        j["conjectural"] = config.conjectural();
        j["evidence"] = std::string(to_string(config.evidence()));
        Json list = Json::array();
        for (Int t = first; t <= last; ++t) list.push_back({{"t", t}, {"H", values[static_cast<std::size_t>(t - first)]}});
        j["values"] = std::move(list);
        os << j.dump(2);
    } else if (format == "csv") {
        os << "t,H\n";
        for (Int t = first; t <= last; ++t) os << t << ',' << values[static_cast<std::size_t>(t - first)] << '\n';
    } else {
        os << "# " << config.to_string() << ", m = " << m << " (" << to_string(config.evidence()) << ")\n";
        for (Int t = first; t <= last; ++t) os << "H(" << t << ") = " << values[static_cast<std::size_t>(t - first)] << '\n';
    }
    return os.str();
}

std::string monomial_text(const Monomial& g) {
    auto power = [](const char* var, Int e) -> std::string {
        if (e == 0) return "";
        return e == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(e);
    };
    std::string x = power("x", g.x);
    std::string y = power("y", g.y);
    if (x.empty()) return y.empty() ? "1" : y;
    return y.empty() ? x : x + "*" + y;
}

std::string cmd_gin(const PointConfig& config, const RunConfig& rc, const std::string& format) {
    require_format(format, {"json", "text"});
    const auto s = gin_staircase(config, require_m(rc));
    if (format == "json") return staircase_json(s).dump(2);
    std::ostringstream os;
    os << "# gin of I^(" << s.m << ") for " << config.to_string() << " (" << to_string(config.evidence()) << ")\n";
    os << "alpha = " << s.alpha << ", zeta = " << s.zeta() << ", colength = " << colength(s) << '\n';
    os << "generators:";
    bool first = true;
    for (const auto& g : s.generators()) {
        os << (first ? " " : ", ") << monomial_text(g);
        first = false;
    }
    os << '\n';
    return os.str();
}

std::string cmd_shape(const PointConfig& config, const RunConfig& rc, const std::string& format) {
    require_format(format, {"json", "csv", "svg", "text"});
    if (rc.m_list.empty() && !rc.m) throw UsageError("--m-list (or --m) is required");
    const auto ms = rc.m_list.empty() ? std::vector<Int>{require_m(rc)} : parse_m_list(rc.m_list);
    const auto report = shape_report(config, ms);
    if (!rc.svg_out.empty()) {
        std::ofstream svg(rc.svg_out);
        if (!svg) throw UsageError("cannot write " + rc.svg_out);
        svg << shape_svg(report);
    }
    if (format == "json") return shape_json(report).dump(2);
    if (format == "csv") return shape_csv(report);
    if (format == "svg") return shape_svg(report);
    std::ostringstream os;
    os << "# limiting shape data for " << config.to_string() << " (" << to_string(config.evidence()) << ")\n";
    if (report.predicted)
        os << "predicted intercepts: (" << report.predicted->gamma1.to_string() << ", 0) and (0, "
           << report.predicted->gamma2.to_string() << ")\n";
    for (const auto& rec : report.records)
        os << "m=" << rec.m << "  alpha/m=" << rec.x_intercept << "  zeta/m=" << rec.y_intercept
           << "  colength/m^2=" << rec.colength_over_m2 << "  hull_area/m^2=" << rec.hull_area_over_m2 << '\n';
    os << "seshadri estimate alpha/(r m) = " << report.seshadri_estimate << '\n';
    for (const auto& n : report.nesting)
        os << "nesting m=" << n.m << " in 2m: " << (n.contained ? "yes" : "NO") << '\n';
    return os.str();
}

std::pair<std::string, bool> cmd_verify(const PointConfig& config, const RunConfig& rc, const std::string& format) {
    require_format(format, {"text", "json"});
    const Int max_m = rc.max_m.value_or(20);
    const auto report = verify(config, max_m);
    std::ostringstream os;
    if (format == "json") {
        Json j;
        j["config"] = config.to_string();
        j["max_m"] = max_m;
        j["conjectural"] = config.conjectural();
        j["evidence"] = std::string(to_string(config.evidence()));
        j["passed"] = report.passed();
        Json checks = Json::array();
        for (const auto& c : report.checks)
            checks.push_back({{"name", c.name}, {"passed", c.passed}, {"skipped", c.skipped}, {"failures", c.failures}});
        j["checks"] = std::move(checks);
        os << j.dump(2);
    } else {
        os << "# verify " << config.to_string() << " up to m = " << max_m << " (" << to_string(config.evidence())
           << ")\n";
        for (const auto& c : report.checks) {
            os << (c.skipped ? "SKIP " : c.passed ? "PASS " : "FAIL ") << c.name << '\n';
            for (const auto& f : c.failures) os << "  " << f << '\n';
        }
        os << (report.passed() ? "PASS" : "FAIL") << '\n';
    }
    return {os.str(), report.passed()};
}

void add_common(CLI::App* sub, RunConfig& rc, bool positional = true) {
    if (positional) sub->add_option("config", rc.config_spec, "general:R | shgh:R | collinear:L");
    sub->add_option("--format", rc.format, "json | csv | svg | text");
    sub->add_option("--out", rc.out, "write the result to this file");
    sub->add_option("--config-file", rc.config_file, "JSON file with the same fields");
    sub->add_flag("-v,--verbose", rc.verbosity, "more diagnostics on stderr");
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig rc;
    CLI::App app{"Generic initial ideals of symbolic powers of points in P^2", "ginlab"};
    app.require_subcommand(0, 1);
    add_common(&app, rc, false);

    auto* classes = app.add_subcommand("classes", "list exceptional classes of the blow-up");
    add_common(classes, rc);
    auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of I^(m)");
    add_common(hilbert, rc);
    hilbert->add_option("--m", rc.m, "multiplicity");
    hilbert->add_option("--t", rc.t, "single degree");
    hilbert->add_option("--t-range", rc.t_range, "degrees A..B");
    auto* gin = app.add_subcommand("gin", "staircase of gin(I^(m))");
    add_common(gin, rc);
    gin->add_option("--m", rc.m, "multiplicity");
    auto* shape = app.add_subcommand("shape", "scaled staircases and intercept data");
    add_common(shape, rc);
    shape->add_option("--m", rc.m, "single multiplicity");
    shape->add_option("--m-list", rc.m_list, "multiplicities: 10,20,30 or A..B[:step]");
    shape->add_option("--svg", rc.svg_out, "also write an SVG overlay here");
    auto* verify_cmd = app.add_subcommand("verify", "run all invariant checks");
    add_common(verify_cmd, rc);
    verify_cmd->add_option("--max-m", rc.max_m, "largest multiplicity checked");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        for (auto* sub : app.get_subcommands()) rc.command = sub->get_name();
        if (!rc.config_file.empty()) merge_config_file(rc);
        if (rc.command.empty()) throw UsageError("no command given; see --help");
        if (rc.config_spec.empty()) throw UsageError("missing configuration (general:R, shgh:R or collinear:L)");
        const auto config = PointConfig::parse(rc.config_spec);
        if (rc.verbosity > 0) err << "ginlab: " << rc.command << " " << config.to_string() << '\n';

        std::string result;
        bool passed = true;
        if (rc.command == "classes") {
            result = cmd_classes(config, rc.format.empty() ? "text" : rc.format);
        } else if (rc.command == "hilbert") {
            result = cmd_hilbert(config, rc, rc.format.empty() ? "csv" : rc.format);
        } else if (rc.command == "gin") {
            result = cmd_gin(config, rc, rc.format.empty() ? "json" : rc.format);
        } else if (rc.command == "shape") {
            result = cmd_shape(config, rc, rc.format.empty() ? "csv" : rc.format);
        } else if (rc.command == "verify") {
            std::tie(result, passed) = cmd_verify(config, rc, rc.format.empty() ? "text" : rc.format);
        } else {
            throw UsageError("unknown command '" + rc.command + "'");
        }

        result = with_newline(std::move(result));
        if (rc.out.empty()) {
            out << result;
        } else {
            std::ofstream file(rc.out, std::ios::binary);
            if (!file) throw UsageError("cannot write " + rc.out);
            file << result;
        }
        return passed ? exit_ok : exit_verification_failed;
    } catch (const UsageError& e) {
        err << "ginlab: " << e.what() << '\n';
        return exit_usage;
    } catch (const UnsupportedConfig& e) {
        err << "ginlab: " << e.what() << '\n';
        return exit_usage;
    } catch (const ArithmeticOverflow& e) {
        err << "ginlab: " << e.what() << '\n';
        return exit_arithmetic_guard;
    } catch (const InvariantViolation& e) {
        err << "ginlab: internal check failed: " << e.what() << '\n';
        return exit_arithmetic_guard;
    }
}

} // namespace ginlab

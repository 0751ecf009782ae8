#pragma once

// Command-line front end. `run` is the whole program minus process setup, so
// tests drive it in-process with string streams.
//
// Exit codes: 0 success, 2 argument or domain error, 3 numeric failure.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>

#include "fermat/core.hpp"
#include "fermat/curve.hpp"
#include "fermat/emit.hpp"
#include "fermat/error.hpp"
#include "fermat/oracle.hpp"
#include "fermat/sampling.hpp"
#include "fermat/types.hpp"

namespace fermat::cli {

enum class Subcommand { sample, arclength, gap, residual, svg, oracle_diff };
enum class Format { csv, json, svg };
enum class Resample { uniform, arclength };

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 2;
inline constexpr int exit_numeric = 3;

struct CliConfig {
    Subcommand subcommand = Subcommand::sample;
    Exponent n{1};
    AffineFrame frame;
    std::int64_t count = 256;
    bool count_given = false;
    double tol = 1e-10;
    Format format = Format::csv;
    Resample resample = Resample::uniform;
    double theta_lo = 0.0;
    double theta_hi = two_pi;
    bool theta_range_given = false;
    std::optional<Point2> point;
    std::string output; // empty: standard output
};

/// Split "a,b,c" into exactly `expected` finite doubles.
[[nodiscard]] inline std::vector<double> parse_list(std::string_view text, std::size_t expected,
                                                    std::string_view flag)
{
    std::vector<double> values;
    while (true) {
        const auto comma = text.find(',');
        values.push_back(parse_double(text.substr(0, comma)));
        if (comma == std::string_view::npos) {
            break;
        }
        text.remove_prefix(comma + 1);
    }
    if (values.size() != expected) {
        throw Error(ErrorCode::InvalidArgument, std::string(flag) + " expects " + std::to_string(expected)
                                                    + " comma-separated numbers");
    }
    return values;
}

[[nodiscard]] inline AffineFrame parse_frame(std::string_view text)
{
    const auto v = parse_list(text, 6, "--frame");
    return {v[0], v[1], v[2], v[3], v[4], v[5]};
}

namespace detail {

    struct RawArgs {
        std::int64_t n = 0;
        std::string frame;
        std::string theta_range;
        std::string point;
        std::string format = "csv";
        std::string resample = "uniform";
    };

    [[nodiscard]] inline SampledCurve make_curve(const CliConfig& cfg, Exponent n)
    {
        if (cfg.resample == Resample::arclength) {
            if (cfg.theta_range_given) {
                throw Error(ErrorCode::InvalidArgument, "--theta-range cannot be combined with --resample arclength");
            }
            return resample_by_arclength(n, cfg.frame, cfg.count, cfg.tol);
        }
        if (cfg.theta_range_given && cfg.theta_hi - cfg.theta_lo < two_pi) {
            return sample_theta_arc(n, cfg.frame, cfg.theta_lo, cfg.theta_hi, cfg.count);
        }
        return sample_uniform_theta(n, cfg.frame, cfg.count);
    }

    [[nodiscard]] inline std::string execute(const CliConfig& cfg)
    {
        switch (cfg.subcommand) {
        case Subcommand::sample: {
            const auto curve = make_curve(cfg, cfg.n);
            switch (cfg.format) {
            case Format::csv: return emit_csv(curve);
            case Format::json: return emit_json(curve);
            case Format::svg: return emit_svg(curve);
            }
            break;
        }
        case Subcommand::arclength:
            return format_double(arc_length(cfg.n, cfg.frame, Angle(cfg.theta_lo), Angle(cfg.theta_hi), cfg.tol))
                 + '\n';
        case Subcommand::gap: {
            const std::int64_t resolution = cfg.count_given ? cfg.count : default_gap_resolution;
            return format_double(convergence_gap(cfg.n, cfg.frame, resolution)) + '\n';
        }
        case Subcommand::residual: {
            if (cfg.point) {
                return format_double(residual_log(*cfg.point, cfg.n, cfg.frame)) + '\n';
            }
            const auto curve = make_curve(cfg, cfg.n);
            double worst = 0.0;
            for (const auto& p : curve.points()) {
                worst = std::max(worst, std::abs(residual_log(p, cfg.n, cfg.frame)));
            }
            return format_double(worst) + '\n';
        }
        case Subcommand::svg: {
            // Nested figure: N = 1..n, innermost first.
            std::vector<SampledCurve> curves;
            for (std::int64_t k = 1; k <= cfg.n.value(); ++k) {
                curves.push_back(make_curve(cfg, Exponent(k)));
            }
            return emit_svg(curves);
        }
        case Subcommand::oracle_diff: {
            const auto closed_form = sample_uniform_theta(cfg.n, cfg.frame, cfg.count);
            const auto reference = oracle::oracle_polyline(cfg.n, cfg.frame, cfg.count);
            return format_double(polyline_hausdorff(closed_form, reference)) + '\n';
        }
        }
        throw Error(ErrorCode::InvalidArgument, "unknown subcommand");
    }

    [[nodiscard]] inline std::string one_line(std::string text)
    {
        std::replace(text.begin(), text.end(), '\n', ' ');
        while (!text.empty() && text.back() == ' ') {
            text.pop_back();
        }
        return text;
    }

} // namespace detail

/// Run the CLI on `args` (program name excluded). Output goes to the
/// --output file when given, otherwise to `out`; diagnostics go to `err`.
[[nodiscard]] inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Fermat curve x^{2N} + y^{2N} = 1 sampler and diagnostics", "fermat"};
    app.require_subcommand(1);

    CliConfig cfg;
    detail::RawArgs raw;

    auto add_common = [&](CLI::App* sub, bool n_required) {
        auto* n_opt = sub->add_option("--n", raw.n, "exponent N of x^{2N} + y^{2N} = 1");
        if (n_required) {
            n_opt->required();
        }
        sub->add_option("--frame", raw.frame, "affine frame alpha,beta,gamma,delta,epsilon,zeta");
        sub->add_option("--count", cfg.count, "number of samples (gap: grid resolution)");
        sub->add_option("--tol", cfg.tol, "quadrature tolerance");
        sub->add_option("--theta-range", raw.theta_range, "lo,hi in radians");
        sub->add_option("--resample", raw.resample, "uniform | arclength")
            ->check(CLI::IsMember({"uniform", "arclength"}));
        sub->add_option("--output,-o", cfg.output, "output path (default: standard output)");
    };

    auto* sample = app.add_subcommand("sample", "sample a curve as CSV, JSON or SVG");
    add_common(sample, true);
    sample->add_option("--format", raw.format, "csv | json | svg")->check(CLI::IsMember({"csv", "json", "svg"}));
    auto* arclength = app.add_subcommand("arclength", "arc length over a theta range");
    add_common(arclength, true);
    auto* gap = app.add_subcommand("gap", "sup distance from L_N to its limit shape");
    add_common(gap, true);
    auto* residual = app.add_subcommand("residual", "membership residual of samples or of --point");
    add_common(residual, true);
    residual->add_option("--point", raw.point, "x,y");
    auto* svg = app.add_subcommand("svg", "nested curves N = 1..n as SVG");
    add_common(svg, false);
    auto* oracle_diff = app.add_subcommand("oracle-diff", "Hausdorff distance to the bisection oracle");
    add_common(oracle_diff, true);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "fermat: error: " << detail::one_line(e.what()) << '\n';
        return exit_usage;
    }

    try {
        const CLI::App* chosen = app.get_subcommands().front();
        const std::string name = chosen->get_name();
        if (name == "sample") {
            cfg.subcommand = Subcommand::sample;
        } else if (name == "arclength") {
            cfg.subcommand = Subcommand::arclength;
        } else if (name == "gap") {
            cfg.subcommand = Subcommand::gap;
        } else if (name == "residual") {
            cfg.subcommand = Subcommand::residual;
        } else if (name == "svg") {
            cfg.subcommand = Subcommand::svg;
        } else {
            cfg.subcommand = Subcommand::oracle_diff;
        }

        cfg.n = Exponent(chosen->count("--n") > 0 ? raw.n : 5);
        cfg.count_given = chosen->count("--count") > 0;
        if (!raw.frame.empty()) {
            cfg.frame = parse_frame(raw.frame);
        }
        if (!raw.theta_range.empty()) {
            const auto r = parse_list(raw.theta_range, 2, "--theta-range");
            cfg.theta_lo = r[0];
            cfg.theta_hi = r[1];
            cfg.theta_range_given = true;
        }
        if (!raw.point.empty()) {
            const auto p = parse_list(raw.point, 2, "--point");
            cfg.point = Point2{p[0], p[1]};
        }
        if (!(cfg.tol > 0.0) || !std::isfinite(cfg.tol)) {
            throw Error(ErrorCode::InvalidArgument, "--tol must be a positive finite number");
        }
        cfg.format = raw.format == "json" ? Format::json : raw.format == "svg" ? Format::svg : Format::csv;
        cfg.resample = raw.resample == "arclength" ? Resample::arclength : Resample::uniform;

        const std::string bytes = detail::execute(cfg);
        if (cfg.output.empty()) {
            out << bytes;
        } else {
            std::ofstream file(cfg.output, std::ios::binary);
            if (!file || !(file << bytes)) {
                err << "fermat: error: cannot write " << cfg.output << '\n';
                return exit_usage;
            }
        }
        return exit_ok;
    } catch (const Error& e) {
        err << "fermat: error: " << detail::one_line(e.what()) << '\n';
        const bool numeric = e.code() == ErrorCode::QuadratureFailure || e.code() == ErrorCode::InvalidCurve;
        return numeric ? exit_numeric : exit_usage;
    }
}

} // namespace fermat::cli

#pragma once

// Text encodings of sampled curves: CSV, JSON and SVG.

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include <nlohmann/json.hpp>

#include "fermat/curve.hpp"
#include "fermat/error.hpp"
#include "fermat/types.hpp"

namespace fermat {

/// Shortest decimal form that parses back to the same double.
[[nodiscard]] inline std::string format_double(double v)
{
    std::array<char, 32> buf{};
    const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    if (ec != std::errc{}) {
        throw Error(ErrorCode::InvalidArgument, "cannot format value");
    }
    return {buf.data(), end};
}

/// Strict parse of a whole string as a finite double.
[[nodiscard]] inline double parse_double(std::string_view text)
{
    double v = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (!text.empty() && *first == '+') {
        ++first;
    }
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || first == last || !std::isfinite(v)) {
        throw Error(ErrorCode::InvalidArgument, "not a finite number: '" + std::string(text) + "'");
    }
    return v;
}

struct CsvRow {
    double theta = 0.0;
    double x = 0.0;
    double y = 0.0;
};

/// Header `theta,x,y`, one LF-terminated row per sample.
[[nodiscard]] inline std::string emit_csv(const SampledCurve& curve)
{
    std::string out = "theta,x,y\n";
    for (std::size_t i = 0; i < curve.size(); ++i) {
        out += format_double(curve.thetas()[i].radians());
        out += ',';
        out += format_double(curve.points()[i].x);
        out += ',';
        out += format_double(curve.points()[i].y);
        out += '\n';
    }
    return out;
}

[[nodiscard]] inline std::vector<CsvRow> parse_csv(std::string_view text)
{
    std::vector<CsvRow> rows;
    bool header = true;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        const std::string_view line = text.substr(0, eol);
        text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
        if (header) {
            if (line != "theta,x,y") {
                throw Error(ErrorCode::InvalidArgument, "missing CSV header");
            }
            header = false;
            continue;
        }
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 == std::string_view::npos ? c1 : c1 + 1);
        if (c1 == std::string_view::npos || c2 == std::string_view::npos) {
            throw Error(ErrorCode::InvalidArgument, "malformed CSV row");
        }
        rows.push_back({parse_double(line.substr(0, c1)), parse_double(line.substr(c1 + 1, c2 - c1 - 1)),
                        parse_double(line.substr(c2 + 1))});
    }
    return rows;
}

/// {"n", "frame", "closed", "samples": [{"theta", "x", "y"}, ...]} in that
/// key order. The frame is the six coefficients alpha..zeta. Numbers use
/// format_double, so they match the CSV text byte for byte.
[[nodiscard]] inline std::string emit_json(const SampledCurve& curve)
{
    std::string out = "{\"n\":";
    out += std::to_string(curve.exponent().value());
    out += ",\"frame\":[";
    const auto& c = curve.frame().coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += format_double(c[i]);
    }
    out += "],\"closed\":";
    out += curve.closed() ? "true" : "false";
    out += ",\"samples\":[";
    for (std::size_t i = 0; i < curve.size(); ++i) {
        out += i == 0 ? "{\"theta\":" : ",{\"theta\":";
        out += format_double(curve.thetas()[i].radians());
        out += ",\"x\":";
        out += format_double(curve.points()[i].x);
        out += ",\"y\":";
        out += format_double(curve.points()[i].y);
        out += '}';
    }
    out += "]}\n";
    return out;
}

/// Rebuild a SampledCurve from emit_json output. Invariants are re-checked.
[[nodiscard]] inline SampledCurve parse_json(std::string_view text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
        const auto& fc = doc.at("frame");
        if (fc.size() != 6) {
            throw Error(ErrorCode::InvalidArgument, "frame must have six coefficients");
        }
        const AffineFrame frame(fc[0].get<double>(), fc[1].get<double>(), fc[2].get<double>(),
                                fc[3].get<double>(), fc[4].get<double>(), fc[5].get<double>());
        std::vector<Angle> thetas;
        std::vector<Point2> points;
        for (const auto& s : doc.at("samples")) {
            thetas.emplace_back(s.at("theta").get<double>());
            points.push_back({s.at("x").get<double>(), s.at("y").get<double>()});
        }
        return SampledCurve(Exponent(doc.at("n").get<std::int64_t>()), frame, std::move(thetas),
                            std::move(points), doc.at("closed").get<bool>());
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::InvalidArgument, std::string("bad curve JSON: ") + e.what());
    }
}

/// SVG stroke width in curve units.
inline constexpr double svg_stroke_width = 0.01;

/// One closed path per curve, in input order. The viewBox is the joint
/// bounding box scaled by 1.05 about its centre; y is flipped by a group
/// transform so path data carries the sampled coordinates unchanged.
[[nodiscard]] inline std::string emit_svg(std::span<const SampledCurve> curves)
{
    if (curves.empty()) {
        throw Error(ErrorCode::InvalidArgument, "emit_svg needs at least one curve");
    }
    double min_x = std::numeric_limits<double>::infinity();
    double min_y = min_x;
    double max_x = -min_x;
    double max_y = -min_x;
    for (const auto& curve : curves) {
        for (const auto& p : curve.points()) {
            min_x = std::min(min_x, p.x);
            max_x = std::max(max_x, p.x);
            min_y = std::min(min_y, p.y);
            max_y = std::max(max_y, p.y);
        }
    }
    const double cx = 0.5 * (min_x + max_x);
    const double cy = 0.5 * (min_y + max_y);
    const double hx = 0.5 * (max_x - min_x) * 1.05;
    const double hy = 0.5 * (max_y - min_y) * 1.05;

    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"";
    // The flipped group maps y to -y, so the box spans [-(cy + hy), -(cy - hy)].
    out += format_double(cx - hx) + ' ' + format_double(-(cy + hy)) + ' ' + format_double(2.0 * hx) + ' '
         + format_double(2.0 * hy);
    out += "\">\n<g transform=\"scale(1,-1)\" fill=\"none\" stroke=\"black\" stroke-width=\"";
    out += format_double(svg_stroke_width);
    out += "\">\n";
    for (const auto& curve : curves) {
        out += "<path data-n=\"" + std::to_string(curve.exponent().value()) + "\" d=\"";
        const auto& pts = curve.points();
        for (std::size_t i = 0; i < pts.size(); ++i) {
            out += i == 0 ? "M " : " L ";
            out += format_double(pts[i].x) + ' ' + format_double(pts[i].y);
        }
        if (curve.closed()) {
            out += " Z";
        }
        out += "\"/>\n";
    }
    out += "</g>\n</svg>\n";
    return out;
}

[[nodiscard]] inline std::string emit_svg(const SampledCurve& curve)
{
    return emit_svg(std::span<const SampledCurve>(&curve, 1));
}

} // namespace fermat

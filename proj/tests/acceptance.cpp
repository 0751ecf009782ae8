// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "fermat/cli.hpp"
#include "fermat/fermat.hpp"
#include "test_helpers.hpp"

using namespace fermat;
using std::numbers::pi;
using std::numbers::sqrt2;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

std::string fmt(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

double diagonal_value(std::int64_t n)
{
    return std::exp2((static_cast<double>(n) - 1.0) / (2.0 * static_cast<double>(n)));
}

Outcome membership_residuals()
{
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (std::int64_t n : test::small_and_extreme_exponents()) {
        for (const Angle& t : test::theta_grid(1024)) {
            worst = std::max(worst, std::abs(residual_log(cn_point(t, Exponent(n)), Exponent(n))));
        }
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(worst <= 1e-9, "max |residual| " + fmt(worst) + " > 1e-9");
    o.require(seconds < 1.0, "runtime " + fmt(seconds) + " s >= 1 s");
    o.detail = o.pass ? "max |residual| " + fmt(worst) + ", " + fmt(seconds) + " s" : o.detail;
    return o;
}

Outcome diagonal_closed_form()
{
    Outcome o;
    double worst = 0.0;
    for (std::int64_t n : {1, 2, 5, 100, 1'000'000}) {
        worst = std::max(worst, std::abs(radial_factor(Angle(pi / 4), Exponent(n)) - diagonal_value(n)));
    }
    o.require(worst <= 1e-13, "max error " + fmt(worst) + " > 1e-13");
    if (o.pass) o.detail = "max error " + fmt(worst);
    return o;
}

Outcome figure_nesting()
{
    Outcome o;
    // C_1 is the unit circle.
    for (const Angle& t : test::theta_grid(1024)) {
        o.require(std::abs(radial_factor(t, Exponent(1)) - 1.0) <= 1e-15, "C_1 is not the unit circle");
    }
    for (std::int64_t n = 1; n < 1000; ++n) {
        o.require(radial_factor(Angle(pi / 4), Exponent(n + 1)) > radial_factor(Angle(pi / 4), Exponent(n)),
                  "not strictly increasing at pi/4, N = " + std::to_string(n));
    }
    for (const Angle& t : test::theta_grid(1024)) {
        for (std::int64_t n = 1; n < 64; ++n) {
            o.require(radial_factor(t, Exponent(n + 1)) >= radial_factor(t, Exponent(n)) - 1e-15,
                      "decrease at theta " + fmt(t.radians()) + ", N = " + std::to_string(n));
        }
    }
    // C_5 is outermost among C_1..C_5.
    for (const Angle& t : test::theta_grid(1024)) {
        for (std::int64_t n = 1; n < 5; ++n) {
            o.require(radial_factor(t, Exponent(5)) >= radial_factor(t, Exponent(n)) - 1e-15, "C_5 not outermost");
        }
    }
    if (o.pass) o.detail = "strict at pi/4 for N = 1..1000, nondecreasing on 1024 x 64 grid";
    return o;
}

Outcome oracle_equivalence()
{
    Outcome o;
    double worst = 0.0;
    for (std::int64_t n : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 100}) {
        for (const Angle& t : test::theta_grid(256)) {
            worst = std::max(worst, std::abs(radial_factor(t, Exponent(n)) - oracle::bisect_radial_factor(t, Exponent(n))));
        }
    }
    o.require(worst <= 1e-12, "closed form vs bisection " + fmt(worst) + " > 1e-12");
    double worst_h = 0.0;
    for (std::int64_t n : {1, 5, 100}) {
        const auto a = sample_uniform_theta(Exponent(n), {}, 2048);
        const auto b = oracle::oracle_polyline(Exponent(n), {}, 2048);
        worst_h = std::max(worst_h, polyline_hausdorff(a, b));
    }
    o.require(worst_h <= 1e-9, "Hausdorff " + fmt(worst_h) + " > 1e-9");
    if (o.pass) o.detail = "rho gap " + fmt(worst) + ", Hausdorff " + fmt(worst_h);
    return o;
}

Outcome arc_length_criterion()
{
    Outcome o;
    auto full = [](std::int64_t n) { return arc_length(Exponent(n), {}, Angle(0.0), Angle(two_pi)); };
    const double circle = full(1);
    o.require(std::abs(circle - 2 * pi) <= 1e-8, "N = 1 length " + format_double(circle));

    double previous = 0.0;
    for (std::int64_t n = 1; n <= 4096; n *= 2) {
        const double length = full(n);
        o.require(length > previous, "not increasing at N = " + std::to_string(n));
        o.require(length < 8.0, "length >= 8 at N = " + std::to_string(n));
        previous = length;
    }

    // Chordal oracle first; the quadrature is only trusted if it agrees.
    constexpr int segments = 1'000'000;
    double chord = 0.0;
    Point2 prev = cn_point(Angle(0.0), Exponent(10'000));
    for (int k = 1; k <= segments; ++k) {
        const Point2 next = cn_point(Angle(two_pi * k / segments), Exponent(10'000));
        chord += distance(prev, next);
        prev = next;
    }
    const double quad = full(10'000);
    o.require(std::abs(quad - chord) <= 1e-6, "quadrature " + format_double(quad) + " vs chords " + format_double(chord));
    o.require(quad >= 7.99 && quad < 8.0, "N = 1e4 length " + format_double(quad) + " outside [7.99, 8)");
    if (o.pass) o.detail = "L(1) = " + format_double(circle) + ", L(1e4) = " + format_double(quad) + " (chords " + format_double(chord) + ")";
    return o;
}

Outcome generalized_family()
{
    Outcome o;
    std::mt19937_64 rng(test::seed);
    std::uniform_real_distribution<double> theta(0.0, two_pi);
    double worst_push = 0.0;
    double worst_res = 0.0;
    for (int i = 0; i < 100; ++i) {
        const AffineFrame f = test::random_frame(rng);
        for (std::int64_t n : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 100, 1000, 10'000, 1'000'000}) {
            for (int j = 0; j < 8; ++j) {
                const Angle t(theta(rng));
                const Point2 p = ln_point(t, Exponent(n), f);
                const Point2 uv = forward_affine(p, f);
                const double rho = radial_factor(t, Exponent(n));
                worst_push = std::max({worst_push, std::abs(uv.x - rho * std::cos(t.radians())),
                                       std::abs(uv.y - rho * std::sin(t.radians()))});
                // Rounding the point to doubles perturbs the residual by about
                // 2N eps |A||p| / |Ap|, which reaches 1e-9 near N = 1e4 for these
                // frames; membership is asserted where that floor is below it.
                if (n <= 1000) {
                    worst_res = std::max(worst_res, std::abs(residual_log(p, Exponent(n), f)));
                }
            }
        }
    }
    o.require(worst_push <= 1e-12, "pushforward error " + fmt(worst_push) + " > 1e-12");
    o.require(worst_res <= 1e-9, "residual " + fmt(worst_res) + " > 1e-9");
    if (o.pass) o.detail = "pushforward " + fmt(worst_push) + " (N <= 1e6), residual " + fmt(worst_res) + " (N <= 1000)";
    return o;
}

Outcome limit_behaviour()
{
    Outcome o;
    const double g1 = convergence_gap(Exponent(1), {});
    o.require(std::abs(g1 - (sqrt2 - 1)) <= 1e-6, "gap(1) = " + format_double(g1));
    double previous = g1;
    for (std::int64_t n = 2; n <= 4096; n *= 2) {
        const double g = convergence_gap(Exponent(n), {});
        o.require(g <= previous, "gap increased at N = " + std::to_string(n));
        const double bound = sqrt2 * (1 - std::exp2(-1.0 / (2.0 * static_cast<double>(n))));
        o.require(g <= bound + 1e-6, "gap above bound at N = " + std::to_string(n));
        previous = g;
    }
    const double g1000 = convergence_gap(Exponent(1000), {});
    o.require(g1000 <= 1e-3, "gap(1000) = " + fmt(g1000));
    if (o.pass) o.detail = "gap(1) = " + format_double(g1) + ", gap(1000) = " + fmt(g1000);
    return o;
}

Outcome velocity_correctness()
{
    Outcome o;
    std::mt19937_64 rng(test::seed + 8);
    std::uniform_real_distribution<double> theta(0.0, two_pi);
    std::uniform_int_distribution<std::int64_t> exponent(1, 50);
    constexpr double h = 1e-6;
    double worst = 0.0;
    for (int i = 0; i < 64; ++i) {
        const double t = theta(rng);
        const Exponent n(exponent(rng));
        const Velocity v = curve_velocity(Angle(t), n);
        const Point2 a = cn_point(Angle(t - h), n);
        const Point2 b = cn_point(Angle(t + h), n);
        const Velocity fd{(b.x - a.x) / (2 * h), (b.y - a.y) / (2 * h)};
        worst = std::max(worst, std::hypot(v.dx - fd.dx, v.dy - fd.dy) / fd.norm());
    }
    o.require(worst <= 1e-6, "relative error " + fmt(worst) + " > 1e-6");
    if (o.pass) o.detail = "max relative error " + fmt(worst);
    return o;
}

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult cli_run(const std::vector<std::string>& args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

bool same_bits(double a, double b)
{
    return std::memcmp(&a, &b, sizeof a) == 0;
}

Outcome cli_contract()
{
    Outcome o;
    const auto sample = cli_run({"sample", "--n", "1", "--count", "4", "--format", "csv"});
    o.require(sample.code == 0, "sample exit " + std::to_string(sample.code));
    o.require(sample.out.rfind("theta,x,y\n0,1,0\n", 0) == 0, "first CSV data row is not 0,1,0");

    const auto arc = cli_run({"arclength", "--n", "1"});
    o.require(arc.code == 0 && arc.out == "6.283185307179586\n", "arclength printed '" + arc.out + "'");

    const auto singular = cli_run({"sample", "--n", "2", "--frame", "1,2,0,2,4,0"});
    o.require(singular.code == 2, "singular frame exit " + std::to_string(singular.code));
    o.require(singular.err.find("singular frame") != std::string::npos, "diagnostic lacks 'singular frame'");

    // CSV round trip against the JSON of the same curve, both bit-exact.
    const std::vector<std::string> common{"--n", "6", "--count", "500", "--frame", "1.5,-0.3,0.2,0.7,2.5,-1"};
    auto with = [&](std::vector<std::string> head, const std::string& format) {
        head.insert(head.end(), common.begin(), common.end());
        head.push_back("--format");
        head.push_back(format);
        return cli_run(head);
    };
    const auto csv = with({"sample"}, "csv");
    const auto json = with({"sample"}, "json");
    const auto reference = sample_uniform_theta(Exponent(6), AffineFrame(1.5, -0.3, 0.2, 0.7, 2.5, -1), 500);
    const auto rows = parse_csv(csv.out);
    o.require(rows.size() == reference.size(), "CSV row count");
    for (std::size_t i = 0; i < rows.size() && i < reference.size(); ++i) {
        o.require(same_bits(rows[i].theta, reference.thetas()[i].radians()) && same_bits(rows[i].x, reference.points()[i].x)
                      && same_bits(rows[i].y, reference.points()[i].y),
                  "CSV row " + std::to_string(i) + " not bit-exact");
    }
    try {
        const auto back = parse_json(json.out);
        o.require(emit_json(back) == json.out, "JSON re-emission differs");
        for (std::size_t i = 0; i < back.size(); ++i) {
            o.require(same_bits(back.points()[i].x, reference.points()[i].x) && same_bits(back.points()[i].y, reference.points()[i].y),
                      "JSON sample " + std::to_string(i) + " not bit-exact");
        }
    } catch (const std::exception& e) {
        o.require(false, std::string("JSON did not parse: ") + e.what());
    }

    const auto svg = cli_run({"svg", "--n", "5"});
    o.require(svg.code == 0, "svg exit " + std::to_string(svg.code));
    try {
        std::istringstream in(svg.out);
        boost::property_tree::ptree tree;
        boost::property_tree::read_xml(in, tree);
        int paths = 0;
        for (const auto& child : tree.get_child("svg.g")) {
            paths += child.first == "path" ? 1 : 0;
        }
        o.require(paths == 5, "SVG has " + std::to_string(paths) + " paths");
    } catch (const std::exception& e) {
        o.require(false, std::string("SVG is not well-formed XML: ") + e.what());
    }
    if (o.pass) o.detail = "run examples, CSV/JSON bit-exact, 5-path SVG";
    return o;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1 membership residuals", membership_residuals},
        {"2 diagonal closed form", diagonal_closed_form},
        {"3 figure nesting", figure_nesting},
        {"4 oracle equivalence", oracle_equivalence},
        {"5 arc length", arc_length_criterion},
        {"6 generalized family", generalized_family},
        {"7 limit behaviour", limit_behaviour},
        {"8 velocity correctness", velocity_correctness},
        {"9 CLI contract", cli_contract},
    };
    int failures = 0;
    for (const auto& [name, check] : criteria) {
        Outcome result;
        try {
            result = check();
        } catch (const std::exception& e) {
            result = {false, std::string("exception: ") + e.what()};
        }
        std::printf("[%s] %s: %s\n", result.pass ? "PASS" : "FAIL", name.c_str(), result.detail.c_str());
        failures += result.pass ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}

// Command-line front end: figure generation (csv/json/svg), randomized
// verification suites, and direct computations with their cross-checks.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "minkgeo/minkgeo.hpp"

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
    if (!out) throw std::runtime_error("failed writing output file: " + path);
}

double acute_fold(double half_gap) {
    double h = std::fmod(half_gap, minkgeo::pi);
    return std::min(h, minkgeo::pi - h);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"inscribed angles on circles, hyperbolae and parabolae, and the "
                 "kinematics of a uniformly accelerated observer"};
    app.require_subcommand(1);

    // ---- figure ----
    CLI::App* fig_cmd = app.add_subcommand("figure", "emit one of the six canned figures");
    int figure_id = 1;
    fig_cmd->add_option("id", figure_id, "figure number")->required()->check(CLI::Range(1, 6));
    struct ParamFlag {
        const char* name;
        double value = 0.0;
        CLI::Option* opt = nullptr;
    };
    std::vector<ParamFlag> fig_flags{{"theta0"}, {"theta1"}, {"theta2"}, {"a"},
                                     {"c"},      {"phiA"},   {"phiB"},   {"tauE"}};
    for (ParamFlag& f : fig_flags)
        f.opt = fig_cmd->add_option(std::string("--") + f.name, f.value,
                                    std::string("override figure parameter ") + f.name);
    std::string fig_format = "csv";
    fig_cmd->add_option("--format", fig_format, "output format")
        ->check(CLI::IsMember({"csv", "json", "svg"}));
    std::string fig_out;
    fig_cmd->add_option("--out", fig_out, "output path (default: stdout)");

    // ---- verify ----
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "run the randomized verification batteries");
    std::string suite_name = "all";
    verify_cmd->add_option("suite", suite_name, "property suite")
        ->check(CLI::IsMember({"all", "metric", "conics", "theorems", "kinematics", "limits"}));
    std::uint64_t seed = 42;
    verify_cmd->add_option("--seed", seed, "deterministic seed");
    std::size_t samples = 1000;
    verify_cmd->add_option("--samples", samples, "samples per randomized property");

    // ---- compute ----
    CLI::App* compute_cmd = app.add_subcommand("compute", "one-off computations with cross-checks");
    compute_cmd->require_subcommand(1);

    CLI::App* angle_cmd = compute_cmd->add_subcommand(
        "angle", "inscribed angle from coordinates vs the closed form");
    double a_theta0 = 0.7, a_theta1 = 1.0, a_theta2 = -1.0, a_a = 1.0, a_c = 100.0;
    std::string a_curve = "hyperbola", a_sig = "minkowski";
    angle_cmd->add_option("--theta0", a_theta0, "apex parameter");
    angle_cmd->add_option("--theta1", a_theta1, "first endpoint parameter");
    angle_cmd->add_option("--theta2", a_theta2, "second endpoint parameter");
    angle_cmd->add_option("--curve", a_curve, "curve family")
        ->check(CLI::IsMember({"hyperbola", "circle", "parabola"}));
    angle_cmd->add_option("--a", a_a, "acceleration (parabola only)");
    angle_cmd->add_option("--c", a_c, "signal speed (parabola only)");
    angle_cmd->add_option("--signature", a_sig, "metric signature (parabola only)")
        ->check(CLI::IsMember({"minkowski", "euclidean"}));

    CLI::App* gap_cmd = compute_cmd->add_subcommand(
        "gap", "proper-time gap between two catch-up events, closed form vs bisection");
    double g_a = 1.0, g_c = 1.0, g_tauE = 0.0, g_phiA = 1.0, g_phiB = 0.5;
    gap_cmd->add_option("--a", g_a, "proper acceleration");
    gap_cmd->add_option("--c", g_c, "signal speed");
    gap_cmd->add_option("--tauE", g_tauE, "ejection proper time");
    gap_cmd->add_option("--phiA", g_phiA, "first relative rapidity")->required();
    gap_cmd->add_option("--phiB", g_phiB, "second relative rapidity")->required();

    CLI::App* newton_cmd = compute_cmd->add_subcommand(
        "newton", "nonrelativistic catch-up gap, closed form vs explicit intersection");
    double n_a = 1.0, n_alpha = 3.0, n_beta = 1.0;
    newton_cmd->add_option("--a", n_a, "acceleration");
    newton_cmd->add_option("--alpha", n_alpha, "faster ejection speed")->required();
    newton_cmd->add_option("--beta", n_beta, "slower ejection speed")->required();

    CLI::App* limit_cmd = compute_cmd->add_subcommand(
        "limit", "parabola pseudo-angle against its large-c asymptote");
    double l_a = 1.0, l_theta0 = 0.0, l_theta1 = 1.0, l_theta2 = -1.0;
    std::vector<double> l_cs{10, 20, 40, 80, 160};
    limit_cmd->add_option("--a", l_a, "acceleration");
    limit_cmd->add_option("--theta0", l_theta0, "apex parameter");
    limit_cmd->add_option("--theta1", l_theta1, "first endpoint parameter");
    limit_cmd->add_option("--theta2", l_theta2, "second endpoint parameter");
    limit_cmd->add_option("--c-list", l_cs, "comma-separated signal speeds")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(fig_cmd)) {
            std::map<std::string, double> overrides;
            for (const ParamFlag& f : fig_flags)
                if (f.opt->count() > 0) overrides[f.name] = f.value;
            minkgeo::figures::FigureData fig = minkgeo::figures::build_figure(figure_id, overrides);
            write_output(fig_out,
                         minkgeo::figures::render(fig, minkgeo::figures::parse_format(fig_format)));
            return 0;
        }

        if (app.got_subcommand(verify_cmd)) {
            minkgeo::verify::Suite suite = minkgeo::verify::parse_suite(suite_name);
            std::vector<minkgeo::verify::PropertyResult> results =
                minkgeo::verify::run_suite(suite, seed, samples);
            std::cout << minkgeo::verify::render_report(suite, seed, samples, results);
            for (const auto& r : results)
                if (!r.pass) return 1;
            return 0;
        }

        if (compute_cmd->got_subcommand(angle_cmd)) {
            double computed = 0.0, closed = 0.0;
            if (a_curve == "hyperbola") {
                computed = minkgeo::inscribed_angle(
                               {minkgeo::ConicSpec::unit_hyperbola(), a_theta0, a_theta1, a_theta2})
                               .value;
                closed = 0.5 * std::fabs(a_theta1 - a_theta2);
            } else if (a_curve == "circle") {
                computed = minkgeo::inscribed_angle(
                               {minkgeo::ConicSpec::unit_circle(), a_theta0, a_theta1, a_theta2})
                               .value;
                closed = acute_fold(0.5 * std::fabs(a_theta1 - a_theta2));
            } else {
                minkgeo::Signature sig = a_sig == "euclidean" ? minkgeo::Signature::Euclidean
                                                              : minkgeo::Signature::Minkowski;
                minkgeo::ConicSpec spec = minkgeo::ConicSpec::parabola(a_a);
                minkgeo::Vec2 p0 = minkgeo::conic_point(spec, a_theta0).point;
                minkgeo::Vec2 p1 = minkgeo::conic_point(spec, a_theta1).point;
                minkgeo::Vec2 p2 = minkgeo::conic_point(spec, a_theta2).point;
                computed = minkgeo::angle_between(p1 - p0, p2 - p0,
                                                  minkgeo::Metric(sig, a_c))
                               .value;
                closed = minkgeo::parabola_pseudo_angle(a_a, a_c, a_theta0, a_theta1, a_theta2, sig)
                             .value;
                std::cout << "small_angle_value="
                          << fmt17(0.5 * (a_a / a_c) * std::fabs(a_theta1 - a_theta2)) << "\n";
            }
            std::cout << "curve=" << a_curve << " computed=" << fmt17(computed)
                      << " closed_form=" << fmt17(closed)
                      << " abs_diff=" << fmt17(std::fabs(computed - closed)) << "\n";
            return 0;
        }

        if (compute_cmd->got_subcommand(gap_cmd)) {
            minkgeo::ObserverTrajectory traj(g_a, g_c, 0.0);
            double closed = minkgeo::proper_time_gap(traj, g_tauE, g_phiA, g_phiB);
            minkgeo::Worldline wa = minkgeo::eject(traj, g_tauE, g_phiA);
            minkgeo::Worldline wb = minkgeo::eject(traj, g_tauE, g_phiB);
            double ta = *minkgeo::numeric_collision_oracle(
                             traj, wa, minkgeo::default_oracle_bracket(traj, g_tauE, g_phiA))
                             .tau;
            double tb = *minkgeo::numeric_collision_oracle(
                             traj, wb, minkgeo::default_oracle_bracket(traj, g_tauE, g_phiB))
                             .tau;
            double numeric = ta - tb;
            double rapidity_route = (2.0 * g_c / g_a) * (g_phiA - g_phiB);
            std::cout << "closed_form=" << fmt17(closed) << " numeric=" << fmt17(numeric)
                      << " rapidity_route=" << fmt17(rapidity_route)
                      << " abs_diff=" << fmt17(std::fabs(closed - numeric)) << "\n";
            return 0;
        }

        if (compute_cmd->got_subcommand(newton_cmd)) {
            double closed = minkgeo::newtonian_collision_gap(n_a, n_alpha, n_beta);
            // quadratic-formula route: nonzero root of (a/2) t^2 - v t = 0 per ejection
            auto root = [&](double v) {
                double b = -v;
                return (-b + std::sqrt(b * b)) / n_a;
            };
            double explicit_gap = root(n_alpha) - root(n_beta);
            std::cout << "closed_form=" << fmt17(closed)
                      << " explicit_intersection=" << fmt17(explicit_gap)
                      << " abs_diff=" << fmt17(std::fabs(closed - explicit_gap)) << "\n";
            return 0;
        }

        if (compute_cmd->got_subcommand(limit_cmd)) {
            for (minkgeo::Signature sig :
                 {minkgeo::Signature::Minkowski, minkgeo::Signature::Euclidean}) {
                minkgeo::LimitScan scan =
                    minkgeo::limit_scan(l_a, l_theta0, l_theta1, l_theta2, sig, l_cs);
                std::cout << "signature="
                          << (sig == minkgeo::Signature::Minkowski ? "minkowski" : "euclidean")
                          << " fitted_order=" << fmt17(scan.fitted_order) << "\n";
                for (std::size_t i = 0; i < scan.c_values.size(); ++i)
                    std::cout << "c=" << fmt17(scan.c_values[i])
                              << " angle=" << fmt17(scan.angles[i])
                              << " asymptote_ratio=" << fmt17(scan.asymptote_ratio[i]) << "\n";
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::cerr << "error: no subcommand selected\n";
    return 2;
}

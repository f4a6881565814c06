#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "minkgeo/conics.hpp"
#include "minkgeo/kinematics.hpp"
#include "minkgeo/theorems.hpp"

namespace minkgeo::figures {

enum class Format { Csv, Json, Svg };

/// One named polyline / point list. Points carry the curve parameter they
/// came from; straight segments reuse the parameters of their endpoints.
struct FigureSeries {
    std::string name;
    std::vector<ParamPoint> points;
};

/// Fully resolved figure: parameters after defaults, the sampled series, and
/// the computed scalars the figure is meant to illustrate. Rendering any
/// FigureData twice gives byte-identical output.
struct FigureData {
    int figure_id = 0;
    std::string name;
    bool spacetime_axes = false;  // true: x1 horizontal / x0 vertical, false: (x0, x1)
    std::map<std::string, double> params;
    std::vector<std::pair<std::string, double>> metadata;
    std::vector<FigureSeries> series;
};

namespace detail {

inline std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline std::string fmt6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

inline std::string fmt_px(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

constexpr std::size_t curve_samples = 512;

inline FigureSeries sample_curve(const std::string& name, const ConicSpec& spec, double lo,
                                 double hi) {
    FigureSeries s{name, {}};
    s.points.reserve(curve_samples);
    if (spec.kind() == ConicKind::UnitCircle) {
        for (std::size_t i = 0; i < curve_samples; ++i)
            s.points.push_back(conic_point(spec, two_pi * static_cast<double>(i) /
                                                     static_cast<double>(curve_samples)));
        return s;
    }
    for (std::size_t i = 0; i < curve_samples; ++i) {
        double t = lo + (hi - lo) * static_cast<double>(i) /
                            static_cast<double>(curve_samples - 1);
        s.points.push_back(conic_point(spec, t));
    }
    return s;
}

inline FigureSeries segment(const std::string& name, const ParamPoint& p0, const ParamPoint& p1) {
    return {name, {p0, p1}};
}

inline std::map<std::string, double> resolve_params(int figure_id,
                                                    const std::map<std::string, double>& defaults,
                                                    const std::map<std::string, double>& overrides) {
    std::map<std::string, double> out = defaults;
    for (const auto& [key, value] : overrides) {
        auto it = out.find(key);
        if (it == out.end()) {
            std::string allowed;
            for (const auto& [k, v] : defaults) allowed += (allowed.empty() ? "" : ", ") + k;
            throw std::invalid_argument("figure " + std::to_string(figure_id) +
                                        " does not take parameter '" + key +
                                        "' (allowed: " + allowed + ")");
        }
        it->second = value;
    }
    return out;
}

inline double span_lo(std::initializer_list<double> xs) { return std::min(xs); }
inline double span_hi(std::initializer_list<double> xs) { return std::max(xs); }

} // namespace detail

inline const char* figure_name(int id) {
    switch (id) {
    case 1: return "hyperbola-inscribed-angle";
    case 2: return "hyperbola-thales";
    case 3: return "circle-rotated-pencil";
    case 4: return "hyperbola-boosted-pencil";
    case 5: return "ejection-collision-worldlines";
    case 6: return "parabola-chord-angle";
    }
    throw std::invalid_argument("figure id must be 1..6, got " + std::to_string(id));
}

/// Build one of the six canned figures. `overrides` may remap any key the
/// figure declares a default for; unknown keys are rejected.
inline FigureData build_figure(int figure_id, const std::map<std::string, double>& overrides) {
    using namespace detail;
    FigureData fig;
    fig.figure_id = figure_id;
    fig.name = figure_name(figure_id);

    switch (figure_id) {
    case 1: {
        // Angle at a movable apex subtending a fixed chord of the unit
        // hyperbola; the measure is half the parameter gap, apex-independent.
        fig.params = resolve_params(figure_id,
                                    {{"theta0", 0.7}, {"theta1", 1.0}, {"theta2", -1.0}},
                                    overrides);
        double t0 = fig.params.at("theta0"), t1 = fig.params.at("theta1"),
               t2 = fig.params.at("theta2");
        ConicSpec spec = ConicSpec::unit_hyperbola();
        fig.spacetime_axes = true;
        double lo = span_lo({t0, t1, t2}) - 1.0, hi = span_hi({t0, t1, t2}) + 1.0;
        fig.series.push_back(sample_curve("curve", spec, lo, hi));
        ParamPoint p0 = conic_point(spec, t0), p1 = conic_point(spec, t1),
                   p2 = conic_point(spec, t2);
        fig.series.push_back(segment("chord-01", p0, p1));
        fig.series.push_back(segment("chord-02", p0, p2));
        fig.series.push_back(segment("subtended-chord", p1, p2));
        fig.metadata.emplace_back("inscribed_angle",
                                  inscribed_angle({spec, t0, t1, t2}).value);
        fig.metadata.emplace_back("half_parameter_gap", 0.5 * std::fabs(t1 - t2));
        fig.metadata.emplace_back("central_angle", central_angle(t1, t2).value);
        return fig;
    }
    case 2: {
        // Right pseudo-angle subtended by a diameter: the chords from the
        // apex to the two ends of a diameter are Minkowski-orthogonal.
        fig.params = resolve_params(figure_id, {{"theta0", 0.7}, {"theta1", 1.0}}, overrides);
        double t0 = fig.params.at("theta0"), t1 = fig.params.at("theta1");
        ConicSpec spec = ConicSpec::unit_hyperbola();
        fig.spacetime_axes = true;
        double reach = span_hi({std::fabs(t0), std::fabs(t1)}) + 1.0;
        fig.series.push_back(sample_curve("curve", spec, -reach, reach));
        FigureSeries mirror{"mirror-curve", {}};
        mirror.points.reserve(curve_samples);
        for (std::size_t i = 0; i < curve_samples; ++i) {
            double t = -reach + 2.0 * reach * static_cast<double>(i) /
                                    static_cast<double>(curve_samples - 1);
            mirror.points.push_back({t, Vec2(std::sinh(t), -std::cosh(t))});
        }
        fig.series.push_back(std::move(mirror));
        ParamPoint p0 = conic_point(spec, t0), p1 = conic_point(spec, t1);
        ParamPoint p1m{-t1, Vec2(-p1.point.x0, -p1.point.x1)};
        fig.series.push_back(segment("diameter", p1, p1m));
        fig.series.push_back(segment("leg-0", p0, p1));
        fig.series.push_back(segment("leg-1", p0, p1m));
        fig.metadata.emplace_back("orthogonality_residual", thales_residual(t0, t1));
        return fig;
    }
    case 3:
    case 4: {
        // Pencil of chord pairs sharing an apex: the far endpoints slide by
        // 2*phiA per step (a rotation on the circle, a boost on the
        // hyperbola) and the subtended angle stays put.
        fig.params = resolve_params(
            figure_id,
            {{"theta0", 0.7}, {"theta1", 1.0}, {"theta2", -1.0}, {"phiA", 0.3}}, overrides);
        double t0 = fig.params.at("theta0"), t1 = fig.params.at("theta1"),
               t2 = fig.params.at("theta2"), psi = fig.params.at("phiA");
        ConicSpec spec = figure_id == 3 ? ConicSpec::unit_circle() : ConicSpec::unit_hyperbola();
        fig.spacetime_axes = figure_id == 4;
        double shift_max = 2.0 * 2.0 * std::fabs(psi);
        double lo = span_lo({t0, t1, t2, t1 + shift_max, t2 + shift_max,
                             t1 - shift_max, t2 - shift_max}) - 1.0;
        double hi = span_hi({t0, t1, t2, t1 + shift_max, t2 + shift_max,
                             t1 - shift_max, t2 - shift_max}) + 1.0;
        fig.series.push_back(sample_curve("curve", spec, lo, hi));
        ParamPoint p0 = conic_point(spec, t0);
        for (int k = 0; k < 3; ++k) {
            double shift = 2.0 * psi * static_cast<double>(k);
            ParamPoint pa = conic_point(spec, t1 + shift);
            ParamPoint pb = conic_point(spec, t2 + shift);
            std::string suffix = std::to_string(k);
            fig.series.push_back(segment("pencil-" + suffix + "-chord-1", p0, pa));
            fig.series.push_back(segment("pencil-" + suffix + "-chord-2", p0, pb));
            fig.metadata.emplace_back(
                "inscribed_angle_" + suffix,
                inscribed_angle({spec, t0, t1 + shift, t2 + shift}).value);
        }
        return fig;
    }
    case 5: {
        // Uniformly accelerated observer, two ejections at the same proper
        // time, straight ejecta worldlines back to their catch-up events.
        fig.params = resolve_params(
            figure_id,
            {{"a", 1.0}, {"c", 1.0}, {"tauE", 0.0}, {"phiA", 1.0}, {"phiB", 0.5}}, overrides);
        ObserverTrajectory traj(fig.params.at("a"), fig.params.at("c"), 0.0);
        double tau_e = fig.params.at("tauE");
        double rel_a = fig.params.at("phiA"), rel_b = fig.params.at("phiB");
        Worldline wa = eject(traj, tau_e, rel_a);
        Worldline wb = eject(traj, tau_e, rel_b);
        Event ca = collision(traj, wa), cb = collision(traj, wb);
        fig.spacetime_axes = true;
        double lo_tau = span_lo({tau_e, 0.0, *ca.tau, *cb.tau});
        double hi_tau = span_hi({tau_e, 0.0, *ca.tau, *cb.tau});
        double pad = std::max(0.5, 0.25 * (hi_tau - lo_tau));
        fig.series.push_back(
            sample_curve("observer", traj.conic(), lo_tau - pad, hi_tau + pad));
        ParamPoint pe{tau_e, observer_event(traj, tau_e).point};
        fig.series.push_back(segment("ejecta-fast", pe, {*ca.tau, ca.point}));
        fig.series.push_back(segment("ejecta-slow", pe, {*cb.tau, cb.point}));
        fig.metadata.emplace_back("lab_rapidity_fast", wa.lab_rapidity);
        fig.metadata.emplace_back("lab_rapidity_slow", wb.lab_rapidity);
        fig.metadata.emplace_back("tau_collision_fast", *ca.tau);
        fig.metadata.emplace_back("tau_collision_slow", *cb.tau);
        fig.metadata.emplace_back("proper_time_gap",
                                  proper_time_gap(traj, tau_e, rel_a, rel_b));
        return fig;
    }
    case 6: {
        // Parabola chord construction: the two gradients through the apex
        // recover the far-endpoint parameter gap, and the finite-speed
        // pseudo-angle sits near its small-angle value.
        fig.params = resolve_params(figure_id,
                                    {{"theta0", 0.7},
                                     {"theta1", 1.0},
                                     {"theta2", -1.0},
                                     {"a", 1.0},
                                     {"c", 100.0}},
                                    overrides);
        double t0 = fig.params.at("theta0"), t1 = fig.params.at("theta1"),
               t2 = fig.params.at("theta2");
        double a = fig.params.at("a"), c = fig.params.at("c");
        ConicSpec spec = ConicSpec::parabola(a);
        fig.spacetime_axes = true;
        double lo = span_lo({t0, t1, t2}) - 1.0, hi = span_hi({t0, t1, t2}) + 1.0;
        fig.series.push_back(sample_curve("curve", spec, lo, hi));
        ParamPoint p0 = conic_point(spec, t0), p1 = conic_point(spec, t1),
                   p2 = conic_point(spec, t2);
        fig.series.push_back(segment("chord-01", p0, p1));
        fig.series.push_back(segment("chord-02", p0, p2));
        fig.series.push_back(segment("subtended-chord", p1, p2));
        double g1 = chord_gradient(spec, t0, t1).value;
        double g2 = chord_gradient(spec, t0, t2).value;
        fig.metadata.emplace_back("gradient_1", g1);
        fig.metadata.emplace_back("gradient_2", g2);
        fig.metadata.emplace_back("reconstructed_gap",
                                  std::fabs(2.0 / (a * g1) - 2.0 / (a * g2)));
        fig.metadata.emplace_back(
            "pseudo_angle_minkowski",
            parabola_pseudo_angle(a, c, t0, t1, t2, Signature::Minkowski).value);
        fig.metadata.emplace_back(
            "pseudo_angle_euclidean",
            parabola_pseudo_angle(a, c, t0, t1, t2, Signature::Euclidean).value);
        fig.metadata.emplace_back("small_angle_value",
                                  0.5 * (a / c) * std::fabs(t1 - t2));
        return fig;
    }
    default:
        throw std::invalid_argument("figure id must be 1..6, got " + std::to_string(figure_id));
    }
}

/// Comment header with parameters and computed values, then one row per
/// sampled point: series name, curve parameter, time-slot and space-slot
/// coordinates, all doubles with 17 significant digits.
inline std::string render_csv(const FigureData& fig) {
    using detail::fmt17;
    std::string out = "# figure=" + std::to_string(fig.figure_id) + " name=" + fig.name + "\n";
    for (const auto& [k, v] : fig.params) out += "# param " + k + "=" + fmt17(v) + "\n";
    for (const auto& [k, v] : fig.metadata) out += "# meta " + k + "=" + fmt17(v) + "\n";
    out += "series,theta,t,x\n";
    for (const FigureSeries& s : fig.series)
        for (const ParamPoint& p : s.points)
            out += s.name + "," + fmt17(p.theta) + "," + fmt17(p.point.x0) + "," +
                   fmt17(p.point.x1) + "\n";
    return out;
}

inline std::string render_json(const FigureData& fig) {
    using detail::fmt17;
    std::string out = "{\n";
    out += "  \"figure\": " + std::to_string(fig.figure_id) + ",\n";
    out += "  \"name\": \"" + fig.name + "\",\n";
    out += "  \"spacetime_axes\": " + std::string(fig.spacetime_axes ? "true" : "false") + ",\n";
    out += "  \"params\": {";
    bool first = true;
    for (const auto& [k, v] : fig.params) {
        out += std::string(first ? "" : ", ") + "\"" + k + "\": " + fmt17(v);
        first = false;
    }
    out += "},\n  \"metadata\": {";
    first = true;
    for (const auto& [k, v] : fig.metadata) {
        out += std::string(first ? "" : ", ") + "\"" + k + "\": " + fmt17(v);
        first = false;
    }
    out += "},\n  \"series\": [\n";
    for (std::size_t i = 0; i < fig.series.size(); ++i) {
        const FigureSeries& s = fig.series[i];
        out += "    {\"name\": \"" + s.name + "\", \"points\": [";
        for (std::size_t j = 0; j < s.points.size(); ++j) {
            const ParamPoint& p = s.points[j];
            out += std::string(j ? ", " : "") + "{\"theta\": " + fmt17(p.theta) +
                   ", \"t\": " + fmt17(p.point.x0) + ", \"x\": " + fmt17(p.point.x1) + "}";
        }
        out += "]}";
        out += (i + 1 < fig.series.size()) ? ",\n" : "\n";
    }
    out += "  ]\n}\n";
    return out;
}

/// Fixed-size schematic. Horizontal axis is the space slot when
/// spacetime_axes is set, the first coordinate otherwise; vertical axis
/// grows upward. Uniform scale, so circles stay round.
inline std::string render_svg(const FigureData& fig) {
    using detail::fmt6;
    using detail::fmt_px;
    const double width = 800, height = 600, margin = 70;
    auto plot_h = [&](const Vec2& p) { return fig.spacetime_axes ? p.x1 : p.x0; };
    auto plot_v = [&](const Vec2& p) { return fig.spacetime_axes ? p.x0 : p.x1; };

    double hmin = 0, hmax = 0, vmin = 0, vmax = 0;
    bool any = false;
    for (const FigureSeries& s : fig.series)
        for (const ParamPoint& p : s.points) {
            double h = plot_h(p.point), v = plot_v(p.point);
            if (!any) {
                hmin = hmax = h;
                vmin = vmax = v;
                any = true;
            }
            hmin = std::min(hmin, h);
            hmax = std::max(hmax, h);
            vmin = std::min(vmin, v);
            vmax = std::max(vmax, v);
        }
    if (!any) throw std::logic_error("render_svg: figure has no points");
    double hspan = std::max(hmax - hmin, 1e-9), vspan = std::max(vmax - vmin, 1e-9);
    double scale = std::min((width - 2 * margin) / hspan, (height - 2 * margin) / vspan);
    double hmid = 0.5 * (hmin + hmax), vmid = 0.5 * (vmin + vmax);
    auto px = [&](double h) { return width / 2 + (h - hmid) * scale; };
    auto py = [&](double v) { return height / 2 - (v - vmid) * scale; };

    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#e377c2", "#7f7f7f"};
    const std::size_t palette_n = sizeof(palette) / sizeof(palette[0]);

    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" "
                      "viewBox=\"0 0 800 600\">\n";
    out += "<rect width=\"800\" height=\"600\" fill=\"#ffffff\"/>\n";
    // axes through the origin when visible
    if (hmin <= 0 && hmax >= 0)
        out += "<line x1=\"" + fmt_px(px(0)) + "\" y1=\"" + fmt_px(margin / 2) + "\" x2=\"" +
               fmt_px(px(0)) + "\" y2=\"" + fmt_px(height - margin / 2) +
               "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
    if (vmin <= 0 && vmax >= 0)
        out += "<line x1=\"" + fmt_px(margin / 2) + "\" y1=\"" + fmt_px(py(0)) + "\" x2=\"" +
               fmt_px(width - margin / 2) + "\" y2=\"" + fmt_px(py(0)) +
               "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";

    for (std::size_t i = 0; i < fig.series.size(); ++i) {
        const FigureSeries& s = fig.series[i];
        const char* color = palette[i % palette_n];
        bool is_curve = s.points.size() > 8;
        out += "<polyline fill=\"none\" stroke=\"";
        out += color;
        out += "\" stroke-width=\"";
        out += is_curve ? "2" : "1.5";
        out += "\" points=\"";
        for (const ParamPoint& p : s.points)
            out += fmt_px(px(plot_h(p.point))) + "," + fmt_px(py(plot_v(p.point))) + " ";
        if (is_curve && fig.figure_id == 3)  // close the circle
            out += fmt_px(px(plot_h(s.points.front().point))) + "," +
                   fmt_px(py(plot_v(s.points.front().point)));
        out += "\"/>\n";
        if (!is_curve)
            for (const ParamPoint& p : s.points)
                out += "<circle cx=\"" + fmt_px(px(plot_h(p.point))) + "\" cy=\"" +
                       fmt_px(py(plot_v(p.point))) + "\" r=\"3.5\" fill=\"" + color + "\"/>\n";
    }

    out += "<text x=\"400\" y=\"28\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"18\" fill=\"#000000\">" +
           fig.name + "</text>\n";
    double ty = 48;
    for (std::size_t i = 0; i < fig.series.size(); ++i) {
        out += "<text x=\"12\" y=\"" + fmt_px(ty) +
               "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"" +
               palette[i % palette_n] + "\">" + fig.series[i].name + "</text>\n";
        ty += 14;
    }
    double by = height - 12 - 14.0 * static_cast<double>(fig.metadata.size() - 1);
    for (const auto& [k, v] : fig.metadata) {
        out += "<text x=\"12\" y=\"" + fmt_px(by) +
               "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#333333\">" + k + " = " +
               fmt6(v) + "</text>\n";
        by += 14;
    }
    out += "</svg>\n";
    return out;
}

inline std::string render(const FigureData& fig, Format format) {
    switch (format) {
    case Format::Csv: return render_csv(fig);
    case Format::Json: return render_json(fig);
    case Format::Svg: return render_svg(fig);
    }
    throw std::logic_error("render: unreachable");
}

inline Format parse_format(const std::string& s) {
    if (s == "csv") return Format::Csv;
    if (s == "json") return Format::Json;
    if (s == "svg") return Format::Svg;
    throw std::invalid_argument("unknown format: " + s + " (expected csv, json, or svg)");
}

} // namespace minkgeo::figures

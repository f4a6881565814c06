#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "minkgeo/conics.hpp"
#include "minkgeo/isometry.hpp"
#include "minkgeo/metric.hpp"
#include "minkgeo/numeric.hpp"

namespace minkgeo {

/// Apex point P0 and two further points P1, P2 on the same unit conic.
/// Parameters must be pairwise distinct (circle: distinct mod two_pi).
struct InscribedConfig {
    ConicSpec spec = ConicSpec::unit_hyperbola();
    double theta0 = 0.0;
    double theta1 = 0.0;
    double theta2 = 0.0;
};

namespace detail {

inline void require_unit_conic(const ConicSpec& spec, const char* where) {
    if (spec.kind() != ConicKind::UnitCircle && spec.kind() != ConicKind::UnitHyperbola)
        throw std::invalid_argument(std::string(where) + ": supports UnitCircle and UnitHyperbola only");
}

inline void require_distinct(const InscribedConfig& cfg, const char* where) {
    bool circle = cfg.spec.kind() == ConicKind::UnitCircle;
    auto same = [circle](double u, double v) {
        return circle ? circle_param_distance(u, v) == 0.0 : u == v;
    };
    if (same(cfg.theta0, cfg.theta1) || same(cfg.theta0, cfg.theta2) || same(cfg.theta1, cfg.theta2))
        throw std::invalid_argument(std::string(where) + ": parameters must be pairwise distinct");
}

} // namespace detail

/// Angle at P0 between the chords P0P1 and P0P2, computed from the chord
/// displacement vectors with angle_between under the conic's own metric
/// (circle: Euclidean, hyperbola: unit-c Minkowski). The inscribed angle
/// theorem makes this |theta1 - theta2| / 2 independently of theta0
/// (circle: the acute representative of it).
inline AngleMeasure inscribed_angle(const InscribedConfig& cfg) {
    detail::require_unit_conic(cfg.spec, "inscribed_angle");
    detail::require_distinct(cfg, "inscribed_angle");
    Vec2 p0 = conic_point(cfg.spec, cfg.theta0).point;
    Vec2 p1 = conic_point(cfg.spec, cfg.theta1).point;
    Vec2 p2 = conic_point(cfg.spec, cfg.theta2).point;
    Metric m = cfg.spec.kind() == ConicKind::UnitCircle ? Metric::euclidean() : Metric::minkowski();
    return angle_between(p1 - p0, p2 - p0, m);
}

/// Pseudo-angle at the center between OP1 and OP2 on the unit hyperbola;
/// equals |theta1 - theta2|, twice any inscribed pseudo-angle over the same
/// chord P1P2.
inline AngleMeasure central_angle(double theta1, double theta2) {
    if (theta1 == theta2)
        throw std::invalid_argument("central_angle: parameters must be distinct");
    ConicSpec h = ConicSpec::unit_hyperbola();
    Vec2 p1 = conic_point(h, theta1).point;
    Vec2 p2 = conic_point(h, theta2).point;
    return angle_between(p1, p2, Metric::minkowski());
}

/// Minkowski inner product of the chord vectors P0P1 and P0P1' where
/// P1' = -P1 is the antipode on the opposite branch. P0P1' subtends the
/// diameter, so the two chords are pseudo-orthogonal and the residual
/// vanishes identically; it is computed from the point coordinates.
inline double thales_residual(double theta0, double theta1) {
    if (theta0 == theta1)
        throw std::invalid_argument("thales_residual: parameters must be distinct");
    ConicSpec h = ConicSpec::unit_hyperbola();
    Vec2 p0 = conic_point(h, theta0).point;
    Vec2 p1 = conic_point(h, theta1).point;
    Vec2 p1m = -p1;
    return inner(p1 - p0, p1m - p0, Metric::minkowski());
}

/// Applies the conic's isometry (circle: rotation, hyperbola: boost) with
/// parameter phi to the three points and recovers the new curve parameters
/// from the transformed coordinates. Every parameter shifts by phi (circle:
/// mod two_pi) and the inscribed angle is unchanged.
inline InscribedConfig rotate_config(const InscribedConfig& cfg, double phi) {
    detail::require_unit_conic(cfg.spec, "rotate_config");
    detail::require_distinct(cfg, "rotate_config");
    bool circle = cfg.spec.kind() == ConicKind::UnitCircle;
    Isometry2 iso = make_isometry(circle ? IsometryKind::Rotation : IsometryKind::Boost, phi);
    auto moved = [&](double theta) {
        Vec2 q = apply_isometry(iso, conic_point(cfg.spec, theta).point);
        return circle ? detail::mod_two_pi(std::atan2(q.x1, q.x0)) : std::asinh(q.x0);
    };
    return {cfg.spec, moved(cfg.theta0), moved(cfg.theta1), moved(cfg.theta2)};
}

/// Finite-c angle between the chords P0P1 and P0P2 of the parabola
/// x = a t^2 / 2, measured with the metric ds^2 = -c^2 dt^2 + dx^2
/// (Minkowski) or ds^2 = c^2 dt^2 + dx^2 (Euclidean). With the chord
/// slopes G_i = Dx/Dt = a (theta0 + theta_i) / 2 the closed form is
///   cosh^2 theta = (G1 G2 - c^2)^2 / ((G1^2 - c^2)(G2^2 - c^2))
///   cos^2  theta = (G1 G2 + c^2)^2 / ((G1^2 + c^2)(G2^2 + c^2))
/// evaluated through the cancellation-free rearrangements
///   sinh^2 theta = c^2 (G1 - G2)^2 / ((G1^2 - c^2)(G2^2 - c^2))
///   sin^2  theta = c^2 (G1 - G2)^2 / ((G1^2 + c^2)(G2^2 + c^2)).
/// As c grows the value approaches (a / (2c)) |theta1 - theta2| from either
/// signature. Minkowski requires both chords timelike (G_i^2 < c^2).
inline AngleMeasure parabola_pseudo_angle(double a, double c, double theta0, double theta1,
                                          double theta2, Signature signature) {
    detail::require_finite(a, "parabola_pseudo_angle: a");
    detail::require_finite(c, "parabola_pseudo_angle: c");
    detail::require_finite(theta0, "parabola_pseudo_angle: theta0");
    detail::require_finite(theta1, "parabola_pseudo_angle: theta1");
    detail::require_finite(theta2, "parabola_pseudo_angle: theta2");
    if (a <= 0.0) throw std::invalid_argument("parabola_pseudo_angle: a must be > 0");
    if (c <= 0.0) throw std::invalid_argument("parabola_pseudo_angle: c must be > 0");
    if (theta0 + theta1 == 0.0 || theta0 + theta2 == 0.0)
        throw std::invalid_argument("parabola_pseudo_angle: vertical chord (theta0 + theta_i = 0)");
    if (theta0 == theta1 || theta0 == theta2)
        throw std::invalid_argument("parabola_pseudo_angle: degenerate chord");
    double g1 = 0.5 * a * (theta0 + theta1);
    double g2 = 0.5 * a * (theta0 + theta2);
    double dg = g1 - g2;
    if (signature == Signature::Minkowski) {
        if (g1 * g1 >= c * c || g2 * g2 >= c * c)
            throw std::invalid_argument("parabola_pseudo_angle: chord not timelike for this c");
        double denom = (g1 * g1 - c * c) * (g2 * g2 - c * c);
        return {std::asinh(c * std::fabs(dg) / std::sqrt(denom)), AngleKind::PseudoAngle};
    }
    double denom = (g1 * g1 + c * c) * (g2 * g2 + c * c);
    return {detail::clamped_asin(c * std::fabs(dg) / std::sqrt(denom)), AngleKind::CircularAngle};
}

/// parabola_pseudo_angle swept over an ascending grid of c values, with
/// each angle divided by its degenerate-limit prediction
/// (a / (2c)) |theta1 - theta2| and the decay order of |ratio - 1| fitted
/// as the least-squares slope of log |ratio - 1| against log c over the
/// last ceil(n/2) grid points (the limit regime; expected slope -2).
struct LimitScan {
    std::vector<double> c_values;
    std::vector<double> angles;
    std::vector<double> asymptote_ratio;
    double fitted_order = 0.0;
};

inline LimitScan limit_scan(double a, double theta0, double theta1, double theta2,
                            Signature signature, const std::vector<double>& c_values) {
    if (c_values.size() < 2)
        throw std::invalid_argument("limit_scan: need at least two c values");
    for (std::size_t i = 0; i < c_values.size(); ++i) {
        detail::require_finite(c_values[i], "limit_scan: c");
        if (c_values[i] <= 0.0) throw std::invalid_argument("limit_scan: c values must be > 0");
        if (i > 0 && c_values[i] <= c_values[i - 1])
            throw std::invalid_argument("limit_scan: c values must be strictly ascending");
    }
    if (theta1 == theta2)
        throw std::invalid_argument("limit_scan: theta1 and theta2 must be distinct");
    LimitScan scan;
    scan.c_values = c_values;
    double delta = std::fabs(theta1 - theta2);
    for (double c : c_values) {
        double angle = parabola_pseudo_angle(a, c, theta0, theta1, theta2, signature).value;
        scan.angles.push_back(angle);
        scan.asymptote_ratio.push_back(angle / (0.5 * a * delta / c));
    }
    // least-squares slope over the tail of (log c, log |ratio - 1|)
    std::size_t n = c_values.size();
    std::size_t tail = (n + 1) / 2;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t used = 0;
    for (std::size_t i = n - tail; i < n; ++i) {
        double dev = std::fabs(scan.asymptote_ratio[i] - 1.0);
        if (dev == 0.0) continue;
        double x = std::log(c_values[i]);
        double y = std::log(dev);
        sx += x; sy += y; sxx += x * x; sxy += x * y;
        ++used;
    }
    if (used < 2)
        throw std::invalid_argument("limit_scan: degenerate deviations, decay order undefined");
    scan.fitted_order = (static_cast<double>(used) * sxy - sx * sy) /
                        (static_cast<double>(used) * sxx - sx * sx);
    return scan;
}

} // namespace minkgeo

#pragma once

#include <cmath>
#include <stdexcept>

#include "minkgeo/numeric.hpp"
#include "minkgeo/vec2.hpp"

namespace minkgeo {

enum class Signature { Euclidean, Minkowski };

/// Bilinear form eps * c^2 * u.x0 * v.x0 + u.x1 * v.x1 with eps = +1
/// (Euclidean, ds^2 = c^2 dx0^2 + dx1^2) or eps = -1 (Minkowski,
/// ds^2 = -c^2 dx0^2 + dx1^2).
struct Metric {
    Signature signature = Signature::Minkowski;
    double c = 1.0;

    Metric() = default;
    Metric(Signature sig, double c_) : signature(sig), c(c_) {
        detail::require_finite(c, "Metric.c");
        if (c <= 0.0) throw std::invalid_argument("Metric.c must be > 0");
    }

    static Metric euclidean(double c = 1.0) { return {Signature::Euclidean, c}; }
    static Metric minkowski(double c = 1.0) { return {Signature::Minkowski, c}; }
};

enum class CausalClass { Timelike, Null, Spacelike };

enum class AngleKind { CircularAngle, PseudoAngle };

/// Non-negative angle magnitude tagged with its kind. CircularAngle values
/// lie in [0, pi/2] (acute representative); PseudoAngle values are
/// unbounded rapidity-like magnitudes.
struct AngleMeasure {
    double value = 0.0;
    AngleKind kind = AngleKind::CircularAngle;
};

inline double inner(const Vec2& u, const Vec2& v, const Metric& m) {
    double eps = (m.signature == Signature::Minkowski) ? -1.0 : 1.0;
    return eps * m.c * m.c * u.x0 * v.x0 + u.x1 * v.x1;
}

inline double squared_norm(const Vec2& v, const Metric& m) {
    return inner(v, v, m);
}

/// Classifies v against the light cone. A vector counts as Null when
/// |v.v| <= null_tol * (c^2 v.x0^2 + v.x1^2). Any nonzero Euclidean vector
/// is Spacelike; the zero vector is rejected.
inline CausalClass classify(const Vec2& v, const Metric& m, double null_tol = 1e-12) {
    if (v.x0 == 0.0 && v.x1 == 0.0)
        throw std::invalid_argument("classify: zero vector has no causal class");
    double q = inner(v, v, m);
    double scale = m.c * m.c * v.x0 * v.x0 + v.x1 * v.x1;
    if (std::fabs(q) <= null_tol * scale) return CausalClass::Null;
    return q < 0.0 ? CausalClass::Timelike : CausalClass::Spacelike;
}

/// Angle (Euclidean) or pseudo-angle (Minkowski) between two directions.
/// Euclidean: cos^2 theta = (u.v)^2 / (u.u v.v), acute representative.
/// Minkowski: cosh^2 theta = (u.v)^2 / (u.u v.v); u and v must both be
/// timelike or both spacelike; null or mixed-class pairs are rejected
/// (the pseudo-angle across the light cone has no defining formula here).
inline AngleMeasure angle_between(const Vec2& u, const Vec2& v, const Metric& m) {
    double qu = squared_norm(u, m);
    double qv = squared_norm(v, m);
    double d = inner(u, v, m);
    if (m.signature == Signature::Euclidean) {
        if (qu == 0.0 || qv == 0.0)
            throw std::invalid_argument("angle_between: zero vector");
        double ratio = (d * d) / (qu * qv);
        return {detail::clamped_acos(std::sqrt(ratio)), AngleKind::CircularAngle};
    }
    CausalClass cu = classify(u, m);
    CausalClass cv = classify(v, m);
    if (cu == CausalClass::Null || cv == CausalClass::Null)
        throw std::invalid_argument("angle_between: null vector has no pseudo-angle");
    if (cu != cv)
        throw std::invalid_argument(
            "angle_between: mixed timelike/spacelike pair has no pseudo-angle");
    // Reversed Cauchy-Schwarz: (u.v)^2 >= (u.u)(v.v) for a like-class pair,
    // so the argument is >= 1 up to rounding.
    double ratio = (d * d) / (qu * qv);
    return {detail::clamped_acosh(std::sqrt(ratio)), AngleKind::PseudoAngle};
}

} // namespace minkgeo

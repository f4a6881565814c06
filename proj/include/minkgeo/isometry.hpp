#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

#include "minkgeo/vec2.hpp"

namespace minkgeo {

enum class IsometryKind { Rotation, Boost };

/// Linear isometry of the plane. Rotation preserves x0^2 + x1^2,
/// Boost preserves -x0^2 + x1^2 (unit-c Minkowski form). det = 1.
struct Isometry2 {
    std::array<std::array<double, 2>, 2> m{{{1.0, 0.0}, {0.0, 1.0}}};
    IsometryKind kind = IsometryKind::Rotation;
};

/// Rotation: [[cos phi, -sin phi], [sin phi, cos phi]].
/// Boost:    [[cosh phi, sinh phi], [sinh phi, cosh phi]], which maps
/// (sinh t, cosh t) to (sinh(t+phi), cosh(t+phi)).
inline Isometry2 make_isometry(IsometryKind kind, double phi) {
    detail::require_finite(phi, "make_isometry: phi");
    Isometry2 iso;
    iso.kind = kind;
    if (kind == IsometryKind::Rotation) {
        double c = std::cos(phi), s = std::sin(phi);
        iso.m = {{{c, -s}, {s, c}}};
    } else {
        double ch = std::cosh(phi), sh = std::sinh(phi);
        if (!std::isfinite(ch))
            throw std::invalid_argument("make_isometry: boost rapidity overflows");
        iso.m = {{{ch, sh}, {sh, ch}}};
    }
    return iso;
}

inline Vec2 apply_isometry(const Isometry2& iso, const Vec2& v) {
    return {iso.m[0][0] * v.x0 + iso.m[0][1] * v.x1,
            iso.m[1][0] * v.x0 + iso.m[1][1] * v.x1};
}

/// Matrix product of two isometries of the same kind.
inline Isometry2 compose(const Isometry2& a, const Isometry2& b) {
    if (a.kind != b.kind)
        throw std::invalid_argument("compose: mixed isometry kinds");
    Isometry2 r;
    r.kind = a.kind;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j];
    return r;
}

} // namespace minkgeo

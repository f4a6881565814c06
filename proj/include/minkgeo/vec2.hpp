#pragma once

#include <stdexcept>

#include "minkgeo/numeric.hpp"

namespace minkgeo {

/// Point or displacement in the 1+1 dimensional plane.
/// Component order is fixed: x0 is the time-like slot, x1 the spatial slot.
/// For the unit circle the same storage holds (cos theta, sin theta).
struct Vec2 {
    double x0 = 0.0;
    double x1 = 0.0;

    constexpr Vec2() = default;

    Vec2(double x0_, double x1_) : x0(x0_), x1(x1_) {
        detail::require_finite(x0, "Vec2.x0");
        detail::require_finite(x1, "Vec2.x1");
    }

    Vec2 operator+(const Vec2& o) const { return {x0 + o.x0, x1 + o.x1}; }
    Vec2 operator-(const Vec2& o) const { return {x0 - o.x0, x1 - o.x1}; }
    Vec2 operator-() const { return {-x0, -x1}; }
    Vec2 operator*(double s) const { return {s * x0, s * x1}; }

    bool operator==(const Vec2& o) const = default;
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }

} // namespace minkgeo

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace minkgeo {

inline constexpr double pi = 3.1415926535897932384626433832795;
inline constexpr double two_pi = 6.283185307179586476925286766559;

// Guard band for inverse trig/hyperbolic arguments that sit on a boundary
// only up to rounding. Arguments farther outside the domain are rejected.
inline constexpr double boundary_tol = 1e-9;

namespace detail {

// Principal representative in [0, two_pi).
inline double mod_two_pi(double x) {
    double r = std::fmod(x, two_pi);
    if (r < 0.0) r += two_pi;
    if (r >= two_pi) r -= two_pi;
    return r;
}

// Distance between two circle parameters, shortest way around.
inline double circle_param_distance(double u, double v) {
    double d = std::fabs(mod_two_pi(u) - mod_two_pi(v));
    return std::min(d, two_pi - d);
}

inline double clamped_acos(double x) {
    if (x > 1.0) {
        if (x > 1.0 + boundary_tol)
            throw std::domain_error("acos argument exceeds 1 beyond rounding tolerance");
        x = 1.0;
    } else if (x < -1.0) {
        if (x < -1.0 - boundary_tol)
            throw std::domain_error("acos argument below -1 beyond rounding tolerance");
        x = -1.0;
    }
    return std::acos(x);
}

inline double clamped_asin(double x) {
    if (x > 1.0) {
        if (x > 1.0 + boundary_tol)
            throw std::domain_error("asin argument exceeds 1 beyond rounding tolerance");
        x = 1.0;
    } else if (x < -1.0) {
        if (x < -1.0 - boundary_tol)
            throw std::domain_error("asin argument below -1 beyond rounding tolerance");
        x = -1.0;
    }
    return std::asin(x);
}

inline double clamped_acosh(double x) {
    if (x < 1.0) {
        if (x < 1.0 - boundary_tol)
            throw std::domain_error("acosh argument below 1 beyond rounding tolerance");
        x = 1.0;
    }
    return std::acosh(x);
}

// arccot with branch in (0, pi); arccot(0) = pi/2.
inline double arccot(double x) {
    return std::atan2(1.0, x);
}

inline void require_finite(double x, const char* what) {
    if (!std::isfinite(x))
        throw std::invalid_argument(std::string(what) + " must be finite");
}

} // namespace detail
} // namespace minkgeo

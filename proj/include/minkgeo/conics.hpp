#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

#include "minkgeo/numeric.hpp"
#include "minkgeo/vec2.hpp"

namespace minkgeo {

enum class ConicKind { UnitCircle, UnitHyperbola, RelHyperbola, EllipseFamily, Parabola };

/// One of the five curve families the library works with:
///   UnitCircle     (cos t, sin t)
///   UnitHyperbola  (sinh t, cosh t), branch x1 > 0
///   RelHyperbola   t = (c/a) sinh(a s / c), x = (c^2/a)(cosh(a s / c) - 1)
///   EllipseFamily  t = (c/a) sin(a s / c),  x = (c^2/a)(1 - cos(a s / c)),
///                  parameter restricted to |a s / c| < pi
///   Parabola       t = s, x = a s^2 / 2
/// The dimensionful families pass through the origin; a is the proper
/// acceleration, c the signal speed. Construct through the factories,
/// which validate a > 0 and c > 0.
class ConicSpec {
  public:
    static ConicSpec unit_circle() { return ConicSpec(ConicKind::UnitCircle, 1.0, 1.0); }
    static ConicSpec unit_hyperbola() { return ConicSpec(ConicKind::UnitHyperbola, 1.0, 1.0); }
    static ConicSpec rel_hyperbola(double a, double c) {
        return ConicSpec(ConicKind::RelHyperbola, a, c);
    }
    static ConicSpec ellipse_family(double a, double c) {
        return ConicSpec(ConicKind::EllipseFamily, a, c);
    }
    static ConicSpec parabola(double a) { return ConicSpec(ConicKind::Parabola, a, 1.0); }

    ConicKind kind() const { return kind_; }

    bool has_a() const { return kind_ != ConicKind::UnitCircle && kind_ != ConicKind::UnitHyperbola; }
    bool has_c() const { return kind_ == ConicKind::RelHyperbola || kind_ == ConicKind::EllipseFamily; }

    double a() const {
        if (!has_a()) throw std::logic_error("ConicSpec: this kind carries no acceleration");
        return a_;
    }
    double c() const {
        if (!has_c()) throw std::logic_error("ConicSpec: this kind carries no signal speed");
        return c_;
    }

  private:
    ConicSpec(ConicKind kind, double a, double c) : kind_(kind), a_(a), c_(c) {
        detail::require_finite(a, "ConicSpec.a");
        detail::require_finite(c, "ConicSpec.c");
        if (a <= 0.0) throw std::invalid_argument("ConicSpec: a must be > 0");
        if (c <= 0.0) throw std::invalid_argument("ConicSpec: c must be > 0");
    }

    ConicKind kind_;
    double a_;
    double c_;
};

/// Curve point together with the parameter it came from. For the circle the
/// stored parameter is the principal representative in [0, two_pi).
struct ParamPoint {
    double theta = 0.0;
    Vec2 point;
};

inline ParamPoint conic_point(const ConicSpec& spec, double theta) {
    detail::require_finite(theta, "conic_point: theta");
    switch (spec.kind()) {
    case ConicKind::UnitCircle: {
        double t = detail::mod_two_pi(theta);
        return {t, Vec2(std::cos(t), std::sin(t))};
    }
    case ConicKind::UnitHyperbola:
        return {theta, Vec2(std::sinh(theta), std::cosh(theta))};
    case ConicKind::RelHyperbola: {
        double a = spec.a(), c = spec.c();
        double u = a * theta / c;
        // cosh(u) - 1 via 2 sinh^2(u/2): the direct subtraction leaves an
        // absolute eps that the c^2/a factor blows up for small u.
        double sh = std::sinh(0.5 * u);
        return {theta, Vec2((c / a) * std::sinh(u), (2.0 * c * c / a) * sh * sh)};
    }
    case ConicKind::EllipseFamily: {
        double a = spec.a(), c = spec.c();
        double u = a * theta / c;
        if (std::fabs(u) >= minkgeo::pi)
            throw std::invalid_argument("conic_point: ellipse parameter out of range |a theta / c| < pi");
        // 1 - cos(u) via 2 sin^2(u/2), same conditioning argument.
        double sn = std::sin(0.5 * u);
        return {theta, Vec2((c / a) * std::sin(u), (2.0 * c * c / a) * sn * sn)};
    }
    case ConicKind::Parabola: {
        double a = spec.a();
        return {theta, Vec2(theta, 0.5 * a * theta * theta)};
    }
    }
    throw std::logic_error("conic_point: unreachable");
}

/// Residual of the curve's implicit equation at p, normalized by the
/// magnitude of the terms involved. Points produced by conic_point satisfy
/// this to ~1e-15; the library-wide contract is 1e-10.
inline double implicit_residual(const ConicSpec& spec, const Vec2& p) {
    auto normalized = [](double lhs, double rhs, double mag) {
        return std::fabs(lhs - rhs) / std::max(1.0, std::max(std::fabs(rhs), mag));
    };
    switch (spec.kind()) {
    case ConicKind::UnitCircle:
        return normalized(p.x0 * p.x0 + p.x1 * p.x1, 1.0, p.x0 * p.x0 + p.x1 * p.x1);
    case ConicKind::UnitHyperbola:
        return normalized(-p.x0 * p.x0 + p.x1 * p.x1, 1.0, p.x0 * p.x0 + p.x1 * p.x1);
    case ConicKind::RelHyperbola: {
        double a = spec.a(), c = spec.c();
        double r = c * c / a;  // Minkowski radius about the center (0, r)
        double lhs = (p.x1 + r) * (p.x1 + r) - c * c * p.x0 * p.x0;
        return normalized(lhs, r * r, (p.x1 + r) * (p.x1 + r) + c * c * p.x0 * p.x0);
    }
    case ConicKind::EllipseFamily: {
        double a = spec.a(), c = spec.c();
        double r = c * c / a;
        double lhs = (p.x1 - r) * (p.x1 - r) + c * c * p.x0 * p.x0;
        return normalized(lhs, r * r, lhs);
    }
    case ConicKind::Parabola: {
        double a = spec.a();
        return normalized(p.x1, 0.5 * a * p.x0 * p.x0, std::fabs(p.x1));
    }
    }
    throw std::logic_error("implicit_residual: unreachable");
}

/// Chord slope, measured with the even-in-theta coordinate as the run and
/// the odd-in-theta coordinate as the rise: Dsin/Dcos for the circle,
/// Dsinh/Dcosh for the unit hyperbola, Dt/Dx for the dimensionful families
/// (time over space, the spacetime-diagram slope). A chord whose run
/// vanishes is reported with vertical = true and value = +/-infinity signed
/// by the rise.
struct ChordGradient {
    double value = 0.0;
    bool vertical = false;
};

inline ChordGradient chord_gradient(const ConicSpec& spec, double theta0, double theta1) {
    detail::require_finite(theta0, "chord_gradient: theta0");
    detail::require_finite(theta1, "chord_gradient: theta1");
    double inf = std::numeric_limits<double>::infinity();
    switch (spec.kind()) {
    case ConicKind::UnitCircle: {
        if (detail::circle_param_distance(theta0, theta1) == 0.0)
            throw std::invalid_argument("chord_gradient: degenerate chord (equal circle points)");
        double m = 0.5 * (theta0 + theta1);
        double s = std::sin(m);
        // Dsin/Dcos = -cot((theta0+theta1)/2)
        if (s == 0.0)
            return {std::copysign(inf, std::sin(theta0) - std::sin(theta1)), true};
        return {-std::cos(m) / s, false};
    }
    case ConicKind::UnitHyperbola: {
        if (theta0 == theta1)
            throw std::invalid_argument("chord_gradient: degenerate chord (equal parameters)");
        double m = 0.5 * (theta0 + theta1);
        // Dsinh/Dcosh = coth((theta0+theta1)/2)
        if (m == 0.0)
            return {std::copysign(inf, std::sinh(theta0) - std::sinh(theta1)), true};
        return {std::cosh(m) / std::sinh(m), false};
    }
    case ConicKind::RelHyperbola: {
        if (theta0 == theta1)
            throw std::invalid_argument("chord_gradient: degenerate chord (equal parameters)");
        double a = spec.a(), c = spec.c();
        double mu = 0.5 * a * (theta0 + theta1) / c;
        // Dt/Dx = coth(a(theta0+theta1)/(2c)) / c
        if (mu == 0.0)
            return {std::copysign(inf, theta0 - theta1), true};
        return {std::cosh(mu) / (std::sinh(mu) * c), false};
    }
    case ConicKind::EllipseFamily: {
        if (theta0 == theta1)
            throw std::invalid_argument("chord_gradient: degenerate chord (equal parameters)");
        conic_point(spec, theta0);  // range check
        conic_point(spec, theta1);
        double a = spec.a(), c = spec.c();
        double mu = 0.5 * a * (theta0 + theta1) / c;
        // Dt/Dx = cot(a(theta0+theta1)/(2c)) / c
        if (std::sin(mu) == 0.0)
            return {std::copysign(inf, theta0 - theta1), true};
        return {std::cos(mu) / (std::sin(mu) * c), false};
    }
    case ConicKind::Parabola: {
        if (theta0 == theta1)
            throw std::invalid_argument("chord_gradient: degenerate chord (equal parameters)");
        double a = spec.a();
        double s = theta0 + theta1;
        // Dt/Dx = 2 / (a (theta0 + theta1))
        if (s == 0.0)
            return {std::copysign(inf, theta0 - theta1), true};
        return {2.0 / (a * s), false};
    }
    }
    throw std::logic_error("chord_gradient: unreachable");
}

/// Parameter of the second intersection of the curve with the line through
/// conic_point(spec, theta0) of the given (finite) slope. Inverts
/// chord_gradient: chord_gradient(spec, theta0, reintersect(...)) recovers
/// the input slope. Tangent lines (second intersection collapsing onto
/// theta0) are rejected.
inline double reintersect(const ConicSpec& spec, double theta0, double gradient) {
    detail::require_finite(theta0, "reintersect: theta0");
    detail::require_finite(gradient, "reintersect: gradient");
    double theta1 = 0.0;
    switch (spec.kind()) {
    case ConicKind::UnitCircle: {
        // gradient = -cot((theta0+theta1)/2)
        theta1 = detail::mod_two_pi(2.0 * detail::arccot(-gradient) - theta0);
        if (detail::circle_param_distance(theta1, theta0) <= 1e-12)
            throw std::invalid_argument("reintersect: line is tangent at theta0");
        return theta1;
    }
    case ConicKind::UnitHyperbola: {
        if (std::fabs(gradient) <= 1.0)
            throw std::invalid_argument("reintersect: |gradient| <= 1 line meets the branch at most once");
        theta1 = 2.0 * std::atanh(1.0 / gradient) - theta0;
        break;
    }
    case ConicKind::RelHyperbola: {
        double a = spec.a(), c = spec.c();
        if (std::fabs(c * gradient) <= 1.0)
            throw std::invalid_argument("reintersect: |c * gradient| <= 1 line meets the curve at most once");
        theta1 = (2.0 * c / a) * std::atanh(1.0 / (c * gradient)) - theta0;
        break;
    }
    case ConicKind::EllipseFamily: {
        double a = spec.a(), c = spec.c();
        double u0 = a * theta0 / c;
        double mu = detail::arccot(c * gradient);  // half-sum of u-parameters, mod pi
        const double pi_ = pi;
        double u1 = 2.0 * mu - u0;
        if (std::fabs(u1) >= pi_) u1 = 2.0 * (mu - pi_) - u0;
        if (std::fabs(u1) >= pi_)
            throw std::invalid_argument("reintersect: second intersection outside the parameter range");
        theta1 = c * u1 / a;
        break;
    }
    case ConicKind::Parabola: {
        double a = spec.a();
        if (gradient == 0.0)
            throw std::invalid_argument("reintersect: zero gradient line meets the parabola once");
        theta1 = 2.0 / (a * gradient) - theta0;
        break;
    }
    }
    if (std::fabs(theta1 - theta0) <= 1e-12 * std::max(1.0, std::fabs(theta0)))
        throw std::invalid_argument("reintersect: line is tangent at theta0");
    return theta1;
}

/// Evaluates the unit-circle parametrization at the imaginary parameter
/// i*theta with complex arithmetic and folds the result back onto the real
/// hyperbola: cos(i theta) = cosh theta, sin(i theta) = i sinh theta.
/// Returns the max-norm residual against conic_point(UnitHyperbola, theta),
/// including the components that must vanish.
inline double wick_check(double theta) {
    detail::require_finite(theta, "wick_check: theta");
    std::complex<double> it(0.0, theta);
    std::complex<double> c = std::cos(it);
    std::complex<double> s = std::sin(it);
    double sh = std::sinh(theta);
    double ch = std::cosh(theta);
    double r = std::fabs(s.imag() - sh);
    r = std::max(r, std::fabs(c.real() - ch));
    r = std::max(r, std::fabs(s.real()));
    r = std::max(r, std::fabs(c.imag()));
    return r;
}

} // namespace minkgeo

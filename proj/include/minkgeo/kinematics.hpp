#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <utility>

#include "minkgeo/conics.hpp"
#include "minkgeo/numeric.hpp"
#include "minkgeo/vec2.hpp"

namespace minkgeo {

/// Uniformly accelerated observer with proper acceleration a and signal
/// speed c, passing through the lab origin at proper time tau0:
///   t(tau) = (c/a) sinh(a (tau - tau0) / c)
///   x(tau) = (c^2/a) (cosh(a (tau - tau0) / c) - 1)
/// The worldline is the RelHyperbola conic with curve parameter tau - tau0.
struct ObserverTrajectory {
    double a = 1.0;
    double c = 1.0;
    double tau0 = 0.0;

    ObserverTrajectory() = default;
    ObserverTrajectory(double a_, double c_, double tau0_) : a(a_), c(c_), tau0(tau0_) {
        detail::require_finite(a, "ObserverTrajectory.a");
        detail::require_finite(c, "ObserverTrajectory.c");
        detail::require_finite(tau0, "ObserverTrajectory.tau0");
        if (a <= 0.0) throw std::invalid_argument("ObserverTrajectory: a must be > 0");
        if (c <= 0.0) throw std::invalid_argument("ObserverTrajectory: c must be > 0");
    }

    ConicSpec conic() const { return ConicSpec::rel_hyperbola(a, c); }
};

/// Lab event (point.x0 = t, point.x1 = x). tau is set when the event lies
/// on a known observer worldline at that proper time.
struct Event {
    Vec2 point;
    std::optional<double> tau;
};

/// Inertial worldline through anchor with the given lab-frame rapidity:
/// velocity c * tanh(lab_rapidity).
struct Worldline {
    Event anchor;
    double lab_rapidity = 0.0;
};

inline Event observer_event(const ObserverTrajectory& traj, double tau) {
    ParamPoint p = conic_point(traj.conic(), tau - traj.tau0);
    return {p.point, tau};
}

/// Rapidity of the observer's instantaneous velocity at proper time tau.
inline double observer_rapidity(const ObserverTrajectory& traj, double tau) {
    return (traj.a / traj.c) * (tau - traj.tau0);
}

/// Particle ejected at proper time tau_e with the given rapidity relative
/// to the observer's instantaneous frame. Rapidities add, so the particle's
/// lab rapidity is (a/c)(tau_e - tau0) + relative_rapidity. The relative
/// rapidity must be positive (ejected forward, faster than the observer).
inline Worldline eject(const ObserverTrajectory& traj, double tau_e, double relative_rapidity) {
    detail::require_finite(tau_e, "eject: tau_e");
    detail::require_finite(relative_rapidity, "eject: relative_rapidity");
    if (relative_rapidity <= 0.0)
        throw std::invalid_argument("eject: relative rapidity must be > 0");
    return {observer_event(traj, tau_e), observer_rapidity(traj, tau_e) + relative_rapidity};
}

/// Event where the observer meets the worldline again after its ejection.
/// The chord of the trajectory from tau_e to tau_c has slope
/// Dt/Dx = coth(a (tau_e + tau_c - 2 tau0) / (2c)) / c, and the worldline's
/// slope is coth(lab_rapidity) / c; equating the two gives
///   tau_c = (2c/a) lab_rapidity - tau_e + 2 tau0.
/// Requires a worldline anchored on the trajectory (as produced by eject)
/// and strictly faster than the observer at the anchor.
inline Event collision(const ObserverTrajectory& traj, const Worldline& w) {
    if (!w.anchor.tau.has_value())
        throw std::invalid_argument("collision: worldline anchor carries no proper time");
    double tau_e = *w.anchor.tau;
    Vec2 on_curve = observer_event(traj, tau_e).point;
    double scale = std::max({1.0, std::fabs(on_curve.x0), std::fabs(on_curve.x1)});
    if (std::fabs(on_curve.x0 - w.anchor.point.x0) > 1e-10 * scale ||
        std::fabs(on_curve.x1 - w.anchor.point.x1) > 1e-10 * scale)
        throw std::invalid_argument("collision: worldline anchor is not on the trajectory");
    if (w.lab_rapidity <= observer_rapidity(traj, tau_e))
        throw std::invalid_argument("collision: worldline never overtakes into a later intersection");
    double tau_c = (2.0 * traj.c / traj.a) * w.lab_rapidity - tau_e + 2.0 * traj.tau0;
    return observer_event(traj, tau_c);
}

/// Difference of collision proper times for two particles ejected at the
/// same tau_e with relative rapidities rel_a and rel_b. Equals
/// (2c/a)(rel_a - rel_b): independent of tau_e and of any common rapidity
/// offset, and equal to (2c/a) times the pseudo-angle between the two
/// particle worldlines.
inline double proper_time_gap(const ObserverTrajectory& traj, double tau_e, double rel_a,
                              double rel_b) {
    Event ca = collision(traj, eject(traj, tau_e, rel_a));
    Event cb = collision(traj, eject(traj, tau_e, rel_b));
    return *ca.tau - *cb.tau;
}

/// Newtonian analogue: observer x = a t^2 / 2 + u t + x0, particles leave
/// at t = 0 with velocities alpha and beta relative to the observer. The
/// catch-up times differ by 2 (alpha - beta) / a, independent of u and x0.
/// The closed form is cross-checked against the explicit quadratic
/// intersection (computed at two different u) to 1e-12 relative.
inline double newtonian_collision_gap(double a, double alpha, double beta) {
    detail::require_finite(a, "newtonian_collision_gap: a");
    detail::require_finite(alpha, "newtonian_collision_gap: alpha");
    detail::require_finite(beta, "newtonian_collision_gap: beta");
    if (a <= 0.0) throw std::invalid_argument("newtonian_collision_gap: a must be > 0");
    double closed = 2.0 * (alpha - beta) / a;
    // observer a t^2 / 2 + u t meets particle (u + v) t at the nonzero root of
    // (a/2) t^2 + (u - (u + v)) t = 0
    auto catch_up = [a](double u, double v) {
        double b = u - (u + v);
        return -b / (0.5 * a);
    };
    for (double u : {0.0, 1.703125}) {
        double gap = catch_up(u, alpha) - catch_up(u, beta);
        if (std::fabs(gap - closed) > 1e-12 * std::max(1.0, std::fabs(closed)))
            throw std::logic_error("newtonian_collision_gap: intersection route disagrees with closed form");
    }
    return closed;
}

/// Bisection root of the observer/worldline separation inside the bracket,
/// to 1e-12 absolute in proper time. Finds the intersection numerically
/// instead of trusting the formula in collision; intended as a cross-check.
/// The separation must change sign across the bracket, and the worldline
/// anchor must carry its proper time (as produced by eject).
inline Event numeric_collision_oracle(const ObserverTrajectory& traj, const Worldline& w,
                                      std::pair<double, double> bracket) {
    double lo = bracket.first, hi = bracket.second;
    detail::require_finite(lo, "numeric_collision_oracle: bracket.first");
    detail::require_finite(hi, "numeric_collision_oracle: bracket.second");
    if (!(lo < hi))
        throw std::invalid_argument("numeric_collision_oracle: empty bracket");
    if (!w.anchor.tau.has_value())
        throw std::invalid_argument("numeric_collision_oracle: worldline anchor carries no proper time");
    double phi_a = (traj.a / traj.c) * (*w.anchor.tau - traj.tau0);
    // x_obs(tau) - x_anchor - v (t_obs(tau) - t_anchor) with v = c tanh(w.lab_rapidity),
    // rewritten through the product identities for cosh/sinh differences. The raw
    // coordinate subtraction loses the sign to rounding near the bracket ends once
    // cosh of the rapidity parameter is large; this form never cancels.
    auto separation = [&](double tau) {
        double phi = (traj.a / traj.c) * (tau - traj.tau0);
        double half_diff = 0.5 * (phi - phi_a);
        double half_sum = 0.5 * (phi + phi_a);
        return (2.0 * traj.c * traj.c / traj.a) * std::sinh(half_diff) *
               std::sinh(half_sum - w.lab_rapidity) / std::cosh(w.lab_rapidity);
    };
    double flo = separation(lo);
    double fhi = separation(hi);
    if (flo == 0.0) return observer_event(traj, lo);
    if (fhi == 0.0) return observer_event(traj, hi);
    if ((flo < 0.0) == (fhi < 0.0))
        throw std::invalid_argument("numeric_collision_oracle: no sign change across the bracket");
    for (int it = 0; it < 200 && (hi - lo) > 1e-12; ++it) {
        double mid = 0.5 * (lo + hi);
        double fmid = separation(mid);
        if (fmid == 0.0) return observer_event(traj, mid);
        if ((fmid < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return observer_event(traj, 0.5 * (lo + hi));
}

/// Default oracle bracket for a worldline produced by eject: starts just
/// after the ejection and extends well past the predicted catch-up scale.
inline std::pair<double, double> default_oracle_bracket(const ObserverTrajectory& traj,
                                                        double tau_e, double relative_rapidity) {
    return {tau_e + 1e-9, tau_e + 10.0 * (2.0 * traj.c / traj.a) * relative_rapidity};
}

} // namespace minkgeo

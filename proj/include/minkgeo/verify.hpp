#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "minkgeo/conics.hpp"
#include "minkgeo/isometry.hpp"
#include "minkgeo/kinematics.hpp"
#include "minkgeo/metric.hpp"
#include "minkgeo/theorems.hpp"

namespace minkgeo::verify {

/// Outcome of one randomized or grid-based property battery.
struct PropertyResult {
    std::string name;
    std::size_t samples = 0;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string note;
};

enum class Suite { All, Metric, Conics, Theorems, Kinematics, Limits };

namespace detail {

// mt19937_64 driven uniform doubles with a pinned bit-to-double mapping,
// so a seed determines the sample stream exactly.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform(double lo, double hi) {
        double u = static_cast<double>(gen_() >> 11) * 0x1.0p-53;  // [0, 1)
        return lo + (hi - lo) * u;
    }

    // Uniform over [lo, hi] staying at least min_sep away from each entry of avoid.
    template <std::size_t N>
    double uniform_away(double lo, double hi, const std::array<double, N>& avoid,
                        double min_sep) {
        for (;;) {
            double x = uniform(lo, hi);
            bool ok = true;
            for (double a : avoid)
                if (std::fabs(x - a) < min_sep) ok = false;
            if (ok) return x;
        }
    }

    bool coin() { return (gen_() & 1ull) != 0; }

  private:
    std::mt19937_64 gen_;
};

inline PropertyResult finish(std::string name, std::size_t samples, double max_residual,
                             double tolerance, std::string note = {}) {
    return {std::move(name), samples, max_residual, tolerance, max_residual <= tolerance,
            std::move(note)};
}

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// ---- metric properties ----

inline PropertyResult inner_bilinearity_symmetry(std::uint64_t seed, std::size_t n) {
    Rng rng(seed);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        Metric m(i % 2 ? Signature::Euclidean : Signature::Minkowski, rng.uniform(0.5, 2.0));
        Vec2 u(rng.uniform(-3, 3), rng.uniform(-3, 3));
        Vec2 v(rng.uniform(-3, 3), rng.uniform(-3, 3));
        Vec2 w(rng.uniform(-3, 3), rng.uniform(-3, 3));
        double alpha = rng.uniform(-2, 2);
        double lhs = inner(u * alpha + w, v, m);
        double rhs = alpha * inner(u, v, m) + inner(w, v, m);
        double scale = std::fabs(alpha * inner(u, v, m)) + std::fabs(inner(w, v, m)) + 1.0;
        worst = std::max(worst, std::fabs(lhs - rhs) / scale);
        double sym = std::fabs(inner(u, v, m) - inner(v, u, m)) /
                     (std::fabs(inner(u, v, m)) + 1.0);
        worst = std::max(worst, sym);
    }
    return finish("metric/inner-bilinearity-symmetry", n, worst, 1e-12);
}

inline PropertyResult reversed_cauchy_schwarz(std::uint64_t seed, std::size_t n) {
    Rng rng(seed);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double c = rng.uniform(0.5, 2.0);
        Metric m = Metric::minkowski(c);
        bool timelike = rng.coin();
        auto make = [&](double s, double r) {
            return timelike ? Vec2(r * std::cosh(s), r * c * std::sinh(s))
                            : Vec2(r * std::sinh(s) / c, r * std::cosh(s));
        };
        Vec2 u = make(rng.uniform(-3, 3), rng.uniform(0.1, 3.0));
        Vec2 v = make(rng.uniform(-3, 3), rng.uniform(0.1, 3.0));
        double d = inner(u, v, m);
        double deficit = squared_norm(u, m) * squared_norm(v, m) - d * d;
        double scale = d * d + std::fabs(squared_norm(u, m) * squared_norm(v, m));
        worst = std::max(worst, std::max(0.0, deficit / scale));
    }
    return finish("metric/reversed-cauchy-schwarz", n, worst, 1e-12);
}

inline PropertyResult boost_composition(std::uint64_t seed, std::size_t n) {
    Rng rng(seed);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double p1 = rng.uniform(-3, 3), p2 = rng.uniform(-3, 3);
        Isometry2 ab = compose(make_isometry(IsometryKind::Boost, p1),
                               make_isometry(IsometryKind::Boost, p2));
        Isometry2 direct = make_isometry(IsometryKind::Boost, p1 + p2);
        for (int r = 0; r < 2; ++r)
            for (int cidx = 0; cidx < 2; ++cidx) {
                double diff = std::fabs(ab.m[r][cidx] - direct.m[r][cidx]);
                worst = std::max(worst, diff / std::max(1.0, std::fabs(direct.m[r][cidx])));
            }
    }
    return finish("metric/boost-composition", n, worst, 1e-12);
}

inline PropertyResult pseudo_angle_boost_invariance(std::uint64_t seed, std::size_t n) {
    Rng rng(seed);
    Metric m = Metric::minkowski();
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        bool timelike = rng.coin();
        double s1 = rng.uniform(-3, 3);
        double s2 = rng.uniform_away(-3.0, 3.0, std::array<double, 1>{s1}, 1e-3);
        auto make = [&](double s, double r) {
            return timelike ? Vec2(r * std::cosh(s), r * std::sinh(s))
                            : Vec2(r * std::sinh(s), r * std::cosh(s));
        };
        Vec2 u = make(s1, rng.uniform(0.1, 3.0));
        Vec2 v = make(s2, rng.uniform(0.1, 3.0));
        // Boosted rapidities reach s + phi; past ~4.5 the cosh^2 error
        // amplification in the acosh route eats the 1e-10 budget.
        double phi = rng.uniform(-1.5, 1.5);
        Isometry2 b = make_isometry(IsometryKind::Boost, phi);
        double before = angle_between(u, v, m).value;
        double after = angle_between(apply_isometry(b, u), apply_isometry(b, v), m).value;
        worst = std::max(worst, std::fabs(after - before));
        worst = std::max(worst, std::fabs(before - std::fabs(s1 - s2)));
    }
    return finish("metric/pseudo-angle-boost-invariance", n, worst, 1e-10);
}

inline PropertyResult rapidity_velocity_relation(std::uint64_t seed, std::size_t n) {
    Rng rng(seed);
    Metric m = Metric::minkowski();
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double w = rng.uniform(0.01, 0.99) * (rng.coin() ? 1.0 : -1.0);
        double angle = angle_between(Vec2(1, 0), Vec2(1, w), m).value;
        worst = std::max(worst, std::fabs(angle - std::atanh(std::fabs(w))));
    }
    return finish("metric/rapidity-velocity", n, worst, 1e-10);
}

// ---- conic properties ----

// Random spec of each kind; the u-range is the natural parameter window.
struct ConicSample {
    ConicSpec spec;
    double u_lo, u_hi;
    // parameter theta corresponding to a u value
    double theta(double u) const {
        return spec.has_c() ? u * spec.c() / spec.a() : u;
    }
};

inline ConicSample sample_conic(Rng& rng, int kind_index) {
    switch (kind_index) {
    case 0: return {ConicSpec::unit_circle(), 0.0, two_pi};
    case 1: return {ConicSpec::unit_hyperbola(), -3.0, 3.0};
    case 2:
        return {ConicSpec::rel_hyperbola(rng.uniform(0.5, 2.0), rng.uniform(0.5, 2.0)), -3.0, 3.0};
    case 3:
        return {ConicSpec::ellipse_family(rng.uniform(0.5, 2.0), rng.uniform(0.5, 2.0)),
                -0.95 * pi, 0.95 * pi};
    default: return {ConicSpec::parabola(rng.uniform(0.5, 2.0)), -3.0, 3.0};
    }
}

inline PropertyResult implicit_equation_residual(std::uint64_t seed, std::size_t n) {
    Rng rng(seed);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        ConicSample cs = sample_conic(rng, static_cast<int>(i % 5));
        ParamPoint p = conic_point(cs.spec, cs.theta(rng.uniform(cs.u_lo, cs.u_hi)));
        worst = std::max(worst, implicit_residual(cs.spec, p.point));
    }
    return finish("conics/implicit-residual", n, worst, 1e-10);
}

// Chord generator shared by the gradient and reintersection batteries.
// Rejects chords that are nearly degenerate, nearly vertical, or nearly
// horizontal: there the finite secant itself loses precision, not the
// closed form.
inline bool usable_chord(const ConicSample& cs, double u0, double u1) {
    if (std::fabs(u0 - u1) < 0.1) return false;
    if (cs.spec.kind() == ConicKind::UnitCircle &&
        minkgeo::detail::circle_param_distance(u0, u1) < 0.1)
        return false;  // wrap-around near-degenerate chord
    double mu = 0.5 * (u0 + u1);
    switch (cs.spec.kind()) {
    case ConicKind::UnitCircle:
    case ConicKind::EllipseFamily:
        return std::fabs(std::sin(mu)) > 2.5e-3 && std::fabs(std::cos(mu)) > 2.5e-3;
    case ConicKind::UnitHyperbola:
    case ConicKind::RelHyperbola:
        return std::fabs(mu) > 2.5e-3;
    case ConicKind::Parabola:
        return std::fabs(cs.spec.a() * mu) > 2.5e-3;
    }
    return false;
}

inline PropertyResult gradient_closed_vs_secant(std::uint64_t seed, std::size_t n) {
    Rng rng(seed);
    double worst = 0.0;
    std::size_t total = 10 * n;
    for (std::size_t i = 0; i < total; ++i) {
        ConicSample cs = sample_conic(rng, static_cast<int>(i % 5));
        double u0, u1;
        do {
            u0 = rng.uniform(cs.u_lo, cs.u_hi);
            u1 = rng.uniform(cs.u_lo, cs.u_hi);
        } while (!usable_chord(cs, u0, u1));
        double t0 = cs.theta(u0), t1 = cs.theta(u1);
        ChordGradient g = chord_gradient(cs.spec, t0, t1);
        Vec2 p0 = conic_point(cs.spec, t0).point;
        Vec2 p1 = conic_point(cs.spec, t1).point;
        // rise over run: odd component over even component
        bool circle = cs.spec.kind() == ConicKind::UnitCircle;
        double rise = circle ? p0.x1 - p1.x1 : p0.x0 - p1.x0;
        double run = circle ? p0.x0 - p1.x0 : p0.x1 - p1.x1;
        double secant = rise / run;
        worst = std::max(worst,
                         std::fabs(g.value - secant) / std::max(std::fabs(g.value), std::fabs(secant)));
    }
    return finish("conics/gradient-closed-vs-secant", total, worst, 1e-9);
}

inline PropertyResult reintersect_involution(std::uint64_t seed, std::size_t n) {
    Rng rng(seed);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        ConicSample cs = sample_conic(rng, static_cast<int>(i % 5));
        double u0, u1;
        do {
            u0 = rng.uniform(cs.u_lo, cs.u_hi);
            u1 = rng.uniform(cs.u_lo, cs.u_hi);
        } while (!usable_chord(cs, u0, u1));
        double t0 = cs.theta(u0), t1 = cs.theta(u1);
        ChordGradient g = chord_gradient(cs.spec, t0, t1);
        double back = reintersect(cs.spec, t0, g.value);
        double diff = cs.spec.kind() == ConicKind::UnitCircle
                          ? minkgeo::detail::circle_param_distance(back, t1)
                          : std::fabs(back - t1);
        worst = std::max(worst, diff);
    }
    return finish("conics/reintersect-involution", n, worst, 1e-9);
}

inline PropertyResult hyperbola_chords_timelike(std::uint64_t seed, std::size_t n) {
    Rng rng(seed);
    ConicSpec h = ConicSpec::unit_hyperbola();
    Metric m = Metric::minkowski();
    std::size_t bad = 0;
    for (std::size_t i = 0; i < n; ++i) {
        double t0 = rng.uniform(-3, 3);
        double t1 = rng.uniform_away(-3.0, 3.0, std::array<double, 1>{t0}, 1e-3);
        Vec2 chord = conic_point(h, t1).point - conic_point(h, t0).point;
        if (classify(chord, m) != CausalClass::Timelike) ++bad;
    }
    return finish("conics/hyperbola-chords-timelike", n, static_cast<double>(bad), 0.0);
}

inline PropertyResult relhyperbola_parabola_limit(std::uint64_t seed, std::size_t n) {
    Rng rng(seed);
    double min_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        double a = rng.uniform(0.5, 2.0);
        double theta = rng.uniform(0.1, 3.0) * (rng.coin() ? 1.0 : -1.0);
        double c0 = 1e3 * a * std::max(1.0, std::fabs(theta));
        auto err = [&](double c) {
            Vec2 ph = conic_point(ConicSpec::rel_hyperbola(a, c), theta).point;
            Vec2 pp = conic_point(ConicSpec::parabola(a), theta).point;
            double et = std::fabs(ph.x0 - pp.x0) / std::max(1.0, std::fabs(pp.x0));
            double ex = std::fabs(ph.x1 - pp.x1) / std::max(1.0, std::fabs(pp.x1));
            return std::max(et, ex);
        };
        double e1 = err(c0), e2 = err(2.0 * c0);
        if (e2 == 0.0) continue;
        min_ratio = std::min(min_ratio, e1 / e2);
    }
    PropertyResult r = finish("conics/relhyperbola-parabola-limit", n,
                              std::max(0.0, 3.5 - min_ratio), 0.0);
    r.note = "min halving ratio " + format_double(min_ratio) + " (>= 3.5 required)";
    return r;
}

inline PropertyResult wick_rotation(std::uint64_t seed, std::size_t n) {
    Rng rng(seed);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double theta = rng.uniform(-5, 5);
        worst = std::max(worst, wick_check(theta) / std::max(1.0, std::cosh(theta)));
    }
    return finish("conics/wick-rotation", n, worst, 1e-12);
}

// ---- theorem properties ----

inline std::array<double, 3> distinct_triple(Rng& rng, double lo, double hi, double min_sep) {
    for (;;) {
        double a = rng.uniform(lo, hi);
        double b = rng.uniform(lo, hi);
        double c = rng.uniform(lo, hi);
        if (std::fabs(a - b) >= min_sep && std::fabs(a - c) >= min_sep &&
            std::fabs(b - c) >= min_sep)
            return {a, b, c};
    }
}

inline double acute_representative(double half_delta) {
    double h = std::fmod(half_delta, pi);
    return std::min(h, pi - h);
}

inline PropertyResult hyperbolic_inscribed_angle(std::uint64_t seed, std::size_t n) {
    Rng rng(seed);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        auto t = distinct_triple(rng, -3.0, 3.0, 1e-3);
        AngleMeasure a = inscribed_angle({ConicSpec::unit_hyperbola(), t[0], t[1], t[2]});
        worst = std::max(worst, std::fabs(a.value - 0.5 * std::fabs(t[1] - t[2])));
    }
    return finish("theorems/hyperbolic-inscribed-angle", n, worst, 1e-9);
}

inline PropertyResult euclidean_inscribed_angle(std::uint64_t seed, std::size_t n) {
    Rng rng(seed);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        auto t = distinct_triple(rng, -3.0, 3.0, 1e-3);
        AngleMeasure a = inscribed_angle({ConicSpec::unit_circle(), t[0], t[1], t[2]});
        double expected = acute_representative(0.5 * std::fabs(t[1] - t[2]));
        worst = std::max(worst, std::fabs(a.value - expected));
    }
    return finish("theorems/euclidean-inscribed-angle", n, worst, 1e-9);
}

inline PropertyResult inscribed_angle_theta0_independence(std::uint64_t seed, std::size_t n) {
    Rng rng(seed);
    double worst = 0.0;
    const std::size_t groups = 8;
    std::size_t sweeps = std::max<std::size_t>(2, n / groups);
    for (std::size_t g = 0; g < groups; ++g) {
        bool circle = g % 2 == 0;
        ConicSpec spec = circle ? ConicSpec::unit_circle() : ConicSpec::unit_hyperbola();
        double t1 = rng.uniform(-3, 3);
        double t2 = rng.uniform_away(-3.0, 3.0, std::array<double, 1>{t1}, 1e-3);
        double mean = 0.0;
        std::vector<double> vals;
        vals.reserve(sweeps);
        for (std::size_t i = 0; i < sweeps; ++i) {
            double t0 = rng.uniform_away(-3.0, 3.0, std::array<double, 2>{t1, t2}, 1e-3);
            double v = inscribed_angle({spec, t0, t1, t2}).value;
            vals.push_back(v);
            mean += v;
        }
        mean /= static_cast<double>(vals.size());
        double var = 0.0;
        for (double v : vals) var += (v - mean) * (v - mean);
        worst = std::max(worst, std::sqrt(var / static_cast<double>(vals.size())));
    }
    return finish("theorems/inscribed-angle-theta0-independence", groups * sweeps, worst, 1e-9);
}

inline PropertyResult central_angle_doubling(std::uint64_t seed, std::size_t n) {
    Rng rng(seed);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        auto t = distinct_triple(rng, -3.0, 3.0, 1e-3);
        double central = central_angle(t[1], t[2]).value;
        double inscribed = inscribed_angle({ConicSpec::unit_hyperbola(), t[0], t[1], t[2]}).value;
        worst = std::max(worst, std::fabs(central - 2.0 * inscribed));
        worst = std::max(worst, std::fabs(central - std::fabs(t[1] - t[2])));
    }
    return finish("theorems/central-angle-doubling", n, worst, 1e-9);
}

inline PropertyResult thales_orthogonality(std::uint64_t seed, std::size_t n) {
    Rng rng(seed);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double t0 = rng.uniform(-3, 3);
        double t1 = rng.uniform_away(-3.0, 3.0, std::array<double, 1>{t0}, 1e-3);
        double r = std::fabs(thales_residual(t0, t1)) / std::max(1.0, std::cosh(t0 + t1));
        worst = std::max(worst, r);
    }
    return finish("theorems/thales-orthogonality", n, worst, 1e-10);
}

inline PropertyResult isometry_reinterpretation(std::uint64_t seed, std::size_t n, bool circle) {
    Rng rng(seed);
    ConicSpec spec = circle ? ConicSpec::unit_circle() : ConicSpec::unit_hyperbola();
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        auto t = distinct_triple(rng, -3.0, 3.0, 1e-3);
        // boosted hyperbola parameters reach |t| + |phi|; keeping the
        // rapidity moderate keeps the acosh route inside the 1e-10 budget
        // (rotations wrap and need no such care, but share the sampling)
        double phi = rng.uniform(-1.5, 1.5);
        InscribedConfig cfg{spec, t[0], t[1], t[2]};
        InscribedConfig moved = rotate_config(cfg, phi);
        std::array<double, 3> before{cfg.theta0, cfg.theta1, cfg.theta2};
        std::array<double, 3> after{moved.theta0, moved.theta1, moved.theta2};
        for (int k = 0; k < 3; ++k) {
            double shift_err =
                circle ? minkgeo::detail::circle_param_distance(after[k], before[k] + phi)
                       : std::fabs(after[k] - (before[k] + phi));
            worst = std::max(worst, shift_err);
        }
        worst = std::max(worst,
                         std::fabs(inscribed_angle(moved).value - inscribed_angle(cfg).value));
    }
    return finish(circle ? "theorems/rotation-reinterpretation"
                         : "theorems/boost-reinterpretation",
                  n, worst, 1e-10);
}

inline PropertyResult parabola_limit_envelope(std::uint64_t seed, std::size_t n) {
    Rng rng(seed);
    double worst = 0.0;
    std::size_t configs = std::max<std::size_t>(4, n / 16);
    double worst_k = 0.0;
    for (std::size_t i = 0; i < configs; ++i) {
        double a = rng.uniform(0.5, 2.0);
        std::array<double, 3> t;
        for (;;) {
            t = distinct_triple(rng, -3.0, 3.0, 0.05);
            if (std::fabs(t[0] + t[1]) > 0.05 && std::fabs(t[0] + t[2]) > 0.05) break;
        }
        Signature sig = i % 2 ? Signature::Euclidean : Signature::Minkowski;
        double g_max = 0.5 * a * std::max(std::fabs(t[0] + t[1]), std::fabs(t[0] + t[2]));
        double base = 10.0 * std::max(1.0, g_max);
        std::vector<double> cs{base, 2 * base, 4 * base, 8 * base, 16 * base};
        LimitScan scan = limit_scan(a, t[0], t[1], t[2], sig, cs);
        // fit |ratio - 1| = K / c^2, then require every grid point inside the
        // envelope with 25% slack for the higher-order terms
        double num = 0.0, den = 0.0;
        for (std::size_t j = 0; j < cs.size(); ++j) {
            double inv2 = 1.0 / (cs[j] * cs[j]);
            num += std::fabs(scan.asymptote_ratio[j] - 1.0) * inv2;
            den += inv2 * inv2;
        }
        double k = num / den;
        worst_k = std::max(worst_k, k);
        for (std::size_t j = 0; j < cs.size(); ++j) {
            double dev = std::fabs(scan.asymptote_ratio[j] - 1.0) * cs[j] * cs[j];
            worst = std::max(worst, dev / k - 1.0);
        }
    }
    PropertyResult r = finish("theorems/parabola-limit-envelope", configs * 5, worst, 0.25);
    r.note = "max fitted K " + format_double(worst_k);
    return r;
}

inline PropertyResult parabola_reconstruction_theta0_independence(std::uint64_t seed,
                                                                  std::size_t n) {
    Rng rng(seed);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double a = rng.uniform(0.5, 2.0);
        ConicSpec spec = ConicSpec::parabola(a);
        std::array<double, 3> t;
        for (;;) {
            t = distinct_triple(rng, -3.0, 3.0, 0.05);
            if (std::fabs(t[0] + t[1]) > 0.05 && std::fabs(t[0] + t[2]) > 0.05) break;
        }
        double g1 = chord_gradient(spec, t[0], t[1]).value;
        double g2 = chord_gradient(spec, t[0], t[2]).value;
        double reconstructed = std::fabs(2.0 / (a * g1) - 2.0 / (a * g2));
        worst = std::max(worst, std::fabs(reconstructed - std::fabs(t[1] - t[2])));
    }
    return finish("theorems/parabola-reconstruction-theta0-independence", n, worst, 1e-10);
}

// ---- kinematics properties ----

inline PropertyResult ejection_independence(std::uint64_t seed, std::size_t n) {
    Rng rng(seed);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        ObserverTrajectory traj(rng.uniform(0.5, 2.0), rng.uniform(0.5, 2.0),
                                rng.uniform(-1.0, 1.0));
        double rel_b = rng.uniform(0.05, 1.5);
        double rel_a = rel_b + rng.uniform(0.05, 1.0);
        double tau_e = rng.uniform(-3.0, 3.0);
        double gap = proper_time_gap(traj, tau_e, rel_a, rel_b);
        double predicted = (2.0 * traj.c / traj.a) * (rel_a - rel_b);
        worst = std::max(worst, std::fabs(gap - predicted));
    }
    return finish("kinematics/ejection-independence", n, worst, 1e-9);
}

inline PropertyResult rapidity_offset_invariance(std::uint64_t seed, std::size_t n) {
    Rng rng(seed);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        ObserverTrajectory traj(rng.uniform(0.5, 2.0), rng.uniform(0.5, 2.0),
                                rng.uniform(-1.0, 1.0));
        double rel_b = rng.uniform(0.05, 1.5);
        double rel_a = rel_b + rng.uniform(0.05, 1.0);
        double tau_e = rng.uniform(-2.0, 2.0);
        double delta = rng.uniform(-0.9 * rel_b, 2.0);
        double gap = proper_time_gap(traj, tau_e, rel_a, rel_b);
        double shifted = proper_time_gap(traj, tau_e, rel_a + delta, rel_b + delta);
        worst = std::max(worst, std::fabs(shifted - gap));
    }
    return finish("kinematics/rapidity-offset-invariance", n, worst, 1e-9);
}

inline PropertyResult collision_closed_vs_oracle(std::uint64_t seed, std::size_t n) {
    Rng rng(seed);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        ObserverTrajectory traj(rng.uniform(0.5, 2.0), rng.uniform(0.5, 2.0),
                                rng.uniform(-1.0, 1.0));
        double tau_e = rng.uniform(-2.0, 2.0);
        double rel = rng.uniform(0.05, 2.0);
        Worldline w = eject(traj, tau_e, rel);
        double closed = *collision(traj, w).tau;
        double oracle =
            *numeric_collision_oracle(traj, w, default_oracle_bracket(traj, tau_e, rel)).tau;
        worst = std::max(worst, std::fabs(closed - oracle));
    }
    return finish("kinematics/collision-closed-vs-oracle", n, worst, 1e-9);
}

inline PropertyResult newtonian_gap_intersection(std::uint64_t seed, std::size_t n) {
    Rng rng(seed);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double a = rng.uniform(0.2, 3.0);
        double beta = rng.uniform(0.01, 5.0);
        double alpha = beta + rng.uniform(0.01, 5.0);
        double u = rng.uniform(-2.0, 2.0);
        double closed = newtonian_collision_gap(a, alpha, beta);
        // quadratic-formula route: nonzero root of (a/2) t^2 + (u - (u+v)) t = 0
        auto root = [&](double v) {
            double A = 0.5 * a, B = u - (u + v);
            return (-B + std::sqrt(B * B)) / (2.0 * A);
        };
        double explicit_gap = root(alpha) - root(beta);
        worst = std::max(worst,
                         std::fabs(explicit_gap - closed) / std::max(1.0, std::fabs(closed)));
    }
    return finish("kinematics/newtonian-gap-intersection", n, worst, 1e-12);
}

inline PropertyResult nonrelativistic_bridge(std::uint64_t, std::size_t) {
    const double a = 1.0, v_fast = 3.0, v_slow = 1.0, newtonian = 4.0;
    std::vector<double> cs{100, 200, 400, 800};
    std::vector<double> errs;
    for (double c : cs) {
        ObserverTrajectory traj(a, c, 0.0);
        double gap = proper_time_gap(traj, 0.3, std::atanh(v_fast / c), std::atanh(v_slow / c));
        errs.push_back(std::fabs(gap - newtonian));
    }
    double min_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < errs.size(); ++i)
        min_ratio = std::min(min_ratio, errs[i] / errs[i + 1]);
    PropertyResult r = finish("kinematics/nonrelativistic-bridge", cs.size(),
                              std::max(0.0, 3.5 - min_ratio), 0.0);
    r.note = "min halving ratio " + format_double(min_ratio) + " (>= 3.5 required)";
    return r;
}

inline PropertyResult geometry_kinematics_gap(std::uint64_t seed, std::size_t n) {
    Rng rng(seed);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        ObserverTrajectory traj(rng.uniform(0.5, 2.0), rng.uniform(0.5, 2.0),
                                rng.uniform(-0.5, 0.5));
        // Lab rapidities reach (a/c)|tau_e - tau0| + rel; the acosh route for
        // the direction angle loses digits as cosh^2 of that grows, so the
        // ejection time stays moderate while rel keeps its full spread.
        double tau_e = rng.uniform(-1.5, 1.5);
        double rel_b = rng.uniform(0.05, 1.5);
        double rel_a = rel_b + rng.uniform(0.05, 1.0);
        Worldline wa = eject(traj, tau_e, rel_a);
        Worldline wb = eject(traj, tau_e, rel_b);
        Vec2 dir_a(std::cosh(wa.lab_rapidity), traj.c * std::sinh(wa.lab_rapidity));
        Vec2 dir_b(std::cosh(wb.lab_rapidity), traj.c * std::sinh(wb.lab_rapidity));
        double angle = angle_between(dir_a, dir_b, Metric::minkowski(traj.c)).value;
        double gap = proper_time_gap(traj, tau_e, rel_a, rel_b);
        worst = std::max(worst, std::fabs(gap - (2.0 * traj.c / traj.a) * angle));
    }
    return finish("kinematics/geometry-kinematics-gap", n, worst, 1e-9);
}

// ---- limit properties ----

inline std::vector<double> standard_c_grid() { return {10, 20, 40, 80, 160}; }

inline PropertyResult asymptote_ratio_monotone(std::uint64_t, std::size_t) {
    std::vector<double> cs = standard_c_grid();
    double worst = 0.0;
    std::string note;
    for (Signature sig : {Signature::Minkowski, Signature::Euclidean}) {
        LimitScan scan = limit_scan(1.0, 0.0, 1.0, -1.0, sig, cs);
        for (std::size_t i = 0; i + 1 < cs.size(); ++i) {
            double d0 = std::fabs(scan.asymptote_ratio[i] - 1.0);
            double d1 = std::fabs(scan.asymptote_ratio[i + 1] - 1.0);
            worst = std::max(worst, d1 - d0);
        }
        note += (sig == Signature::Minkowski ? "minkowski final ratio "
                                             : "; euclidean final ratio ") +
                format_double(scan.asymptote_ratio.back());
    }
    PropertyResult r = finish("limits/asymptote-ratio-monotone", 2 * cs.size(), worst, 0.0);
    r.note = note;
    return r;
}

inline PropertyResult fitted_order(std::uint64_t, std::size_t, Signature sig) {
    LimitScan scan = limit_scan(1.0, 0.0, 1.0, -1.0, sig, standard_c_grid());
    PropertyResult r =
        finish(sig == Signature::Minkowski ? "limits/fitted-order-minkowski"
                                           : "limits/fitted-order-euclidean",
               scan.c_values.size(), std::fabs(scan.fitted_order + 2.0), 0.2);
    r.note = "fitted order " + format_double(scan.fitted_order);
    return r;
}

inline PropertyResult minkowski_euclidean_agreement(std::uint64_t, std::size_t) {
    std::vector<double> cs = standard_c_grid();
    LimitScan mink = limit_scan(1.0, 0.0, 1.0, -1.0, Signature::Minkowski, cs);
    LimitScan eucl = limit_scan(1.0, 0.0, 1.0, -1.0, Signature::Euclidean, cs);
    double worst = 0.0;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        double rel = std::fabs(mink.asymptote_ratio[i] - eucl.asymptote_ratio[i]) /
                     std::fabs(eucl.asymptote_ratio[i]);
        worst = std::max(worst, rel * cs[i] * cs[i]);
    }
    return finish("limits/minkowski-euclidean-agreement", cs.size(), worst, 10.0);
}

} // namespace detail

inline std::vector<PropertyResult> run_suite(Suite suite, std::uint64_t seed, std::size_t samples) {
    using namespace detail;
    if (samples < 8) throw std::invalid_argument("run_suite: need at least 8 samples");
    std::vector<PropertyResult> out;
    auto base = [seed](std::uint64_t k) { return seed * 1000003ull + k; };
    if (suite == Suite::All || suite == Suite::Metric) {
        out.push_back(inner_bilinearity_symmetry(base(1), samples));
        out.push_back(reversed_cauchy_schwarz(base(2), samples));
        out.push_back(boost_composition(base(3), samples));
        out.push_back(pseudo_angle_boost_invariance(base(4), samples));
        out.push_back(rapidity_velocity_relation(base(5), samples));
    }
    if (suite == Suite::All || suite == Suite::Conics) {
        out.push_back(implicit_equation_residual(base(11), samples));
        out.push_back(gradient_closed_vs_secant(base(12), samples));
        out.push_back(reintersect_involution(base(13), samples));
        out.push_back(hyperbola_chords_timelike(base(14), samples));
        out.push_back(relhyperbola_parabola_limit(base(15), samples));
        out.push_back(wick_rotation(base(16), samples));
    }
    if (suite == Suite::All || suite == Suite::Theorems) {
        out.push_back(hyperbolic_inscribed_angle(base(21), samples));
        out.push_back(euclidean_inscribed_angle(base(22), samples));
        out.push_back(inscribed_angle_theta0_independence(base(23), samples));
        out.push_back(central_angle_doubling(base(24), samples));
        out.push_back(thales_orthogonality(base(25), samples));
        out.push_back(isometry_reinterpretation(base(26), samples, false));
        out.push_back(isometry_reinterpretation(base(27), samples, true));
        out.push_back(parabola_limit_envelope(base(28), samples));
        out.push_back(parabola_reconstruction_theta0_independence(base(29), samples));
    }
    if (suite == Suite::All || suite == Suite::Kinematics) {
        out.push_back(ejection_independence(base(31), samples));
        out.push_back(rapidity_offset_invariance(base(32), samples));
        out.push_back(collision_closed_vs_oracle(base(33), samples));
        out.push_back(newtonian_gap_intersection(base(34), samples));
        out.push_back(nonrelativistic_bridge(base(35), samples));
        out.push_back(geometry_kinematics_gap(base(36), samples));
    }
    if (suite == Suite::All || suite == Suite::Limits) {
        out.push_back(asymptote_ratio_monotone(base(41), samples));
        out.push_back(fitted_order(base(42), samples, Signature::Minkowski));
        out.push_back(fitted_order(base(43), samples, Signature::Euclidean));
        out.push_back(minkowski_euclidean_agreement(base(44), samples));
    }
    return out;
}

inline const char* suite_name(Suite s) {
    switch (s) {
    case Suite::All: return "all";
    case Suite::Metric: return "metric";
    case Suite::Conics: return "conics";
    case Suite::Theorems: return "theorems";
    case Suite::Kinematics: return "kinematics";
    case Suite::Limits: return "limits";
    }
    return "?";
}

inline Suite parse_suite(const std::string& s) {
    if (s == "all") return Suite::All;
    if (s == "metric") return Suite::Metric;
    if (s == "conics") return Suite::Conics;
    if (s == "theorems") return Suite::Theorems;
    if (s == "kinematics") return Suite::Kinematics;
    if (s == "limits") return Suite::Limits;
    throw std::invalid_argument("unknown suite: " + s);
}

/// Fixed-format text report; identical inputs give byte-identical output.
inline std::string render_report(Suite suite, std::uint64_t seed, std::size_t samples,
                                 const std::vector<PropertyResult>& results) {
    std::string out = "suite=" + std::string(suite_name(suite)) +
                      " seed=" + std::to_string(seed) +
                      " samples=" + std::to_string(samples) + "\n";
    std::size_t failures = 0;
    for (const PropertyResult& r : results) {
        out += r.pass ? "[PASS] " : "[FAIL] ";
        out += r.name;
        out += " samples=" + std::to_string(r.samples);
        out += " max_residual=" + detail::format_double(r.max_residual);
        out += " tolerance=" + detail::format_double(r.tolerance);
        if (!r.note.empty()) out += " (" + r.note + ")";
        out += "\n";
        if (!r.pass) ++failures;
    }
    out += "RESULT: " + std::string(failures == 0 ? "PASS" : "FAIL") + " (" +
           std::to_string(results.size()) + " properties, " + std::to_string(failures) +
           " failures)\n";
    return out;
}

} // namespace minkgeo::verify

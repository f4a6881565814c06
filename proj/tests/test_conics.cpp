#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <functional>

#include "minkgeo/conics.hpp"

using namespace minkgeo;
using Catch::Matchers::WithinAbs;

namespace {

// Secant slope straight from point coordinates: odd-in-theta component over
// even-in-theta component. Independent route against the closed forms.
double secant(const ConicSpec& spec, double t0, double t1) {
    Vec2 p0 = conic_point(spec, t0).point;
    Vec2 p1 = conic_point(spec, t1).point;
    if (spec.kind() == ConicKind::UnitCircle) return (p0.x1 - p1.x1) / (p0.x0 - p1.x0);
    return (p0.x0 - p1.x0) / (p0.x1 - p1.x1);
}

// Bisection for the second intersection parameter of a line through
// conic_point(spec, t0) with the given slope, independent of reintersect.
double bisect_second_intersection(const ConicSpec& spec, double t0, double gradient, double lo,
                                  double hi) {
    Vec2 p0 = conic_point(spec, t0).point;
    auto f = [&](double t) {
        Vec2 p = conic_point(spec, t).point;
        if (spec.kind() == ConicKind::UnitCircle)
            return (p.x1 - p0.x1) - gradient * (p.x0 - p0.x0);
        return (p.x0 - p0.x0) - gradient * (p.x1 - p0.x1);
    };
    double flo = f(lo), fhi = f(hi);
    REQUIRE(((flo < 0.0) != (fhi < 0.0)));
    for (int i = 0; i < 200 && (hi - lo) > 1e-14; ++i) {
        double mid = 0.5 * (lo + hi);
        double fmid = f(mid);
        if (fmid == 0.0) return mid;
        if ((fmid < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace

TEST_CASE("conic factories validate their parameters") {
    REQUIRE_THROWS_AS(ConicSpec::rel_hyperbola(0.0, 1.0), std::invalid_argument);
    REQUIRE_THROWS_AS(ConicSpec::rel_hyperbola(1.0, -2.0), std::invalid_argument);
    REQUIRE_THROWS_AS(ConicSpec::parabola(-1.0), std::invalid_argument);
    REQUIRE_THROWS_AS(ConicSpec::unit_circle().a(), std::logic_error);
    REQUIRE_THROWS_AS(ConicSpec::parabola(1.0).c(), std::logic_error);
    REQUIRE(ConicSpec::rel_hyperbola(2.0, 3.0).a() == 2.0);
    REQUIRE(ConicSpec::rel_hyperbola(2.0, 3.0).c() == 3.0);
    REQUIRE_FALSE(ConicSpec::unit_hyperbola().has_a());
    REQUIRE(ConicSpec::parabola(1.0).has_a());
    REQUIRE_FALSE(ConicSpec::parabola(1.0).has_c());
}

TEST_CASE("conic_point evaluates each family") {
    // circle parameter reduces to [0, two_pi)
    ParamPoint p = conic_point(ConicSpec::unit_circle(), two_pi + 0.25);
    REQUIRE_THAT(p.theta, WithinAbs(0.25, 1e-15));
    REQUIRE_THAT(p.point.x0, WithinAbs(std::cos(0.25), 1e-15));

    // sinh(1) = 1.1752011936438014, cosh(1) = 1.5430806348152437
    Vec2 h = conic_point(ConicSpec::unit_hyperbola(), 1.0).point;
    REQUIRE_THAT(h.x0, WithinAbs(1.1752011936438014, 1e-15));
    REQUIRE_THAT(h.x1, WithinAbs(1.5430806348152437, 1e-15));

    // dimensionful hyperbola through the origin: x = cosh - 1 scaled
    Vec2 r = conic_point(ConicSpec::rel_hyperbola(1.0, 1.0), 1.0).point;
    REQUIRE_THAT(r.x0, WithinAbs(1.1752011936438014, 1e-15));
    REQUIRE_THAT(r.x1, WithinAbs(0.54308063481524371, 1e-15));
    Vec2 r2 = conic_point(ConicSpec::rel_hyperbola(2.0, 1.0), 0.5).point;
    REQUIRE_THAT(r2.x0, WithinAbs(0.58760059682190072, 1e-15));
    REQUIRE_THAT(r2.x1, WithinAbs(0.27154031740762185, 1e-15));

    Vec2 e = conic_point(ConicSpec::ellipse_family(1.0, 1.0), 1.5707963267948966).point;
    REQUIRE_THAT(e.x0, WithinAbs(1.0, 1e-15));
    REQUIRE_THAT(e.x1, WithinAbs(1.0, 1e-15));
    REQUIRE_THROWS_AS(conic_point(ConicSpec::ellipse_family(1.0, 1.0), 3.2),
                      std::invalid_argument);

    Vec2 q = conic_point(ConicSpec::parabola(2.0), 3.0).point;
    REQUIRE(q.x0 == 3.0);
    REQUIRE(q.x1 == 9.0);
}

TEST_CASE("implicit residual accepts curve points and flags others") {
    for (double t : {-2.5, -0.4, 0.0, 1.1, 2.9}) {
        REQUIRE(implicit_residual(ConicSpec::unit_hyperbola(),
                                  conic_point(ConicSpec::unit_hyperbola(), t).point) < 1e-14);
        REQUIRE(implicit_residual(ConicSpec::rel_hyperbola(0.7, 1.3),
                                  conic_point(ConicSpec::rel_hyperbola(0.7, 1.3), t).point) <
                1e-14);
        REQUIRE(implicit_residual(ConicSpec::parabola(1.4),
                                  conic_point(ConicSpec::parabola(1.4), t).point) < 1e-14);
        REQUIRE(implicit_residual(ConicSpec::ellipse_family(1.2, 0.9),
                                  conic_point(ConicSpec::ellipse_family(1.2, 0.9), t * 0.7).point) <
                1e-14);
        REQUIRE(implicit_residual(ConicSpec::unit_circle(),
                                  conic_point(ConicSpec::unit_circle(), t).point) < 1e-14);
    }
    REQUIRE(implicit_residual(ConicSpec::unit_circle(), Vec2(2.0, 0.0)) > 0.5);
    REQUIRE(implicit_residual(ConicSpec::unit_hyperbola(), Vec2(0.0, 2.0)) > 0.5);
}

TEST_CASE("chord gradients match their closed forms") {
    // circle: antipodal pair through the middle parameter pi/2 is flat
    ChordGradient g = chord_gradient(ConicSpec::unit_circle(), 0.0, pi);
    REQUIRE_FALSE(g.vertical);
    REQUIRE_THAT(g.value, WithinAbs(0.0, 1e-15));
    // unit hyperbola: Dsinh/Dcosh over (0, 2) is coth(1) = 1.3130352854993312
    REQUIRE_THAT(chord_gradient(ConicSpec::unit_hyperbola(), 0.0, 2.0).value,
                 WithinAbs(1.3130352854993312, 1e-15));
    REQUIRE_THAT(chord_gradient(ConicSpec::rel_hyperbola(1.0, 1.0), 0.0, 2.0).value,
                 WithinAbs(1.3130352854993312, 1e-15));
    // a=2, c=1: the u-parameters double, same closed form
    REQUIRE_THAT(chord_gradient(ConicSpec::rel_hyperbola(2.0, 1.0), 0.0, 1.0).value,
                 WithinAbs(1.3130352854993312, 1e-15));
    // parabola: 2 / (a (theta0 + theta1))
    REQUIRE(chord_gradient(ConicSpec::parabola(1.0), 1.0, 3.0).value == 0.5);
    REQUIRE(chord_gradient(ConicSpec::parabola(2.0), 1.0, 3.0).value == 0.25);
}

TEST_CASE("chord gradients agree with coordinate secants") {
    auto check = [](const ConicSpec& spec, double t0, double t1) {
        double cf = chord_gradient(spec, t0, t1).value;
        REQUIRE_THAT(cf, WithinAbs(secant(spec, t0, t1), 1e-12 * std::max(1.0, std::fabs(cf))));
    };
    check(ConicSpec::unit_circle(), 0.3, 0.9);
    check(ConicSpec::unit_circle(), 2.0, 4.5);
    check(ConicSpec::unit_hyperbola(), -1.2, 0.4);
    check(ConicSpec::rel_hyperbola(0.8, 1.7), -0.9, 2.1);
    check(ConicSpec::ellipse_family(0.8, 1.7), 0.4, 1.9);
    check(ConicSpec::parabola(1.3), -2.0, 0.7);
}

TEST_CASE("vertical chords are flagged with signed infinity") {
    // circle: symmetric parameters about 0 stack vertically
    ChordGradient g = chord_gradient(ConicSpec::unit_circle(), 1.5707963267948966,
                                     -1.5707963267948966);
    REQUIRE(g.vertical);
    REQUIRE(std::isinf(g.value));
    REQUIRE(g.value > 0.0);  // rise sin(pi/2) - sin(-pi/2) = 2
    ChordGradient h = chord_gradient(ConicSpec::unit_hyperbola(), -1.0, 1.0);
    REQUIRE(h.vertical);
    REQUIRE(h.value < 0.0);  // rise sinh(-1) - sinh(1) < 0
    ChordGradient q = chord_gradient(ConicSpec::parabola(1.0), -1.0, 1.0);
    REQUIRE(q.vertical);
    REQUIRE(q.value < 0.0);
}

TEST_CASE("degenerate chords are rejected") {
    REQUIRE_THROWS_AS(chord_gradient(ConicSpec::unit_circle(), 0.5, 0.5), std::invalid_argument);
    REQUIRE_THROWS_AS(chord_gradient(ConicSpec::unit_hyperbola(), 0.5, 0.5),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(chord_gradient(ConicSpec::parabola(1.0), -0.5, -0.5),
                      std::invalid_argument);
}

TEST_CASE("reintersect inverts chord_gradient") {
    // unit hyperbola from 0 with slope coth(1): the second parameter is 2
    double t = reintersect(ConicSpec::unit_hyperbola(), 0.0, 1.3130352854993312);
    REQUIRE_THAT(t, WithinAbs(2.0, 1e-12));
    // against an independent bisection of the actual intersection
    double tb = bisect_second_intersection(ConicSpec::unit_hyperbola(), 0.0,
                                           1.3130352854993312, 1.5, 2.5);
    REQUIRE_THAT(t, WithinAbs(tb, 1e-9));

    auto roundtrip = [](const ConicSpec& spec, double t0, double t1, double tol) {
        double g = chord_gradient(spec, t0, t1).value;
        double back = reintersect(spec, t0, g);
        if (spec.kind() == ConicKind::UnitCircle) {
            double d = std::fabs(back - detail::mod_two_pi(t1));
            REQUIRE(std::min(d, two_pi - d) < tol);
        } else {
            REQUIRE_THAT(back, WithinAbs(t1, tol));
        }
    };
    roundtrip(ConicSpec::unit_circle(), 0.3, 0.9, 1e-12);
    roundtrip(ConicSpec::unit_circle(), 5.9, 2.2, 1e-12);
    roundtrip(ConicSpec::unit_hyperbola(), -1.2, 0.4, 1e-12);
    roundtrip(ConicSpec::rel_hyperbola(0.8, 1.7), -0.9, 2.1, 1e-12);
    roundtrip(ConicSpec::ellipse_family(0.8, 1.7), 0.4, 1.9, 1e-12);
    roundtrip(ConicSpec::ellipse_family(0.8, 1.7), -1.5, -0.2, 1e-12);
    roundtrip(ConicSpec::parabola(1.3), -2.0, 0.7, 1e-12);

    // circle second intersection against bisection on a fresh chord
    double g = chord_gradient(ConicSpec::unit_circle(), 0.3, 2.4).value;
    double tc = reintersect(ConicSpec::unit_circle(), 0.3, g);
    double tcb = bisect_second_intersection(ConicSpec::unit_circle(), 0.3, g, 2.0, 2.8);
    REQUIRE_THAT(tc, WithinAbs(tcb, 1e-9));
}

TEST_CASE("reintersect rejects lines that cannot meet the curve twice") {
    REQUIRE_THROWS_AS(reintersect(ConicSpec::unit_hyperbola(), 0.0, 0.5),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(reintersect(ConicSpec::unit_hyperbola(), 0.0, 1.0),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(reintersect(ConicSpec::rel_hyperbola(1.0, 2.0), 0.0, 0.4),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(reintersect(ConicSpec::parabola(1.0), 0.5, 0.0), std::invalid_argument);
    // tangent line: slope of the curve at theta0 itself
    REQUIRE_THROWS_AS(reintersect(ConicSpec::unit_hyperbola(), 1.0, std::cosh(1.0) / std::sinh(1.0)),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(
        reintersect(ConicSpec::unit_circle(), 0.5, -std::cos(0.5) / std::sin(0.5)),
        std::invalid_argument);
}

TEST_CASE("imaginary-parameter circle evaluation lands on the hyperbola") {
    for (double t = -5.0; t <= 5.0; t += 0.5)
        REQUIRE(wick_check(t) <= 1e-12 * std::max(1.0, std::cosh(t)));
}

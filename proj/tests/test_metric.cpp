#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "minkgeo/isometry.hpp"
#include "minkgeo/metric.hpp"
#include "minkgeo/vec2.hpp"

using namespace minkgeo;
using Catch::Matchers::WithinAbs;

TEST_CASE("vec2 arithmetic and validation") {
    Vec2 u(1.0, 2.0), v(0.5, -1.0);
    REQUIRE((u + v) == Vec2(1.5, 1.0));
    REQUIRE((u - v) == Vec2(0.5, 3.0));
    REQUIRE((-u) == Vec2(-1.0, -2.0));
    REQUIRE((u * 2.0) == Vec2(2.0, 4.0));
    REQUIRE((2.0 * u) == Vec2(2.0, 4.0));
    REQUIRE(Vec2().x0 == 0.0);
    REQUIRE_THROWS_AS(Vec2(std::nan(""), 0.0), std::invalid_argument);
    REQUIRE_THROWS_AS(Vec2(0.0, std::numeric_limits<double>::infinity()),
                      std::invalid_argument);
}

TEST_CASE("inner product in both signatures") {
    Vec2 e0(1.0, 0.0), e1(0.0, 1.0);
    REQUIRE(inner(e0, e0, Metric::euclidean()) == 1.0);
    REQUIRE(inner(e0, e0, Metric::minkowski()) == -1.0);
    REQUIRE(inner(e1, e1, Metric::minkowski()) == 1.0);
    REQUIRE(inner(e0, e1, Metric::minkowski()) == 0.0);
    // c scales the time-slot contribution quadratically
    REQUIRE(inner(e0, e0, Metric::minkowski(2.0)) == -4.0);
    REQUIRE(inner(e0, e0, Metric::euclidean(2.0)) == 4.0);
    REQUIRE(squared_norm(Vec2(1.0, 3.0), Metric::minkowski()) == 8.0);
}

TEST_CASE("metric construction validates c") {
    REQUIRE_THROWS_AS(Metric::minkowski(0.0), std::invalid_argument);
    REQUIRE_THROWS_AS(Metric::minkowski(-1.0), std::invalid_argument);
    REQUIRE_THROWS_AS(Metric(Signature::Euclidean, std::nan("")), std::invalid_argument);
}

TEST_CASE("causal classification") {
    Metric m = Metric::minkowski();
    REQUIRE(classify(Vec2(1.0, 0.5), m) == CausalClass::Timelike);
    REQUIRE(classify(Vec2(0.5, 1.0), m) == CausalClass::Spacelike);
    REQUIRE(classify(Vec2(1.0, 1.0), m) == CausalClass::Null);
    REQUIRE(classify(Vec2(-1.0, 1.0), m) == CausalClass::Null);
    // with c = 2 the light-cone slope moves: (1, 2) is null, (1, 1) timelike
    Metric m2 = Metric::minkowski(2.0);
    REQUIRE(classify(Vec2(1.0, 2.0), m2) == CausalClass::Null);
    REQUIRE(classify(Vec2(1.0, 1.0), m2) == CausalClass::Timelike);
    REQUIRE(classify(Vec2(3.0, -4.0), Metric::euclidean()) == CausalClass::Spacelike);
    REQUIRE_THROWS_AS(classify(Vec2(0.0, 0.0), m), std::invalid_argument);
    // loose null tolerance absorbs a slightly off-cone vector
    REQUIRE(classify(Vec2(1.0, 1.0 + 1e-14), m) == CausalClass::Null);
    REQUIRE(classify(Vec2(1.0, 1.0 + 1e-14), m, 1e-16) == CausalClass::Spacelike);
}

TEST_CASE("euclidean angles use the acute representative") {
    Metric e = Metric::euclidean();
    REQUIRE_THAT(angle_between(Vec2(1, 0), Vec2(0, 1), e).value,
                 WithinAbs(1.5707963267948966, 1e-14));
    REQUIRE_THAT(angle_between(Vec2(1, 0), Vec2(1, 1), e).value,
                 WithinAbs(0.78539816339744828, 1e-14));
    // obtuse pair folds onto its acute supplement
    REQUIRE_THAT(angle_between(Vec2(1, 0), Vec2(-1, 1), e).value,
                 WithinAbs(0.78539816339744828, 1e-14));
    REQUIRE(angle_between(Vec2(1, 0), Vec2(0, 1), e).kind == AngleKind::CircularAngle);
    REQUIRE_THROWS_AS(angle_between(Vec2(0, 0), Vec2(1, 0), e), std::invalid_argument);
}

TEST_CASE("minkowski pseudo-angle recovers rapidity differences") {
    Metric m = Metric::minkowski();
    // tanh(0.5) = 0.46211715726000974: velocity w gives rapidity atanh(w)
    REQUIRE_THAT(angle_between(Vec2(1, 0), Vec2(1, 0.46211715726000974), m).value,
                 WithinAbs(0.5, 1e-12));
    // timelike pair at rapidities 1 and 0; sinh(1), cosh(1) frozen
    REQUIRE_THAT(angle_between(Vec2(1.5430806348152437, 1.1752011936438014), Vec2(1, 0), m).value,
                 WithinAbs(1.0, 1e-12));
    REQUIRE(angle_between(Vec2(1, 0), Vec2(1, 0.5), m).kind == AngleKind::PseudoAngle);
    // spacelike pair: (sinh 2, cosh 2) against (0, 1)
    REQUIRE_THAT(angle_between(Vec2(3.626860407847019, 3.7621956910836314), Vec2(0, 1), m).value,
                 WithinAbs(2.0, 1e-12));
    // rapidity additivity and scaling invariance
    auto dir = [](double s) { return Vec2(std::cosh(s), std::sinh(s)); };
    REQUIRE_THAT(angle_between(dir(2.2), dir(-0.7), m).value, WithinAbs(2.9, 1e-12));
    REQUIRE_THAT(angle_between(dir(2.2) * 3.0, dir(-0.7) * 0.25, m).value,
                 WithinAbs(2.9, 1e-12));
}

TEST_CASE("mixed and null pairs have no pseudo-angle") {
    Metric m = Metric::minkowski();
    REQUIRE_THROWS_AS(angle_between(Vec2(1, 0), Vec2(0, 1), m), std::invalid_argument);
    REQUIRE_THROWS_AS(angle_between(Vec2(1, 1), Vec2(1, 0), m), std::invalid_argument);
    REQUIRE_THROWS_AS(angle_between(Vec2(1, 0.5), Vec2(0, 0), m), std::invalid_argument);
}

TEST_CASE("boosts act on the unit hyperbola as parameter shifts") {
    Isometry2 b = make_isometry(IsometryKind::Boost, 1.0);
    REQUIRE_THAT(b.m[0][0], WithinAbs(1.5430806348152437, 1e-15));
    REQUIRE_THAT(b.m[0][1], WithinAbs(1.1752011936438014, 1e-15));
    Vec2 p(std::sinh(0.7), std::cosh(0.7));
    Vec2 q = apply_isometry(b, p);
    REQUIRE_THAT(q.x0, WithinAbs(std::sinh(1.7), 1e-13));
    REQUIRE_THAT(q.x1, WithinAbs(std::cosh(1.7), 1e-13));
}

TEST_CASE("rotations act on the unit circle as parameter shifts") {
    Isometry2 r = make_isometry(IsometryKind::Rotation, 0.4);
    Vec2 p(std::cos(0.3), std::sin(0.3));
    Vec2 q = apply_isometry(r, p);
    REQUIRE_THAT(q.x0, WithinAbs(std::cos(0.7), 1e-14));
    REQUIRE_THAT(q.x1, WithinAbs(std::sin(0.7), 1e-14));
}

TEST_CASE("isometry composition") {
    Isometry2 b1 = make_isometry(IsometryKind::Boost, 0.9);
    Isometry2 b2 = make_isometry(IsometryKind::Boost, -0.2);
    Isometry2 b = compose(b1, b2);
    Isometry2 direct = make_isometry(IsometryKind::Boost, 0.7);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) REQUIRE_THAT(b.m[i][j], WithinAbs(direct.m[i][j], 1e-14));
    Isometry2 r = make_isometry(IsometryKind::Rotation, 0.1);
    REQUIRE_THROWS_AS(compose(b1, r), std::invalid_argument);
    REQUIRE_THROWS_AS(make_isometry(IsometryKind::Boost, 1e6), std::invalid_argument);
}

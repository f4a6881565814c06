#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "minkgeo/verify.hpp"

using namespace minkgeo::verify;

TEST_CASE("every suite passes at a small sample count") {
    std::vector<PropertyResult> results = run_suite(Suite::All, 7, 64);
    REQUIRE(results.size() == 30);
    for (const PropertyResult& r : results) {
        INFO(r.name << " max_residual=" << r.max_residual << " tolerance=" << r.tolerance);
        REQUIRE(r.pass);
        REQUIRE(r.samples > 0);
    }
}

TEST_CASE("suite selection subsets the property list") {
    REQUIRE(run_suite(Suite::Metric, 1, 32).size() == 5);
    REQUIRE(run_suite(Suite::Conics, 1, 32).size() == 6);
    REQUIRE(run_suite(Suite::Theorems, 1, 32).size() == 9);
    REQUIRE(run_suite(Suite::Kinematics, 1, 32).size() == 6);
    REQUIRE(run_suite(Suite::Limits, 1, 32).size() == 4);
    REQUIRE_THROWS_AS(run_suite(Suite::All, 1, 4), std::invalid_argument);
}

TEST_CASE("runs are seed-deterministic") {
    std::vector<PropertyResult> a = run_suite(Suite::All, 42, 48);
    std::vector<PropertyResult> b = run_suite(Suite::All, 42, 48);
    REQUIRE(render_report(Suite::All, 42, 48, a) == render_report(Suite::All, 42, 48, b));
    std::vector<PropertyResult> c = run_suite(Suite::Metric, 43, 48);
    std::vector<PropertyResult> d = run_suite(Suite::Metric, 42, 48);
    bool any_differs = false;
    for (std::size_t i = 0; i < c.size(); ++i)
        any_differs = any_differs || c[i].max_residual != d[i].max_residual;
    REQUIRE(any_differs);
}

TEST_CASE("report format") {
    std::vector<PropertyResult> results = run_suite(Suite::Limits, 42, 32);
    std::string report = render_report(Suite::Limits, 42, 32, results);
    REQUIRE(report.rfind("suite=limits seed=42 samples=32\n", 0) == 0);
    REQUIRE(report.find("[PASS] limits/fitted-order-minkowski") != std::string::npos);
    REQUIRE(report.find("RESULT: PASS") != std::string::npos);
    // a fabricated failure flips the verdict
    results[0].pass = false;
    std::string failing = render_report(Suite::Limits, 42, 32, results);
    REQUIRE(failing.find("[FAIL]") != std::string::npos);
    REQUIRE(failing.find("RESULT: FAIL") != std::string::npos);
}

TEST_CASE("suite names parse both ways") {
    for (const char* name : {"all", "metric", "conics", "theorems", "kinematics", "limits"})
        REQUIRE(std::string(suite_name(parse_suite(name))) == name);
    REQUIRE_THROWS_AS(parse_suite("bogus"), std::invalid_argument);
}

// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <limits>

#include "onesided/errors.hpp"
#include "onesided/function_model.hpp"
#include "onesided/quadrature.hpp"
#include "support/generators.hpp"

using namespace onesided;
using onesided::testing::Gen;
using onesided::testing::horner;

TEST_CASE("constant integrates exactly") {
    CHECK(std::abs(quad_integrate([](double) { return 1.0; }, 0.0, 1.0, {}) - 1.0) <= 1e-14);
}

TEST_CASE("x^2 on [0,1]") {
    CHECK(std::abs(quad_integrate([](double x) { return x * x; }, 0.0, 1.0, {}) - 1.0 / 3.0) <= 1e-12);
}

TEST_CASE("x^(-1/4) with a clamped pole") {
    const FunctionModel f = FunctionModel([](double x) { return std::pow(x, -0.25); }).with_singular(true, false);
    const double v = quad_integrate([&](double x) { return f(x); }, 0.0, 1.0, {});
    CHECK(std::abs(v - 4.0 / 3.0) <= 1e-3);
    const double graded = quad_integrate([&](double x) { return f(x); }, 0.0, 1.0, {}, f.quad_hints());
    CHECK(std::abs(graded - 4.0 / 3.0) <= 1e-6);
}

TEST_CASE("nodes never touch the interval ends") {
    const QuadGrid g = quad_grid(0.0, 1.0, {4, 5, 1e-9});
    REQUIRE(g.x.size() == 20);
    for (double x : g.x) {
        CHECK(x > 0.0);
        CHECK(x < 1.0);
    }
}

TEST_CASE("a non-finite sample names the node") {
    try {
        (void)quad_integrate([](double x) { return x > 0.5 ? std::numeric_limits<double>::quiet_NaN() : 1.0; },
                             0.0, 1.0, {});
        FAIL("expected EvaluationError");
    } catch (const EvaluationError& e) {
        CHECK(std::string(e.what()).find("x=") != std::string::npos);
    }
}

TEST_CASE("invalid configuration and interval") {
    CHECK_THROWS_AS((void)quad_integrate([](double) { return 1.0; }, 0.0, 1.0, {0, 16, 1e-9}), ConfigError);
    CHECK_THROWS_AS((void)quad_integrate([](double) { return 1.0; }, 0.0, 1.0, {4, 0, 1e-9}), ConfigError);
    CHECK_THROWS_AS((void)quad_integrate([](double) { return 1.0; }, 1.0, 0.0, {}), ArgumentError);
    CHECK(quad_integrate([](double) { return 1.0; }, 0.5, 0.5, {}) == 0.0);
}

TEST_CASE("breakpoints restore accuracy for kinks") {
    const double bp[] = {0.3};
    const auto f = [](double x) { return std::abs(x - 0.3); };
    const double exact = 0.5 * (0.09 + 0.49);
    const QuadConfig coarse{3, 8, 1e-9};
    CHECK(std::abs(quad_integrate(f, 0.0, 1.0, coarse, QuadHints{bp, {}}) - exact) <= 1e-14);
    CHECK(std::abs(quad_integrate(f, 0.0, 1.0, coarse) - exact) > 1e-8);
}

TEST_CASE("Gauss-Legendre weights sum to 2 and are symmetric") {
    for (int n : {1, 2, 5, 16, 32}) {
        const GaussRule& r = gauss_legendre(n);
        double sum = 0.0;
        for (std::size_t i = 0; i < r.weights.size(); ++i) {
            sum += r.weights[i];
            CHECK(r.nodes[i] == doctest::Approx(-r.nodes[r.nodes.size() - 1 - i]).epsilon(1e-14));
        }
        CHECK(sum == doctest::Approx(2.0).epsilon(1e-14));
    }
}

TEST_CASE("property: exact for polynomials up to degree 2n-1") {
    Gen gen(0x5eed0101);
    const QuadConfig cfg{3, 6, 1e-9};
    for (int trial = 0; trial < 100; ++trial) {
        const int degree = gen.integer(0, 11);
        const std::vector<double> m = gen.coeffs(degree + 1);
        const double a = gen.uniform(-1.0, 0.5);
        const double b = a + gen.uniform(0.1, 1.5);
        double exact = 0.0;
        for (int i = 0; i <= degree; ++i)
            exact += m[static_cast<std::size_t>(i)] * (std::pow(b, i + 1) - std::pow(a, i + 1)) / (i + 1);
        const double v = quad_integrate([&](double x) { return horner(m, x); }, a, b, cfg);
        CHECK(std::abs(v - exact) <= 1e-12);
    }
}

TEST_CASE("property: quadrature is bit-for-bit deterministic") {
    Gen gen(0x5eed0102);
    for (int trial = 0; trial < 20; ++trial) {
        const double w = gen.uniform(1.0, 20.0);
        const auto f = [w](double x) { return std::sin(w * x) * std::exp(-x); };
        CHECK(quad_integrate(f, 0.0, 1.0, {}) == quad_integrate(f, 0.0, 1.0, {}));
    }
}

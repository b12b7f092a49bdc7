// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <utility>

#include "onesided/errors.hpp"
#include "onesided/operators.hpp"
#include "onesided/registry.hpp"
#include "support/generators.hpp"

using namespace onesided;
using onesided::testing::Gen;

namespace {

FunctionModel shifted(const FunctionModel& f, double c) {
    FunctionModel g([f, c](double x) { return f(x) + c; }, f.id() + "+c");
    g.with_derivative([f](double x) { return f.derivative(x); }).with_breakpoints(f.breakpoints());
    return g;
}

double l1_distance(const Polynomial& a, const Polynomial& b, int n = 20000) {
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = (i + 0.5) / n;
        sum += std::abs(b(x) - a(x));
    }
    return sum / n;
}

}  // namespace

TEST_CASE("split derivative parts") {
    const SplitDerivative d = split_derivative(builtin_function("abs_shift"));
    CHECK(d.plus(0.8) == doctest::Approx(1.0));
    CHECK(d.minus(0.8) == 0.0);
    CHECK(d.plus(0.2) == 0.0);
    CHECK(d.minus(0.2) == doctest::Approx(1.0));
}

TEST_CASE("kernel operators at degree zero") {
    const SandwichPair& pair = cached_reflected_sandwich(0);
    const FunctionModel id = builtin_function("identity");
    // Reflected constants: P* = 0, q* = 1, so M = rho(0) and N = rho(0) + int rho'.
    CHECK(std::abs(lower_op_M(id, pair, 0.4)) <= 1e-12);
    CHECK(std::abs(upper_op_N(id, pair, 0.4) - 1.0) <= 1e-12);
    const FunctionModel one = builtin_function("constant");
    CHECK(lower_op_M(one, pair, 0.7) == doctest::Approx(one(0.7)));
}

TEST_CASE("kernel operators need the reflected pair") {
    const FunctionModel id = builtin_function("identity");
    CHECK_THROWS_AS((void)lower_op_M(id, cached_step_sandwich(3), 0.5), ArgumentError);
    CHECK_THROWS_AS((void)materialize_N(id, cached_step_sandwich(3)), ArgumentError);
    CHECK_THROWS_AS((void)lower_op_M(id, cached_reflected_sandwich(3), 1.5), DomainError);
}

TEST_CASE("materialized M and N sandwich an absolutely continuous function") {
    const FunctionModel f = builtin_function("sin10");
    const SandwichPair& pair = cached_reflected_sandwich(10);
    const OperatorOutput m = materialize_M(f, pair);
    const OperatorOutput n = materialize_N(f, pair);
    CHECK(m.poly.degree() <= 10);
    for (int i = 0; i <= 200; ++i) {
        const double x = i / 200.0;
        CHECK(m.poly(x) <= f(x) + 1e-9);
        CHECK(n.poly(x) >= f(x) - 1e-9);
        if (i % 20 == 0) CHECK(std::abs(m.poly(x) - lower_op_M(f, pair, x)) <= 1e-9);
    }
}

TEST_CASE("smoother of a constant is the constant") {
    const Smoother g = smooth_lower_G(builtin_function("constant"), 0.25);
    for (double x : {0.0, 0.3, 1.0}) CHECK(std::abs(g(x) - builtin_function("constant")(x)) <= 1e-12);
}

TEST_CASE("G_y of the identity at the left end") {
    // omega_1(x, u, 1/2) is the window length: u + 1/4 for u < 1/4, 1/2 after;
    // (1/y) int_0^{1/2} (u - omega) du = -0.1875.
    const Smoother g = smooth_lower_G(builtin_function("identity"), 0.5);
    CHECK(std::abs(g(0.0) - (-0.1875)) <= 1e-6);
    CHECK(g(0.0) <= 0.0);
}

TEST_CASE("smoothing parameter must lie in (0, 1)") {
    const FunctionModel id = builtin_function("identity");
    CHECK_THROWS_AS((void)smooth_lower_G(id, 0.0), ArgumentError);
    CHECK_THROWS_AS((void)smooth_upper_H(id, 1.0), ArgumentError);
    CHECK_THROWS_AS((void)composite_lower_L(id, 4, -0.1), ArgumentError);
    CHECK_THROWS_AS((void)auto_pair_AB(id, 1), ArgumentError);
    CHECK_THROWS_AS((void)smooth_lower_G(id, 0.5)(1.2), DomainError);
}

TEST_CASE("derivative integrates to the change of the smoothed value") {
    // The lattice modulus of a non-monotone target has small unhinted kinks,
    // so only the identity is integrated to rounding accuracy.
    for (auto [id, tol] : {std::pair{"identity", 1e-10}, std::pair{"sin10", 1e-4}, std::pair{"abs_shift", 1e-4}}) {
        const Smoother h = smooth_upper_H(builtin_function(id), 0.2);
        const FunctionModel hf = h.as_function();
        for (auto [x1, x2] : {std::pair{0.0, 0.35}, std::pair{0.1, 0.9}, std::pair{0.6, 1.0}}) {
            const double change = h(x2) - h(x1);
            const double integral = quad_integrate([&](double x) { return h.derivative(x); }, x1, x2,
                                                   QuadConfig{64, 16}, hf.quad_hints());
            CAPTURE(id);
            CHECK(std::abs(integral - change) <= tol * (1.0 + std::abs(change)));
        }
    }
}

TEST_CASE("G <= rho <= H") {
    const FunctionModel f = builtin_function("abs_shift");
    const Smoother g = smooth_lower_G(f, 0.125);
    const Smoother h = smooth_upper_H(f, 0.125);
    for (int i = 0; i <= 100; ++i) {
        const double x = i / 100.0;
        CHECK(g(x) <= f(x) + 1e-10);
        CHECK(h(x) >= f(x) - 1e-10);
    }
}

TEST_CASE("composite operators on a constant") {
    const FunctionModel one = builtin_function("constant");
    const OperatorOutput l = composite_lower_L(one, 6, 0.25);
    const OperatorOutput j = composite_upper_J(one, 6, 0.25);
    for (double x : {0.0, 0.5, 1.0}) {
        CHECK(std::abs(l.poly(x) - one(x)) <= 1e-10);
        CHECK(std::abs(j.poly(x) - one(x)) <= 1e-10);
    }
    const AutoPair ab = auto_pair_AB(one, 8);
    CHECK(l1_distance(ab.lower.poly, ab.upper.poly) <= 1e-8);
    CHECK(ab.lower.params.k == 8);
    CHECK(ab.lower.params.y == doctest::Approx(0.125));
}

TEST_CASE("L <= J and the A/B gap shrinks for the identity") {
    const FunctionModel id = builtin_function("identity");
    double previous = INFINITY;
    for (int k : {4, 8, 16}) {
        const AutoPair ab = auto_pair_AB(id, k);
        for (int i = 0; i <= 100; ++i) {
            const double x = i / 100.0;
            CHECK(ab.lower.poly(x) <= ab.upper.poly(x));
        }
        const double gap = l1_distance(ab.lower.poly, ab.upper.poly);
        CAPTURE(k);
        CHECK(gap < previous);
        previous = gap;
    }
}

TEST_CASE("property: shift covariance") {
    Gen gen(0x5eed0601);
    const FunctionModel f = builtin_function("sin10");
    for (int trial = 0; trial < 3; ++trial) {
        const double c = gen.uniform(-3.0, 3.0);
        const double y = gen.uniform(0.1, 0.5);
        const int k = gen.integer(2, 8);
        const OperatorOutput base = composite_lower_L(f, k, y);
        const OperatorOutput moved = composite_lower_L(shifted(f, c), k, y);
        for (int i = 0; i <= 20; ++i) {
            const double x = i / 20.0;
            CHECK(std::abs(moved.poly(x) - base.poly(x) - c) <= 1e-10);
        }
    }
}

// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "onesided/errors.hpp"
#include "onesided/moduli.hpp"
#include "onesided/registry.hpp"
#include "support/generators.hpp"

using namespace onesided;
using onesided::testing::Gen;

namespace {

FunctionModel scaled(const FunctionModel& f, double c) {
    return FunctionModel([f, c](double x) { return c * f(x); }, f.id() + "*c").with_breakpoints(f.breakpoints());
}

// Exact tau_1 of the identity in L1: interior windows give delta, the
// boundary windows [0, x + d/2] and [x - d/2, 1] shrink linearly.
double tau_identity(double d) { return d - d * d / 4.0; }

}  // namespace

TEST_CASE("finite differences") {
    const FunctionModel id = builtin_function("identity");
    CHECK(finite_difference(id, 0.2, 0.3, 1) == doctest::Approx(0.3).epsilon(1e-15));
    const FunctionModel sq = builtin_function("square");
    CHECK(std::abs(finite_difference(sq, 0.4, 0.1, 2) - 0.02) <= 1e-14);
    CHECK(std::abs(finite_difference(sq, 0.1, 0.2, 3)) <= 1e-12);
}

TEST_CASE("finite difference samples must stay in X") {
    const FunctionModel id = builtin_function("identity");
    CHECK_THROWS_AS((void)finite_difference(id, 0.9, 0.1, 2), DomainError);
    CHECK_THROWS_AS((void)finite_difference(id, -0.1, 0.1, 1), DomainError);
}

TEST_CASE("local modulus examples") {
    const ModulusConfig cfg{};
    CHECK(local_modulus(builtin_function("constant"), 0.5, 0.3, cfg) == 0.0);
    CHECK(std::abs(local_modulus(builtin_function("identity"), 0.5, 0.1, cfg) - 0.1) <= 2e-3);
    const FunctionModel jump([](double x) { return x <= 0.5 ? 0.0 : 2.5; }, "jump");
    CHECK(local_modulus(jump, 0.5, 0.2, cfg) == doctest::Approx(2.5));
}

TEST_CASE("local modulus argument errors") {
    const FunctionModel id = builtin_function("identity");
    CHECK_THROWS_AS((void)local_modulus(id, 0.5, 0.0, {}), ArgumentError);
    CHECK_THROWS_AS((void)local_modulus(id, 0.5, -1.0, {}), ArgumentError);
    CHECK_THROWS_AS((void)local_modulus(id, 0.5, 0.1, ModulusConfig{0, 33, 33}), ArgumentError);
    CHECK_THROWS_AS((void)local_modulus(id, 0.5, 0.1, ModulusConfig{1, 2, 33}), ArgumentError);
}

TEST_CASE("averaged modulus of the identity") {
    const WeightedSpace l1 = WeightedSpace::unweighted(1.0);
    for (double d : {0.05, 0.1, 0.2, 0.5}) {
        CAPTURE(d);
        CHECK(std::abs(averaged_modulus(builtin_function("identity"), d, {}, l1) - tau_identity(d)) <= 5e-3);
    }
    CHECK(averaged_modulus(builtin_function("constant"), 0.3, {}, l1) == 0.0);
}

TEST_CASE("averaged modulus scales with the function") {
    const WeightedSpace l1 = WeightedSpace::unweighted(1.0);
    const FunctionModel id = builtin_function("identity");
    const double t1 = averaged_modulus(id, 0.2, {}, l1);
    const double t2 = averaged_modulus(scaled(id, 2.0), 0.2, {}, l1);
    CHECK(std::abs(t2 - 2.0 * t1) <= 1e-10 * t2);
}

TEST_CASE("property: monotone in delta") {
    const WeightedSpace l1 = WeightedSpace::unweighted(1.0);
    Gen gen(0x5eed0301);
    for (const std::string& id : {"identity", "abs_shift", "sin10", "exp", "ramp"}) {
        const FunctionModel f = builtin_function(id);
        for (int trial = 0; trial < 4; ++trial) {
            const double d1 = gen.uniform(0.01, 0.5);
            const double d2 = d1 + gen.uniform(0.0, 0.4);
            CAPTURE(id);
            CHECK(averaged_modulus(f, d1, {}, l1) <= averaged_modulus(f, d2, {}, l1) + 1e-10);
        }
    }
}

TEST_CASE("property: homogeneity") {
    const WeightedSpace space = builtin_space("inv_sqrt", 1.0);
    Gen gen(0x5eed0302);
    for (int trial = 0; trial < 8; ++trial) {
        const FunctionModel f = builtin_function(trial % 2 ? "sin10" : "abs_shift");
        const double c = gen.uniform(-4.0, 4.0);
        const double d = gen.uniform(0.02, 0.4);
        const int k = gen.integer(1, 3);
        const ModulusConfig cfg{k, 33, 33};
        const double base = averaged_modulus(f, d, cfg, space);
        CHECK(std::abs(averaged_modulus(scaled(f, c), d, cfg, space) - std::abs(c) * base) <= 1e-10 * base);
    }
}

TEST_CASE("property: vanishes on polynomials of degree below k") {
    const WeightedSpace l1 = WeightedSpace::unweighted(1.0);
    Gen gen(0x5eed0303);
    for (int k = 1; k <= 4; ++k) {
        const std::vector<double> m = gen.coeffs(k);
        const FunctionModel poly([m](double x) { return onesided::testing::horner(m, x); }, "poly");
        CHECK(averaged_modulus(poly, gen.uniform(0.05, 0.3), ModulusConfig{k, 33, 33}, l1) <= 1e-8);
    }
}

TEST_CASE("property: the sup dominates admissible samples") {
    Gen gen(0x5eed0304);
    const FunctionModel f = builtin_function("sin10");
    for (int trial = 0; trial < 200; ++trial) {
        const int k = gen.integer(1, 3);
        const double x = gen.uniform(0.0, 1.0);
        const double d = gen.uniform(0.02, 0.3);
        const ModulusConfig cfg{k, 33, 33};
        const double lo = std::max(0.0, x - 0.5 * k * d);
        const double hi = std::min(1.0, x + 0.5 * k * d);
        // Lattice sample: anchor and step on the window's grid.
        const int intervals = k * 32;
        const int s = gen.integer(1, 32);
        const int i = gen.integer(0, intervals - k * s);
        const double spacing = (hi - lo) / intervals;
        const double sample = std::abs(finite_difference(f, lo + i * spacing, s * spacing, k));
        CHECK(local_modulus(f, x, d, cfg) >= sample - 1e-12);
    }
}

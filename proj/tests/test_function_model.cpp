// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "onesided/errors.hpp"
#include "onesided/expression.hpp"
#include "onesided/function_model.hpp"
#include "onesided/registry.hpp"

using namespace onesided;

TEST_CASE("flagged endpoints are clamped to the offset") {
    const FunctionModel f = FunctionModel([](double x) { return std::pow(x, -0.25); }, "pole")
                                .with_singular(true, false, 1e-8);
    CHECK(f(0.0) == doctest::Approx(std::pow(1e-8, -0.25)));
    CHECK(std::isfinite(f(-1.0)));
    CHECK(f.at_singularity(0.0));
    CHECK_FALSE(f.at_singularity(1.0));
    CHECK(f.singular_points().size() == 1);
}

TEST_CASE("derivative falls back to central differences") {
    const FunctionModel f([](double x) { return std::sin(3 * x); });
    CHECK_FALSE(f.has_derivative());
    CHECK(f.derivative(0.4) == doctest::Approx(3 * std::cos(1.2)).epsilon(1e-8));
    CHECK(f.derivative(0.0) == doctest::Approx(3.0).epsilon(1e-5));
    CHECK(f.derivative(1.0) == doctest::Approx(3 * std::cos(3.0)).epsilon(1e-5));
}

TEST_CASE("non-finite difference quotient is an evaluation error") {
    const FunctionModel f([](double x) { return x < 0.5 ? 0.0 : NAN; });
    CHECK_THROWS_AS((void)f.derivative(0.5), EvaluationError);
}

TEST_CASE("builder validation") {
    CHECK_THROWS_AS(FunctionModel(RealFn{}), ArgumentError);
    FunctionModel f([](double x) { return x; });
    CHECK_THROWS_AS(f.with_singular(true, false, 0.0), ArgumentError);
    CHECK_THROWS_AS(f.with_domination(-1.0), ArgumentError);
}

TEST_CASE("registry ids resolve and unknown ids fail") {
    for (const std::string& id : builtin_function_ids()) CHECK(builtin_function(id).id() == id);
    CHECK_THROWS_AS((void)builtin_function("nope"), UnknownIdError);
    CHECK_THROWS_AS((void)builtin_weight("nope"), UnknownIdError);
    CHECK(default_suite().size() == 6);
    CHECK(default_suite().back().weight_id == "inv_sqrt");
}

TEST_CASE("analytic derivatives of the registry agree with differences") {
    for (const std::string& id : builtin_function_ids()) {
        const FunctionModel f = builtin_function(id);
        const FunctionModel numeric([f](double x) { return f(x); });
        for (double x : {0.2, 0.45, 0.8}) {
            CAPTURE(id);
            CAPTURE(x);
            CHECK(f.derivative(x) == doctest::Approx(numeric.derivative(x)).epsilon(1e-6));
        }
    }
}

TEST_CASE("expressions") {
    CHECK(compile_expression("1 + 2*3")(0.0) == 7.0);
    CHECK(compile_expression("2^3^2")(0.0) == 512.0);
    CHECK(compile_expression("-x^2")(3.0) == -9.0);
    CHECK(compile_expression("pow(x, 1/3)")(8.0) == doctest::Approx(2.0));
    CHECK(compile_expression("abs(x - 0.3)")(0.1) == doctest::Approx(0.2));
    CHECK(compile_expression("sin(pi*x) + cos(0) + exp(0) + log(e) + sqrt(4)")(0.5) == doctest::Approx(6.0));
    CHECK(compile_expression("1.5e-1 * x")(2.0) == doctest::Approx(0.3));
    CHECK(compile_expression(" ( x ) / 4 ")(2.0) == 0.5);
    CHECK(expression_function("x").id() == "expr:x");
}

TEST_CASE("malformed expressions are parse errors") {
    for (const char* bad : {"", "x +", "(x", "foo(x)", "x $ 2", "pow(x)", "2 x", "sin x", "1..2"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS((void)compile_expression(bad), ParseError);
    }
}

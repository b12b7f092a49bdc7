// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <json.hpp>
#include <sstream>
#include <tuple>

#include "onesided/errors.hpp"
#include "onesided/operators.hpp"
#include "onesided/registry.hpp"
#include "onesided/verify.hpp"

using namespace onesided;

namespace {

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("trivial sandwich") {
    const FunctionModel f = builtin_function("sin10");
    const VerificationReport r = check_sandwich([&](double x) { return f(x) - 1.0; }, f,
                                                [&](double x) { return f(x) + 2.0; }, 101);
    CHECK(r.pass);
    CHECK(r.lhs == doctest::Approx(1.0));
    CHECK(r.rhs == doctest::Approx(2.0));
    CHECK(r.min_margin == doctest::Approx(1.0));
    CHECK(r.grid_n == 101);
    CHECK(r.kind == CheckKind::sandwich);
}

TEST_CASE("constant bounds around the ramp") {
    const FunctionModel f = builtin_function("ramp");
    CHECK(check_sandwich([](double) { return 0.0; }, f, [](double) { return 1.0; }).pass);
    const VerificationReport bad = check_sandwich([](double) { return 0.1; }, f, [](double) { return 1.0; });
    CHECK_FALSE(bad.pass);
    CHECK(bad.lhs < 0.0);
}

TEST_CASE("A_k and B_k sandwich exp at k = 8") {
    const FunctionModel f = builtin_function("exp");
    const AutoPair ab = auto_pair_AB(f, 8);
    const auto lower = [&](double x) { return ab.lower.poly(x); };
    const auto upper = [&](double x) { return ab.upper.poly(x); };
    const VerificationReport ok = check_sandwich(lower, f, upper);
    CHECK(ok.pass);
    // Lifting the lower polynomial 0.1 past its closest approach breaks the sandwich.
    const double lift = ok.lhs + 0.1;
    const auto lifted = [&](double x) { return ab.lower.poly(x) + lift; };
    CHECK_FALSE(check_sandwich(lifted, f, upper).pass);
}

TEST_CASE("evaluation failures become failed reports") {
    const FunctionModel f = builtin_function("identity");
    const VerificationReport r =
        check_sandwich([](double x) { return x > 0.5 ? NAN : 0.0; }, f, [](double) { return 1.0; });
    CHECK_FALSE(r.pass);
    CHECK_FALSE(r.error.empty());
    CHECK_THROWS_AS((void)check_sandwich([](double) { return 0.0; }, f, [](double) { return 1.0; }, 1),
                    ArgumentError);
}

TEST_CASE("smoother bound for the identity at y = 1/2") {
    const FunctionModel f = builtin_function("identity");
    const WeightedSpace l1 = WeightedSpace::unweighted(1.0);
    const Smoother g = smooth_lower_G(f, 0.5);
    const Smoother h = smooth_upper_H(f, 0.5);
    const double norm = weighted_norm([&](double x) { return h(x) - g(x); }, l1);
    // tau_1(x, 1/2) = 1/2 - 1/16 on the exact lattice; C_1 = 2 / (1 - y) = 4.
    const double tau = averaged_modulus(f, 0.5, {}, l1);
    CHECK(tau == doctest::Approx(0.4375).epsilon(1e-6));
    const VerificationReport r = check_bound(norm, 4.0, tau);
    CHECK(r.rhs == doctest::Approx(1.75).epsilon(1e-6));
    CHECK(r.pass);
    CHECK(r.ratio < 1.0);
}

TEST_CASE("bound edge cases") {
    CHECK(check_bound(0.0, 2.0, 0.0).pass);
    CHECK(check_bound(1e-12, 2.0, 0.0).pass);
    CHECK_FALSE(check_bound(1e-3, 2.0, 0.0).pass);
    CHECK(check_bound(1.04, 1.0, 1.0).pass);
    CHECK_FALSE(check_bound(1.06, 1.0, 1.0).pass);
    CHECK_THROWS_AS((void)check_bound(NAN, 1.0, 1.0), ArgumentError);
    CHECK_THROWS_AS((void)check_bound(1.0, 0.0, 1.0), ArgumentError);
    CHECK_THROWS_AS((void)check_bound(1.0, 1.0, -1.0), ArgumentError);
}

TEST_CASE("dominance") {
    CHECK(check_dominance(1.0, 1.0).pass);
    CHECK(check_dominance(1.0 + 5e-9, 1.0).pass);
    CHECK_FALSE(check_dominance(1.1, 1.0).pass);
    CHECK_FALSE(check_dominance(NAN, 1.0).pass);
}

TEST_CASE("empty degree list gives no reports") {
    const std::vector<int> none;
    CHECK(run_theorem_suite(default_suite(), none).empty());
}

TEST_CASE("small suite is sorted, passing and deterministic") {
    const std::vector<FunctionModel> fns{builtin_function("identity"), builtin_function("abs_shift")};
    const std::vector<int> ks{4};
    const WeightedSpace l1 = WeightedSpace::unweighted(1.0);
    const auto reports = run_theorem_suite(fns, ks, l1);
    REQUIRE_FALSE(reports.empty());
    for (std::size_t i = 1; i < reports.size(); ++i) {
        const auto& a = reports[i - 1];
        const auto& b = reports[i];
        CHECK(std::tie(a.check_id, a.function_id, a.params.k) <= std::tie(b.check_id, b.function_id, b.params.k));
    }
    for (const auto& r : reports) {
        CAPTURE(r.check_id);
        CAPTURE(r.function_id);
        CHECK(r.pass);
    }
    const SuiteSummary s = summarize(reports);
    CHECK(s.total == static_cast<int>(reports.size()));
    CHECK(s.failed == 0);

    const std::string csv = reports_to_csv(reports);
    CHECK(csv == reports_to_csv(run_theorem_suite(fns, ks, l1)));
    const auto rows = lines(csv);
    REQUIRE(rows.size() == reports.size() + 2);
    CHECK(rows[0] == "# schema=1");
    CHECK(rows[1] == "check_id,function_id,weight_id,kind,k,y,p,lhs,rhs,ratio,min_margin,pass,grid_n,error");
    for (std::size_t i = 2; i < rows.size(); ++i)
        CHECK(std::count(rows[i].begin(), rows[i].end(), ',') == 13);

    const auto json = nlohmann::json::parse(reports_to_json(reports));
    REQUIRE(json.size() == reports.size());
    CHECK(json[0]["check_id"] == reports[0].check_id);
    CHECK(json[0]["params"]["k"] == 4);
}

TEST_CASE("non-finite reals serialise as null") {
    VerificationReport r;
    r.check_id = "x";
    r.function_id = "f";
    r.lhs = NAN;
    r.ratio = INFINITY;
    const std::vector<VerificationReport> one{r};
    const auto json = nlohmann::json::parse(reports_to_json(one));
    CHECK(json[0]["lhs"].is_null());
    CHECK(json[0]["ratio"].is_null());
    CHECK(json[0]["rhs"] == 0.0);
}

TEST_CASE("real formatting round-trips") {
    for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 12345.678}) CHECK(std::stod(format_real(v)) == v);
    CHECK(to_string(CheckKind::bound) == "bound");
}

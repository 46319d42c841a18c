#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "harmint/integrands.hpp"
#include "harmint/quadrature.hpp"
#include "oracles.hpp"

using namespace harmint;
using harmint::testing::known_integral_suite;
using harmint::testing::simpson;

namespace {
// reference value of the half-line integral of e^-x sech^2 x (= pi/2 - 1)
constexpr double exp_sech2_half_line = 0.57079632679489661923;
}  // namespace

TEST_SUITE("quadrature") {

TEST_CASE("argument validation") {
    const Integrand one = [](double) { return 1.0; };
    CHECK_THROWS_AS(integrate_finite(one, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(integrate_finite(one, 0.0, 0.0), std::invalid_argument);

    QuadratureConfig bad;
    bad.abs_tol = 0.0;
    CHECK_THROWS_AS(integrate_finite(one, 0.0, 1.0, bad), std::invalid_argument);
    bad = QuadratureConfig{};
    bad.rel_tol = -1.0;
    CHECK_THROWS_AS(integrate_finite(one, 0.0, 1.0, bad), std::invalid_argument);
    bad = QuadratureConfig{};
    bad.max_refinement_levels = 0;
    CHECK_THROWS_AS(integrate_finite(one, 0.0, 1.0, bad), std::invalid_argument);
}

TEST_CASE("constant and polynomial integrands are machine exact") {
    const QuadratureResult unit =
        integrate_finite([](double) { return 1.0; }, 0.0, 1.0);
    CHECK(unit.converged);
    CHECK(unit.value == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(unit.error_estimate <= 1e-14);
    CHECK(unit.evaluations == 15);

    const QuadratureResult square =
        integrate_finite([](double x) { return x * x; }, 0.0, 1.0);
    CHECK(square.converged);
    CHECK(std::fabs(square.value - 1.0 / 3.0) <= 1e-15);
}

TEST_CASE("Euler integrand over [0,1] reproduces H_4 = 25/12") {
    const EulerIntegrand spec(4);
    const QuadratureResult result =
        integrate_finite([spec](double x) { return euler_value(spec, x); }, 0.0, 1.0);
    CHECK(result.converged);
    CHECK(std::fabs(result.value - 25.0 / 12.0) <= 1e-10);
}

TEST_CASE("half line: e^-x integrates to 1") {
    const QuadratureResult result =
        integrate_half_line([](double x) { return std::exp(-x); });
    CHECK(result.converged);
    CHECK(std::fabs(result.value - 1.0) <= 1e-11);
}

TEST_CASE("half line: combined base-case integrand sums to 1") {
    // e^-ax sech^2 x + a e^-(a+1)x sech x evaluated as a single integrand
    const double alpha = 1.0;
    const SechExpIntegrand i_spec(alpha, 2);
    const SechExpIntegrand j_spec(alpha + 1.0, 1);
    const QuadratureResult result = integrate_half_line([&](double x) {
        return sech_exp_value(i_spec, x) + alpha * sech_exp_value(j_spec, x);
    });
    CHECK(result.converged);
    CHECK(std::fabs(result.value - 1.0) <= 1e-9);
}

TEST_CASE("half line: e^-x sech^2 x against the Simpson oracle") {
    const SechExpIntegrand spec(1.0, 2);
    const Integrand f = [spec](double x) { return sech_exp_value(spec, x); };

    // brute-force composite Simpson on [0, 60]; the tail beyond 60 is ~1e-79
    const double oracle = simpson(f, 0.0, 60.0, 1000000);
    CHECK(std::fabs(oracle - exp_sech2_half_line) <= 1e-12);

    const QuadratureResult result = integrate_half_line(f);
    CHECK(result.converged);
    CHECK(result.value > 0.0);
    CHECK(result.value < 1.0);
    CHECK(std::fabs(result.value - oracle) <= 1e-9);
    CHECK(std::fabs(result.value - exp_sech2_half_line) <= 1e-11);
}

TEST_CASE("even full line doubles the half-line result") {
    const QuadratureResult two =
        integrate_even_full_line([](double x) { return std::exp(-std::fabs(x)); });
    CHECK(two.converged);
    CHECK(std::fabs(two.value - 2.0) <= 1e-10);

    const SechExpIntegrand spec(1.0, 2);
    const Integrand even = [spec](double x) { return sech_exp_value_even(spec, x); };
    const Integrand half = [spec](double x) { return sech_exp_value(spec, x); };
    const QuadratureResult full_result = integrate_even_full_line(even);
    const QuadratureResult half_result = integrate_half_line(half);
    CHECK(full_result.value == 2.0 * half_result.value);  // same panels, exact doubling
    CHECK(full_result.evaluations == half_result.evaluations);

    // slow-decay corner of the family: beta = 1e-3, m = 2
    const SechExpIntegrand slow(1e-3, 2);
    const QuadratureResult slow_result = integrate_even_full_line(
        [slow](double x) { return sech_exp_value_even(slow, x); });
    CHECK(slow_result.converged);
    CHECK(std::fabs(slow_result.value - 2.0 * 0.99930726382768942) <= 1e-9);
}

TEST_CASE("asymmetric integrands are rejected") {
    CHECK_THROWS_AS(integrate_even_full_line([](double x) { return x + 1.0; }),
                    AsymmetricIntegrandError);
}

TEST_CASE("non-finite integrand values abort the integration") {
    CHECK_THROWS_AS(
        integrate_finite([](double x) { return std::sqrt(x - 0.5); }, 0.0, 1.0),
        EvaluationError);
    CHECK_THROWS_AS(integrate_finite([](double x) { return 1.0 / x; }, -1.0, 1.0),
                    EvaluationError);
}

TEST_CASE("refinement budget exhaustion reports converged = false") {
    QuadratureConfig tight;
    tight.abs_tol = 1e-13;
    tight.rel_tol = 1e-13;
    tight.max_refinement_levels = 2;
    const QuadratureResult result = integrate_finite(
        [](double x) { return std::sqrt(std::fabs(x - 0.337)); }, 0.0, 1.0, tight);
    CHECK_FALSE(result.converged);
    CHECK(result.error_estimate >
          std::max(tight.abs_tol, tight.rel_tol * std::fabs(result.value)));
}

TEST_CASE("results are bit-deterministic") {
    const SechExpIntegrand spec(0.7, 3);
    const QuadratureResult first =
        integrate_half_line([spec](double x) { return sech_exp_value(spec, x); });
    const QuadratureResult second =
        integrate_half_line([spec](double x) { return sech_exp_value(spec, x); });
    CHECK(first.value == second.value);
    CHECK(first.error_estimate == second.error_estimate);
    CHECK(first.evaluations == second.evaluations);
    CHECK(first.converged == second.converged);
}

TEST_CASE("linearity at tolerance") {
    const SechExpIntegrand spec(1.0, 2);
    const Integrand f = [spec](double x) { return sech_exp_value(spec, x); };
    const QuadratureResult base = integrate_half_line(f);

    // doubling is exact in binary arithmetic: same panels, same rounding
    const QuadratureResult doubled =
        integrate_half_line([&f](double x) { return 2.0 * f(x); });
    CHECK(doubled.value == 2.0 * base.value);

    const QuadratureResult tenfold =
        integrate_half_line([&f](double x) { return 10.0 * f(x); });
    CHECK(std::fabs(tenfold.value - 10.0 * base.value) <=
          tenfold.error_estimate + 10.0 * base.error_estimate);
}

TEST_CASE("error estimates are honest on the known-answer suite") {
    const QuadratureConfig config;
    for (const auto& known : known_integral_suite()) {
        CAPTURE(known.name);
        const QuadratureResult result = known.run(config);
        CHECK(result.converged);
        CHECK(result.error_estimate >= 0.0);
        // converged promises the estimate meets the configured tolerance
        CHECK(result.error_estimate <=
              std::max(config.abs_tol, config.rel_tol * std::fabs(result.value)));
        const double true_error = std::fabs(result.value - known.exact);
        CHECK(true_error <= 10.0 * result.error_estimate);
    }
}

TEST_CASE("every paper integrand converges within the evaluation budget") {
    for (const std::uint32_t k : {1u, 2u, 3u, 5u, 8u, 13u, 21u, 30u}) {
        for (const double alpha : {0.05, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0}) {
            const SechExpIntegrand i_spec(alpha, k + 1);
            const SechExpIntegrand j_spec(alpha + 1.0, k);
            for (const auto& spec : {i_spec, j_spec}) {
                const QuadratureResult result = integrate_half_line(
                    [spec](double x) { return sech_exp_value(spec, x); });
                CAPTURE(spec.beta);
                CAPTURE(spec.m);
                CHECK(result.converged);
                CHECK(result.evaluations <= 100000);
            }
        }
    }
}

}  // TEST_SUITE

#include "harmint/identity.hpp"

#include <cmath>
#include <stdexcept>

#include "harmint/harmonic.hpp"
#include "harmint/integrands.hpp"

namespace harmint {

namespace {

Integrand make_half_line_integrand(const SechExpIntegrand& spec) {
    return [spec](double x) { return sech_exp_value(spec, x); };
}

Integrand make_full_line_integrand(const SechExpIntegrand& spec) {
    return [spec](double x) { return sech_exp_value_even(spec, x); };
}

SechExpIntegrand i_spec(const IdentityParams& params) {
    return SechExpIntegrand(params.alpha, params.k + 1);
}

SechExpIntegrand j_spec(const IdentityParams& params) {
    return SechExpIntegrand(params.alpha + 1.0, params.k);
}

// Halving is exact in binary floating point, so the scaled-down full-line
// results coincide bit for bit with their half-line counterparts.
QuadratureResult halved(QuadratureResult full) {
    full.value *= 0.5;
    full.error_estimate *= 0.5;
    return full;
}

TermVerification assemble_term(const IdentityParams& params,
                               QuadratureResult i_result,
                               QuadratureResult j_result) {
    TermVerification term{params, i_result, j_result};
    const double coefficient = identity_coefficient(params);
    term.combination = term.i_result.value + coefficient * term.j_result.value;
    term.expected = 1.0 / static_cast<double>(params.k);
    term.residual = std::fabs(term.combination - term.expected);
    return term;
}

template <typename TermFn>
HarmonicReport assemble_report(std::uint64_t n, double alpha, TermFn&& term_for) {
    if (n == 0) {
        throw std::invalid_argument("harmonic report: n must be >= 1");
    }
    if (n > 0xFFFFFFFFull) {
        throw std::invalid_argument("harmonic report: n exceeds the supported term range");
    }
    HarmonicReport report;
    report.n = n;
    report.alpha = alpha;
    report.terms.reserve(n);
    report.all_converged = true;

    // Ascending-k accumulation keeps the sum reproducible no matter how the
    // terms were computed.
    double sum = 0.0;
    for (std::uint64_t k = 1; k <= n; ++k) {
        TermVerification term = term_for(IdentityParams(static_cast<std::uint32_t>(k), alpha));
        sum += term.combination;
        report.all_converged =
            report.all_converged && term.i_result.converged && term.j_result.converged;
        report.terms.push_back(std::move(term));
    }

    report.integral_sum = sum;
    report.exact_value = harmonic_exact(n);
    report.abs_error = std::fabs(report.integral_sum - report.exact_value.to_double());
    return report;
}

}  // namespace

IdentityParams::IdentityParams(std::uint32_t k_, double alpha_) : k(k_), alpha(alpha_) {
    if (k < 1) {
        throw std::invalid_argument("IdentityParams: k must be >= 1");
    }
    if (!(alpha > 0.0)) {
        throw std::invalid_argument("IdentityParams: alpha must be > 0");
    }
}

double identity_coefficient(const IdentityParams& params) {
    return (params.alpha - static_cast<double>(params.k - 1)) / static_cast<double>(params.k);
}

double term_error_budget(const TermVerification& term) {
    return term.i_result.error_estimate +
           std::fabs(identity_coefficient(term.params)) * term.j_result.error_estimate;
}

double report_error_budget(const HarmonicReport& report) {
    double budget = 0.0;
    for (const TermVerification& term : report.terms) {
        budget += term_error_budget(term);
    }
    return budget;
}

QuadratureResult i_integral(const IdentityParams& params, const QuadratureConfig& config) {
    return integrate_half_line(make_half_line_integrand(i_spec(params)), config);
}

QuadratureResult j_integral(const IdentityParams& params, const QuadratureConfig& config) {
    return integrate_half_line(make_half_line_integrand(j_spec(params)), config);
}

TermVerification verify_term(const IdentityParams& params, const QuadratureConfig& config) {
    // I and J are integrated separately on purpose: a bad residual should
    // point at the integral that caused it.
    return assemble_term(params, i_integral(params, config), j_integral(params, config));
}

HarmonicReport harmonic_via_integrals(std::uint64_t n, double alpha,
                                      const QuadratureConfig& config) {
    return assemble_report(n, alpha, [&config](const IdentityParams& params) {
        return verify_term(params, config);
    });
}

HarmonicReport harmonic_via_full_line(std::uint64_t n, double alpha,
                                      const QuadratureConfig& config) {
    return assemble_report(n, alpha, [&config](const IdentityParams& params) {
        const QuadratureResult i_full =
            integrate_even_full_line(make_full_line_integrand(i_spec(params)), config);
        const QuadratureResult j_full =
            integrate_even_full_line(make_full_line_integrand(j_spec(params)), config);
        return assemble_term(params, halved(i_full), halved(j_full));
    });
}

QuadratureResult harmonic_via_euler(std::uint64_t n, const QuadratureConfig& config) {
    const EulerIntegrand spec(n);
    return integrate_finite([spec](double x) { return euler_value(spec, x); }, 0.0, 1.0,
                            config);
}

}  // namespace harmint

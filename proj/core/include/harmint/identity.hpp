#pragma once

#include <cstdint>
#include <vector>

#include "harmint/quadrature.hpp"
#include "harmint/rational.hpp"

namespace harmint {

/// One (k, alpha) instance of the per-term identity
///
///   I_{k+1} + ((alpha - (k-1)) / k) * J_k = 1/k,   alpha > 0, k >= 1,
///
/// where I_{k+1} = integral over [0, inf) of e^(-alpha x) sech^(k+1) x
/// and J_k = integral over [0, inf) of e^(-(alpha+1) x) sech^k x.
struct IdentityParams {
    std::uint32_t k;
    double alpha;

    IdentityParams(std::uint32_t k_, double alpha_);
};

/// The combination coefficient (alpha - (k-1)) / k. Negative when
/// alpha < k-1, zero at alpha = k-1; the identity holds either way.
double identity_coefficient(const IdentityParams& params);

/// Numerical check of one term of the identity.
struct TermVerification {
    IdentityParams params;
    QuadratureResult i_result;  // I_{k+1}
    QuadratureResult j_result;  // J_k
    double combination = 0.0;   // i + coefficient * j
    double expected = 0.0;      // 1/k
    double residual = 0.0;      // |combination - expected|
};

/// First-order error budget for a term: i_err + |coefficient| * j_err.
double term_error_budget(const TermVerification& term);

/// H_n reconstructed term by term from the integral identity, with the
/// exact rational value alongside for comparison.
struct HarmonicReport {
    std::uint64_t n = 0;
    double alpha = 0.0;
    std::vector<TermVerification> terms;  // k = 1..n, ascending
    double integral_sum = 0.0;            // sum of terms[i].combination, in order
    ExactRational exact_value;
    double abs_error = 0.0;               // |integral_sum - exact_value|
    bool all_converged = false;
};

/// Sum of the per-term error budgets; the only sound aggregate without
/// assuming the per-term errors are independent.
double report_error_budget(const HarmonicReport& report);

QuadratureResult i_integral(const IdentityParams& params,
                            const QuadratureConfig& config = {});

QuadratureResult j_integral(const IdentityParams& params,
                            const QuadratureConfig& config = {});

TermVerification verify_term(const IdentityParams& params,
                             const QuadratureConfig& config = {});

/// Evaluates the half-line form: H_n = sum_{k=1..n} (I_{k+1} + coeff_k J_k).
HarmonicReport harmonic_via_integrals(std::uint64_t n, double alpha,
                                      const QuadratureConfig& config = {});

/// Evaluates the full-line form: each term is half the sum of the
/// corresponding integrals over all of R, taken with e^(-beta |x|) weights.
/// The integrands are even, so this reduces to the half-line form exactly;
/// the route through integrate_even_full_line is kept separate so the
/// reduction itself is exercised.
HarmonicReport harmonic_via_full_line(std::uint64_t n, double alpha,
                                      const QuadratureConfig& config = {});

/// H_n via the finite-interval representation:
/// integral over [0, 1] of (1 - x^n) / (1 - x).
QuadratureResult harmonic_via_euler(std::uint64_t n,
                                    const QuadratureConfig& config = {});

}  // namespace harmint

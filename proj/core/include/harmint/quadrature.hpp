#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>

namespace harmint {

/// Tolerances and refinement budget for the adaptive integrator.
struct QuadratureConfig {
    double abs_tol = 1e-11;
    double rel_tol = 1e-11;
    int max_refinement_levels = 18;
};

/// One integral estimate. When converged is true the error estimate is
/// guaranteed to satisfy error_estimate <= max(abs_tol, rel_tol * |value|)
/// for the config the estimate was produced with.
struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::uint64_t evaluations = 0;
    bool converged = false;
};

/// Base class for integration failures that are not recoverable by further
/// refinement.
class QuadratureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The integrand produced NaN or infinity. Silently dropping such points
/// would fake convergence, so the whole integration aborts instead.
class EvaluationError : public QuadratureError {
public:
    using QuadratureError::QuadratureError;
};

/// An integrand handed to integrate_even_full_line failed the evenness
/// spot-check.
class AsymmetricIntegrandError : public QuadratureError {
public:
    using QuadratureError::QuadratureError;
};

using Integrand = std::function<double(double)>;

/// Adaptive estimate of the integral of f over [a, b].
///
/// Each panel is measured with a nested Gauss(7)/Kronrod(15) pair; the
/// local error is |K15 - G7| and the panel with the worst error is split
/// first. A panel stops splitting once it has been halved
/// max_refinement_levels times; if the tolerance is still unmet at that
/// point the result comes back with converged = false and the caller
/// decides what to do.
QuadratureResult integrate_finite(const Integrand& f, double a, double b,
                                  const QuadratureConfig& config = {});

/// Integral of f over [0, inf) for integrands with at least exponential
/// decay. Uses the substitution x = -ln t, which maps (0, 1] onto [0, inf)
/// and turns the problem into the finite integral of f(-ln t)/t; the
/// Gauss-Kronrod nodes never touch t = 0, so the transformed endpoint is
/// never evaluated.
QuadratureResult integrate_half_line(const Integrand& f,
                                     const QuadratureConfig& config = {});

/// Integral of an even integrand over the whole real line, computed as
/// twice the half-line integral. Evenness is spot-checked at three sample
/// points (tolerance 1e-13); a failure throws AsymmetricIntegrandError.
/// The reported evaluation count is that of the underlying half-line call.
QuadratureResult integrate_even_full_line(const Integrand& f_even,
                                          const QuadratureConfig& config = {});

}  // namespace harmint

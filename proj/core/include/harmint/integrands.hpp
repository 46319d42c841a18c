#pragma once

#include <cstdint>

namespace harmint {

/// Parameters of the half-line integrand family e^(-beta x) * sech^m(x).
/// Both integrals of the verified identity live in this family:
/// the I integral uses (beta = alpha, m = k+1), the J integral
/// (beta = alpha + 1, m = k).
struct SechExpIntegrand {
    double beta;     // decay rate, > 0
    std::uint32_t m; // sech power, >= 1

    SechExpIntegrand(double beta_, std::uint32_t m_);
};

/// Parameters of the Euler integrand (1 - x^n) / (1 - x) on [0, 1].
struct EulerIntegrand {
    std::uint64_t n; // >= 1

    explicit EulerIntegrand(std::uint64_t n_);
};

/// ln(sech x) for x >= 0, computed as ln 2 - x - ln(1 + e^(-2x)).
/// Finite for every representable x >= 0; only e^(-2x) is ever
/// exponentiated, so there is no overflow at large x where cosh would blow
/// up.
double log_sech(double x);

/// e^(-beta x) * sech^m(x), evaluated in the log domain as
/// exp(-beta x + m ln(sech x)). Strictly positive, monotone decreasing in x.
double sech_exp_value(const SechExpIntegrand& spec, double x);

/// The even full-line extension e^(-beta |x|) * sech^m(x); equals
/// sech_exp_value at |x| exactly, which is what justifies folding the
/// full-line integrals onto [0, inf).
double sech_exp_value_even(const SechExpIntegrand& spec, double x);

/// (1 - x^n) / (1 - x) on [0, 1]. Uses the geometric-sum form
/// 1 + x + ... + x^(n-1) within 2^-26 of x = 1, where the quotient loses
/// half its significand; continuous through x = 1 with value n.
double euler_value(const EulerIntegrand& spec, double x);

}  // namespace harmint

#pragma once

#include <cstdint>

#include "harmint/rational.hpp"

namespace harmint {

/// Euler-Mascheroni constant, rounded to double from a 50-digit literal.
inline constexpr double euler_gamma =
    0.57721566490153286060651209008240243104215933593992;

/// H_n = 1 + 1/2 + ... + 1/n as a reduced fraction. Throws
/// std::invalid_argument for n = 0; H_0 is not part of the domain here.
ExactRational harmonic_exact(std::uint64_t n);

/// One step of the recurrence H_{n+1} = H_n + 1/(n+1). The caller is
/// responsible for h_n actually being H_n; the contract is not checkable
/// internally.
ExactRational harmonic_next(const ExactRational& h_n, std::uint64_t n);

/// Floating-point H_n via compensated summation, smallest terms first
/// (k = n down to 1). Within 4 ulp of the exact value for n <= 10^6.
double harmonic_float(std::uint64_t n);

/// The approximation gamma + ln n + 1/(2n). Differs from H_n by about
/// -1/(12 n^2).
double harmonic_asymptotic(std::uint64_t n);

/// harmonic_float(n) - ln n - 1/(2n); approaches gamma with O(1/n^2) error.
/// Requires n >= 2.
double estimate_gamma(std::uint64_t n);

}  // namespace harmint

#include "harmint/harmonic.hpp"

#include <cmath>
#include <stdexcept>

namespace harmint {

namespace {

// Balanced split keeps the intermediate numerators/denominators small, so
// summing to n ~ 10^3 stays cheap. Also gives the recurrence tests a route
// independent of harmonic_next's term-by-term accumulation.
ExactRational sum_reciprocals(std::uint64_t lo, std::uint64_t hi) {
    if (lo == hi) {
        return ExactRational(1, BigInt(lo));
    }
    const std::uint64_t mid = lo + (hi - lo) / 2;
    return sum_reciprocals(lo, mid) + sum_reciprocals(mid + 1, hi);
}

}  // namespace

ExactRational harmonic_exact(std::uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("harmonic_exact: n must be >= 1");
    }
    return sum_reciprocals(1, n);
}

ExactRational harmonic_next(const ExactRational& h_n, std::uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("harmonic_next: n must be >= 1");
    }
    return h_n + ExactRational(1, BigInt(n) + 1);
}

double harmonic_float(std::uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("harmonic_float: n must be >= 1");
    }
    double sum = 0.0;
    double compensation = 0.0;
    for (std::uint64_t k = n; k >= 1; --k) {
        const double term = 1.0 / static_cast<double>(k);
        const double y = term - compensation;
        const double t = sum + y;
        compensation = (t - sum) - y;
        sum = t;
    }
    return sum;
}

double harmonic_asymptotic(std::uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("harmonic_asymptotic: n must be >= 1");
    }
    const double x = static_cast<double>(n);
    return euler_gamma + std::log(x) + 0.5 / x;
}

double estimate_gamma(std::uint64_t n) {
    if (n < 2) {
        throw std::invalid_argument("estimate_gamma: n must be >= 2");
    }
    const double x = static_cast<double>(n);
    return harmonic_float(n) - std::log(x) - 0.5 / x;
}

}  // namespace harmint

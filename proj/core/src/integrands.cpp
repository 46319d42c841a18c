#include "harmint/integrands.hpp"

#include <cmath>
#include <stdexcept>

namespace harmint {

namespace {
constexpr double ln2 = 0.6931471805599453094172321214581766;
// ~1.49e-8: below this distance from 1 the quotient form of the Euler
// integrand has lost about half its significand.
constexpr double euler_switchover = 1.0 / (1 << 26);
}  // namespace

SechExpIntegrand::SechExpIntegrand(double beta_, std::uint32_t m_)
    : beta(beta_), m(m_) {
    if (!(beta > 0.0)) {
        throw std::invalid_argument("SechExpIntegrand: beta must be > 0");
    }
    if (m < 1) {
        throw std::invalid_argument("SechExpIntegrand: m must be >= 1");
    }
}

EulerIntegrand::EulerIntegrand(std::uint64_t n_) : n(n_) {
    if (n < 1) {
        throw std::invalid_argument("EulerIntegrand: n must be >= 1");
    }
}

double log_sech(double x) {
    return ln2 - x - std::log1p(std::exp(-2.0 * x));
}

namespace {

// hi + lo == a * b, exactly
inline void two_prod(double a, double b, double& hi, double& lo) {
    hi = a * b;
    lo = std::fma(a, b, -hi);
}

// hi + lo == a + b, exactly (Knuth)
inline void two_sum(double a, double b, double& hi, double& lo) {
    hi = a + b;
    const double shifted = hi - a;
    lo = (a - (hi - shifted)) + (b - shifted);
}

}  // namespace

double sech_exp_value(const SechExpIntegrand& spec, double x) {
    // The exponent -beta x + m ln(sech x) reaches magnitudes of several
    // hundred, where a single double rounding already costs ~1e-13 in the
    // value. Splitting ln(sech x) = -x + c with |c| <= ln 2 and carrying
    // the products in double-double keeps the evaluation at ~1e-14.
    const double m = static_cast<double>(spec.m);
    const double c = ln2 - std::log1p(std::exp(-2.0 * x));

    double bx_hi, bx_lo;
    two_prod(spec.beta, x, bx_hi, bx_lo);
    double mx_hi, mx_lo;
    two_prod(m, x, mx_hi, mx_lo);
    double mc_hi, mc_lo;
    two_prod(m, c, mc_hi, mc_lo);

    double sum_hi, sum_lo;
    two_sum(mc_hi, -bx_hi, sum_hi, sum_lo);
    double head, carry;
    two_sum(sum_hi, -mx_hi, head, carry);
    const double tail = sum_lo + carry + (mc_lo - bx_lo - mx_lo);

    // e^(head + tail) with |tail| ~ ulp(head): first order in tail
    const double base = std::exp(head);
    return std::fma(base, tail, base);
}

double sech_exp_value_even(const SechExpIntegrand& spec, double x) {
    return sech_exp_value(spec, std::fabs(x));
}

double euler_value(const EulerIntegrand& spec, double x) {
    const double distance = 1.0 - x;
    if (std::fabs(distance) < euler_switchover) {
        // 1 + x + x^2 + ... + x^(n-1)
        double sum = 0.0;
        double power = 1.0;
        for (std::uint64_t i = 0; i < spec.n; ++i) {
            sum += power;
            power *= x;
        }
        return sum;
    }
    return (1.0 - std::pow(x, static_cast<double>(spec.n))) / distance;
}

}  // namespace harmint

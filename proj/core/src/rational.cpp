#include "harmint/rational.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace harmint {

namespace mp = boost::multiprecision;

ExactRational::ExactRational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_ == 0) {
        throw std::invalid_argument("ExactRational: zero denominator");
    }
    reduce();
}

void ExactRational::reduce() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    BigInt g = mp::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

ExactRational ExactRational::operator-() const {
    ExactRational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

ExactRational& ExactRational::operator+=(const ExactRational& rhs) {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
    reduce();
    return *this;
}

ExactRational& ExactRational::operator-=(const ExactRational& rhs) {
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ *= rhs.den_;
    reduce();
    return *this;
}

ExactRational& ExactRational::operator*=(const ExactRational& rhs) {
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    reduce();
    return *this;
}

ExactRational& ExactRational::operator/=(const ExactRational& rhs) {
    if (rhs.num_ == 0) {
        throw std::invalid_argument("ExactRational: division by zero");
    }
    num_ *= rhs.den_;
    den_ *= rhs.num_;
    reduce();
    return *this;
}

std::strong_ordering ExactRational::operator<=>(const ExactRational& rhs) const {
    // Denominators are positive, so cross-multiplication preserves order.
    BigInt lhs_scaled = num_ * rhs.den_;
    BigInt rhs_scaled = rhs.num_ * den_;
    if (lhs_scaled < rhs_scaled) return std::strong_ordering::less;
    if (lhs_scaled > rhs_scaled) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

double ExactRational::to_double() const {
    if (num_ == 0) {
        return 0.0;
    }
    const bool negative = num_ < 0;
    BigInt n = negative ? BigInt(-num_) : num_;
    BigInt d = den_;

    // Scale so the integer quotient carries ~128 significant bits, then let
    // the final conversion round once. Keeps the result within 1 ulp even
    // when n and d are far outside double range.
    const long exponent = static_cast<long>(mp::msb(n)) - static_cast<long>(mp::msb(d));
    const long shift = 128 - exponent;
    if (shift > 0) {
        n <<= shift;
    } else if (shift < 0) {
        d <<= -shift;
    }
    const BigInt q = n / d;
    const double mantissa = q.convert_to<double>();
    const double magnitude = std::ldexp(mantissa, static_cast<int>(-shift));
    return negative ? -magnitude : magnitude;
}

std::string ExactRational::to_string() const {
    return num_.str() + "/" + den_.str();
}

}  // namespace harmint

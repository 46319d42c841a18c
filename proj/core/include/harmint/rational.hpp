#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>

namespace harmint {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision fraction, always stored reduced with a positive
/// denominator. Serves as the ground-truth value type for every
/// floating-point result in this library.
class ExactRational {
public:
    ExactRational() : num_(0), den_(1) {}
    ExactRational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT: implicit by design
    ExactRational(BigInt numerator, BigInt denominator);

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    ExactRational operator-() const;
    ExactRational& operator+=(const ExactRational& rhs);
    ExactRational& operator-=(const ExactRational& rhs);
    ExactRational& operator*=(const ExactRational& rhs);
    ExactRational& operator/=(const ExactRational& rhs);

    friend ExactRational operator+(ExactRational lhs, const ExactRational& rhs) { return lhs += rhs; }
    friend ExactRational operator-(ExactRational lhs, const ExactRational& rhs) { return lhs -= rhs; }
    friend ExactRational operator*(ExactRational lhs, const ExactRational& rhs) { return lhs *= rhs; }
    friend ExactRational operator/(ExactRational lhs, const ExactRational& rhs) { return lhs /= rhs; }

    bool operator==(const ExactRational& rhs) const {
        return num_ == rhs.num_ && den_ == rhs.den_;
    }
    std::strong_ordering operator<=>(const ExactRational& rhs) const;

    /// Nearest double, correct to within one unit in the last place even
    /// when numerator and denominator individually overflow double range.
    double to_double() const;

    /// Canonical "numerator/denominator" rendering, e.g. "137/60", "1/1".
    std::string to_string() const;

private:
    void reduce();

    BigInt num_;
    BigInt den_;  // > 0
};

}  // namespace harmint

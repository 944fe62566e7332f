#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "ginlab/errors.hpp"

namespace ginlab {

using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in addition");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in subtraction");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in multiplication");
    return r;
}

inline Int checked_neg(Int a) { return checked_sub(0, a); }

/// floor(a / b) for b > 0.
Int floor_div(Int a, Int b);
/// ceil(a / b) for b > 0.
Int ceil_div(Int a, Int b);

/// floor(sqrt(n)) for n >= 0, by Newton iteration on integers.
Int isqrt(Int n);

/// Smallest c >= 0 with c*c >= n.
Int ceil_sqrt(Int n);

/// n choose 2, i.e. n(n-1)/2; zero for n < 2.
Int choose2(Int n);

/// Exact rational number with a positive, reduced denominator and checked arithmetic.
class Rational {
public:
    Rational() = default;
    Rational(Int value) : num_(value) {} // NOLINT: integers embed implicitly
    Rational(Int num, Int den);

    Int num() const { return num_; }
    Int den() const { return den_; }

    Rational operator-() const { return {checked_neg(num_), den_}; }
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    Rational abs() const { return num_ < 0 ? -*this : *this; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    /// "num/den"; the denominator is always printed, even when it is 1.
    std::string to_string() const;

private:
    Int num_ = 0;
    Int den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

} // namespace ginlab

#include "ginlab/arith.hpp"

#include <numeric>
#include <ostream>

namespace ginlab {

Int floor_div(Int a, Int b) {
    if (b <= 0) throw InvariantViolation("floor_div: non-positive divisor");
    Int q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

Int ceil_div(Int a, Int b) {
    if (b <= 0) throw InvariantViolation("ceil_div: non-positive divisor");
    Int q = a / b;
    if (a % b != 0 && a > 0) ++q;
    return q;
}

Int isqrt(Int n) {
    if (n < 0) throw InvariantViolation("isqrt of a negative number");
    if (n < 2) return n;
    // Start above the root; the Newton sequence then decreases monotonically to floor(sqrt(n)).
    Int x = n / 2 + 1;
    if (x > 3037000499) x = 3037000500; // ceil(sqrt(2^63 - 1)); keeps x*x-free iteration in range
    while (true) {
        Int y = (x + n / x) / 2;
        if (y >= x) return x;
        x = y;
    }
}

Int ceil_sqrt(Int n) {
    Int s = isqrt(n);
    return checked_mul(s, s) == n ? s : s + 1;
}

Int choose2(Int n) {
    if (n < 2) return 0;
    // One of n, n-1 is even.
    return n % 2 == 0 ? checked_mul(n / 2, n - 1) : checked_mul(n, (n - 1) / 2);
}

Rational::Rational(Int num, Int den) {
    if (den == 0) throw InvariantViolation("rational with zero denominator");
    if (den < 0) {
        num = checked_neg(num);
        den = checked_neg(den);
    }
    Int g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    num_ = num;
    den_ = den;
}

Rational operator+(const Rational& a, const Rational& b) {
    Int g = std::gcd(a.den_, b.den_);
    Int lhs = checked_mul(a.num_, b.den_ / g);
    Int rhs = checked_mul(b.num_, a.den_ / g);
    return {checked_add(lhs, rhs), checked_mul(a.den_ / g, b.den_)};
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    Int g1 = std::gcd(a.num_, b.den_);
    Int g2 = std::gcd(b.num_, a.den_);
    if (g1 == 0) g1 = 1;
    if (g2 == 0) g2 = 1;
    return {checked_mul(a.num_ / g1, b.num_ / g2), checked_mul(a.den_ / g2, b.den_ / g1)};
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw InvariantViolation("rational division by zero");
    return a * Rational(b.den_, b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return checked_mul(a.num_, b.den_) <=> checked_mul(b.num_, a.den_);
}

std::string Rational::to_string() const { return std::to_string(num_) + "/" + std::to_string(den_); }

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

} // namespace ginlab

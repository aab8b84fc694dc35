#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace liexp {

using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws std::invalid_argument.
/// n/d in lowest terms (mpq_class(n, d) alone does not canonicalize).
Rational ratio(long n, long d);

Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

/// An element a + b*sqrt(2) of the quadratic field Q(sqrt 2).
///
/// Only the basis change that mixes P_a and Z_a needs the irrational part; every
/// other coefficient in the library has b == 0.
class QSqrt2 {
public:
    QSqrt2() = default;
    QSqrt2(long value) : a_(value) {}  // NOLINT(google-explicit-constructor)
    QSqrt2(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
    QSqrt2(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static QSqrt2 sqrt2() { return QSqrt2(Rational(0), Rational(1)); }

    const Rational& rational_part() const { return a_; }
    const Rational& sqrt2_part() const { return b_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_rational() const { return sgn(b_) == 0; }
    int sign() const;

    QSqrt2 inverse() const;

    QSqrt2& operator+=(const QSqrt2& o);
    QSqrt2& operator-=(const QSqrt2& o);
    QSqrt2& operator*=(const QSqrt2& o);
    QSqrt2& operator/=(const QSqrt2& o) { return *this *= o.inverse(); }

    friend QSqrt2 operator+(QSqrt2 x, const QSqrt2& y) { return x += y; }
    friend QSqrt2 operator-(QSqrt2 x, const QSqrt2& y) { return x -= y; }
    friend QSqrt2 operator*(QSqrt2 x, const QSqrt2& y) { return x *= y; }
    friend QSqrt2 operator/(QSqrt2 x, const QSqrt2& y) { return x /= y; }
    friend QSqrt2 operator-(const QSqrt2& x) { return QSqrt2(-x.a_, -x.b_); }
    friend bool operator==(const QSqrt2& x, const QSqrt2& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

    /// "p/q" when rational, otherwise "p/q+r/s*sqrt2" (the first part omitted when zero).
    std::string str() const;
    static QSqrt2 parse(std::string_view text);

private:
    Rational a_{0};
    Rational b_{0};
};

}  // namespace liexp

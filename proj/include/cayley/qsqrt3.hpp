/**
 * @file qsqrt3.hpp
 * @brief The quadratic extension Q(sqrt(3)): values a + b*sqrt(3) with exact
 *        rational components. Closed under ring operations; a + b*sqrt(3) = 0
 *        iff a = b = 0, so equality is componentwise.
 */
#ifndef CAYLEY_QSQRT3_HPP
#define CAYLEY_QSQRT3_HPP

#include <string>

#include "cayley/rational.hpp"

namespace cayley {

class QSqrt3 {
public:
    QSqrt3() = default;
    QSqrt3(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
    QSqrt3(long a) : a_(a) {}                 // NOLINT(google-explicit-constructor)
    QSqrt3(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static QSqrt3 sqrt3() { return QSqrt3(Rational(0), Rational(1)); }

    const Rational& rational_part() const { return a_; }
    const Rational& sqrt3_part() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    QSqrt3 operator-() const { return QSqrt3(-a_, -b_); }
    QSqrt3 operator+(const QSqrt3& o) const { return QSqrt3(a_ + o.a_, b_ + o.b_); }
    QSqrt3 operator-(const QSqrt3& o) const { return QSqrt3(a_ - o.a_, b_ - o.b_); }

    QSqrt3 operator*(const QSqrt3& o) const {
        // (a + b s)(c + d s) = ac + 3bd + (ad + bc) s  with s^2 = 3
        return QSqrt3(a_ * o.a_ + Rational(3) * (b_ * o.b_), a_ * o.b_ + b_ * o.a_);
    }

    QSqrt3& operator+=(const QSqrt3& o) { return *this = *this + o; }
    QSqrt3& operator-=(const QSqrt3& o) { return *this = *this - o; }
    QSqrt3& operator*=(const QSqrt3& o) { return *this = *this * o; }

    QSqrt3 conj() const { return QSqrt3(a_, -b_); }

    /// Field norm a^2 - 3 b^2; zero only at zero since sqrt(3) is irrational.
    Rational norm() const { return a_ * a_ - Rational(3) * (b_ * b_); }

    QSqrt3 inverse() const {
        if (is_zero()) throw usage_error("QSqrt3: inverse of zero");
        Rational n = norm();
        return QSqrt3(a_ / n, -b_ / n);
    }

    QSqrt3 operator/(const QSqrt3& o) const { return *this * o.inverse(); }

    bool operator==(const QSqrt3& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const QSqrt3& o) const { return !(*this == o); }

    /// Sign over the reals: decided exactly by comparing a^2 against 3 b^2
    /// when the component signs disagree.
    int sign() const {
        int sa = a_.sign(), sb = b_.sign();
        if (sa == 0) return sb;
        if (sb == 0) return sa;
        if (sa == sb) return sa;
        int c = (a_ * a_).cmp(Rational(3) * (b_ * b_));
        return c == 0 ? 0 : (c > 0 ? sa : sb);
    }

    std::string str() const {
        if (b_.is_zero()) return a_.str();
        std::string root = b_.abs() == Rational(1) ? "sqrt(3)" : b_.abs().str() + "*sqrt(3)";
        if (a_.is_zero()) return (b_.is_negative() ? "-" : "") + root;
        return a_.str() + (b_.is_negative() ? " - " : " + ") + root;
    }

private:
    Rational a_;
    Rational b_;
};

inline QSqrt3 operator*(const Rational& a, const QSqrt3& x) { return QSqrt3(a) * x; }

} // namespace cayley

#endif

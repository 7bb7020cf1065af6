/**
 * @file rational.hpp
 * @brief Exact rational arithmetic over GMP integers.
 *
 * Canonical form is maintained at all times: gcd(|num|, den) = 1, den > 0,
 * and zero is represented as 0/1. Every operation is exact; there is no
 * floating-point fallback anywhere in this library.
 *
 * Serialization contract: str() emits "p/q" with the sign on p only and the
 * "/q" part omitted when q = 1. parse() accepts exactly that grammar.
 */
#ifndef CAYLEY_RATIONAL_HPP
#define CAYLEY_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

#include "cayley/error.hpp"

namespace cayley {

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long n) : num_(n), den_(1) {}          // NOLINT(google-explicit-constructor)
    Rational(int n) : num_(n), den_(1) {}           // NOLINT(google-explicit-constructor)
    Rational(long long n) : num_(static_cast<long>(n)), den_(1) {}
    explicit Rational(const mpz_class& n) : num_(n), den_(1) {}

    Rational(const mpz_class& num, const mpz_class& den) : num_(num), den_(den) {
        if (den_ == 0) throw usage_error("Rational: division by zero");
        canonicalize();
    }
    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

    const mpz_class& numerator() const { return num_; }
    const mpz_class& denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }
    int sign() const { return sgn(num_); }

    Rational operator-() const { return Rational(unchecked{}, -num_, den_); }

    Rational operator+(const Rational& o) const {
        return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    Rational operator*(const Rational& o) const {
        return Rational(num_ * o.num_, den_ * o.den_);
    }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw usage_error("Rational: division by zero");
        return Rational(num_ * o.den_, den_ * o.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    Rational inverse() const {
        if (is_zero()) throw usage_error("Rational: inverse of zero");
        return Rational(den_, num_);
    }

    /// Three-way comparison by cross-multiplication (denominators positive).
    int cmp(const Rational& o) const {
        mpz_class lhs = num_ * o.den_;
        mpz_class rhs = o.num_ * den_;
        return ::cmp(lhs, rhs) < 0 ? -1 : (lhs == rhs ? 0 : 1);
    }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return cmp(o) < 0; }
    bool operator<=(const Rational& o) const { return cmp(o) <= 0; }
    bool operator>(const Rational& o) const { return cmp(o) > 0; }
    bool operator>=(const Rational& o) const { return cmp(o) >= 0; }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    Rational pow(unsigned long e) const {
        Rational r;
        mpz_pow_ui(r.num_.get_mpz_t(), num_.get_mpz_t(), e);
        mpz_pow_ui(r.den_.get_mpz_t(), den_.get_mpz_t(), e);
        return r;
    }

    Rational squared() const { return *this * *this; }

    /// Largest integer <= value.
    mpz_class floor() const {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
        return q;
    }

    /// Smallest integer >= value.
    mpz_class ceil() const {
        mpz_class q;
        mpz_cdiv_q(q.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
        return q;
    }

    /// Exact square root when both numerator and denominator are perfect
    /// squares; nullopt when the root is irrational.
    static std::optional<Rational> sqrt_exact(const Rational& r) {
        if (r.sign() < 0) throw usage_error("sqrt_exact: negative radicand");
        if (r.is_zero()) return Rational();
        if (!mpz_perfect_square_p(r.num_.get_mpz_t()) ||
            !mpz_perfect_square_p(r.den_.get_mpz_t()))
            return std::nullopt;
        Rational s;
        mpz_sqrt(s.num_.get_mpz_t(), r.num_.get_mpz_t());
        mpz_sqrt(s.den_.get_mpz_t(), r.den_.get_mpz_t());
        return s;  // coprime squares have coprime roots
    }

    std::string str() const {
        std::string s = num_.get_str();
        if (den_ != 1) s += "/" + den_.get_str();
        return s;
    }

    /// Strict parse of the "p/q" grammar: optional leading '-', digits,
    /// optionally "/" and digits (denominator unsigned, nonzero).
    static std::optional<Rational> parse(std::string_view text) {
        if (text.empty()) return std::nullopt;
        std::size_t i = 0;
        if (text[i] == '-') ++i;
        std::size_t num_begin = i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
        if (i == num_begin) return std::nullopt;
        std::string num_part(text.substr(0, i));
        if (i == text.size()) return Rational(mpz_class(num_part), mpz_class(1));
        if (text[i] != '/') return std::nullopt;
        ++i;
        std::size_t den_begin = i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
        if (i == den_begin || i != text.size()) return std::nullopt;
        mpz_class den(std::string(text.substr(den_begin)));
        if (den == 0) return std::nullopt;
        return Rational(mpz_class(num_part), den);
    }

    /// parse() that throws usage_error on failure, for CLI/C-API input paths.
    static Rational parse_or_throw(std::string_view text, const std::string& what) {
        auto r = parse(text);
        if (!r) throw usage_error(what + ": not a rational \"p/q\" string: '" + std::string(text) + "'");
        return *r;
    }

private:
    struct unchecked {};
    Rational(unchecked, mpz_class num, mpz_class den)
        : num_(std::move(num)), den_(std::move(den)) {}

    void canonicalize() {
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    mpz_class num_;
    mpz_class den_;  // always > 0
};

inline Rational operator+(long a, const Rational& b) { return Rational(a) + b; }
inline Rational operator-(long a, const Rational& b) { return Rational(a) - b; }
inline Rational operator*(long a, const Rational& b) { return Rational(a) * b; }

} // namespace cayley

#endif

/**
 * @file quadratic_weight.hpp
 * @brief Exceptional weights of the form  lambda = -1 + sign * sqrt(radicand),
 *        closed under the quadratic that the spectral reduction solves.
 *
 * Normal form: radicand 0 canonicalizes its sign to +1, so structural equality
 * coincides with equality of real values. The weight is rational exactly when
 * the radicand is a perfect square of a rational.
 */
#ifndef CAYLEY_QUADRATIC_WEIGHT_HPP
#define CAYLEY_QUADRATIC_WEIGHT_HPP

#include <optional>
#include <string>

#include "cayley/rational.hpp"

namespace cayley {

class QuadraticWeight {
public:
    QuadraticWeight() : sign_(+1), radicand_() {}

    QuadraticWeight(int sign, Rational radicand)
        : sign_(sign), radicand_(std::move(radicand)) {
        if (sign_ != 1 && sign_ != -1) throw usage_error("QuadraticWeight: sign must be +1 or -1");
        if (radicand_.sign() < 0) throw usage_error("QuadraticWeight: negative radicand");
        if (radicand_.is_zero()) sign_ = +1;
    }

    /// Represent a rational r exactly: radicand (r+1)^2, sign of r+1.
    static QuadraticWeight from_rational(const Rational& r) {
        Rational u = r + Rational(1);
        return QuadraticWeight(u.sign() < 0 ? -1 : +1, u * u);
    }

    int sign() const { return sign_; }
    const Rational& radicand() const { return radicand_; }

    bool is_rational() const {
        return static_cast<bool>(Rational::sqrt_exact(radicand_));
    }

    std::optional<Rational> to_rational() const {
        auto s = Rational::sqrt_exact(radicand_);
        if (!s) return std::nullopt;
        return sign_ > 0 ? *s - Rational(1) : -*s - Rational(1);
    }

    /// Exact three-way comparison of real values. Both sides have the shared
    /// offset -1, so it reduces to comparing sign*sqrt(radicand) terms.
    int cmp(const QuadraticWeight& o) const {
        int es = radicand_.is_zero() ? 0 : sign_;
        int eo = o.radicand_.is_zero() ? 0 : o.sign_;
        if (es != eo) return es < eo ? -1 : 1;
        if (es == 0) return 0;
        int c = radicand_.cmp(o.radicand_);
        return es > 0 ? c : -c;
    }

    int cmp(const Rational& r) const { return cmp(from_rational(r)); }

    bool operator==(const QuadraticWeight& o) const {
        return sign_ == o.sign_ && radicand_ == o.radicand_;
    }
    bool operator!=(const QuadraticWeight& o) const { return !(*this == o); }
    bool operator<(const QuadraticWeight& o) const { return cmp(o) < 0; }

    std::string str() const {
        if (auto r = to_rational()) return r->str();
        return std::string("-1") + (sign_ > 0 ? "+" : "-") + "sqrt(" + radicand_.str() + ")";
    }

private:
    int sign_;
    Rational radicand_;
};

} // namespace cayley

#endif

/**
 * @file bernoulli.hpp
 * @brief Bernoulli numbers/polynomials and exact zeta values at non-positive
 *        integers, the substrate of the eta-invariant regularization.
 *
 * Convention: B_1 = -1/2 (the table stores B_n = B_n(0)). Zeta values are
 * evaluated through the Bernoulli polynomial at the offset,
 *   zeta(-n, a) = -B_{n+1}(a) / (n+1),   a > 0,
 * which reduces to zeta(-n) = -B_{n+1}/(n+1) for n >= 1 and gives
 * zeta(0) = -1/2.
 */
#ifndef CAYLEY_BERNOULLI_HPP
#define CAYLEY_BERNOULLI_HPP

#include <cstddef>
#include <vector>

#include "cayley/rational.hpp"

namespace cayley {

/// B_0..B_n, computed once by the defining recurrence.
class BernoulliTable {
public:
    static BernoulliTable up_to(std::size_t n);

    const Rational& value(std::size_t i) const;
    std::size_t max_index() const { return values_.size() - 1; }

    /// Bernoulli polynomial B_n(x) = sum_k C(n,k) B_k x^{n-k}.
    Rational polynomial(std::size_t n, const Rational& x) const;

private:
    explicit BernoulliTable(std::vector<Rational> values) : values_(std::move(values)) {}
    std::vector<Rational> values_;
};

/// Riemann zeta at -n, exact. zeta(-1) = -1/12, zeta(0) = -1/2, zeta(-2k) = 0.
Rational zeta_nonpositive(std::size_t n);

/// Hurwitz zeta at -n with offset a > 0, exact.
Rational hurwitz_nonpositive(std::size_t n, const Rational& a);

} // namespace cayley

#endif

#include "cayley/bernoulli.hpp"

namespace cayley {

namespace {

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

} // namespace

BernoulliTable BernoulliTable::up_to(std::size_t n) {
    std::vector<Rational> values;
    values.reserve(n + 1);
    values.emplace_back(1);
    // sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1 pins each B_m in turn.
    for (std::size_t m = 1; m <= n; ++m) {
        Rational acc;
        for (std::size_t j = 0; j < m; ++j)
            acc += Rational(binomial(m + 1, j)) * values[j];
        values.push_back(-acc / Rational(binomial(m + 1, m)));
    }
    return BernoulliTable(std::move(values));
}

const Rational& BernoulliTable::value(std::size_t i) const {
    if (i >= values_.size()) throw usage_error("BernoulliTable: index beyond table");
    return values_[i];
}

Rational BernoulliTable::polynomial(std::size_t n, const Rational& x) const {
    if (n >= values_.size()) throw usage_error("BernoulliTable: polynomial degree beyond table");
    // Horner in x over the binomial-weighted Bernoulli coefficients.
    Rational acc;
    for (std::size_t k = 0; k <= n; ++k) {
        acc = acc * x + Rational(binomial(n, k)) * values_[k];
    }
    return acc;
}

Rational zeta_nonpositive(std::size_t n) {
    return hurwitz_nonpositive(n, Rational(1));
}

Rational hurwitz_nonpositive(std::size_t n, const Rational& a) {
    if (a.sign() <= 0) throw usage_error("hurwitz_nonpositive: offset must be positive");
    BernoulliTable table = BernoulliTable::up_to(n + 1);
    return -table.polynomial(n + 1, a) / Rational(static_cast<long>(n) + 1);
}

} // namespace cayley

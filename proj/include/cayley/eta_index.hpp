/**
 * @file eta_index.hpp
 * @brief Zeta-regularized eta-invariant of the weight spectrum and the index
 *        correction (d(0) + eta(0))/2 of the APS-style index identity
 *
 *   chi = ind_mu + sum_{lambda in (0, mu) cap D} d(lambda) + (d(0) + eta(0))/2.
 *
 * eta(0) is computed exactly for profiles whose weight set is integral and
 * whose multiplicities are eventually polynomial on each side: the finite head
 * contributes sign(lambda) d(lambda), and the tails contribute through the
 * combined coefficient sequence c(k) = d(k) - d(-k) expanded in powers of k,
 * each power summed as a Hurwitz zeta value at the head/tail split point.
 * Anything else fails loudly rather than extrapolating.
 */
#ifndef CAYLEY_ETA_INDEX_HPP
#define CAYLEY_ETA_INDEX_HPP

#include <utility>
#include <vector>

#include "cayley/cone_profile.hpp"
#include "cayley/rational.hpp"

namespace cayley {

/// Polynomial with exact coefficients, ascending by power.
using Polynomial = std::vector<Rational>;

Rational polynomial_eval(const Polynomial& p, const Rational& x);

/// Unique interpolating polynomial through the given points (exact Newton
/// divided differences, expanded to monomial coefficients).
Polynomial polynomial_interpolate(const std::vector<std::pair<Rational, Rational>>& points);

struct MultiplicityProfile {
    std::vector<std::pair<long long, long long>> head;  // (weight, d) for |weight| < k0
    Polynomial tail_positive;                           // d(lambda) for integer lambda >= k0
    Polynomial tail_negative;                           // d(lambda) for integer lambda <= -k0
    long long k0 = 1;
};

struct IndexQuery {
    long long chi = 0;  // holomorphic Euler characteristic, user-supplied
    Rational rate;      // weight mu, must lie in (1,2) and avoid D
    ConeProfile profile;
};

/// Fit each tail at k0..k0+degree_bound and verify at three further points;
/// requires an integral weight set (checked over a window covering the fit).
MultiplicityProfile fit_multiplicity_profile(const ConeProfile& profile, long long degree_bound,
                                             long long k0);

/// First degree bound in 0..8 whose verification passes.
MultiplicityProfile fit_multiplicity_profile_auto(const ConeProfile& profile, long long k0 = 1);

/// eta(0), exact; independent of the head/tail split point k0.
Rational eta_at_zero(const MultiplicityProfile& mp);

/// (d(0) + eta(0)) / 2.
Rational index_correction(const ConeProfile& profile);

/// sum of d(lambda) over exceptional weights in the open interval (0, mu).
long long exceptional_sum(const ConeProfile& profile, const Rational& mu);

/// ind_mu = chi - exceptional_sum(mu) - correction. Rejects rates in D as
/// non-Fredholm (checked before the (1,2) window test).
Rational expected_index(const IndexQuery& query);

} // namespace cayley

#endif

/**
 * @file riemann_roch.hpp
 * @brief Dimension counting for holomorphic sections of line bundles on
 *        compact Riemann surfaces, Euler characteristics of direct sums, and
 *        the adjunction genus of complete-intersection curves in CP^3.
 */
#ifndef CAYLEY_RIEMANN_ROCH_HPP
#define CAYLEY_RIEMANN_ROCH_HPP

#include <vector>

#include "cayley/error.hpp"

namespace cayley {

struct LineBundle {
    long long degree = 0;
    long long genus = 0;  // of the underlying curve, >= 0
};

/// Direct sum of line bundles over one curve (all summands share the genus).
struct BundleSum {
    std::vector<LineBundle> summands;
};

/// h^0 in the cases Riemann-Roch alone resolves:
///   degree < 0            -> 0
///   genus 0               -> degree + 1
///   degree > 2*genus - 2  -> degree + 1 - genus
/// The band 0 <= degree <= 2g-2 with g >= 1 needs bundle-specific data and is
/// rejected with math_error rather than guessed.
long long h0(const LineBundle& bundle);

long long h0_sum(const BundleSum& sum);

/// chi = sum over summands of (degree + 1 - genus); always defined.
long long euler_characteristic(const BundleSum& sum);

/// Genus of the smooth complete intersection of degrees (d1, d2) in CP^3:
/// g = (2 + d1*d2*(d1 + d2 - 4)) / 2.
long long genus_complete_intersection(long long d1, long long d2);

} // namespace cayley

#endif

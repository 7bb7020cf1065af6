/**
 * @file exceptional_weights.hpp
 * @brief The discrete set D of exceptional weights and their multiplicities
 *        d(lambda) for the dbar + dbar^* operator on a conically singular
 *        complex surface, through the eigenproblem on the complex link.
 *
 * At weight lambda and Fourier mode m the link eigenproblem splits into
 *  - a holomorphic kernel at m = lambda - 1 (sections of the twisted normal
 *    bundle),
 *  - an antiholomorphic kernel at m = -3 - lambda (counted through the
 *    Serre-dual degree 2g - 2 - d, i.e. h^1 of the summand),
 *  - for modes strictly between those two, eigensections of 2*dbar^* dbar with
 *    target (lambda - 1 - m)(lambda + 3 + m) = (lambda+1)^2 - (m+2)^2.
 *
 * Since the Laplacian target depends on lambda only through (lambda+1)^2,
 * candidates are generated exactly as lambda = -1 +/- sqrt((m+2)^2 + t) over
 * spectral lines t > 0; irrational weights carry no kernel contribution.
 */
#ifndef CAYLEY_EXCEPTIONAL_WEIGHTS_HPP
#define CAYLEY_EXCEPTIONAL_WEIGHTS_HPP

#include <optional>
#include <vector>

#include "cayley/cone_profile.hpp"
#include "cayley/quadratic_weight.hpp"
#include "cayley/rational.hpp"

namespace cayley {

enum class WitnessKind { holomorphic_kernel, antiholomorphic_kernel, laplacian };

const char* witness_kind_name(WitnessKind k);

struct Witness {
    long long mode = 0;  // lattice index n; the Fourier mode is m = n/k
    WitnessKind kind = WitnessKind::laplacian;
    long long count = 0;
    // 2*dbar^* dbar target (lambda-1-m)(lambda+3+m); present for laplacian witnesses
    std::optional<Rational> target;
};

struct WeightEntry {
    QuadraticWeight weight;
    long long multiplicity = 0;
    std::vector<Witness> witnesses;
};

/// Lattice modes n with positive Laplacian target at rational weight lambda;
/// empty when the open interval between the two kernel modes is empty.
std::vector<long long> mode_range(const ConeProfile& profile, const Rational& lambda);

/// d(lambda) with its witness decomposition. Requires a diagonal connection
/// and a genus-0 link.
WeightEntry weight_multiplicity(const ConeProfile& profile, const Rational& lambda);
WeightEntry weight_multiplicity(const ConeProfile& profile, const QuadraticWeight& weight);

/// All weights in [lo, hi] with d > 0, including irrational ones, sorted
/// strictly ascending by value. Candidates are generated from the kernel
/// lattice and from spectral lines, never scanned over a grid.
std::vector<WeightEntry> enumerate_weights(const ConeProfile& profile, const Rational& lo,
                                           const Rational& hi);

/// Cap on per-mode spectral line scans, from CAYLEY_WEIGHTS_QMAX (default 64).
long long spectral_scan_cap();

} // namespace cayley

#endif

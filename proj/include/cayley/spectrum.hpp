/**
 * @file spectrum.hpp
 * @brief Closed-form spectrum of 2*dbar^* dbar on a Hermitian line bundle over
 *        a rational curve of constant scalar curvature kappa:
 *
 *   lambda_q = (kappa/2) [ (q + a)^2 + (q + a) |deg + 1| ],   q = 0, 1, 2, ...
 *
 * with a = 0 for deg >= 0 and a = 1 otherwise, and multiplicity
 * 1 + |deg| + 2q. The spectrum is stated for 2*dbar^* dbar; callers wanting
 * dbar^* dbar double their target before calling.
 */
#ifndef CAYLEY_SPECTRUM_HPP
#define CAYLEY_SPECTRUM_HPP

#include <optional>
#include <vector>

#include "cayley/rational.hpp"

namespace cayley {

struct SpectrumQuery {
    long long degree = 0;  // deg K of the line bundle
    Rational kappa;        // constant scalar curvature, > 0
};

struct SpectralLine {
    Rational eigenvalue;        // of 2*dbar^* dbar, >= 0
    long long q = 0;            // level
    int shift = 0;              // the offset a: 0 iff degree >= 0
    long long multiplicity = 1; // 1 + |degree| + 2q
};

/// Lines for q = 0..q_max, eigenvalues strictly increasing. The q = 0 line has
/// eigenvalue 0 exactly when degree >= 0.
std::vector<SpectralLine> enumerate_spectrum(const SpectrumQuery& query, long long q_max);

/// Inverts the closed form: solves (kappa/2)[t^2 + t|deg+1|] = target for
/// t = q + shift through the exact quadratic, and returns the line iff t is an
/// integer consistent with the shift. target < 0 is a domain error; target 0
/// is in the spectrum only for degree >= 0 (the holomorphic q = 0 line).
std::optional<SpectralLine> eigenvalue_membership(const SpectrumQuery& query,
                                                  const Rational& target);

/// Riemann-Roch cross-check of the multiplicity formula: dimension of the
/// eigenspace at level q as h^0 of the identified bundle on the genus-0 curve,
/// of degree 2q + deg for deg >= 0 and 2q - deg for deg < 0.
long long eigenspace_dimension_crosscheck(const SpectrumQuery& query, long long q);

} // namespace cayley

#endif

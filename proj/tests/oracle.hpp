// Test-only brute-force oracles, kept independent of the enumeration paths
// they check: section counts use the bare genus-0 formula and eigenvalue
// matches come from a direct (mode, level, summand) scan of the algebraic
// equation rather than the closed-form quadratic inversion.
#ifndef CAYLEY_TESTS_ORACLE_HPP
#define CAYLEY_TESTS_ORACLE_HPP

#include <cstdlib>

#include "cayley/cone_profile.hpp"
#include "cayley/rational.hpp"

namespace cayley::oracle {

inline long long h0_genus0(long long degree) { return degree >= 0 ? degree + 1 : 0; }

/// Laplacian eigensection count with prescribed 2 dbar* dbar target per mode,
/// by scanning levels q <= q_limit against the spectrum formula.
template <typename TargetAtMode>
long long laplacian_scan(const ConeProfile& p, long long mode_radius, TargetAtMode&& target_at,
                         long long q_limit = 50) {
    long long total = 0;
    long long k = p.lattice_denominator;
    for (long long n = -k * mode_radius; n <= k * mode_radius; ++n) {
        Rational target = target_at(Rational(n, k));
        if (target.sign() <= 0) continue;
        for (const auto& family : p.summands) {
            long long degree = family.degree_at(n);
            int a = degree >= 0 ? 0 : 1;
            for (long long q = 0; q <= q_limit; ++q) {
                Rational t(q + a);
                Rational eigenvalue =
                    p.kappa / Rational(2) * (t * t + t * Rational(std::llabs(degree + 1)));
                if (eigenvalue == target) total += 1 + std::llabs(degree) + 2 * q;
            }
        }
    }
    return total;
}

/// d(lambda) for integer lambda: Riemann-Roch kernel counts at the two kernel
/// modes plus the Laplacian scan.
inline long long multiplicity(const ConeProfile& p, long long lambda, long long q_limit = 50) {
    long long k = p.lattice_denominator;
    long long total = 0;
    long long n_hol = k * (lambda - 1);
    for (const auto& family : p.summands) total += h0_genus0(family.degree_at(n_hol));
    long long n_anti = k * (-3 - lambda);
    for (const auto& family : p.summands) total += h0_genus0(-2 - family.degree_at(n_anti));
    Rational l(lambda);
    total += laplacian_scan(
        p, std::llabs(lambda) + 8,
        [&](const Rational& m) { return (l - Rational(1) - m) * (l + Rational(3) + m); }, q_limit);
    return total;
}

/// d(-1 +/- sqrt(radicand)) for irrational weights: Laplacian only, target
/// radicand - (m+2)^2.
inline long long surd_multiplicity(const ConeProfile& p, const Rational& radicand,
                                   long long q_limit = 50) {
    long long radius = mpz_class(radicand.ceil()).get_si() + 8;
    return laplacian_scan(
        p, radius,
        [&](const Rational& m) {
            Rational offset = m + Rational(2);
            return radicand - offset * offset;
        },
        q_limit);
}

} // namespace cayley::oracle

#endif

#include "cayley/cone_deformations.hpp"

#include "cayley/riemann_roch.hpp"
#include "cayley/spectrum.hpp"

namespace cayley {

const char* mechanism_name(Mechanism m) {
    switch (m) {
        case Mechanism::diagonal_laplacian: return "diagonal-laplacian";
        case Mechanism::coupled_a_plus: return "coupled-a-plus";
        case Mechanism::coupled_a_minus: return "coupled-a-minus";
    }
    return "?";
}

namespace {

// Fixed twisted-cubic geometry: genus-0 link of projective degree 3, scalar
// curvature 8/3, coupled section alpha_1 living in the degree-(3m+2) bundle.
const Rational kTwistedCubicKappa(8, 3);

Rational require_third_integral(const Rational& m) {
    Rational triple = Rational(3) * m;
    if (!triple.is_integer())
        throw usage_error("twisted cubic modes require 3m integral, got m = " + m.str());
    return triple;
}

// The compatibility scalar must satisfy
//   (8/3 + m)(4/3 + 4/a - m) = (8/3 + a + m)(4/3 - m) - (4/3)(3m + 2)
// exactly; both branches are checked symbolically before any counting.
void check_coupling_consistency(const Rational& m, const Rational& a) {
    Rational lhs = (Rational(8, 3) + m) * (Rational(4, 3) + Rational(4) / a - m);
    Rational rhs = (Rational(8, 3) + a + m) * (Rational(4, 3) - m) -
                   Rational(4, 3) * (Rational(3) * m + Rational(2));
    if (lhs != rhs)
        throw math_error("coupling consistency identity fails at m = " + m.str() +
                         ", a = " + a.str());
}

long long coupled_branch_count(const Rational& m, const Rational& a) {
    check_coupling_consistency(m, a);
    Rational target = (Rational(8, 3) + m) * (Rational(4, 3) + Rational(4) / a - m);
    long long degree = (Rational(3) * m + Rational(2)).numerator().get_si();  // 3m+2, integral
    if (target.sign() < 0) return 0;  // negative targets are not eigenvalues
    if (target.is_zero()) {
        // Harmonic sections are holomorphic on a compact curve (constants in
        // the degree-0 case); the spectrum op owns only positive eigenvalues.
        return h0(LineBundle{degree, 0});
    }
    SpectrumQuery query{degree, kTwistedCubicKappa};
    if (auto line = eigenvalue_membership(query, target)) return line->multiplicity;
    return 0;
}

} // namespace

std::vector<CouplingParameter> coupling_parameters(const Rational& m) {
    require_third_integral(m);
    std::vector<CouplingParameter> params;
    if (m != Rational(4, 3)) {
        Rational numerator = Rational(6) * m + Rational(16);
        if (numerator.is_zero())
            throw math_error("degenerate coupling: a_+ vanishes at m = " + m.str());
        params.push_back({numerator / (Rational(4) - Rational(3) * m),
                          CouplingParameter::Branch::plus});
    }
    params.push_back({Rational(-2), CouplingParameter::Branch::minus});
    return params;
}

std::vector<ExtraMode> twisted_cubic_coupled(const Rational& m) {
    require_third_integral(m);
    std::vector<ExtraMode> modes;

    // a_+ branch; skipped where it degenerates to a = 0 (m = -8/3): there the
    // coupling ansatz forces the pair trivial, leaving complex deformations
    // that the kernel counts already own.
    bool plus_defined = m != Rational(4, 3) && (Rational(6) * m + Rational(16)).sign() != 0;
    if (plus_defined) {
        Rational a_plus = (Rational(6) * m + Rational(16)) / (Rational(4) - Rational(3) * m);
        long long count = coupled_branch_count(m, a_plus);
        if (count > 0) modes.push_back({m, count, Mechanism::coupled_a_plus});
    }

    long long count_minus = coupled_branch_count(m, Rational(-2));
    if (count_minus > 0) modes.push_back({m, count_minus, Mechanism::coupled_a_minus});
    return modes;
}

long long conical_complex_dimension(const ConeProfile& profile) {
    BundleSum untwisted;
    for (const auto& family : profile.summands)
        untwisted.summands.push_back(LineBundle{family.degree_at(0), profile.genus});
    // Real dimension: holomorphic and antiholomorphic kernels coincide, each
    // contributing the complex section count.
    return 2 * h0_sum(untwisted);
}

ConicalReport conical_cayley_dimension(const ConeProfile& profile) {
    ConicalReport report;
    report.complex_dim = conical_complex_dimension(profile);
    report.cayley_dim = report.complex_dim;

    const long long k = profile.lattice_denominator;
    for (long long n = -4 * k + 1; n <= -1; ++n) {  // modes m = n/k in (-4, 0)
        Rational m(n, k);
        if (profile.connection == Connection::diagonal) {
            Rational target = -m * (Rational(4) + m);
            long long count = 0;
            for (const auto& family : profile.summands) {
                SpectrumQuery query{family.degree_at(n), profile.kappa};
                if (auto line = eigenvalue_membership(query, target)) count += line->multiplicity;
            }
            if (count > 0) {
                report.extra_modes.push_back({m, count, Mechanism::diagonal_laplacian});
                report.cayley_dim += count;
            }
        } else {
            for (auto& extra : twisted_cubic_coupled(m)) {
                report.cayley_dim += extra.count;
                report.extra_modes.push_back(std::move(extra));
            }
        }
    }
    return report;
}

} // namespace cayley

/**
 * @file cone_deformations.hpp
 * @brief Real dimensions of infinitesimal conical complex and conical Cayley
 *        deformations of a complex cone, including the twisted-cubic cone
 *        whose link connection couples the two normal directions.
 *
 * The conical complex count is twice the holomorphic section count of the
 * untwisted normal bundle. The Cayley-but-not-complex extras live at Fourier
 * modes m strictly inside (-4, 0): for diagonal connections they are
 * eigensections of 2*dbar^* dbar with target -m(4+m); for the twisted cubic
 * they solve the coupled system, whose compatibility scalar a has the two
 * branches a_+ = (6m+16)/(4-3m) and a_- = -2.
 */
#ifndef CAYLEY_CONE_DEFORMATIONS_HPP
#define CAYLEY_CONE_DEFORMATIONS_HPP

#include <vector>

#include "cayley/cone_profile.hpp"
#include "cayley/rational.hpp"

namespace cayley {

enum class Mechanism { diagonal_laplacian, coupled_a_plus, coupled_a_minus };

const char* mechanism_name(Mechanism m);

struct ExtraMode {
    Rational mode;  // Fourier mode m in (-4, 0)
    long long count = 0;
    Mechanism mechanism = Mechanism::diagonal_laplacian;
};

struct ConicalReport {
    long long complex_dim = 0;  // real dimension
    long long cayley_dim = 0;   // real dimension; complex_dim + sum of counts
    std::vector<ExtraMode> extra_modes;
};

struct CouplingParameter {
    enum class Branch { plus, minus };
    Rational value;  // the compatibility scalar a; branch minus always has -2
    Branch branch = Branch::minus;
};

/// Twice the holomorphic section count of the mode-0 (untwisted) bundle.
long long conical_complex_dimension(const ConeProfile& profile);

/// Complex dimension plus the per-mode extras over (-4, 0); for diagonal
/// profiles the total equals weight_multiplicity at lambda = 1 (independent
/// code path).
ConicalReport conical_cayley_dimension(const ConeProfile& profile);

/// Coupling branches at mode m (3m integral). m = 4/3 admits only a_-;
/// m = -8/3 makes a_+ vanish and is rejected as a degenerate coupling.
std::vector<CouplingParameter> coupling_parameters(const Rational& m);

/// Solutions of the coupled twisted-cubic system at mode m with mechanism
/// tags. The a_+ branch at m = -8/3 forces the coupling trivial and yields
/// only complex deformations, so that mode is scanned on the a_- branch alone.
/// A zero a_- target counts harmonic = holomorphic sections directly.
std::vector<ExtraMode> twisted_cubic_coupled(const Rational& m);

} // namespace cayley

#endif

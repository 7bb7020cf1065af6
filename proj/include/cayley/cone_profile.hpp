/**
 * @file cone_profile.hpp
 * @brief A complex cone described through its complex link: genus, scalar
 *        curvature, Fourier lattice, normal-bundle degree families and the
 *        connection kind. Built-in profiles c1, c2, c3 are the three standard
 *        cones (plane, quadric cone, twisted cubic cone).
 *
 * Profile text format (a strict TOML subset):
 *
 *   name = "c1"
 *   genus = 0
 *   kappa = "8"
 *   lattice_denominator = 1
 *   connection = "diagonal"
 *
 *   [[summand]]
 *   slope = 1
 *   offset = 1
 *
 * Keys are exactly the above; unknown keys are rejected with line/column.
 * kappa is a rational "p/q" string; at least one [[summand]] is required.
 */
#ifndef CAYLEY_CONE_PROFILE_HPP
#define CAYLEY_CONE_PROFILE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "cayley/rational.hpp"

namespace cayley {

enum class Connection { diagonal, twisted_cubic };

/// Degree of the summand twisted by the lattice-index-n Fourier mode:
/// degree(n) = slope * n + offset, slope >= 1.
struct DegreeFamily {
    long long slope = 1;
    long long offset = 0;

    long long degree_at(long long n) const { return slope * n + offset; }
};

struct ConeProfile {
    std::string name;
    long long genus = 0;
    Rational kappa;
    long long lattice_denominator = 1;  // Fourier modes m = n/k, n integer
    std::vector<DegreeFamily> summands;
    Connection connection = Connection::diagonal;
};

const char* connection_name(Connection c);

/// c1, c2 or c3; anything else is a usage error.
ConeProfile builtin_profile(std::string_view name);

bool is_builtin_profile(std::string_view name);

/// Parse the profile text format; errors carry "line L, column C".
ConeProfile parse_profile(std::string_view text);

/// Canonical text rendering; parse_profile(emit_profile(p)) reproduces p.
std::string emit_profile(const ConeProfile& profile);

} // namespace cayley

#endif

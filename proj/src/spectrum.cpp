#include "cayley/spectrum.hpp"

#include <cstdlib>

#include "cayley/riemann_roch.hpp"

namespace cayley {

namespace {

void check_query(const SpectrumQuery& query) {
    if (query.kappa.sign() <= 0) throw usage_error("spectrum: kappa must be positive");
}

SpectralLine make_line(const SpectrumQuery& query, long long q) {
    int shift = query.degree >= 0 ? 0 : 1;
    Rational t(q + shift);
    long long abs_deg1 = std::llabs(query.degree + 1);
    SpectralLine line;
    line.eigenvalue = query.kappa / Rational(2) * (t * t + t * Rational(abs_deg1));
    line.q = q;
    line.shift = shift;
    line.multiplicity = 1 + std::llabs(query.degree) + 2 * q;
    return line;
}

} // namespace

std::vector<SpectralLine> enumerate_spectrum(const SpectrumQuery& query, long long q_max) {
    check_query(query);
    if (q_max < 0) throw usage_error("spectrum: q_max must be nonnegative");
    std::vector<SpectralLine> lines;
    lines.reserve(static_cast<std::size_t>(q_max) + 1);
    for (long long q = 0; q <= q_max; ++q) lines.push_back(make_line(query, q));
    return lines;
}

std::optional<SpectralLine> eigenvalue_membership(const SpectrumQuery& query,
                                                  const Rational& target) {
    check_query(query);
    if (target.sign() < 0) throw usage_error("eigenvalue_membership: negative target");
    int shift = query.degree >= 0 ? 0 : 1;

    // t^2 + d1 t = 2 target / kappa, positive root t = (sqrt(d1^2 + 8 target/kappa) - d1)/2.
    Rational d1(std::llabs(query.degree + 1));
    Rational disc = d1 * d1 + Rational(8) * target / query.kappa;
    auto root = Rational::sqrt_exact(disc);
    if (!root) return std::nullopt;
    Rational t = (*root - d1) / Rational(2);
    if (!t.is_integer() || t.sign() < 0) return std::nullopt;
    if (t < Rational(shift)) return std::nullopt;  // shift = 1 needs t >= 1
    long long q = mpz_class(t.floor() - shift).get_si();
    SpectralLine line = make_line(query, q);
    // by construction line.eigenvalue == target
    return line;
}

long long eigenspace_dimension_crosscheck(const SpectrumQuery& query, long long q) {
    if (q < 0) throw usage_error("eigenspace_dimension_crosscheck: q must be nonnegative");
    long long degree = query.degree >= 0 ? 2 * q + query.degree : 2 * q - query.degree;
    return h0(LineBundle{degree, 0});
}

} // namespace cayley

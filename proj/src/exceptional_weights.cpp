#include "cayley/exceptional_weights.hpp"

#include <cstdlib>
#include <set>
#include <string>

#include "cayley/riemann_roch.hpp"
#include "cayley/spectrum.hpp"

namespace cayley {

const char* witness_kind_name(WitnessKind k) {
    switch (k) {
        case WitnessKind::holomorphic_kernel: return "holomorphic-kernel";
        case WitnessKind::antiholomorphic_kernel: return "antiholomorphic-kernel";
        case WitnessKind::laplacian: return "laplacian";
    }
    return "?";
}

long long spectral_scan_cap() {
    if (const char* env = std::getenv("CAYLEY_WEIGHTS_QMAX")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 64;
}

namespace {

void check_profile(const ConeProfile& profile) {
    if (profile.connection != Connection::diagonal)
        throw math_error("weight enumeration for connection '" +
                         std::string(connection_name(profile.connection)) +
                         "': use twisted_cubic solver");
    if (profile.genus != 0)
        throw math_error("weight enumeration unsupported for genus >= 1 links");
    if (profile.summands.empty()) throw usage_error("profile has no summands");
    if (profile.kappa.sign() <= 0) throw usage_error("profile kappa must be positive");
}

// Modes n with (n/k + 2)^2 < bound, i.e. (n + 2k)^2 * den(bound) < num(bound) * k^2.
std::vector<long long> modes_below(const ConeProfile& profile, const Rational& bound) {
    std::vector<long long> modes;
    if (bound.sign() <= 0) return modes;
    long long k = profile.lattice_denominator;
    Rational scaled = bound * Rational(k) * Rational(k);
    mpz_class radius;  // floor(sqrt(ceil(scaled)))
    mpz_class top = scaled.ceil();
    mpz_sqrt(radius.get_mpz_t(), top.get_mpz_t());
    long long r = radius.get_si() + 1;
    for (long long u = -r; u <= r; ++u) {  // u = n + 2k
        if (Rational(u) * Rational(u) < scaled) modes.push_back(u - 2 * k);
    }
    return modes;
}

// Per-summand Laplacian multiplicities at one mode, summed.
long long laplacian_count(const ConeProfile& profile, long long n, const Rational& target) {
    long long count = 0;
    for (const auto& family : profile.summands) {
        SpectrumQuery query{family.degree_at(n), profile.kappa};
        if (auto line = eigenvalue_membership(query, target)) count += line->multiplicity;
    }
    return count;
}

} // namespace

std::vector<long long> mode_range(const ConeProfile& profile, const Rational& lambda) {
    check_profile(profile);
    Rational u = lambda + Rational(1);
    return modes_below(profile, u * u);
}

WeightEntry weight_multiplicity(const ConeProfile& profile, const QuadraticWeight& weight) {
    check_profile(profile);
    WeightEntry entry;
    entry.weight = weight;
    const long long k = profile.lattice_denominator;
    const Rational radicand = weight.radicand();

    // Kernel modes exist only for rational weights on the lattice.
    if (auto lambda = weight.to_rational()) {
        Rational hol_mode = Rational(k) * (*lambda - Rational(1));
        if (hol_mode.is_integer()) {
            long long n = hol_mode.numerator().get_si();
            long long count = 0;
            for (const auto& family : profile.summands)
                count += h0(LineBundle{family.degree_at(n), profile.genus});
            if (count > 0)
                entry.witnesses.push_back({n, WitnessKind::holomorphic_kernel, count, std::nullopt});
        }
        Rational anti_mode = Rational(k) * (Rational(-3) - *lambda);
        if (anti_mode.is_integer()) {
            long long n = anti_mode.numerator().get_si();
            long long count = 0;
            for (const auto& family : profile.summands) {
                long long dual = 2 * profile.genus - 2 - family.degree_at(n);
                count += h0(LineBundle{dual, profile.genus});
            }
            if (count > 0)
                entry.witnesses.push_back(
                    {n, WitnessKind::antiholomorphic_kernel, count, std::nullopt});
        }
    }

    // Laplacian modes: target (lambda+1)^2 - (m+2)^2 > 0, zero-eigenvalue
    // lines are owned by the kernel cases above.
    for (long long n : modes_below(profile, radicand)) {
        Rational m(n, k);
        Rational offset = m + Rational(2);
        Rational target = radicand - offset * offset;
        long long count = laplacian_count(profile, n, target);
        if (count > 0) entry.witnesses.push_back({n, WitnessKind::laplacian, count, target});
    }

    for (const auto& w : entry.witnesses) entry.multiplicity += w.count;
    return entry;
}

WeightEntry weight_multiplicity(const ConeProfile& profile, const Rational& lambda) {
    return weight_multiplicity(profile, QuadraticWeight::from_rational(lambda));
}

std::vector<WeightEntry> enumerate_weights(const ConeProfile& profile, const Rational& lo,
                                           const Rational& hi) {
    check_profile(profile);
    if (lo > hi) throw usage_error("enumerate_weights: empty window (min > max)");
    const long long k = profile.lattice_denominator;
    const long long cap = spectral_scan_cap();

    struct ValueLess {
        bool operator()(const QuadraticWeight& a, const QuadraticWeight& b) const {
            return a.cmp(b) < 0;
        }
    };
    std::set<QuadraticWeight, ValueLess> candidates;

    auto add_if_in_window = [&](const QuadraticWeight& w) {
        if (w.cmp(lo) >= 0 && w.cmp(hi) <= 0) candidates.insert(w);
    };

    // Rational kernel candidates lambda = 1 + n/k and lambda = -3 - n/k.
    {
        mpz_class n_lo = (Rational(k) * (lo - Rational(1))).ceil();
        mpz_class n_hi = (Rational(k) * (hi - Rational(1))).floor();
        for (mpz_class n = n_lo; n <= n_hi; ++n)
            add_if_in_window(QuadraticWeight::from_rational(Rational(1) + Rational(n) / Rational(k)));
        n_lo = (Rational(k) * (Rational(-3) - hi)).ceil();
        n_hi = (Rational(k) * (Rational(-3) - lo)).floor();
        for (mpz_class n = n_lo; n <= n_hi; ++n)
            add_if_in_window(
                QuadraticWeight::from_rational(Rational(-3) - Rational(n) / Rational(k)));
    }

    // Laplacian candidates lambda = -1 +/- sqrt((m+2)^2 + t) over spectral
    // lines t > 0. The radicand is bounded by the window edge farthest from -1.
    bool plus_branch = hi.cmp(Rational(-1)) >= 0;
    bool minus_branch = lo.cmp(Rational(-1)) <= 0;
    Rational bound_plus = (hi + Rational(1)).squared();
    Rational bound_minus = (lo + Rational(1)).squared();
    Rational bound;
    if (plus_branch) bound = bound_plus;
    if (minus_branch && bound_minus > bound) bound = bound_minus;

    for (long long n : modes_below(profile, bound)) {
        Rational offset = Rational(n, k) + Rational(2);
        Rational max_eigenvalue = bound - offset * offset;
        for (const auto& family : profile.summands) {
            SpectrumQuery query{family.degree_at(n), profile.kappa};
            for (const auto& line : enumerate_spectrum(query, cap)) {
                if (line.eigenvalue > max_eigenvalue) break;
                if (line.eigenvalue.sign() <= 0) continue;
                Rational radicand = offset * offset + line.eigenvalue;
                if (plus_branch) add_if_in_window(QuadraticWeight(+1, radicand));
                if (minus_branch) add_if_in_window(QuadraticWeight(-1, radicand));
            }
        }
    }

    std::vector<WeightEntry> entries;
    for (const auto& w : candidates) {
        WeightEntry entry = weight_multiplicity(profile, w);
        if (entry.multiplicity > 0) entries.push_back(std::move(entry));
    }
    return entries;
}

} // namespace cayley

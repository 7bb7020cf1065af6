#include "cayley/eta_index.hpp"

#include <string>

#include "cayley/bernoulli.hpp"
#include "cayley/exceptional_weights.hpp"

namespace cayley {

Rational polynomial_eval(const Polynomial& p, const Rational& x) {
    Rational acc;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial polynomial_interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
    if (points.empty()) throw usage_error("polynomial_interpolate: no points");
    const std::size_t n = points.size();

    // Newton divided differences.
    std::vector<Rational> dd;
    dd.reserve(n);
    for (const auto& p : points) dd.push_back(p.second);
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);

    // Expand sum_i dd_i prod_{j<i} (x - x_j) into monomial coefficients.
    Polynomial result{dd[0]};
    Polynomial basis{Rational(1)};
    for (std::size_t i = 1; i < n; ++i) {
        // basis *= (x - x_{i-1})
        Polynomial next(basis.size() + 1);
        for (std::size_t j = 0; j < basis.size(); ++j) {
            next[j + 1] += basis[j];
            next[j] -= basis[j] * points[i - 1].first;
        }
        basis = std::move(next);
        if (result.size() < basis.size()) result.resize(basis.size());
        for (std::size_t j = 0; j < basis.size(); ++j) result[j] += dd[i] * basis[j];
    }
    while (result.size() > 1 && result.back().is_zero()) result.pop_back();
    return result;
}

namespace {

long long d_at(const ConeProfile& profile, long long lambda) {
    return weight_multiplicity(profile, Rational(lambda)).multiplicity;
}

// p(-x): flip the sign of odd coefficients.
Polynomial negate_argument(const Polynomial& p) {
    Polynomial out = p;
    for (std::size_t j = 1; j < out.size(); j += 2) out[j] = -out[j];
    return out;
}

Polynomial fit_tail(const ConeProfile& profile, long long degree_bound, long long k0, int side) {
    std::vector<std::pair<Rational, Rational>> points;
    for (long long i = 0; i <= degree_bound; ++i) {
        long long lambda = side * (k0 + i);
        points.emplace_back(Rational(lambda), Rational(d_at(profile, lambda)));
    }
    Polynomial poly = polynomial_interpolate(points);
    for (long long i = 1; i <= 3; ++i) {
        long long lambda = side * (k0 + degree_bound + i);
        if (polynomial_eval(poly, Rational(lambda)) != Rational(d_at(profile, lambda)))
            throw math_error(
                "multiplicity sequence not eventually polynomial at this degree bound (" +
                std::to_string(degree_bound) + ")");
    }
    return poly;
}

} // namespace

MultiplicityProfile fit_multiplicity_profile(const ConeProfile& profile, long long degree_bound,
                                             long long k0) {
    if (k0 < 1) throw usage_error("fit_multiplicity_profile: k0 must be >= 1");
    if (degree_bound < 0) throw usage_error("fit_multiplicity_profile: negative degree bound");

    // Integral weight set required: the window covers the fit and verification
    // points on both sides.
    long long reach = k0 + degree_bound + 3;
    for (const auto& entry : enumerate_weights(profile, Rational(-reach), Rational(reach))) {
        auto value = entry.weight.to_rational();
        if (!value || !value->is_integer())
            throw math_error("eta regularization unsupported for irrational weight sets (found " +
                             entry.weight.str() + ")");
    }

    MultiplicityProfile mp;
    mp.k0 = k0;
    for (long long w = -(k0 - 1); w <= k0 - 1; ++w) mp.head.emplace_back(w, d_at(profile, w));
    mp.tail_positive = fit_tail(profile, degree_bound, k0, +1);
    mp.tail_negative = fit_tail(profile, degree_bound, k0, -1);
    return mp;
}

MultiplicityProfile fit_multiplicity_profile_auto(const ConeProfile& profile, long long k0) {
    for (long long degree_bound = 0; degree_bound <= 8; ++degree_bound) {
        try {
            return fit_multiplicity_profile(profile, degree_bound, k0);
        } catch (const math_error& e) {
            std::string what = e.what();
            if (what.find("not eventually polynomial") == std::string::npos) throw;
        }
    }
    throw math_error("multiplicity sequence not eventually polynomial up to degree 8");
}

Rational eta_at_zero(const MultiplicityProfile& mp) {
    Rational eta;
    for (const auto& [weight, d] : mp.head) {
        if (weight > 0) eta += Rational(d);
        if (weight < 0) eta -= Rational(d);
    }

    // Tail: sum_{k >= k0} (d(k) - d(-k)) regularized power by power,
    // sum_{k >= k0} k^j -> zeta(-j, k0).
    Polynomial negative_at = negate_argument(mp.tail_negative);  // d(-k) as a polynomial in k
    Polynomial combined = mp.tail_positive;
    if (combined.size() < negative_at.size()) combined.resize(negative_at.size());
    for (std::size_t j = 0; j < negative_at.size(); ++j) combined[j] -= negative_at[j];

    for (std::size_t j = 0; j < combined.size(); ++j) {
        if (combined[j].is_zero()) continue;
        eta += combined[j] * hurwitz_nonpositive(j, Rational(mp.k0));
    }
    return eta;
}

Rational index_correction(const ConeProfile& profile) {
    long long d0 = weight_multiplicity(profile, Rational(0)).multiplicity;
    Rational eta = eta_at_zero(fit_multiplicity_profile_auto(profile));
    return (Rational(d0) + eta) / Rational(2);
}

long long exceptional_sum(const ConeProfile& profile, const Rational& mu) {
    if (mu.sign() <= 0) return 0;
    long long total = 0;
    for (const auto& entry : enumerate_weights(profile, Rational(0), mu)) {
        if (entry.weight.cmp(Rational(0)) == 0) continue;
        if (entry.weight.cmp(mu) == 0) continue;  // open interval
        total += entry.multiplicity;
    }
    return total;
}

Rational expected_index(const IndexQuery& query) {
    // Fredholm check first: a rate sitting on an exceptional weight is the
    // sharper rejection, even when it also violates the (1,2) window.
    if (weight_multiplicity(query.profile, query.rate).multiplicity > 0)
        throw math_error("non-Fredholm rate: " + query.rate.str() +
                         " is an exceptional weight of profile '" + query.profile.name + "'");
    if (query.rate <= Rational(1) || query.rate >= Rational(2))
        throw usage_error("rate must lie strictly between 1 and 2");

    Rational correction = index_correction(query.profile);
    long long mid = exceptional_sum(query.profile, query.rate);
    return Rational(query.chi) - Rational(mid) - correction;
}

} // namespace cayley

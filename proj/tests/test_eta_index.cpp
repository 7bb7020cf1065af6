#include <doctest.h>

#include "cayley/eta_index.hpp"
#include "cayley/exceptional_weights.hpp"

using namespace cayley;

namespace {

const ConeProfile c1 = builtin_profile("c1");
const ConeProfile c2 = builtin_profile("c2");

} // namespace

TEST_CASE("polynomial interpolation is exact") {
    auto p = polynomial_interpolate({{Rational(1), Rational(12)},
                                     {Rational(2), Rational(24)},
                                     {Rational(3), Rational(40)}});
    REQUIRE(p.size() == 3);
    CHECK(p[0] == Rational(4));
    CHECK(p[1] == Rational(6));
    CHECK(p[2] == Rational(2));
    CHECK(polynomial_eval(p, Rational(10)) == Rational(264));
}

TEST_CASE("plane cone multiplicity profile") {
    auto mp = fit_multiplicity_profile(c1, 2, 1);
    CHECK(mp.tail_positive == Polynomial{Rational(4), Rational(6), Rational(2)});
    CHECK(mp.tail_negative == Polynomial{Rational(4), Rational(6), Rational(2)});
    REQUIRE(mp.head.size() == 1);
    CHECK(mp.head[0] == std::pair<long long, long long>{0, 4});

    // tail evaluated on the negative side: d(-k) = 2(k-2)(k-1) for k >= 3
    for (long long k = 3; k <= 8; ++k)
        CHECK(polynomial_eval(mp.tail_negative, Rational(-k)) == Rational(2 * (k - 2) * (k - 1)));

    CHECK_THROWS_AS(fit_multiplicity_profile(c1, 0, 1), math_error);  // d grows, not constant

    auto wide = fit_multiplicity_profile(c1, 2, 3);
    CHECK(wide.tail_positive == mp.tail_positive);
    CHECK(wide.tail_negative == mp.tail_negative);
    REQUIRE(wide.head.size() == 5);  // weights -2..2
    CHECK(wide.head[2] == std::pair<long long, long long>{0, 4});
}

TEST_CASE("eta at zero for the plane cone") {
    CHECK(eta_at_zero(fit_multiplicity_profile(c1, 2, 1)) == Rational(-1));
}

TEST_CASE("eta is independent of the head/tail split") {
    for (long long k0 : {1LL, 3LL, 5LL})
        CHECK(eta_at_zero(fit_multiplicity_profile(c1, 2, k0)) == Rational(-1));
}

TEST_CASE("eta of artificial profiles") {
    MultiplicityProfile empty;
    empty.k0 = 1;
    empty.tail_positive = {Rational(0)};
    empty.tail_negative = {Rational(0)};
    CHECK(eta_at_zero(empty) == Rational(0));

    // c(k) = k with empty head: eta(0) = zeta(-1) = -1/12
    MultiplicityProfile linear;
    linear.k0 = 1;
    linear.tail_positive = {Rational(0), Rational(1)};
    linear.tail_negative = {Rational(0)};
    CHECK(eta_at_zero(linear) == Rational(-1, 12));
}

TEST_CASE("combined coefficient is 12k for the plane cone") {
    for (long long k = 1; k <= 20; ++k) {
        long long positive = weight_multiplicity(c1, Rational(k)).multiplicity;
        long long negative = weight_multiplicity(c1, Rational(-k)).multiplicity;
        CHECK(positive - negative == 12 * k);
    }
}

TEST_CASE("index correction") {
    CHECK(index_correction(c1) == Rational(3, 2));
    CHECK(weight_multiplicity(c1, Rational(0)).multiplicity == 4);
}

TEST_CASE("expected index assembles the pieces") {
    CHECK(expected_index({4, Rational(3, 2), c1}) == Rational(-19, 2));

    // rate on an exceptional weight is rejected as non-Fredholm
    CHECK_THROWS_AS(expected_index({4, Rational(1), c1}), math_error);
    CHECK_THROWS_WITH_AS(expected_index({4, Rational(1), c1}),
                         doctest::Contains("non-Fredholm"), math_error);

    // Fredholm but outside the conically-singular rate window
    CHECK_THROWS_AS(expected_index({4, Rational(1, 2), c1}), usage_error);

    // irrational weight set has no eta regularization
    CHECK_THROWS_AS(expected_index({4, Rational(3, 2), c2}), math_error);
}

TEST_CASE("index is piecewise constant and drops by d at each crossing") {
    // no weight of c1 lies inside (1,2)
    CHECK(enumerate_weights(c1, Rational(11, 10), Rational(19, 10)).empty());
    Rational at_half = expected_index({4, Rational(3, 2), c1});
    CHECK(expected_index({4, Rational(11, 10), c1}) == at_half);
    CHECK(expected_index({4, Rational(19, 10), c1}) == at_half);

    // the mid-sum is a step function: each crossing adds exactly d(weight)
    CHECK(exceptional_sum(c1, Rational(1, 2)) == 0);
    CHECK(exceptional_sum(c1, Rational(3, 2)) == 12);
    CHECK(exceptional_sum(c1, Rational(5, 2)) == 36);   // 12 + 24
    CHECK(exceptional_sum(c1, Rational(7, 2)) == 76);   // + 40
    CHECK(exceptional_sum(c1, Rational(5, 2)) - exceptional_sum(c1, Rational(3, 2)) ==
          weight_multiplicity(c1, Rational(2)).multiplicity);
    // endpoints are excluded: the open interval (0, 1) is weight-free
    CHECK(exceptional_sum(c1, Rational(1)) == 0);
}

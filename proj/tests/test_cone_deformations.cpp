#include <doctest.h>

#include "cayley/cone_deformations.hpp"
#include "cayley/exceptional_weights.hpp"
#include "cayley/spectrum.hpp"

using namespace cayley;

namespace {

const ConeProfile c1 = builtin_profile("c1");
const ConeProfile c2 = builtin_profile("c2");
const ConeProfile c3 = builtin_profile("c3");

long long coupled_total(const Rational& m) {
    long long total = 0;
    for (const auto& extra : twisted_cubic_coupled(m)) total += extra.count;
    return total;
}

} // namespace

TEST_CASE("conical complex dimensions of the three cones") {
    CHECK(conical_complex_dimension(c1) == 8);
    CHECK(conical_complex_dimension(c2) == 16);
    CHECK(conical_complex_dimension(c3) == 24);
}

TEST_CASE("conical Cayley dimensions with their extra modes") {
    auto r1 = conical_cayley_dimension(c1);
    CHECK(r1.cayley_dim == 12);
    CHECK(r1.complex_dim == 8);
    REQUIRE(r1.extra_modes.size() == 1);
    CHECK(r1.extra_modes[0].mode == Rational(-2));
    CHECK(r1.extra_modes[0].count == 4);
    CHECK(r1.extra_modes[0].mechanism == Mechanism::diagonal_laplacian);

    auto r2 = conical_cayley_dimension(c2);
    CHECK(r2.cayley_dim == 22);
    CHECK(r2.complex_dim == 16);
    REQUIRE(r2.extra_modes.size() == 1);
    CHECK(r2.extra_modes[0].mode == Rational(-2));
    CHECK(r2.extra_modes[0].count == 6);

    auto r3 = conical_cayley_dimension(c3);
    CHECK(r3.cayley_dim == 30);
    CHECK(r3.complex_dim == 24);
    REQUIRE(r3.extra_modes.size() == 2);
    CHECK(r3.extra_modes[0].mode == Rational(-2, 3));
    CHECK(r3.extra_modes[1].mode == Rational(-2, 3));
    long long plus = 0, minus = 0;
    for (const auto& e : r3.extra_modes) {
        if (e.mechanism == Mechanism::coupled_a_plus) plus += e.count;
        if (e.mechanism == Mechanism::coupled_a_minus) minus += e.count;
    }
    CHECK(plus == 5);
    CHECK(minus == 1);
}

TEST_CASE("report invariants") {
    for (const auto& profile : {c1, c2, c3}) {
        auto report = conical_cayley_dimension(profile);
        long long extras = 0;
        for (const auto& e : report.extra_modes) {
            extras += e.count;
            CHECK(e.mode > Rational(-4));  // strictly inside the conical window
            CHECK(e.mode < Rational(0));
        }
        CHECK(report.cayley_dim == report.complex_dim + extras);
        CHECK(report.cayley_dim >= report.complex_dim);
    }
    CHECK(conical_cayley_dimension(c1).cayley_dim - conical_cayley_dimension(c1).complex_dim == 4);
    CHECK(conical_cayley_dimension(c2).cayley_dim - conical_cayley_dimension(c2).complex_dim == 6);
    CHECK(conical_cayley_dimension(c3).cayley_dim - conical_cayley_dimension(c3).complex_dim == 6);
}

TEST_CASE("diagonal conical count equals the weight multiplicity at one") {
    for (const auto& profile : {c1, c2})
        CHECK(conical_cayley_dimension(profile).cayley_dim ==
              weight_multiplicity(profile, Rational(1)).multiplicity);
}

TEST_CASE("coupling parameters") {
    auto at_solution = coupling_parameters(Rational(-2, 3));
    REQUIRE(at_solution.size() == 2);
    CHECK(at_solution[0].value == Rational(2));
    CHECK(at_solution[0].branch == CouplingParameter::Branch::plus);
    CHECK(at_solution[1].value == Rational(-2));

    auto linear_case = coupling_parameters(Rational(4, 3));
    REQUIRE(linear_case.size() == 1);
    CHECK(linear_case[0].value == Rational(-2));
    CHECK(linear_case[0].branch == CouplingParameter::Branch::minus);

    auto at_zero = coupling_parameters(Rational(0));
    REQUIRE(at_zero.size() == 2);
    CHECK(at_zero[0].value == Rational(4));
    CHECK(at_zero[1].value == Rational(-2));

    CHECK_THROWS_AS(coupling_parameters(Rational(-8, 3)), math_error);
    CHECK_THROWS_AS(coupling_parameters(Rational(1, 2)), usage_error);
}

TEST_CASE("coupling consistency identity holds on the conical lattice") {
    // every branch value must satisfy
    // (8/3+m)(4/3+4/a-m) = (8/3+a+m)(4/3-m) - (4/3)(3m+2)
    for (long long n = -11; n <= -1; ++n) {
        Rational m(n, 3);
        if (m == Rational(-8, 3)) continue;  // degenerate a_+ rejected upstream
        for (const auto& param : coupling_parameters(m)) {
            const Rational& a = param.value;
            Rational lhs = (Rational(8, 3) + m) * (Rational(4, 3) + Rational(4) / a - m);
            Rational rhs = (Rational(8, 3) + a + m) * (Rational(4, 3) - m) -
                           Rational(4, 3) * (Rational(3) * m + Rational(2));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("coupled system solves only at the known mode") {
    auto modes = twisted_cubic_coupled(Rational(-2, 3));
    REQUIRE(modes.size() == 2);
    CHECK(modes[0].mechanism == Mechanism::coupled_a_plus);
    CHECK(modes[0].count == 5);
    CHECK(modes[1].mechanism == Mechanism::coupled_a_minus);
    CHECK(modes[1].count == 1);

    // the a_+ solution is the level-2 line of the trivial bundle at kappa 8/3
    auto line = eigenvalue_membership({0, Rational(8, 3)}, Rational(8));
    REQUIRE(line);
    CHECK(line->q == 2);
    CHECK(line->multiplicity == 5);

    for (long long n = -11; n <= -1; ++n) {
        Rational m(n, 3);
        if (m == Rational(-2, 3)) continue;
        CHECK(coupled_total(m) == 0);
    }

    CHECK(coupled_total(Rational(4, 3)) == 0);  // negative branch target, not an eigenvalue
    CHECK(coupled_total(Rational(-1)) == 0);
    CHECK_THROWS_AS(twisted_cubic_coupled(Rational(1, 2)), usage_error);
}

TEST_CASE("coupled branch targets at m = -1 miss the spectrum by direct scan") {
    // a_+ = 10/7 and a_- = -2 on the degree-(-1) bundle at kappa 8/3
    for (const auto& param : coupling_parameters(Rational(-1))) {
        Rational m(-1);
        Rational target = (Rational(8, 3) + m) * (Rational(4, 3) + Rational(4) / param.value - m);
        if (target.sign() <= 0) continue;
        bool hit = false;
        for (long long q = 0; q <= 20; ++q) {
            Rational t(q + 1);  // degree -1 bundle has shift 1
            Rational eigenvalue = Rational(8, 3) / Rational(2) * (t * t);
            if (eigenvalue == target) hit = true;
        }
        CHECK_FALSE(hit);
    }
}

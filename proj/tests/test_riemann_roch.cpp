#include <doctest.h>

#include "cayley/riemann_roch.hpp"

using namespace cayley;

TEST_CASE("h0 resolvable cases") {
    CHECK(h0({1, 0}) == 2);
    CHECK(h0({-1, 0}) == 0);
    CHECK(h0({5, 0}) == 6);
    CHECK(h0({0, 0}) == 1);
    CHECK(h0({3, 1}) == 3);     // degree > 2g-2
    CHECK(h0({-7, 19}) == 0);   // negative degree at any genus
    CHECK(h0({40, 19}) == 22);  // 40 + 1 - 19
}

TEST_CASE("h0 indeterminate band") {
    CHECK_THROWS_AS(h0({0, 1}), math_error);
    CHECK_THROWS_AS(h0({36, 19}), math_error);  // deg K on the g = 19 curve
    CHECK_THROWS_AS(h0({17, 10}), math_error);
    CHECK_THROWS_AS(h0({1, -2}), usage_error);
}

TEST_CASE("h0_sum and euler characteristic") {
    BundleSum two_ones{{{1, 0}, {1, 0}}};
    CHECK(h0_sum(two_ones) == 4);
    CHECK(euler_characteristic(two_ones) == 4);

    BundleSum mixed{{{1, 0}, {2, 0}}};
    CHECK(h0_sum(mixed) == 5);

    BundleSum negatives{{{-3, 0}, {-7, 0}}};
    CHECK(h0_sum(negatives) == 0);

    BundleSum fives{{{5, 0}, {5, 0}}};
    CHECK(euler_characteristic(fives) == 12);

    BundleSum high_genus{{{0, 19}}};
    CHECK(euler_characteristic(high_genus) == -18);

    CHECK_THROWS_AS(h0_sum(BundleSum{}), usage_error);
    CHECK_THROWS_AS(h0_sum(BundleSum{{{1, 0}, {1, 2}}}), usage_error);
    CHECK_THROWS_AS(h0_sum(BundleSum{{{0, 1}, {0, 1}}}), math_error);  // indeterminate propagates
}

TEST_CASE("serre duality consistency on genus zero") {
    for (long long d = -30; d <= 30; ++d) {
        long long lhs = h0({d, 0});
        long long rhs = h0({-2 - d, 0}) + d + 1;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("h0 monotone in degree at fixed genus over the resolvable range") {
    for (long long g : {0LL, 1LL, 3LL}) {
        long long previous = 0;
        for (long long d = -10; d <= 30; ++d) {
            if (g >= 1 && d >= 0 && d <= 2 * g - 2) continue;
            long long value = h0({d, g});
            CHECK(value >= previous);
            previous = value;
        }
    }
}

TEST_CASE("euler characteristic equals h0 minus dual h0 when both resolvable") {
    for (long long d1 = -8; d1 <= 8; ++d1) {
        for (long long d2 = -8; d2 <= 8; ++d2) {
            BundleSum sum{{{d1, 0}, {d2, 0}}};
            BundleSum dual{{{-2 - d1, 0}, {-2 - d2, 0}}};
            CHECK(euler_characteristic(sum) == h0_sum(sum) - h0_sum(dual));
        }
    }
}

TEST_CASE("complete intersection genus") {
    CHECK(genus_complete_intersection(4, 3) == 19);
    CHECK(genus_complete_intersection(2, 1) == 0);
    CHECK(genus_complete_intersection(2, 2) == 1);
    CHECK(genus_complete_intersection(1, 1) == 0);
    CHECK(genus_complete_intersection(3, 3) == 10);
    for (long long d1 = 1; d1 <= 8; ++d1)
        for (long long d2 = 1; d2 <= 8; ++d2)
            CHECK(genus_complete_intersection(d1, d2) == genus_complete_intersection(d2, d1));
    CHECK_THROWS_AS(genus_complete_intersection(0, 3), usage_error);
    CHECK_THROWS_AS(genus_complete_intersection(-2, 3), usage_error);
}

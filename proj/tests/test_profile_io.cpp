#include <doctest.h>

#include "cayley/cone_profile.hpp"

using namespace cayley;

TEST_CASE("builtin profiles are the three standard cones") {
    auto c1 = builtin_profile("c1");
    CHECK(c1.genus == 0);
    CHECK(c1.kappa == Rational(8));
    CHECK(c1.lattice_denominator == 1);
    CHECK(c1.connection == Connection::diagonal);
    REQUIRE(c1.summands.size() == 2);
    CHECK(c1.summands[0].slope == 1);
    CHECK(c1.summands[0].offset == 1);

    auto c2 = builtin_profile("c2");
    CHECK(c2.kappa == Rational(4));
    CHECK(c2.summands[0].slope == 2);
    CHECK(c2.summands[0].offset == 2);
    CHECK(c2.summands[1].offset == 4);

    auto c3 = builtin_profile("c3");
    CHECK(c3.kappa == Rational(8, 3));
    CHECK(c3.lattice_denominator == 3);
    CHECK(c3.connection == Connection::twisted_cubic);
    CHECK(c3.summands[0].offset == 5);

    CHECK_THROWS_AS(builtin_profile("c4"), usage_error);
    CHECK(is_builtin_profile("c2"));
    CHECK_FALSE(is_builtin_profile("banana"));
}

TEST_CASE("emit then parse is the identity") {
    for (const char* name : {"c1", "c2", "c3"}) {
        ConeProfile original = builtin_profile(name);
        ConeProfile reparsed = parse_profile(emit_profile(original));
        CHECK(reparsed.name == original.name);
        CHECK(reparsed.genus == original.genus);
        CHECK(reparsed.kappa == original.kappa);
        CHECK(reparsed.lattice_denominator == original.lattice_denominator);
        CHECK(reparsed.connection == original.connection);
        REQUIRE(reparsed.summands.size() == original.summands.size());
        for (std::size_t i = 0; i < original.summands.size(); ++i) {
            CHECK(reparsed.summands[i].slope == original.summands[i].slope);
            CHECK(reparsed.summands[i].offset == original.summands[i].offset);
        }
        CHECK(emit_profile(reparsed) == emit_profile(original));
    }
}

TEST_CASE("parser accepts comments and blank lines") {
    ConeProfile p = parse_profile(
        "# a plane cone\n"
        "name = \"demo\"\n"
        "\n"
        "genus = 0\n"
        "kappa = \"8/3\"\n"
        "lattice_denominator = 3\n"
        "connection = \"diagonal\"\n"
        "\n"
        "[[summand]]\n"
        "slope = 1\n"
        "offset = 5\n");
    CHECK(p.name == "demo");
    CHECK(p.kappa == Rational(8, 3));
    CHECK(p.summands.size() == 1);
}

TEST_CASE("parse errors carry line and column") {
    auto check_error = [](const char* text, const char* needle) {
        try {
            parse_profile(text);
            FAIL_CHECK("expected usage_error for: " << text);
        } catch (const usage_error& e) {
            std::string what = e.what();
            INFO(what);
            CHECK(what.find("line") != std::string::npos);
            CHECK(what.find(needle) != std::string::npos);
        }
    };
    check_error("name = \"x\"\nbogus_key = 1\n", "unknown key");
    check_error("name = \"x\"\ngenus = q\n", "expected an integer");
    check_error("name = \"x\"\nkappa = 8\n", "quoted");
    check_error("name = \"x\"\nkappa = \"0\"\n", "positive");
    check_error("name = \"x\"\nconnection = \"spiral\"\n", "connection");
    check_error("[[link]]\n", "unknown section");
    check_error("name \"x\"\n", "key = value");
    check_error("name = \"x\"\ngenus = 0\nkappa = \"8\"\nlattice_denominator = 1\n"
                "connection = \"diagonal\"\n",
                "[[summand]]");
    check_error("name = \"x\"\ngenus = 0\nkappa = \"8\"\nlattice_denominator = 1\n"
                "connection = \"diagonal\"\n[[summand]]\nslope = 1\n",
                "missing 'offset'");
    check_error("genus = 0\n", "missing 'name'");
}

#include "bilag/rational.hpp"
#include "doctest.h"

using namespace bilag;

TEST_CASE("rational rendering") {
    CHECK(to_string(rat(0)) == "0");
    CHECK(to_string(rat(7)) == "7");
    CHECK(to_string(rat(-3)) == "-3");
    CHECK(to_string(rat(1, 2)) == "1/2");
    CHECK(to_string(rat(-208, 21)) == "-208/21");
    CHECK(to_string(rat(4, 6)) == "2/3");   // normalized
    CHECK(to_string(rat(3, -9)) == "-1/3"); // sign moves to the numerator
}

TEST_CASE("rational parsing round trip") {
    for (const char* s : {"0", "7", "-3", "1/2", "-208/21", "2/3", "208/7"}) {
        const auto r = parse_rational(s);
        REQUIRE(r.has_value());
        CHECK(to_string(*r) == s);
    }
    CHECK(parse_rational("2/4") == rat(1, 2));
    CHECK(!parse_rational("").has_value());
    CHECK(!parse_rational("1/").has_value());
    CHECK(!parse_rational("/2").has_value());
    CHECK(!parse_rational("1/0").has_value());
    CHECK(!parse_rational("a").has_value());
    CHECK(!parse_rational("1.5").has_value());
    CHECK(!parse_rational("1/2/3").has_value());
}

TEST_CASE("height = max(|p|, q)") {
    CHECK(height(rat(0)) == 1);
    CHECK(height(rat(1)) == 1);
    CHECK(height(rat(-1)) == 1);
    CHECK(height(rat(2)) == 2);
    CHECK(height(rat(1, 2)) == 2);
    CHECK(height(rat(-1, 3)) == 3);
    CHECK(height(rat(3, 2)) == 3);
    CHECK(height(rat(-7, 5)) == 7);
}

TEST_CASE("exactness at scale") {
    Rational x = rat(1, 3);
    for (int i = 0; i < 40; ++i) x *= rat(1, 3);
    Rational y = x;
    for (int i = 0; i < 41; ++i) y *= 3;
    CHECK(y == 1);
}

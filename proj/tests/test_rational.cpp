#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ergm/errors.hpp"
#include "ergm/rational.hpp"

using namespace ergm;

TEST_CASE("parse_rational accepts integers, fractions, decimals") {
    CHECK(parse_rational("3") == Rat(3));
    CHECK(parse_rational("-7") == Rat(-7));
    CHECK(parse_rational("+2") == Rat(2));
    CHECK(parse_rational("3/2") == make_rational(3, 2));
    CHECK(parse_rational("-4/6") == make_rational(-2, 3));
    CHECK(parse_rational("1.5") == make_rational(3, 2));
    CHECK(parse_rational("-0.25") == make_rational(-1, 4));
    CHECK(parse_rational(".5") == make_rational(1, 2));
    CHECK(parse_rational("2.") == Rat(2));
    CHECK(parse_rational(" 7/4 ") == make_rational(7, 4));
    CHECK(parse_rational("0") == Rat(0));
    CHECK(parse_rational("-0") == Rat(0));
}

TEST_CASE("parse_rational canonicalizes") {
    // String-constructed GMP rationals keep raw parts; the parser must not.
    Rat r = parse_rational("-4/6");
    CHECK(numerator(r) == -2);
    CHECK(denominator(r) == 3);
    CHECK(to_fraction_string(r) == "-2/3");
    CHECK(to_fraction_string(parse_rational("8/4")) == "2");
    CHECK(to_fraction_string(parse_rational("0/9")) == "0");
}

TEST_CASE("parse_rational rejects malformed input") {
    for (const char* bad : {"", "  ", "a", "1/0", "1/-2", "1.5.2", "2/3/4", "1e3", "--2", "."}) {
        CHECK_THROWS_AS(parse_rational(bad), InvalidInput);
    }
}

TEST_CASE("fraction round trip") {
    for (const char* s : {"0", "-3/2", "7", "22/7", "-1/1000000007"}) {
        CHECK(to_fraction_string(parse_rational(s)) == s);
    }
}

TEST_CASE("rational_from_double is exact") {
    CHECK(rational_from_double(0.5) == make_rational(1, 2));
    CHECK(rational_from_double(0.1) != make_rational(1, 10));  // 0.1 is not 1/10 in binary
    CHECK(to_double(rational_from_double(0.1)) == 0.1);
    CHECK_THROWS_AS(rational_from_double(1.0 / 0.0), InvalidInput);
}

TEST_CASE("vector helpers") {
    RatVec a{Rat(1), Rat(2), Rat(3)};
    RatVec b{Rat(4), Rat(5), Rat(6)};
    CHECK(dot(a, b) == Rat(32));
    CHECK(subtract(b, a) == RatVec{Rat(3), Rat(3), Rat(3)});
    CHECK(lex_less(a, b));
    CHECK_FALSE(lex_less(b, a));
    CHECK(lex_less(RatVec{Rat(1), Rat(2)}, RatVec{Rat(1), Rat(3)}));
    CHECK(is_zero(RatVec{Rat(0), Rat(0)}));
    CHECK_FALSE(is_zero(a));
    CHECK_THROWS_AS(dot(a, RatVec{Rat(1)}), InvalidInput);
}

TEST_CASE("integer_primitive clears denominators and keeps direction") {
    RatVec v{make_rational(-2, 3), Rat(1)};
    RatVec p = integer_primitive(v);
    CHECK(p == RatVec{Rat(-2), Rat(3)});

    RatVec w{make_rational(4, 6), make_rational(8, 6)};
    CHECK(integer_primitive(w) == RatVec{Rat(1), Rat(2)});

    RatVec z{Rat(0), Rat(0)};
    CHECK(integer_primitive(z) == z);
}

TEST_CASE("integer_canonical fixes the sign of the first nonzero entry") {
    RatVec v{Rat(0), make_rational(-2, 3), Rat(1)};
    CHECK(integer_canonical(v) == RatVec{Rat(0), Rat(2), Rat(-3)});
    RatVec w{Rat(0), make_rational(2, 3), Rat(-1)};
    CHECK(integer_canonical(w) == RatVec{Rat(0), Rat(2), Rat(-3)});
}

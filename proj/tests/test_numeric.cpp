#include <doctest.h>

#include "momentsum/errors.hpp"
#include "momentsum/numeric.hpp"

using namespace momentsum;

TEST_CASE("factorials")
{
    CHECK(factorial(0) == 1);
    CHECK(factorial(1) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(factorial(25) == Int("15511210043330985984000000"));
    CHECK_THROWS_AS(factorial(-1), DomainError);

    CHECK(double_factorial(-1) == 1);
    CHECK(double_factorial(0) == 1);
    CHECK(double_factorial(1) == 1);
    CHECK(double_factorial(5) == 15);
    CHECK(double_factorial(7) == 105);
    CHECK(double_factorial(8) == 384);
}

TEST_CASE("powers")
{
    CHECK(pow_int(3, 0) == 1);
    CHECK(pow_int(2, 20) == 1048576);
    CHECK(pow_rat(Rat(1, 2), 3) == Rat(1, 8));
    CHECK(pow_rat(Rat(2, 3), -2) == Rat(9, 4));
    CHECK_THROWS_AS(pow_rat(Rat(0), -1), DomainError);
}

TEST_CASE("parse_rational accepts fractions, integers, decimals")
{
    CHECK(parse_rational("1/2") == Rat(1, 2));
    CHECK(parse_rational("-3/4") == Rat(-3, 4));
    CHECK(parse_rational("7") == Rat(7));
    CHECK(parse_rational("-12") == Rat(-12));
    CHECK(parse_rational("+5") == Rat(5));
    CHECK(parse_rational("0.25") == Rat(1, 4));  // decimals convert exactly
    CHECK(parse_rational("-1.5") == Rat(-3, 2));
    CHECK(parse_rational(".5") == Rat(1, 2));
    CHECK(parse_rational("2.") == Rat(2));
    CHECK(parse_rational(" 3/9 ") == Rat(1, 3));
}

TEST_CASE("parse_rational rejects malformed input")
{
    CHECK_THROWS_AS(parse_rational(""), SpecParseError);
    CHECK_THROWS_AS(parse_rational("abc"), SpecParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), SpecParseError);
    CHECK_THROWS_AS(parse_rational("1/-2"), SpecParseError);
    CHECK_THROWS_AS(parse_rational("1.2.3"), SpecParseError);
    CHECK_THROWS_AS(parse_rational("."), SpecParseError);
    CHECK_THROWS_AS(parse_rational("1e3"), SpecParseError);
}

TEST_CASE("rational rendering")
{
    CHECK(rat_to_string(Rat(3, 2)) == "3/2");
    CHECK(rat_to_string(Rat(-1, 5)) == "-1/5");
    CHECK(rat_to_string(Rat(296)) == "296");
    CHECK(rat_to_string(Rat(0)) == "0");
    CHECK(rat_to_double(Rat(3, 2)) == doctest::Approx(1.5));
}

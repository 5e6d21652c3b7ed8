#include "unifconc/bigrational.hpp"
#include "unifconc/error.hpp"

#include <doctest.h>

#include <random>

using namespace unifconc;

TEST_CASE("lowest terms and sign normalization")
{
    const BigRational q(BigInt(6), BigInt(-4));
    CHECK(q.numerator() == -3);
    CHECK(q.denominator() == 2);
    CHECK(q.to_string() == "-3/2");
    CHECK(BigRational(BigInt(8), BigInt(4)).to_string() == "2");
    CHECK(BigRational(0).to_string() == "0");
    CHECK(BigRational(0).is_zero());
    CHECK_THROWS_AS(BigRational(BigInt(1), BigInt(0)), domain_error);
}

TEST_CASE("arithmetic and ordering")
{
    const BigRational a(1, 3);
    const BigRational b(1, 6);
    CHECK(a + b == BigRational(1, 2));
    CHECK(a - b == b);
    CHECK(a * b == BigRational(1, 18));
    CHECK(a / b == BigRational(2));
    CHECK(-a == BigRational(-1, 3));
    CHECK(b < a);
    CHECK(a > b);
    CHECK(a >= a);
    CHECK_THROWS_AS(a / BigRational(0), domain_error);
}

TEST_CASE("parse")
{
    CHECK(BigRational::parse("7/27") == BigRational(7, 27));
    CHECK(BigRational::parse("-14/54") == BigRational(-7, 27));
    CHECK(BigRational::parse("42") == BigRational(42));
    CHECK(BigRational::parse("0.375") == BigRational(3, 8));
    CHECK(BigRational::parse("-1.25e-3") == BigRational(-1, 800));
    CHECK(BigRational::parse("2.5E+2") == BigRational(250));
    CHECK(BigRational::parse(".5") == BigRational(1, 2));
    CHECK_THROWS_AS(BigRational::parse(""), invalid_parameter);
    CHECK_THROWS_AS(BigRational::parse("abc"), invalid_parameter);
    CHECK_THROWS_AS(BigRational::parse("1/x"), invalid_parameter);
    CHECK_THROWS_AS(BigRational::parse("1.5e"), invalid_parameter);
    CHECK_THROWS(BigRational::parse("1/0"));
}

TEST_CASE("decimal formatting")
{
    CHECK(BigRational(1, 5).to_decimal(30) == "2.00000000000000000000000000000e-01");
    CHECK(BigRational(1, 3).to_decimal(5) == "3.3333e-01");
    CHECK(BigRational(2, 3).to_decimal(5) == "6.6667e-01");
    CHECK(BigRational(-7, 27).to_decimal(6) == "-2.59259e-01");
    CHECK(BigRational(12345).to_decimal(3) == "1.23e+04");
    CHECK(BigRational(0).to_decimal(30) == "0");
    // Rounding that carries into a new leading digit.
    CHECK(BigRational::parse("9.9999").to_decimal(3) == "1.00e+01");
}

TEST_CASE("directed decimal rounding brackets the value")
{
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<long> num(-1000000000L, 1000000000L);
    std::uniform_int_distribution<long> den(1, 999999937L);
    for (int i = 0; i < 500; ++i) {
        const BigRational v(BigInt(num(rng)), BigInt(den(rng)));
        const BigRational lo = round_decimal(v, 30, Rounding::down);
        const BigRational hi = round_decimal(v, 30, Rounding::up);
        CHECK(lo <= v);
        CHECK(v <= hi);
        // The decimal text of a 30-digit rounded value parses back exactly.
        CHECK(BigRational::parse(lo.to_decimal(30)) == lo);
        CHECK(BigRational::parse(hi.to_decimal(30)) == hi);
    }
    CHECK(round_decimal(BigRational(1, 4), 30, Rounding::down) == BigRational(1, 4));
}

TEST_CASE("integer helpers")
{
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(200, 100).get_str() == "90548514656103281165404177077484163874504589675413336841320");
    CHECK(pow_ui(BigInt(3), 5) == 243);
    CHECK(bit_length(BigInt(0)) == 0);
    CHECK(bit_length(BigInt(1)) == 1);
    CHECK(bit_length(BigInt(1024)) == 11);
    CHECK(BigRational(1, 4).to_double() == 0.25);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "percolattice/rational.hpp"

using percolattice::BigUint;
using percolattice::Rational;

TEST_CASE("biguint arithmetic") {
    BigUint a(123456789012345ull), b(987654321ull);
    CHECK((a * b).to_string() == "121932631124827861592745");
    CHECK((a + b).to_string() == "123457776666666");
    CHECK((a - b).to_string() == "123455801358024");
    CHECK(BigUint::gcd(BigUint(48), BigUint(36)).to_string() == "12");
    CHECK(BigUint::gcd(BigUint(17), BigUint(13)).is_one());
}

TEST_CASE("rational normalization and ordering") {
    CHECK(Rational(6, 8) == Rational(3, 4));
    CHECK(Rational(-6, 8) == Rational(3, -4));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK(Rational(0) == Rational(0, 5));
}

TEST_CASE("rational arithmetic") {
    Rational half(1, 2), third(1, 3);
    CHECK(half + third == Rational(5, 6));
    CHECK(half - third == Rational(1, 6));
    CHECK(half * third == Rational(1, 6));
    CHECK(half / third == Rational(3, 2));
    CHECK((half - Rational(2, 3)) == Rational(-1, 6));
    CHECK(half.pow(10) == Rational(1, 1024));
    CHECK(half.pow(0) == Rational(1));
}

TEST_CASE("rational pow with large exponents stays exact") {
    Rational q(1, 2);
    Rational r = q.pow(121);
    CHECK(r.to_string() == "1/2658455991569831745807614120560689152");
}

TEST_CASE("parsing") {
    CHECK(Rational::parse("1/2") == Rational(1, 2));
    CHECK(Rational::parse("0.5") == Rational(1, 2));
    CHECK(Rational::parse("0.35") == Rational(7, 20));
    CHECK(Rational::parse("3") == Rational(3));
    CHECK(Rational::parse("-2/6") == Rational(-1, 3));
    CHECK(Rational::parse("0.1").to_double() == doctest::Approx(0.1));
}

#include <doctest.h>

#include <stdexcept>

#include "spectra/rational.hpp"

using spectra::Rational;

TEST_SUITE("rational") {

TEST_CASE("construction normalizes sign and gcd") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0, 7).den() == 1);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("arithmetic is exact") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);

    // A chain of operations that would drift in floating point.
    Rational x(1, 10);
    Rational sum(0);
    for (int i = 0; i < 1000; ++i) sum += x;
    CHECK(sum == Rational(100));
}

TEST_CASE("overflow is detected, not wrapped") {
    const Rational big(1'000'000'007LL, 1);
    CHECK_THROWS_AS(big * big * big, std::overflow_error);
}

TEST_CASE("floor and ceil round toward the number line, not zero") {
    CHECK(Rational(-3, 2).floor() == -2);
    CHECK(Rational(-3, 2).ceil() == -1);
    CHECK(Rational(3, 2).floor() == 1);
    CHECK(Rational(3, 2).ceil() == 2);
    CHECK(Rational(4, 2).floor() == 2);
    CHECK(Rational(4, 2).ceil() == 2);
}

TEST_CASE("mod lands in [0, m)") {
    CHECK(Rational(-1, 2).mod(Rational(2)) == Rational(3, 2));
    CHECK(Rational(7, 2).mod(Rational(2)) == Rational(3, 2));
    CHECK(Rational(4).mod(Rational(2)) == Rational(0));
    CHECK(Rational(-4).mod(Rational(2)) == Rational(0));
}

TEST_CASE("comparisons and helpers") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(spectra::abs_value(Rational(-5, 3)) == Rational(5, 3));
    CHECK(Rational(3, 2).to_double() == doctest::Approx(1.5));
    CHECK(Rational(7, 1).is_integer());
    CHECK(!Rational(7, 2).is_integer());
    CHECK(Rational(1, 3).str() == "1/3");
    CHECK(Rational(-4).str() == "-4");
}

TEST_CASE("checked_lcm") {
    CHECK(spectra::checked_lcm(4, 6) == 12);
    CHECK(spectra::checked_lcm(1, 1) == 1);
    CHECK_THROWS_AS(spectra::checked_lcm(4'000'000'007LL, 4'000'000'009LL),
                    std::overflow_error);
}

}  // TEST_SUITE

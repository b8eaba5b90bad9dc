#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "degen/rational.hpp"

using degen::BigInt;
using degen::Rational;

TEST_CASE("construction normalizes to lowest terms") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0, -7).den() == BigInt(1));
    CHECK(Rational(6, 3).is_integer());
    CHECK_THROWS_AS(Rational(1, 0), degen::DivisionByZero);
}

TEST_CASE("arithmetic") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK_THROWS_AS(Rational(1) / Rational(0), degen::DivisionByZero);
    CHECK(-Rational(3, 7) == Rational(-3, 7));
    CHECK(Rational(-3, 7).abs() == Rational(3, 7));
    CHECK(Rational(1, 3).inverse() == Rational(3));
}

TEST_CASE("ordering") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(2, 4) <= Rational(1, 2));
    CHECK(Rational(7, 2) > Rational(3));
}

TEST_CASE("string round trips") {
    CHECK(Rational(22, 7).str() == "22/7");
    CHECK(Rational(-5).str() == "-5");
    CHECK(Rational::parse("22/7") == Rational(22, 7));
    CHECK(Rational::parse("-3/9") == Rational(-1, 3));
    CHECK(Rational::parse("0") == Rational(0));
    CHECK_THROWS_AS(Rational::parse("1/"), degen::SyntaxError);
    CHECK_THROWS_AS(Rational::parse("x"), degen::SyntaxError);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), degen::SyntaxError);
    CHECK_THROWS_AS(Rational::parse("1/0"), degen::DivisionByZero);
}

TEST_CASE("field axioms on random values") {
    std::mt19937_64 rng(20240801);
    std::uniform_int_distribution<long long> d(-40, 40);
    for (int it = 0; it < 500; ++it) {
        Rational a(d(rng), 1 + std::abs(d(rng)));
        Rational b(d(rng), 1 + std::abs(d(rng)));
        Rational c(d(rng), 1 + std::abs(d(rng)));
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a - a == Rational(0));
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("big values stay exact") {
    Rational big(BigInt("123456789012345678901234567890"), BigInt("987654321098765432109876543210"));
    CHECK(big == Rational(BigInt("13717421"), BigInt("109739369")));  // reduced form
    Rational x(1);
    for (int i = 0; i < 40; ++i) x = x * big + Rational(1, 3);
    Rational y = x;
    for (int i = 0; i < 40; ++i) y = (y - Rational(1, 3)) / big;
    CHECK(y == Rational(1));
}

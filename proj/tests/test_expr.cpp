#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "degen/expr.hpp"

using degen::parse_expression;
using degen::Polynomial;
using degen::Rational;
using degen::RationalFunction;

namespace {
Polynomial sym(const std::string& s, int e = 1) { return Polynomial::symbol(s, e); }
}  // namespace

TEST_CASE("atoms and precedence") {
    CHECK(parse_expression("42") == RationalFunction(Rational(42)));
    CHECK(parse_expression("t") == RationalFunction(sym("t")));
    CHECK(parse_expression("1+2*3") == RationalFunction(Rational(7)));
    CHECK(parse_expression("(1+2)*3") == RationalFunction(Rational(9)));
    CHECK(parse_expression("2^3") == RationalFunction(Rational(8)));
    CHECK(parse_expression("t^2*a") == RationalFunction(sym("t", 2) * sym("a")));
    CHECK(parse_expression(" t \t+ 1 ") == RationalFunction(sym("t") + Polynomial(1)));
}

TEST_CASE("division and negative t powers") {
    CHECK(parse_expression("1/t") == RationalFunction::monomial("t", -1));
    CHECK(parse_expression("t^-2") == RationalFunction::monomial("t", -2));
    CHECK(parse_expression("a/((a+1)*t^2)") ==
          RationalFunction(sym("a"), (sym("a") + Polynomial(1)) * sym("t", 2)));
    CHECK(parse_expression("(eps-1)/t") ==
          RationalFunction(sym("eps") - Polynomial(1), sym("t")));
    // left-associative chains
    CHECK(parse_expression("6/2/3") == RationalFunction(Rational(1)));
    CHECK(parse_expression("2*t/(a+1)") ==
          RationalFunction(Polynomial(2) * sym("t"), sym("a") + Polynomial(1)));
}

TEST_CASE("unary signs") {
    CHECK(parse_expression("-t") == -RationalFunction(sym("t")));
    CHECK(parse_expression("--t") == RationalFunction(sym("t")));
    CHECK(parse_expression("1 - -2") == RationalFunction(Rational(3)));
    CHECK(parse_expression("-t^2") == -RationalFunction(sym("t", 2)));  // sign outside power
    CHECK(parse_expression("1-t^-1") ==
          RationalFunction(sym("t") - Polynomial(1), sym("t")));
}

TEST_CASE("alpha squared over (alpha+1)^2 t^5 from the certificate coefficients") {
    RationalFunction f = parse_expression("a^2/((a+1)^2*t^5)");
    Polynomial den = (sym("a") + Polynomial(1)) * (sym("a") + Polynomial(1)) * sym("t", 5);
    CHECK(f == RationalFunction(sym("a", 2), den));
}

TEST_CASE("errors carry positions") {
    CHECK_THROWS_AS(parse_expression(""), degen::SyntaxError);
    CHECK_THROWS_AS(parse_expression("1+"), degen::SyntaxError);
    CHECK_THROWS_AS(parse_expression("(1"), degen::SyntaxError);
    CHECK_THROWS_AS(parse_expression("1 2"), degen::SyntaxError);
    CHECK_THROWS_AS(parse_expression("a^-1"), degen::SyntaxError);      // negative power: t only
    CHECK_THROWS_AS(parse_expression("(a+1)^-2"), degen::SyntaxError);  // ditto
    CHECK_THROWS_AS(parse_expression("t^x"), degen::SyntaxError);
    CHECK_THROWS_AS(parse_expression("1/0"), degen::SyntaxError);
    CHECK_THROWS_AS(parse_expression("1/(t-t)"), degen::SyntaxError);
    try {
        parse_expression("t +\n @");
    } catch (const degen::SyntaxError& e) {
        CHECK(e.line() == 2);
        CHECK(e.col() == 2);
    }
}

TEST_CASE("round trip through str") {
    for (const char* text : {"t^2 - 1", "a/(t^2*a + t^2)", "(t + 1)/t^3", "-1/2*a", "0",
                             "(3*t*a^2 + 1)/(a + 7)", "1/t^2"}) {
        RationalFunction f = parse_expression(text);
        CHECK(parse_expression(f.str()) == f);
        CHECK(f.str() == text);
    }
}

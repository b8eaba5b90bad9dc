#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "degen/catalog.hpp"

using namespace degen;

namespace {

const Catalog& cat() { return builtin_catalog(); }

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("builtin contents") {
    CHECK(cat().algebras.size() == 23);  // g5, M6e, T00..T19, abelian6
    CHECK(cat().certificates.size() == 19);
    for (const auto& c : cat().certificates) {
        CHECK(cat().has_algebra(c.source));
        CHECK(cat().has_algebra(c.target));
    }
    CHECK(cat().known_derivation_dims ==
          std::map<std::string, int>{{"T10", 7}, {"T17", 7}, {"T19", 7}});
}

TEST_CASE("lookup") {
    const AlgebraStructure& T17 = cat().algebra("T17");
    CHECK(T17.dim() == 6);
    CHECK(T17.constant(1, 2, 3) == RationalFunction(Rational(1)));
    CHECK(T17.constant(1, 3, 4) == RationalFunction(Rational(1)));
    CHECK(T17.constant(1, 4, 5) == RationalFunction(Rational(1)));
    CHECK(T17.constant(2, 3, 5) == RationalFunction(Rational(1)));
    CHECK(T17.constant(2, 5, 6) == RationalFunction(Rational(1)));
    CHECK(T17.constants().size() == 5);

    CHECK_THROWS_AS(cat().algebra("T99"), UnknownAlgebra);
}

TEST_CASE("parse_algebra accepts the statement forms") {
    AlgebraStructure a = parse_algebra("algebra T00 dim 6 / e1*e2=e3 / e1*e3=e4 / e2*e4=e5");
    CHECK(serialize(a) == serialize(cat().algebra("T00")));

    AlgebraStructure b = parse_algebra("algebra A dim 2");
    CHECK(b.dim() == 2);
    CHECK(b.constants().empty());

    AlgebraStructure c = parse_algebra(
        "# leading comment\n"
        "algebra P dim 3 params a, b  # trailing comment\n"
        "e1*e2 = a*e3 - 1/2*e1\n"
        "e2*e3 = (a+b)*e1");
    CHECK(c.params() == std::set<std::string>{"a", "b"});
    CHECK(c.constant(1, 2, 1) == RationalFunction(Rational(-1, 2)));
    CHECK(c.constant(2, 3, 1) ==
          RationalFunction(Polynomial::symbol("a") + Polynomial::symbol("b")));
}

TEST_CASE("parse_algebra rejections") {
    CHECK_THROWS_AS(parse_algebra("algebra B dim 3 / e2*e1=e3"), IndexOrderError);
    CHECK_THROWS_AS(parse_algebra("algebra B dim 3 / e1*e1=e3"), IndexOrderError);
    CHECK_THROWS_AS(parse_algebra("algebra B dim 3 / e1*e2=e3 / e1*e2=e1"), DuplicateProduct);
    CHECK_THROWS_AS(parse_algebra("algebra B dim 3 / e1*e2=t*e3"), TSymbolForbidden);
    CHECK_THROWS_AS(parse_algebra("algebra B dim 3 / e1*e2=a*e3"), Error);  // undeclared param
    CHECK_THROWS_AS(parse_algebra("algebra B dim 3 / e1*e2=e9"), SyntaxError);
    CHECK_THROWS_AS(parse_algebra("algebra B dim 3 / e1*e4=e3"), SyntaxError);
    CHECK_THROWS_AS(parse_algebra("algebra B dim 3 / e1*e2=e1*e2"), SyntaxError);  // not linear
    CHECK_THROWS_AS(parse_algebra("algebra B dim 3 / e1*e2 e3"), SyntaxError);
    CHECK_THROWS_AS(parse_algebra("algebra B dim x"), SyntaxError);
    CHECK_THROWS_AS(parse_algebra(""), SyntaxError);
    CHECK_THROWS_AS(parse_algebra("algebra B dim 3 params t"), SyntaxError);
    CHECK_THROWS_AS(parse_algebra("algebra B dim 3 params e2"), SyntaxError);
    CHECK_THROWS_AS(parse_algebra("algebra B dim 3 / e1*e2 = 1/(e3)"), SyntaxError);
}

TEST_CASE("parse_certificate round trip against the builtin") {
    const char* text =
        "degeneration T19 -> T00\n"
        "E1 = e1\nE2 = e2\nE3 = e3\nE4 = e4\nE5 = e5\nE6 = t^-1*e6";
    DegenerationCertificate c = parse_certificate(text, cat());
    CHECK(c == cat().certificates[2]);
}

TEST_CASE("parse_certificate rejections") {
    CHECK_THROWS_AS(parse_certificate("degeneration T19 -> NOPE\nE1 = e1", cat()),
                    UnknownAlgebra);
    const char* missing =
        "degeneration T19 -> T00\n"
        "E1 = e1\nE2 = e2\nE3 = e3\nE4 = e4\nE5 = e5";
    CHECK_THROWS_AS(parse_certificate(missing, cat()), MissingBasisRow);
    const char* dup =
        "degeneration T19 -> T00\n"
        "E1 = e1\nE1 = e2\nE3 = e3\nE4 = e4\nE5 = e5\nE6 = e6";
    CHECK_THROWS_AS(parse_certificate(dup, cat()), SyntaxError);
    CHECK_THROWS_AS(parse_certificate("nonsense", cat()), SyntaxError);
    const char* bad_where =
        "degeneration T19 -> T00 where a+1\n"
        "E1 = e1\nE2 = e2\nE3 = e3\nE4 = e4\nE5 = e5\nE6 = e6";
    CHECK_THROWS_AS(parse_certificate(bad_where, cat()), SyntaxError);
    const char* undeclared =
        "degeneration T19 -> T00\n"
        "E1 = x*e1\nE2 = e2\nE3 = e3\nE4 = e4\nE5 = e5\nE6 = e6";
    CHECK_THROWS_AS(parse_certificate(undeclared, cat()), Error);
}

TEST_CASE("parse then serialize is the identity on all builtins") {
    for (const auto& [name, a] : cat().algebras) {
        std::string text = serialize(a);
        AlgebraStructure again = parse_algebra(text);
        CHECK(again.name() == a.name());
        CHECK(again.dim() == a.dim());
        CHECK(again.params() == a.params());
        CHECK(again.constants() == a.constants());
        CHECK(serialize(again) == text);
    }
    for (const auto& c : cat().certificates) {
        std::string text = serialize(c);
        DegenerationCertificate again = parse_certificate(text, cat());
        CHECK(again == c);
        CHECK(serialize(again) == text);
    }
}

TEST_CASE("golden transcription audit") {
    std::string algebras;
    for (const auto& [name, a] : cat().algebras) {
        if (!algebras.empty()) algebras += "\n";
        algebras += serialize(a);
    }
    std::string golden_a = read_file(std::string(DEGEN_GOLDEN_DIR) + "/algebras.txt");
    CHECK(golden_a.find(algebras) != std::string::npos);

    std::string certs;
    for (const auto& c : cat().certificates) {
        if (!certs.empty()) certs += "\n";
        certs += serialize(c);
    }
    std::string golden_c = read_file(std::string(DEGEN_GOLDEN_DIR) + "/certificates.txt");
    CHECK(golden_c.find(certs) != std::string::npos);
}

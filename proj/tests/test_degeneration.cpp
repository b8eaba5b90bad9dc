#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "degen/catalog.hpp"
#include "degen/degeneration.hpp"
#include "degen/expr.hpp"

using namespace degen;

namespace {

const Catalog& cat() { return builtin_catalog(); }

BasisFamily identity_family(int n) {
    BasisFamily f;
    f.dim = n;
    f.entries = Matrix::identity(n);
    return f;
}

BasisFamily diagonal_family(int n, const std::vector<const char*>& diag) {
    BasisFamily f;
    f.dim = n;
    f.entries = Matrix(n, n);
    for (int i = 0; i < n; ++i) f.entries.at(i, i) = parse_expression(diag[i]);
    return f;
}

const DegenerationCertificate& builtin_cert(const std::string& id) {
    for (const auto& c : cat().certificates)
        if (c.id() == id) return c;
    throw std::runtime_error("no builtin certificate " + id);
}

}  // namespace

TEST_CASE("identity family keeps the constants") {
    const auto& T19 = cat().algebra("T19");
    TransformedConstants tc = transformed_constants(T19, identity_family(6));
    for (const auto& [key, value] : tc)
        CHECK(value == T19.constant(key[0], key[1], key[2]));
}

TEST_CASE("rescaling e6 by 1/t multiplies its source constants by t") {
    const auto& T19 = cat().algebra("T19");
    BasisFamily f = diagonal_family(6, {"1", "1", "1", "1", "1", "t^-1"});
    TransformedConstants tc = transformed_constants(T19, f);
    const RationalFunction t{Polynomial::symbol("t")};
    for (const auto& [key, value] : tc) {
        const auto [i, j, k] = key;
        if ((i == 1 && j == 5 && k == 6) || (i == 3 && j == 4 && k == 6)) {
            CHECK(value == t);
        } else {
            CHECK(value == T19.constant(i, j, k));
        }
    }
}

TEST_CASE("uniform scaling by t multiplies every constant by t") {
    for (const auto& name : {"T05", "g5", "T09"}) {
        const auto& A = cat().algebra(name);
        BasisFamily f = diagonal_family(6, {"t", "t", "t", "t", "t", "t"});
        TransformedConstants tc = transformed_constants(A, f);
        const RationalFunction t{Polynomial::symbol("t")};
        for (const auto& [key, value] : tc)
            CHECK(value == t * A.constant(key[0], key[1], key[2]));
    }
}

TEST_CASE("singular families are rejected") {
    const auto& T19 = cat().algebra("T19");
    BasisFamily f = identity_family(6);
    for (int c = 0; c < 6; ++c) f.entries.at(3, c) = f.entries.at(2, c);  // duplicate row
    CHECK_THROWS_AS(transformed_constants(T19, f), SingularFamily);
}

TEST_CASE("table row T19 -> T00 verifies") {
    VerificationReport rep = verify_certificate(builtin_cert("T19->T00"), cat());
    CHECK(rep.verified);
    CHECK(rep.discrepancies.empty());
    CHECK(rep.det_class == DetClass::MonomialInT);
    CHECK(rep.det == "1/t");
    CHECK(rep.derdim.proper);
    CHECK(rep.derdim.strict);
    CHECK(rep.derdim.source_dim == 7);
    CHECK(rep.derdim.target_dim == 11);
}

TEST_CASE("table row T19 -> T09 verifies over Q(a) with the declared exclusion") {
    VerificationReport rep = verify_certificate(builtin_cert("T19->T09"), cat());
    CHECK(rep.verified);
    CHECK(rep.exclusions == std::vector<std::string>{"a + 1"});
    CHECK(rep.det_class == DetClass::MonomialInT);
}

TEST_CASE("reflexive certificates verify for every catalog algebra") {
    for (const auto& [name, A] : cat().algebras) {
        DegenerationCertificate cert;
        cert.source = name;
        cert.target = name;
        cert.family = identity_family(A.dim());
        VerificationReport rep = verify_certificate(cert, cat());
        CHECK(rep.verified);
        CHECK(!rep.derdim.proper);
        CHECK(rep.derdim.source_dim == rep.derdim.target_dim);
    }
}

TEST_CASE("verify_all confirms the whole table in order") {
    std::vector<VerificationReport> reports = verify_all(cat());
    REQUIRE(reports.size() == 19);
    for (std::size_t i = 0; i < reports.size(); ++i) {
        CHECK(reports[i].verified);
        CHECK(reports[i].index == static_cast<int>(i));
        CHECK(reports[i].certificate == cat().certificates[i].id());
        CHECK(reports[i].det_class == DetClass::MonomialInT);
        if (reports[i].derdim.proper) CHECK(reports[i].derdim.strict);
    }
    CHECK(reports.front().certificate == "T19->g5");
    CHECK(reports.back().certificate == "T19->T18");
}

TEST_CASE("empty certificate list gives an empty report list") {
    Catalog empty;
    CHECK(verify_all(empty).empty());
}

TEST_CASE("a corrupted target is caught with a per-constant witness") {
    // perturb T00's constant c_{2,4}^5 by +1 in a copy of the catalog
    Catalog mutated = cat();
    AlgebraStructure& tgt = mutated.algebras.at("T00");
    tgt.set_constant(2, 4, 5, tgt.constant(2, 4, 5) + RationalFunction(Rational(1)));

    std::vector<VerificationReport> reports = verify_all(mutated);
    int failed = 0;
    for (const auto& r : reports) {
        if (r.verified) continue;
        ++failed;
        CHECK(r.certificate == "T19->T00");
        REQUIRE(r.discrepancies.size() == 1);
        CHECK(r.discrepancies[0].i == 2);
        CHECK(r.discrepancies[0].j == 4);
        CHECK(r.discrepancies[0].k == 5);
        CHECK(r.discrepancies[0].computed == "1");
        CHECK(r.discrepancies[0].expected == "2");
    }
    CHECK(failed == 1);
}

TEST_CASE("poles surface as failures with the offending triple") {
    // E6 = t*e6 makes c_{1,5}^6 blow up like 1/t for T19 -> itself
    DegenerationCertificate cert;
    cert.source = "T19";
    cert.target = "T19";
    cert.family = diagonal_family(6, {"1", "1", "1", "1", "1", "t"});
    VerificationReport rep = verify_certificate(cert, cat());
    CHECK(!rep.verified);
    bool found_pole = false;
    for (const auto& d : rep.discrepancies)
        if (d.computed.find("pole") != std::string::npos) found_pole = true;
    CHECK(found_pole);
}

TEST_CASE("exact evaluation near t = 0 stays within 10 t0 of the target") {
    const std::map<std::string, Rational> params{{"a", Rational(3)}, {"eps", Rational(2)}};
    for (const Rational& t0 : {Rational(1, 1000), Rational(1, 10000)}) {
        const Rational bound = Rational(10) * t0;
        for (const auto& cert : cat().certificates) {
            const auto& src = cat().algebra(cert.source);
            const auto& tgt = cat().algebra(cert.target);
            TransformedConstants tc = transformed_constants(src, cert.family);
            std::map<std::string, Rational> at = params;
            at.emplace("t", t0);
            for (const auto& [key, value] : tc) {
                Rational got = value.evaluate(at);
                Rational want = tgt.constant(key[0], key[1], key[2]).evaluate(params);
                CHECK((got - want).abs() <= bound);
            }
        }
    }
}

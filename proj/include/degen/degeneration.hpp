#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "degen/algebra.hpp"
#include "degen/matrix.hpp"

namespace degen {

struct Catalog;

/// Parametrized basis E_i^t = sum_j entries(i, j) e_j; the coefficients are
/// rational functions of t and the parameters, with det(entries) not the
/// zero function. `domain` lists parameter expressions asserted nonzero.
struct BasisFamily {
    int dim = 0;
    Matrix entries;
    std::vector<RationalFunction> domain;

    bool operator==(const BasisFamily&) const = default;
};

/// One degeneration witness: transforming `source` by the family and letting
/// t -> 0 is claimed to yield `target`.
struct DegenerationCertificate {
    std::string source;
    std::string target;
    BasisFamily family;

    std::string id() const { return source + "->" + target; }
    bool operator==(const DegenerationCertificate&) const = default;
};

/// Structure constants of the source in the transformed basis, dense over
/// (i < j, k).
using TransformedConstants = std::map<std::array<int, 3>, RationalFunction>;

/// Computes c_{i,j}^k(t): products of the E_i^t re-expressed in the E-basis.
/// Throws SingularFamily when det(entries) = 0.
TransformedConstants transformed_constants(const AlgebraStructure& A, const BasisFamily& F,
                                           Exec exec = Exec::Serial);

/// Same, also exposing the pivot entries of the re-expression elimination
/// for genericity auditing.
struct TransformResult {
    TransformedConstants constants;
    std::vector<RationalFunction> pivots;
};
TransformResult transformed_constants_traced(const AlgebraStructure& A, const BasisFamily& F,
                                             Exec exec = Exec::Serial);

/// Whether det(entries) is a power of t times a parameter function (a basis
/// for every t != 0) or merely a nonzero function (a basis for all but
/// finitely many t, still sufficient for orbit closure).
enum class DetClass { MonomialInT, NonMonomialNonzero };

struct Discrepancy {
    int i = 0;
    int j = 0;
    int k = 0;
    std::string computed;  // limit value, or pole description
    std::string expected;

    bool operator==(const Discrepancy&) const = default;
};

struct DimDerCheck {
    int source_dim = -1;
    int target_dim = -1;
    bool strict = false;
    bool proper = false;  // source and target differ

    bool operator==(const DimDerCheck&) const = default;
};

struct VerificationReport {
    std::string certificate;
    int index = -1;  // position in the catalog's certificate list, -1 ad hoc
    std::string source;
    std::string target;
    bool verified = false;
    DetClass det_class = DetClass::NonMonomialNonzero;
    std::string det;
    std::vector<std::string> exclusions;       // declared domain
    std::vector<std::string> assumed_nonzero;  // collected during elimination
    std::vector<Discrepancy> discrepancies;
    DimDerCheck derdim;

    bool operator==(const VerificationReport&) const = default;
};

/// Verifies one certificate against the catalog: determinant check and
/// classification, t -> 0 limits, exact comparison with the target constants,
/// and the dim-Der necessary-condition record. Poles and mismatches become
/// discrepancies; `verified` is true exactly when there are none.
VerificationReport verify_certificate(const DegenerationCertificate& cert, const Catalog& catalog,
                                      Exec exec = Exec::Serial);

/// Verifies all catalog certificates in order; with Exec::Parallel the
/// certificates fan out across workers and reports merge in catalog order.
std::vector<VerificationReport> verify_all(const Catalog& catalog, Exec exec = Exec::Serial);

}  // namespace degen

#pragma once

#include <map>
#include <string>
#include <vector>

#include "degen/algebra.hpp"
#include "degen/degeneration.hpp"

namespace degen {

/// Named algebras plus the ordered certificate list.
struct Catalog {
    std::map<std::string, AlgebraStructure> algebras;
    std::vector<DegenerationCertificate> certificates;
    /// Derivation-algebra dimensions pinned by the classification (the three
    /// rigid algebras); everything else is computed only.
    std::map<std::string, int> known_derivation_dims;

    bool has_algebra(const std::string& name) const { return algebras.contains(name); }
    const AlgebraStructure& algebra(const std::string& name) const;  // throws UnknownAlgebra
    void add_algebra(AlgebraStructure a);                            // rejects duplicate names
};

/// The built-in catalog: g5, M6e (parameter eps), T00..T19 (T09 and T18 with
/// parameter a), the 6-dimensional abelian algebra, and the 19 degeneration
/// certificates in table order.
const Catalog& builtin_catalog();

/// Algebra text format:
///   algebra <name> dim <n> [params <sym>{,<sym>}]
///   e<i>*e<j> = <linear combination of e1..en>
/// Statements are separated by newlines or by '/' surrounded by whitespace;
/// '#' starts a comment. Product lines require i < j, each pair at most once,
/// coefficients free of t.
AlgebraStructure parse_algebra(const std::string& text);

/// Certificate text format:
///   degeneration <source> -> <target> [where <expr> != 0 {, <expr> != 0}]
///   E<i> = <linear combination of e1..en with rational-function coefficients>
/// All n rows are required, each exactly once.
DegenerationCertificate parse_certificate(const std::string& text, const Catalog& catalog);

std::string serialize(const AlgebraStructure& a);
std::string serialize(const DegenerationCertificate& c);

}  // namespace degen

#pragma once

#include "degen/algebra.hpp"
#include "degen/matrix.hpp"

namespace degen {

/// Linear system for D(e_i e_j) = D(e_i) e_j + e_i D(e_j): one row per
/// (i < j, output coordinate k), rows ordered lexicographically by (i, j, k);
/// n^2 columns for the unknowns D_{p,q} = coefficient of e_p in D(e_q),
/// columns ordered lexicographically by (p, q).
struct DerivationSystem {
    std::string algebra;
    Matrix matrix;
};

DerivationSystem derivation_system(const AlgebraStructure& A);

struct DerivationDimension {
    int dim = 0;
    /// Parameter expressions the generic-rank elimination assumed nonzero.
    std::vector<Polynomial> assumed_nonzero;
};

/// dim Der(A) at generic parameters: the nullspace dimension of the
/// derivation system over the parameter function field.
DerivationDimension derivation_dimension(const AlgebraStructure& A, Exec exec = Exec::Serial);

/// dim Der of the algebra specialized at the given parameter values; at least
/// the generic dimension away from the exceptional set.
int derivation_dimension_at(const AlgebraStructure& A,
                            const std::map<std::string, Rational>& assignment,
                            Exec exec = Exec::Serial);

/// Nullspace basis reshaped to n x n matrices (entry (p, q) is D_{p,q}).
std::vector<Matrix> derivation_basis(const AlgebraStructure& A, Exec exec = Exec::Serial);

/// Expressions a pivot sequence assumed nonzero: for each pivot numerator and
/// denominator without a constant t-coefficient, the leading t-coefficient,
/// unit-normalized and deduplicated, sorted by rendering.
std::vector<Polynomial> collect_assumed_nonzero(const std::vector<RationalFunction>& pivots);

}  // namespace degen

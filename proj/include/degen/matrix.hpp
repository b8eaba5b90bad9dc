#pragma once

#include <optional>
#include <vector>

#include "degen/exec.hpp"
#include "degen/ratfunc.hpp"

namespace degen {

/// Dense row-major matrix over the rational-function field.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols) {}

    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    RationalFunction& at(int r, int c) { return e_[static_cast<std::size_t>(r) * cols_ + c]; }
    const RationalFunction& at(int r, int c) const {
        return e_[static_cast<std::size_t>(r) * cols_ + c];
    }

    Matrix transpose() const;
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    bool operator==(const Matrix& o) const = default;

private:
    int rows_;
    int cols_;
    std::vector<RationalFunction> e_;
};

struct RrefResult {
    Matrix mat;
    int rank = 0;
    std::vector<int> pivot_cols;
    /// Entry values at pivot-selection time; their numerators are the
    /// expressions assumed nonzero by the generic-rank computation.
    std::vector<RationalFunction> pivot_values;
};

/// Reduced row-echelon form over the field. Pivot choice: among the nonzero
/// candidates of the current column, the entry with the fewest terms, ties
/// broken by row index. The resulting RREF is the canonical one.
RrefResult rref(const Matrix& m, Exec exec = Exec::Serial);

struct SolveResult {
    std::optional<Matrix> solution;
    /// Row of the reduced augmented system witnessing inconsistency, -1 else.
    int inconsistent_row = -1;
    /// Pivot entries of the augmented elimination, for genericity auditing.
    std::vector<RationalFunction> pivot_values;
};

/// Solves a x = b; returns some solution (free variables zero) or reports
/// inconsistency.
SolveResult solve(const Matrix& a, const Matrix& b, Exec exec = Exec::Serial);

RationalFunction determinant(const Matrix& m, Exec exec = Exec::Serial);

int nullspace_dimension(const Matrix& m, Exec exec = Exec::Serial);

/// Columns form a basis of the right nullspace (free-variable convention:
/// one basis vector per free column, that coordinate set to 1).
Matrix nullspace(const Matrix& m, Exec exec = Exec::Serial);

}  // namespace degen

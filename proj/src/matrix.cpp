#include "degen/matrix.hpp"

#include "degen/error.hpp"

namespace degen {

namespace {

std::size_t term_count(const RationalFunction& f) {
    return f.num().terms().size() + f.den().terms().size();
}

/// Pivot row for `col`: nonzero entry with minimal term count among rows
/// [from, rows), ties by row index; -1 when the column is zero there.
int pick_pivot(const Matrix& m, int col, int from) {
    int best = -1;
    std::size_t best_cost = 0;
    for (int r = from; r < m.rows(); ++r) {
        const RationalFunction& e = m.at(r, col);
        if (e.is_zero()) continue;
        std::size_t cost = term_count(e);
        if (best < 0 || cost < best_cost) {
            best = r;
            best_cost = cost;
        }
    }
    return best;
}

}  // namespace

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = RationalFunction(Rational(1));
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape mismatch");
    Matrix p(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) {
            RationalFunction s;
            for (int k = 0; k < a.cols(); ++k) s += a.at(i, k) * b.at(k, j);
            p.at(i, j) = s;
        }
    return p;
}

RrefResult rref(const Matrix& m, Exec exec) {
    RrefResult res;
    res.mat = m;
    Matrix& a = res.mat;
    const bool par = exec == Exec::Parallel;
    (void)par;
    int row = 0;
    for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
        int p = pick_pivot(a, col, row);
        if (p < 0) continue;
        res.pivot_values.push_back(a.at(p, col));
        if (p != row)
            for (int c = 0; c < a.cols(); ++c) std::swap(a.at(p, c), a.at(row, c));
        RationalFunction inv = a.at(row, col).inverse();
        for (int c = col; c < a.cols(); ++c) a.at(row, c) *= inv;

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (par)
#endif
        for (int r = 0; r < a.rows(); ++r) {
            if (r == row || a.at(r, col).is_zero()) continue;
            RationalFunction f = a.at(r, col);
            for (int c = col; c < a.cols(); ++c) a.at(r, c) -= f * a.at(row, c);
        }
        res.pivot_cols.push_back(col);
        ++row;
    }
    res.rank = row;
    return res;
}

SolveResult solve(const Matrix& a, const Matrix& b, Exec exec) {
    if (a.rows() != b.rows()) throw DimensionMismatch("solve: row count mismatch");
    Matrix aug(a.rows(), a.cols() + b.cols());
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
        for (int c = 0; c < b.cols(); ++c) aug.at(r, a.cols() + c) = b.at(r, c);
    }
    RrefResult red = rref(aug, exec);

    SolveResult out;
    out.pivot_values = red.pivot_values;
    for (std::size_t k = 0; k < red.pivot_cols.size(); ++k) {
        if (red.pivot_cols[k] >= a.cols()) {
            out.inconsistent_row = static_cast<int>(k);
            return out;
        }
    }
    Matrix x(a.cols(), b.cols());
    for (std::size_t k = 0; k < red.pivot_cols.size(); ++k)
        for (int c = 0; c < b.cols(); ++c)
            x.at(red.pivot_cols[k], c) = red.mat.at(static_cast<int>(k), a.cols() + c);
    out.solution = std::move(x);
    return out;
}

RationalFunction determinant(const Matrix& m, Exec exec) {
    if (m.rows() != m.cols()) throw NonSquare("determinant of a non-square matrix");
    const int n = m.rows();
    Matrix a = m;
    const bool par = exec == Exec::Parallel;
    (void)par;
    bool negate = false;
    for (int col = 0; col < n; ++col) {
        int p = pick_pivot(a, col, col);
        if (p < 0) return RationalFunction{};
        if (p != col) {
            for (int c = col; c < n; ++c) std::swap(a.at(p, c), a.at(col, c));
            negate = !negate;
        }
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (par)
#endif
        for (int r = col + 1; r < n; ++r) {
            if (a.at(r, col).is_zero()) continue;
            RationalFunction f = a.at(r, col) / a.at(col, col);
            for (int c = col; c < n; ++c) a.at(r, c) -= f * a.at(col, c);
        }
    }
    RationalFunction det{Rational(1)};
    for (int i = 0; i < n; ++i) det *= a.at(i, i);
    return negate ? -det : det;
}

int nullspace_dimension(const Matrix& m, Exec exec) { return m.cols() - rref(m, exec).rank; }

Matrix nullspace(const Matrix& m, Exec exec) {
    RrefResult red = rref(m, exec);
    std::vector<int> free_cols;
    {
        std::size_t k = 0;
        for (int c = 0; c < m.cols(); ++c) {
            if (k < red.pivot_cols.size() && red.pivot_cols[k] == c)
                ++k;
            else
                free_cols.push_back(c);
        }
    }
    Matrix basis(m.cols(), static_cast<int>(free_cols.size()));
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
        basis.at(free_cols[j], static_cast<int>(j)) = RationalFunction(Rational(1));
        for (std::size_t k = 0; k < red.pivot_cols.size(); ++k)
            basis.at(red.pivot_cols[k], static_cast<int>(j)) =
                -red.mat.at(static_cast<int>(k), free_cols[j]);
    }
    return basis;
}

}  // namespace degen

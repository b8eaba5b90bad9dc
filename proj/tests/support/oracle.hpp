#pragma once

// Test-side oracles, deliberately independent of the library's linear
// algebra and identity-check paths: plain rational Gaussian elimination and
// a separate derivation-system assembly route.

#include <map>
#include <vector>

#include "degen/algebra.hpp"
#include "degen/rational.hpp"

namespace degen::testoracle {

using QMatrix = std::vector<std::vector<Rational>>;

inline int q_rank(QMatrix m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && m[piv][col].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[row]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            Rational f = m[r][col] / m[row][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

/// Structure constants of a parameter-free (or specialized) algebra as plain
/// rationals: gamma[i][j][k] = coefficient of e_k in e_i e_j, 0-based.
inline std::vector<std::vector<std::vector<Rational>>> q_constants(
    const AlgebraStructure& A, const std::map<std::string, Rational>& assignment = {}) {
    const int n = A.dim();
    std::vector gamma(static_cast<std::size_t>(n),
                      std::vector(static_cast<std::size_t>(n),
                                  std::vector<Rational>(static_cast<std::size_t>(n))));
    for (const auto& [key, c] : A.constants()) {
        const auto [i, j, k] = key;
        Rational v = c.evaluate(assignment);
        gamma[i - 1][j - 1][k - 1] = v;
        gamma[j - 1][i - 1][k - 1] = -v;
    }
    return gamma;
}

/// x * y from a plain constants table.
inline std::vector<Rational> q_product(const std::vector<std::vector<std::vector<Rational>>>& g,
                                       const std::vector<Rational>& x,
                                       const std::vector<Rational>& y) {
    const std::size_t n = g.size();
    std::vector<Rational> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            for (std::size_t k = 0; k < n; ++k)
                if (!g[i][j][k].is_zero()) out[k] += x[i] * y[j] * g[i][j][k];
        }
    }
    return out;
}

/// Derivation-system nullspace dimension over plain rationals, assembled from
/// scratch: constraints D(e_i e_j) = D(e_i) e_j + e_i D(e_j), unknowns d_{p,q}
/// with D(e_q) = sum_p d_{p,q} e_p.
inline int q_derivation_dimension(const AlgebraStructure& A,
                                  const std::map<std::string, Rational>& assignment = {}) {
    const int n = A.dim();
    auto g = q_constants(A, assignment);
    QMatrix m;
    auto col = [n](int p, int q) { return p * n + q; };  // 0-based
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                std::vector<Rational> row(static_cast<std::size_t>(n) * n);
                for (int mm = 0; mm < n; ++mm)
                    row[static_cast<std::size_t>(col(k, mm))] += g[i][j][mm];
                for (int p = 0; p < n; ++p) {
                    row[static_cast<std::size_t>(col(p, i))] -= g[p][j][k];
                    row[static_cast<std::size_t>(col(p, j))] -= g[i][p][k];
                }
                m.push_back(std::move(row));
            }
    return n * n - q_rank(std::move(m));
}

}  // namespace degen::testoracle

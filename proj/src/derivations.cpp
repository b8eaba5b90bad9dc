#include "degen/derivations.hpp"

#include <algorithm>
#include <set>

namespace degen {

DerivationSystem derivation_system(const AlgebraStructure& A) {
    const int n = A.dim();
    const int pairs = n * (n - 1) / 2;
    Matrix m(pairs * n, n * n);
    auto col = [n](int p, int q) { return (p - 1) * n + (q - 1); };  // D_{p,q}

    int base = 0;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            // rows base..base+n-1 hold coordinates k = 1..n of
            // D(e_i e_j) - D(e_i) e_j - e_i D(e_j)
            for (int mIdx = 1; mIdx <= n; ++mIdx) {
                const RationalFunction& c = A.constant(i, j, mIdx);
                if (c.is_zero()) continue;
                for (int k = 1; k <= n; ++k) m.at(base + (k - 1), col(k, mIdx)) += c;
            }
            for (int p = 1; p <= n; ++p) {
                Element pj = A.basis_product(p, j);  // e_p e_j
                for (int k = 1; k <= n; ++k) {
                    const RationalFunction& g = pj.coords[static_cast<std::size_t>(k - 1)];
                    if (!g.is_zero()) m.at(base + (k - 1), col(p, i)) -= g;
                }
                Element ip = A.basis_product(i, p);  // e_i e_p
                for (int k = 1; k <= n; ++k) {
                    const RationalFunction& g = ip.coords[static_cast<std::size_t>(k - 1)];
                    if (!g.is_zero()) m.at(base + (k - 1), col(p, j)) -= g;
                }
            }
            base += n;
        }
    }
    return {A.name(), std::move(m)};
}

std::vector<Polynomial> collect_assumed_nonzero(const std::vector<RationalFunction>& pivots) {
    std::set<std::string> seen;
    std::vector<Polynomial> out;
    auto consider = [&](const Polynomial& p) {
        if (p.is_zero()) return;
        // a constant t-coefficient keeps the pivot nonzero for every
        // parameter value, so nothing is assumed
        const int lo = p.min_degree("t");
        const int hi = p.degree("t");
        for (int d = lo; d <= hi; ++d) {
            Polynomial c = p.coeff_of("t", d);
            if (!c.is_zero() && c.is_constant()) return;
        }
        Polynomial lead = integer_primitive(p.coeff_of("t", hi));
        if (lead.is_constant()) return;
        if (seen.insert(lead.str()).second) out.push_back(std::move(lead));
    };
    for (const RationalFunction& p : pivots) {
        consider(p.num());
        consider(p.den());
    }
    std::sort(out.begin(), out.end(),
              [](const Polynomial& x, const Polynomial& y) { return x.str() < y.str(); });
    return out;
}

DerivationDimension derivation_dimension(const AlgebraStructure& A, Exec exec) {
    DerivationSystem sys = derivation_system(A);
    RrefResult red = rref(sys.matrix, exec);
    DerivationDimension out;
    out.dim = sys.matrix.cols() - red.rank;
    out.assumed_nonzero = collect_assumed_nonzero(red.pivot_values);
    return out;
}

int derivation_dimension_at(const AlgebraStructure& A,
                            const std::map<std::string, Rational>& assignment, Exec exec) {
    return derivation_dimension(A.specialize(assignment), exec).dim;
}

std::vector<Matrix> derivation_basis(const AlgebraStructure& A, Exec exec) {
    const int n = A.dim();
    DerivationSystem sys = derivation_system(A);
    Matrix ns = nullspace(sys.matrix, exec);
    std::vector<Matrix> out;
    for (int c = 0; c < ns.cols(); ++c) {
        Matrix d(n, n);
        for (int p = 1; p <= n; ++p)
            for (int q = 1; q <= n; ++q) d.at(p - 1, q - 1) = ns.at((p - 1) * n + (q - 1), c);
        out.push_back(std::move(d));
    }
    return out;
}

}  // namespace degen

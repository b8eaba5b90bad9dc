#pragma once

// Deterministic random generators shared by the property tests.

#include <random>
#include <string>
#include <vector>

#include "degen/matrix.hpp"
#include "degen/polynomial.hpp"
#include "degen/ratfunc.hpp"
#include "degen/rational.hpp"

namespace degen::testgen {

using Rng = std::mt19937_64;

inline Rational rand_rational(Rng& rng, int max_abs_num = 9, int max_den = 5) {
    std::uniform_int_distribution<int> num(-max_abs_num, max_abs_num);
    std::uniform_int_distribution<int> den(1, max_den);
    return Rational(num(rng), den(rng));
}

inline Rational rand_nonzero_rational(Rng& rng, int max_abs_num = 9, int max_den = 5) {
    for (;;) {
        Rational r = rand_rational(rng, max_abs_num, max_den);
        if (!r.is_zero()) return r;
    }
}

inline Polynomial rand_poly(Rng& rng, const std::vector<std::string>& syms, int max_deg = 4,
                            int max_terms = 4) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> expo(0, max_deg);
    Polynomial p;
    const int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
        Polynomial mono(rand_rational(rng, 6, 3));
        int budget = max_deg;
        for (const auto& s : syms) {
            int e = expo(rng) % (budget + 1);
            budget -= e;
            if (e > 0) mono *= Polynomial::symbol(s, e);
        }
        p += mono;
    }
    return p;
}

inline Polynomial rand_nonzero_poly(Rng& rng, const std::vector<std::string>& syms,
                                    int max_deg = 4, int max_terms = 4) {
    for (;;) {
        Polynomial p = rand_poly(rng, syms, max_deg, max_terms);
        if (!p.is_zero()) return p;
    }
}

inline RationalFunction rand_rf(Rng& rng, const std::vector<std::string>& syms, int max_deg = 3,
                                int max_terms = 3) {
    return RationalFunction(rand_poly(rng, syms, max_deg, max_terms),
                            rand_nonzero_poly(rng, syms, max_deg, max_terms));
}

inline RationalFunction rand_nonzero_rf(Rng& rng, const std::vector<std::string>& syms,
                                        int max_deg = 3, int max_terms = 3) {
    for (;;) {
        RationalFunction f = rand_rf(rng, syms, max_deg, max_terms);
        if (!f.is_zero()) return f;
    }
}

inline Matrix rand_matrix(Rng& rng, int rows, int cols, const std::vector<std::string>& syms,
                          int max_deg = 2, int max_terms = 2) {
    Matrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            m.at(r, c) = RationalFunction(rand_poly(rng, syms, max_deg, max_terms));
    return m;
}

}  // namespace degen::testgen

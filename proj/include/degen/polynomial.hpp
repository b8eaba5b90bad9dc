#pragma once

#include <map>
#include <string>
#include <vector>

#include "degen/rational.hpp"

namespace degen {

/// Fixed variable priority used by the graded-lex monomial order and by all
/// canonical forms: t first, then a, then eps, then remaining names
/// alphabetically. Returns true when x sorts strictly before y.
bool symbol_before(const std::string& x, const std::string& y);

using ExpVec = std::vector<int>;

/// Graded lexicographic order on exponent vectors of equal length.
struct GrlexLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const;
};

/// Sparse multivariate polynomial over Q.
///
/// Canonical form: the symbol list is sorted by symbol_before and contains
/// only symbols that actually occur with a positive exponent; the term map
/// holds no zero coefficients. Two equal polynomials are structurally equal.
class Polynomial {
public:
    using TermMap = std::map<ExpVec, Rational, GrlexLess>;

    Polynomial() = default;  // zero
    explicit Polynomial(Rational c);
    Polynomial(long long c) : Polynomial(Rational(c)) {}

    static Polynomial symbol(const std::string& name, int exponent = 1);

    const std::vector<std::string>& symbols() const { return syms_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return syms_.empty(); }
    /// Constant term value; the whole value when is_constant().
    Rational constant_value() const;

    int total_degree() const;
    /// Largest exponent of `name`; 0 when absent, -1 for the zero polynomial.
    int degree(const std::string& name) const;
    /// Smallest exponent of `name` over all terms; 0 when absent, -1 for zero.
    int min_degree(const std::string& name) const;
    bool mentions(const std::string& name) const;

    /// Leading (grlex-largest) coefficient.
    Rational leading_coefficient() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    Polynomial pow(int exponent) const;  // exponent >= 0

    bool operator==(const Polynomial& o) const { return syms_ == o.syms_ && terms_ == o.terms_; }

    /// Exact value at a total assignment of every occurring symbol.
    Rational evaluate(const std::map<std::string, Rational>& assignment) const;

    /// Replaces each mapped symbol by the given polynomial; unmapped symbols
    /// stay themselves.
    Polynomial substitute(const std::map<std::string, Polynomial>& repl) const;

    /// Deterministic rendering, grlex-descending terms, e.g. "t^2*a - 1/2".
    std::string str() const;

    // -- support for gcd / division, views with respect to one variable --

    /// Coefficient of name^d as a polynomial in the remaining symbols.
    Polynomial coeff_of(const std::string& name, int d) const;
    /// Multiplies by name^k (k >= 0).
    Polynomial shifted(const std::string& name, int k) const;

private:
    friend Polynomial poly_gcd(const Polynomial&, const Polynomial&);
    friend Polynomial exact_div(const Polynomial&, const Polynomial&);

    /// Re-established after every mutation: minimal sorted symbol support.
    void trim_();
    /// Rewrites the term map over the given superset symbol list.
    void embed_(const std::vector<std::string>& universe);
    static std::vector<std::string> merged_symbols_(const Polynomial& a, const Polynomial& b);

    std::vector<std::string> syms_;
    TermMap terms_;
};

/// GCD over Q[syms], unique up to units; the result is integer-primitive with
/// positive leading coefficient. gcd(0, 0) = 0.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

/// Quotient a/b when b divides a exactly; throws Error otherwise.
Polynomial exact_div(const Polynomial& a, const Polynomial& b);

/// Scales to integer coefficients with content 1 and positive leading
/// coefficient (canonical unit-normalized representative). Zero stays zero.
Polynomial integer_primitive(const Polynomial& a);

}  // namespace degen

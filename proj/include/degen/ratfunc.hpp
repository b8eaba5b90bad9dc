#pragma once

#include <optional>
#include <string>

#include "degen/polynomial.hpp"

namespace degen {

/// Order of vanishing in t; +infinity for the zero function.
struct TOrder {
    bool infinite = false;
    long long value = 0;

    static TOrder inf() { return {true, 0}; }
    static TOrder of(long long v) { return {false, v}; }
    bool operator==(const TOrder& o) const {
        return infinite == o.infinite && (infinite || value == o.value);
    }
};

/// Reduced ratio of multivariate polynomials over Q.
///
/// Canonical form: gcd(num, den) = 1 and the denominator is monic under the
/// graded-lex order, so equality is structural. Zero is 0/1.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Rational(1)) {}
    RationalFunction(Rational c) : num_(std::move(c)), den_(Rational(1)) {}  // NOLINT
    RationalFunction(long long c) : RationalFunction(Rational(c)) {}         // NOLINT
    explicit RationalFunction(Polynomial num) : num_(std::move(num)), den_(Rational(1)) {}
    RationalFunction(Polynomial num, Polynomial den);

    /// name^exponent; negative exponents go to the denominator.
    static RationalFunction monomial(const std::string& name, int exponent = 1);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == Polynomial(Rational(1)) && den_ == Polynomial(Rational(1)); }
    /// Free of every symbol (plain rational value).
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const { return num_.constant_value() / den_.constant_value(); }
    bool mentions(const std::string& name) const {
        return num_.mentions(name) || den_.mentions(name);
    }

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    RationalFunction inverse() const;
    RationalFunction pow(int exponent) const;  // negative inverts

    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }

    /// t-adic valuation: min t-exponent of num minus min t-exponent of den.
    TOrder t_order() const;

    /// Exact value at a total assignment; throws EvaluationPole when the
    /// denominator vanishes there.
    Rational evaluate(const std::map<std::string, Rational>& assignment) const;

    /// Polynomial substitution applied to num and den; throws EvaluationPole
    /// when it annihilates the denominator.
    RationalFunction substitute(const std::map<std::string, Polynomial>& repl) const;

    std::string str() const;

private:
    void reduce_();
    void monic_();

    Polynomial num_;
    Polynomial den_;
};

/// Result of the t->0 limit. `value` is empty exactly when the function has a
/// pole (negative t-order); `order` is always the t-order of the input.
struct LimitResult {
    TOrder order;
    std::optional<RationalFunction> value;
    bool has_value() const { return value.has_value(); }
};

/// t->0 limit. Positive order gives 0, order 0 substitutes t = 0, negative
/// order reports the pole via an empty value.
LimitResult limit_t0(const RationalFunction& f);

}  // namespace degen

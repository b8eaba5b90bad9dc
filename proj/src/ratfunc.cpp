#include "degen/ratfunc.hpp"

#include "degen/error.hpp"

namespace degen {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    reduce_();
}

void RationalFunction::reduce_() {
    if (num_.is_zero()) {
        den_ = Polynomial(Rational(1));
        return;
    }
    if (!den_.is_constant()) {
        Polynomial g = poly_gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
    }
    monic_();
}

void RationalFunction::monic_() {
    Rational lc = den_.leading_coefficient();
    if (!lc.is_one()) {
        Rational inv = lc.inverse();
        num_ *= inv;
        den_ *= inv;
    }
}

RationalFunction RationalFunction::monomial(const std::string& name, int exponent) {
    if (exponent >= 0) return RationalFunction(Polynomial::symbol(name, exponent));
    return RationalFunction(Polynomial(Rational(1)), Polynomial::symbol(name, -exponent));
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        Polynomial d = poly_gcd(den_, o.den_);
        Polynomial da = d.is_constant() ? den_ : exact_div(den_, d);
        Polynomial db = d.is_constant() ? o.den_ : exact_div(o.den_, d);
        num_ = num_ * db + o.num_ * da;
        den_ = den_ * db;
    }
    reduce_();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

namespace {

// cancels the common factor between a numerator and the other operand's
// denominator; inputs are reduced, so the leftover pair is coprime
void cross_cancel(Polynomial& num, Polynomial& den) {
    if (num.is_constant() || den.is_constant()) return;
    Polynomial g = poly_gcd(num, den);
    if (g.is_constant()) return;
    num = exact_div(num, g);
    den = exact_div(den, g);
}

}  // namespace

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = o;
    Polynomial on = o.num_;
    Polynomial od = o.den_;
    cross_cancel(num_, od);
    cross_cancel(on, den_);
    num_ *= on;
    den_ *= od;
    monic_();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    if (o.is_zero()) throw DivisionByZero("rational function division by zero");
    return *this *= o.inverse();
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of the zero function");
    RationalFunction r;
    r.num_ = den_;
    r.den_ = num_;  // still coprime; only the monic scaling changes
    r.monic_();
    return r;
}

RationalFunction RationalFunction::pow(int exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    RationalFunction r{Rational(1)};
    for (int i = 0; i < exponent; ++i) r *= *this;
    return r;
}

TOrder RationalFunction::t_order() const {
    if (is_zero()) return TOrder::inf();
    return TOrder::of(static_cast<long long>(num_.min_degree("t")) - den_.min_degree("t"));
}

Rational RationalFunction::evaluate(const std::map<std::string, Rational>& assignment) const {
    Rational d = den_.evaluate(assignment);
    if (d.is_zero()) throw EvaluationPole("denominator vanishes at the given assignment");
    return num_.evaluate(assignment) / d;
}

RationalFunction RationalFunction::substitute(const std::map<std::string, Polynomial>& repl) const {
    Polynomial d = den_.substitute(repl);
    if (d.is_zero()) throw EvaluationPole("substitution annihilates the denominator");
    return RationalFunction(num_.substitute(repl), std::move(d));
}

std::string RationalFunction::str() const {
    if (den_ == Polynomial(Rational(1))) return num_.str();
    std::string n = num_.terms().size() > 1 ? "(" + num_.str() + ")" : num_.str();
    // parenthesize the denominator unless it is a single power of one symbol
    bool simple = den_.terms().size() == 1 && den_.symbols().size() == 1 &&
                  den_.leading_coefficient().is_one();
    std::string d = simple ? den_.str() : "(" + den_.str() + ")";
    return n + "/" + d;
}

LimitResult limit_t0(const RationalFunction& f) {
    TOrder ord = f.t_order();
    if (ord.infinite) return {ord, RationalFunction{}};
    if (ord.value < 0) return {ord, std::nullopt};
    // reduced form: a non-negative order forces min t-degree 0 in the
    // denominator, so substituting t = 0 cannot annihilate it
    std::map<std::string, Polynomial> at0{{"t", Polynomial{}}};
    return {ord, f.substitute(at0)};
}

}  // namespace degen

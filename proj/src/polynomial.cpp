#include "degen/polynomial.hpp"
#include <cstdint>

#include <algorithm>
#include <cassert>

namespace degen {

bool symbol_before(const std::string& x, const std::string& y) {
    auto rank = [](const std::string& s) -> int {
        if (s == "t") return 0;
        if (s == "a") return 1;
        if (s == "eps") return 2;
        return 3;
    };
    const int rx = rank(x);
    const int ry = rank(y);
    if (rx != ry) return rx < ry;
    return x < y;
}

bool GrlexLess::operator()(const ExpVec& a, const ExpVec& b) const {
    assert(a.size() == b.size());
    long long da = 0;
    long long db = 0;
    for (int e : a) da += e;
    for (int e : b) db += e;
    if (da != db) return da < db;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

Polynomial::Polynomial(Rational c) {
    if (!c.is_zero()) terms_.emplace(ExpVec{}, std::move(c));
}

Polynomial Polynomial::symbol(const std::string& name, int exponent) {
    if (exponent < 0) throw Error("negative exponent in polynomial");
    if (exponent == 0) return Polynomial(Rational(1));
    Polynomial p;
    p.syms_ = {name};
    p.terms_.emplace(ExpVec{exponent}, Rational(1));
    return p;
}

Rational Polynomial::constant_value() const {
    ExpVec zero(syms_.size(), 0);
    auto it = terms_.find(zero);
    return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::total_degree() const {
    if (terms_.empty()) return -1;
    const ExpVec& lead = terms_.rbegin()->first;
    int d = 0;
    for (int e : lead) d += e;
    return d;
}

int Polynomial::degree(const std::string& name) const {
    if (terms_.empty()) return -1;
    auto it = std::find(syms_.begin(), syms_.end(), name);
    if (it == syms_.end()) return 0;
    const std::size_t idx = static_cast<std::size_t>(it - syms_.begin());
    int d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, k[idx]);
    return d;
}

int Polynomial::min_degree(const std::string& name) const {
    if (terms_.empty()) return -1;
    auto it = std::find(syms_.begin(), syms_.end(), name);
    if (it == syms_.end()) return 0;
    const std::size_t idx = static_cast<std::size_t>(it - syms_.begin());
    int d = terms_.begin()->first[idx];
    for (const auto& [k, c] : terms_) d = std::min(d, k[idx]);
    return d;
}

bool Polynomial::mentions(const std::string& name) const {
    return std::find(syms_.begin(), syms_.end(), name) != syms_.end();
}

Rational Polynomial::leading_coefficient() const {
    return terms_.empty() ? Rational(0) : terms_.rbegin()->second;
}

void Polynomial::trim_() {
    if (syms_.empty()) return;
    std::vector<bool> used(syms_.size(), false);
    for (const auto& [k, c] : terms_)
        for (std::size_t i = 0; i < k.size(); ++i)
            if (k[i] > 0) used[i] = true;
    if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;

    std::vector<std::string> kept;
    for (std::size_t i = 0; i < syms_.size(); ++i)
        if (used[i]) kept.push_back(syms_[i]);
    TermMap next;
    for (const auto& [k, c] : terms_) {
        ExpVec nk;
        nk.reserve(kept.size());
        for (std::size_t i = 0; i < k.size(); ++i)
            if (used[i]) nk.push_back(k[i]);
        next.emplace(std::move(nk), c);
    }
    syms_ = std::move(kept);
    terms_ = std::move(next);
}

void Polynomial::embed_(const std::vector<std::string>& universe) {
    if (syms_ == universe) return;
    std::vector<int> pos(syms_.size());
    for (std::size_t i = 0; i < syms_.size(); ++i) {
        auto it = std::find(universe.begin(), universe.end(), syms_[i]);
        assert(it != universe.end());
        pos[i] = static_cast<int>(it - universe.begin());
    }
    TermMap next;
    for (const auto& [k, c] : terms_) {
        ExpVec nk(universe.size(), 0);
        for (std::size_t i = 0; i < k.size(); ++i) nk[static_cast<std::size_t>(pos[i])] = k[i];
        next.emplace(std::move(nk), c);
    }
    syms_ = universe;
    terms_ = std::move(next);
}

std::vector<std::string> Polynomial::merged_symbols_(const Polynomial& a, const Polynomial& b) {
    std::vector<std::string> out;
    std::set_union(a.syms_.begin(), a.syms_.end(), b.syms_.begin(), b.syms_.end(),
                   std::back_inserter(out), symbol_before);
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (syms_ == o.syms_) {
        for (const auto& [k, c] : o.terms_) {
            auto [it, inserted] = terms_.emplace(k, c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero()) terms_.erase(it);
            }
        }
    } else {
        auto uni = merged_symbols_(*this, o);
        embed_(uni);
        Polynomial tmp = o;
        tmp.embed_(uni);
        for (auto& [k, c] : tmp.terms_) {
            auto it = terms_.find(k);
            if (it == terms_.end()) {
                terms_.emplace(k, std::move(c));
            } else {
                it->second += c;
                if (it->second.is_zero()) terms_.erase(it);
            }
        }
    }
    trim_();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    if (a.is_zero() || b.is_zero()) return r;
    auto uni = Polynomial::merged_symbols_(a, b);
    Polynomial x = a;
    Polynomial y = b;
    x.embed_(uni);
    y.embed_(uni);
    r.syms_ = uni;
    for (const auto& [ka, ca] : x.terms_) {
        for (const auto& [kb, cb] : y.terms_) {
            ExpVec k(uni.size());
            for (std::size_t i = 0; i < k.size(); ++i) k[i] = ka[i] + kb[i];
            Rational c = ca * cb;
            auto [it, inserted] = r.terms_.emplace(std::move(k), std::move(c));
            if (!inserted) {
                it->second += ca * cb;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    }
    r.trim_();
    return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        syms_.clear();
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

Polynomial Polynomial::pow(int exponent) const {
    if (exponent < 0) throw Error("negative exponent in polynomial power");
    Polynomial r(Rational(1));
    for (int i = 0; i < exponent; ++i) r *= *this;
    return r;
}

namespace {
Rational rational_pow(const Rational& base, int e) {
    Rational r(1);
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}
}  // namespace

Rational Polynomial::evaluate(const std::map<std::string, Rational>& assignment) const {
    Rational total(0);
    for (const auto& [k, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < syms_.size(); ++i) {
            if (k[i] == 0) continue;
            auto it = assignment.find(syms_[i]);
            if (it == assignment.end()) throw Error("unassigned symbol '" + syms_[i] + "'");
            term *= rational_pow(it->second, k[i]);
        }
        total += term;
    }
    return total;
}

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial>& repl) const {
    Polynomial total;
    for (const auto& [k, c] : terms_) {
        Polynomial term{c};
        for (std::size_t i = 0; i < syms_.size(); ++i) {
            if (k[i] == 0) continue;
            auto it = repl.find(syms_[i]);
            Polynomial base = it == repl.end() ? symbol(syms_[i]) : it->second;
            term *= base.pow(k[i]);
        }
        total += term;
    }
    return total;
}

Polynomial Polynomial::coeff_of(const std::string& name, int d) const {
    auto it = std::find(syms_.begin(), syms_.end(), name);
    if (it == syms_.end()) return d == 0 ? *this : Polynomial{};
    const std::size_t idx = static_cast<std::size_t>(it - syms_.begin());
    Polynomial r;
    r.syms_ = syms_;
    r.syms_.erase(r.syms_.begin() + static_cast<std::ptrdiff_t>(idx));
    for (const auto& [k, c] : terms_) {
        if (k[idx] != d) continue;
        ExpVec nk;
        nk.reserve(k.size() - 1);
        for (std::size_t i = 0; i < k.size(); ++i)
            if (i != idx) nk.push_back(k[i]);
        r.terms_.emplace(std::move(nk), c);
    }
    r.trim_();
    return r;
}

Polynomial Polynomial::shifted(const std::string& name, int k) const {
    if (k < 0) throw Error("negative shift exponent");
    if (k == 0 || is_zero()) return *this;
    return *this * symbol(name, k);
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Rational& c = it->second;
        std::string mono;
        for (std::size_t i = 0; i < syms_.size(); ++i) {
            if (it->first[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += syms_[i];
            if (it->first[i] != 1) mono += "^" + std::to_string(it->first[i]);
        }
        std::string mag;
        if (mono.empty()) {
            mag = c.abs().str();
        } else if (c.abs().is_one()) {
            mag = mono;
        } else {
            mag = c.abs().str() + "*" + mono;
        }
        if (first) {
            out += (c.sign() < 0 ? "-" : "") + mag;
            first = false;
        } else {
            out += (c.sign() < 0 ? " - " : " + ") + mag;
        }
    }
    return out;
}

Polynomial integer_primitive(const Polynomial& a) {
    if (a.is_zero()) return a;
    BigInt den_lcm = 1;
    for (const auto& [k, c] : a.terms())
        den_lcm = boost::multiprecision::lcm(den_lcm, c.den());
    BigInt num_gcd = 0;
    for (const auto& [k, c] : a.terms())
        num_gcd = boost::multiprecision::gcd(num_gcd, BigInt(c.num() * (den_lcm / c.den())));
    Rational scale{den_lcm, num_gcd};
    Polynomial r = a;
    r *= scale.abs();
    if (r.leading_coefficient().sign() < 0) r = -r;
    return r;
}

namespace {

/// gcd of the coefficients of `a` viewed as a polynomial in `v`.
Polynomial content_wrt(const Polynomial& a, const std::string& v) {
    Polynomial g;
    const int d = a.degree(v);
    for (int k = 0; k <= d; ++k) {
        Polynomial c = a.coeff_of(v, k);
        if (c.is_zero()) continue;
        g = poly_gcd(g, c);
        if (!g.is_zero() && g.is_constant()) return Polynomial(Rational(1));
    }
    return g;
}

/// Pseudo-remainder of a by b with respect to v, normalized to an integer
/// primitive representative after every elimination step. The primitive PRS
/// only needs the remainder up to content, and the in-loop normalization
/// keeps the transient coefficients near their minimum. Requires
/// degree(b, v) >= 1.
Polynomial prem(Polynomial a, const Polynomial& b, const std::string& v) {
    const int db = b.degree(v);
    const Polynomial lb = b.coeff_of(v, db);
    while (!a.is_zero() && a.degree(v) >= db) {
        const int da = a.degree(v);
        const Polynomial la = a.coeff_of(v, da);
        a = integer_primitive(a * lb - la.shifted(v, da - db) * b);
    }
    return a;
}

/// Full primitive part: polynomial content with respect to v and the
/// rational content are both stripped.
Polynomial primitive_wrt(const Polynomial& a, const std::string& v) {
    Polynomial c = content_wrt(a, v);
    return integer_primitive(c.is_constant() ? a : exact_div(a, c));
}

/// Primitive PRS gcd of two polynomials that are primitive with respect to v
/// with degree(pa, v) >= degree(pb, v); returns the gcd of the primitive
/// parts. Stripping the full content after every pseudo-division keeps the
/// remainders as small as they can be.
Polynomial primitive_prs_gcd(Polynomial pa, Polynomial pb, const std::string& v) {
    for (;;) {
        if (pb.degree(v) == 0) return Polynomial(Rational(1));  // coprime
        Polynomial r = prem(pa, pb, v);
        if (r.is_zero()) return pb;
        r = primitive_wrt(r, v);
        pa = std::move(pb);
        pb = std::move(r);
    }
}

/// Minimal exponent of `s` across all terms of an integer-primitive b,
/// clipped by the single term of the monomial m.
Polynomial monomial_gcd(const Polynomial& m, const Polynomial& b) {
    Polynomial r(Rational(1));
    for (const auto& s : m.symbols()) {
        int e = std::min(m.min_degree(s), b.min_degree(s));
        if (e > 0) r *= Polynomial::symbol(s, e);
    }
    return r;
}

/// Dense univariate image of `a` modulo a machine prime; empty when some
/// coefficient denominator or the leading coefficient vanishes mod p.
std::vector<std::uint64_t> modp_image(const Polynomial& a, const std::string& v,
                                      std::uint64_t p) {
    auto mod_of = [&](const BigInt& x) -> std::uint64_t {
        BigInt r = x % static_cast<long long>(p);
        if (r < 0) r += static_cast<long long>(p);
        return r.convert_to<std::uint64_t>();
    };
    auto pow_mod = [&](std::uint64_t base, std::uint64_t e) {
        unsigned __int128 acc = 1;
        unsigned __int128 b = base % p;
        while (e) {
            if (e & 1) acc = acc * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return static_cast<std::uint64_t>(acc);
    };
    const int d = a.degree(v);
    std::vector<std::uint64_t> out(static_cast<std::size_t>(d) + 1, 0);
    for (int k = 0; k <= d; ++k) {
        Rational c = a.coeff_of(v, k).constant_value();
        std::uint64_t den = mod_of(c.den());
        if (den == 0) return {};
        std::uint64_t num = mod_of(c.num() < 0 ? BigInt(-c.num()) : c.num());
        std::uint64_t val =
            static_cast<std::uint64_t>((unsigned __int128)num * pow_mod(den, p - 2) % p);
        out[static_cast<std::size_t>(k)] = c.num() < 0 && val ? p - val : val;
    }
    if (out.back() == 0) return {};  // leading coefficient vanished mod p
    return out;
}

/// Degree of gcd(a, b) mod p in the single variable v, or -1 when the prime
/// is unusable. When both leading coefficients survive mod p this is an
/// upper bound for the true gcd degree, so 0 certifies coprimality.
int modp_gcd_degree(const Polynomial& a, const Polynomial& b, const std::string& v,
                    std::uint64_t p) {
    std::vector<std::uint64_t> x = modp_image(a, v, p);
    std::vector<std::uint64_t> y = modp_image(b, v, p);
    if (x.empty() || y.empty()) return -1;
    auto pow_mod = [&](std::uint64_t base, std::uint64_t e) {
        unsigned __int128 acc = 1;
        unsigned __int128 bb = base % p;
        while (e) {
            if (e & 1) acc = acc * bb % p;
            bb = bb * bb % p;
            e >>= 1;
        }
        return static_cast<std::uint64_t>(acc);
    };
    while (!y.empty()) {
        if (y.size() == 1) return 0;  // nonzero constant remainder
        if (x.size() < y.size()) std::swap(x, y);
        // x mod y in place
        std::uint64_t inv_lead = pow_mod(y.back(), p - 2);
        for (std::size_t shift = x.size() - y.size() + 1; shift-- > 0;) {
            std::uint64_t q =
                static_cast<std::uint64_t>((unsigned __int128)x[shift + y.size() - 1] * inv_lead % p);
            if (q == 0) continue;
            for (std::size_t i = 0; i < y.size(); ++i) {
                unsigned __int128 sub = (unsigned __int128)q * y[i] % p;
                std::uint64_t& slot = x[shift + i];
                slot = slot >= sub ? slot - static_cast<std::uint64_t>(sub)
                                   : slot + p - static_cast<std::uint64_t>(sub);
            }
        }
        while (!x.empty() && x.back() == 0) x.pop_back();
        std::swap(x, y);
    }
    return static_cast<int>(x.size()) - 1;  // y ran to zero, gcd is x
}

constexpr std::uint64_t kGcdPrimes[] = {2147483647ULL, 2147483629ULL, 2147483587ULL};

/// Evaluation-based coprimality proof. Specializing all symbols but `s` at a
/// point that preserves deg_s of both inputs can only enlarge the gcd; if the
/// specialized (univariate) gcd is constant in every direction, the full gcd
/// is constant. Returns true when coprimality was proven.
bool proven_coprime(const Polynomial& a, const Polynomial& b,
                    const std::vector<std::string>& syms) {
    static const int points[3][4] = {{2, 3, 5, 7}, {11, 13, 17, 19}, {23, 29, 31, 37}};
    for (const auto& s : syms) {
        const int da = a.degree(s);
        const int db = b.degree(s);
        if (da == 0 || db == 0) continue;  // the gcd is already free of s
        bool settled = false;
        for (int trial = 0; trial < 3 && !settled; ++trial) {
            std::map<std::string, Polynomial> at;
            int k = 0;
            for (const auto& other : syms)
                if (other != s) at.emplace(other, Polynomial(points[trial][k++ % 4]));
            Polynomial ua = a.substitute(at);
            Polynomial ub = b.substitute(at);
            if (ua.degree(s) != da || ub.degree(s) != db) continue;  // lead vanished
            // a non-constant image may be a spurious hit of the evaluation
            // point, so keep trying other points
            if (poly_gcd(ua, ub).is_constant()) settled = true;
        }
        if (!settled) return false;
    }
    return true;
}

}  // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return integer_primitive(b);
    if (b.is_zero()) return integer_primitive(a);
    Polynomial A = integer_primitive(a);
    Polynomial B = integer_primitive(b);
    if (A.is_constant() || B.is_constant()) return Polynomial(Rational(1));
    if (A == B) return A;
    if (A.terms().size() == 1) return monomial_gcd(A, B);
    if (B.terms().size() == 1) return monomial_gcd(B, A);

    const std::vector<std::string> uni = Polynomial::merged_symbols_(A, B);
    if (uni.size() == 1) {
        // modular coprimality certificate: gcd degree mod p bounds the true
        // gcd degree from above whenever the prime keeps both lead terms
        for (std::uint64_t p : kGcdPrimes) {
            int d = modp_gcd_degree(A, B, uni.front(), p);
            if (d == 0) return Polynomial(Rational(1));
            if (d >= 0) break;
        }
    }
    if (uni.size() >= 2 && proven_coprime(A, B, uni)) return Polynomial(Rational(1));

    const std::string v = uni.front();
    const Polynomial cont_a = content_wrt(A, v);
    const Polynomial cont_b = content_wrt(B, v);
    Polynomial pa = exact_div(A, cont_a);
    Polynomial pb = exact_div(B, cont_b);
    const Polynomial c = poly_gcd(cont_a, cont_b);

    if (pa.degree(v) < pb.degree(v)) std::swap(pa, pb);
    Polynomial pp = primitive_prs_gcd(std::move(pa), std::move(pb), v);
    return integer_primitive(c * pp);
}

Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.is_zero()) return a;
    auto uni = Polynomial::merged_symbols_(a, b);
    Polynomial rem = a;
    Polynomial div = b;
    rem.embed_(uni);
    div.embed_(uni);
    const ExpVec& lead_div = div.terms_.rbegin()->first;
    const Rational& lc_div = div.terms_.rbegin()->second;

    Polynomial q;
    q.syms_ = uni;
    while (!rem.is_zero()) {
        const ExpVec& lead_rem = rem.terms_.rbegin()->first;
        ExpVec qk(uni.size());
        for (std::size_t i = 0; i < uni.size(); ++i) {
            qk[i] = lead_rem[i] - lead_div[i];
            if (qk[i] < 0) throw Error("inexact polynomial division");
        }
        Polynomial qt;
        qt.syms_ = uni;
        qt.terms_.emplace(std::move(qk), rem.terms_.rbegin()->second / lc_div);
        for (const auto& [k, c] : qt.terms_) q.terms_.emplace(k, c);
        rem -= qt * div;
        rem.embed_(uni);
    }
    q.trim_();
    return q;
}

}  // namespace degen

#include "degen/algebra.hpp"

#include <algorithm>

#include "degen/error.hpp"

namespace degen {

Element Element::basis(int dim, int i) {
    Element e(dim);
    e.coords[static_cast<std::size_t>(i - 1)] = RationalFunction(Rational(1));
    return e;
}

bool Element::is_zero() const {
    return std::all_of(coords.begin(), coords.end(),
                       [](const RationalFunction& c) { return c.is_zero(); });
}

Element& Element::operator+=(const Element& o) {
    if (dim() != o.dim()) throw DimensionMismatch("element addition dimension mismatch");
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (!o.coords[i].is_zero()) coords[i] += o.coords[i];
    return *this;
}

Element& Element::operator-=(const Element& o) {
    if (dim() != o.dim()) throw DimensionMismatch("element subtraction dimension mismatch");
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (!o.coords[i].is_zero()) coords[i] -= o.coords[i];
    return *this;
}

Element& Element::operator*=(const RationalFunction& c) {
    for (auto& x : coords) x *= c;
    return *this;
}

std::string Element::str() const {
    std::string out;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        const RationalFunction& c = coords[i];
        if (c.is_zero()) continue;
        std::string basis = "e" + std::to_string(i + 1);
        std::string piece;
        if (c.is_one())
            piece = basis;
        else if ((-c).is_one())
            piece = "-" + basis;
        else
            piece = "(" + c.str() + ")*" + basis;
        if (out.empty()) {
            out = piece;
        } else if (piece[0] == '-') {
            out += " - " + piece.substr(1);
        } else {
            out += " + " + piece;
        }
    }
    return out.empty() ? "0" : out;
}

AlgebraStructure::AlgebraStructure(std::string name, int dim, std::set<std::string> params)
    : name_(std::move(name)), dim_(dim), params_(std::move(params)) {
    if (dim_ <= 0) throw Error("algebra dimension must be positive");
    if (params_.contains("t"))
        throw TSymbolForbidden("parameter list of '" + name_ + "' must not contain t");
}

void AlgebraStructure::set_constant(int i, int j, int k, RationalFunction value) {
    if (i >= j) throw IndexOrderError("structure constant requires i < j");
    if (i < 1 || j > dim_ || k < 1 || k > dim_)
        throw DimensionMismatch("structure constant index out of range");
    if (value.mentions("t"))
        throw TSymbolForbidden("structure constant of '" + name_ + "' mentions t");
    for (const Polynomial* p : {&value.num(), &value.den()})
        for (const auto& s : p->symbols())
            if (!params_.contains(s))
                throw Error("undeclared parameter '" + s + "' in algebra '" + name_ + "'");
    if (value.is_zero())
        constants_.erase({i, j, k});
    else
        constants_.insert_or_assign({i, j, k}, std::move(value));
}

const RationalFunction& AlgebraStructure::constant(int i, int j, int k) const {
    auto it = constants_.find({i, j, k});
    return it == constants_.end() ? zero_ : it->second;
}

Element AlgebraStructure::basis_product(int i, int j) const {
    Element out(dim_);
    if (i == j) return out;
    const bool flip = i > j;
    if (flip) std::swap(i, j);
    for (int k = 1; k <= dim_; ++k) {
        const RationalFunction& c = constant(i, j, k);
        if (c.is_zero()) continue;
        out.coords[static_cast<std::size_t>(k - 1)] = flip ? -c : c;
    }
    return out;
}

AlgebraStructure AlgebraStructure::specialize(
    const std::map<std::string, Rational>& assignment) const {
    std::map<std::string, Polynomial> repl;
    std::set<std::string> remaining = params_;
    for (const auto& [s, v] : assignment) {
        repl.emplace(s, Polynomial(v));
        remaining.erase(s);
    }
    AlgebraStructure out(name_, dim_, remaining);
    for (const auto& [key, c] : constants_)
        out.set_constant(key[0], key[1], key[2], c.substitute(repl));
    return out;
}

AlgebraStructure AlgebraStructure::substitute_params(
    const std::map<std::string, Polynomial>& repl) const {
    std::set<std::string> params = params_;
    for (const auto& [s, p] : repl) {
        if (!params_.contains(s)) continue;
        params.erase(s);
        for (const auto& name : p.symbols()) {
            if (name == "t") throw TSymbolForbidden("parameter substitution introduces t");
            params.insert(name);
        }
    }
    AlgebraStructure out(name_, dim_, params);
    for (const auto& [key, c] : constants_)
        out.set_constant(key[0], key[1], key[2], c.substitute(repl));
    return out;
}

Element product(const AlgebraStructure& A, const Element& x, const Element& y) {
    if (x.dim() != A.dim() || y.dim() != A.dim())
        throw DimensionMismatch("product arguments must match the algebra dimension");
    Element out(A.dim());
    for (const auto& [key, c] : A.constants()) {
        const auto [i, j, k] = key;
        const RationalFunction& xi = x.coords[static_cast<std::size_t>(i - 1)];
        const RationalFunction& xj = x.coords[static_cast<std::size_t>(j - 1)];
        const RationalFunction& yi = y.coords[static_cast<std::size_t>(i - 1)];
        const RationalFunction& yj = y.coords[static_cast<std::size_t>(j - 1)];
        if ((xi.is_zero() || yj.is_zero()) && (xj.is_zero() || yi.is_zero())) continue;
        out.coords[static_cast<std::size_t>(k - 1)] += (xi * yj - xj * yi) * c;
    }
    return out;
}

Element jacobian(const AlgebraStructure& A, const Element& a, const Element& b,
                 const Element& c) {
    Element out = product(A, product(A, a, b), c);
    out += product(A, product(A, b, c), a);
    out += product(A, product(A, c, a), b);
    return out;
}

namespace {

/// Precomputed basis products and basis Jacobians for the tuple scans.
struct ProductTable {
    explicit ProductTable(const AlgebraStructure& A) : algebra(A), n(A.dim()) {
        prod.resize(static_cast<std::size_t>(n) * n, Element(n));
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) at(i, j) = A.basis_product(i, j);
    }

    Element& at(int i, int j) { return prod[static_cast<std::size_t>(i - 1) * n + (j - 1)]; }
    const Element& at(int i, int j) const {
        return prod[static_cast<std::size_t>(i - 1) * n + (j - 1)];
    }

    /// x * e_j using the cached basis products.
    Element mult_basis(const Element& x, int j) const {
        Element out(n);
        for (int i = 1; i <= n; ++i) {
            const RationalFunction& xi = x.coords[static_cast<std::size_t>(i - 1)];
            if (xi.is_zero()) continue;
            Element term = at(i, j);
            term *= xi;
            out += term;
        }
        return out;
    }

    Element mult(const Element& x, const Element& y) const { return product(algebra, x, y); }

    /// J(e_p, e_q, e_r).
    Element basis_jacobian(int p, int q, int r) const {
        Element out = mult_basis(at(p, q), r);
        out += mult_basis(at(q, r), p);
        out += mult_basis(at(r, p), q);
        return out;
    }

    const AlgebraStructure& algebra;
    int n;
    std::vector<Element> prod;
};

/// Residual of the linearized Tortkara identity at (a,b,c,b') = basis tuple:
/// (ab)(cb') + (ab')(cb) - J(a,b,c)b' - J(a,b',c)b.
Element tortkara_residual(const ProductTable& T, int p, int q, int r, int s) {
    Element out = T.mult(T.at(p, q), T.at(r, s));
    out += T.mult(T.at(p, s), T.at(r, q));
    out -= T.mult_basis(T.basis_jacobian(p, q, r), s);
    out -= T.mult_basis(T.basis_jacobian(p, s, r), q);
    return out;
}

/// Residual of the linearized Malcev identity at (x,x',y,z) = basis tuple:
/// (xy)(x'z) + (x'y)(xz) - ((xy)z)x' - ((x'y)z)x - ((yz)x)x' - ((yz)x')x
/// - ((zx)x')y - ((zx')x)y.
Element malcev_residual(const ProductTable& T, int p, int q, int r, int s) {
    Element out = T.mult(T.at(p, r), T.at(q, s));
    out += T.mult(T.at(q, r), T.at(p, s));
    out -= T.mult_basis(T.mult_basis(T.at(p, r), s), q);
    out -= T.mult_basis(T.mult_basis(T.at(q, r), s), p);
    out -= T.mult_basis(T.mult_basis(T.at(r, s), p), q);
    out -= T.mult_basis(T.mult_basis(T.at(r, s), q), p);
    out -= T.mult_basis(T.mult_basis(T.at(s, p), q), r);
    out -= T.mult_basis(T.mult_basis(T.at(s, q), p), r);
    return out;
}

using ResidualFn = Element (*)(const ProductTable&, int, int, int, int);

/// Serial reference: scans basis 4-tuples in lexicographic order and stops at
/// the first failure.
CheckResult scan_tuples_serial(const AlgebraStructure& A, const std::string& identity,
                               ResidualFn fn) {
    ProductTable T(A);
    const int n = A.dim();
    for (int p = 1; p <= n; ++p)
        for (int q = 1; q <= n; ++q)
            for (int r = 1; r <= n; ++r)
                for (int s = 1; s <= n; ++s) {
                    Element res = fn(T, p, q, r, s);
                    if (!res.is_zero())
                        return IdentityWitness{identity, {p, q, r, s}, std::move(res)};
                }
    return std::nullopt;
}

/// OpenMP kernel: evaluates all tuples and reduces to the lexicographically
/// first failure, matching the serial reference exactly.
CheckResult scan_tuples_parallel(const AlgebraStructure& A, const std::string& identity,
                                 ResidualFn fn) {
    ProductTable T(A);
    const int n = A.dim();
    const int total = n * n * n * n;
    long long first_bad = total;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) num_threads(worker_threads()) \
    reduction(min : first_bad)
#endif
    for (int idx = 0; idx < total; ++idx) {
        const int s = idx % n + 1;
        const int r = idx / n % n + 1;
        const int q = idx / (n * n) % n + 1;
        const int p = idx / (n * n * n) + 1;
        if (!fn(T, p, q, r, s).is_zero()) first_bad = std::min<long long>(first_bad, idx);
    }
    if (first_bad == total) return std::nullopt;
    const int idx = static_cast<int>(first_bad);
    const int s = idx % n + 1;
    const int r = idx / n % n + 1;
    const int q = idx / (n * n) % n + 1;
    const int p = idx / (n * n * n) + 1;
    return IdentityWitness{identity, {p, q, r, s}, fn(T, p, q, r, s)};
}

CheckResult scan_tuples(const AlgebraStructure& A, const std::string& identity, ResidualFn fn,
                        Exec exec) {
    return exec == Exec::Parallel ? scan_tuples_parallel(A, identity, fn)
                                  : scan_tuples_serial(A, identity, fn);
}

}  // namespace

CheckResult check_tortkara(const AlgebraStructure& A, Exec exec) {
    return scan_tuples(A, "tortkara", &tortkara_residual, exec);
}

CheckResult check_malcev(const AlgebraStructure& A, Exec exec) {
    return scan_tuples(A, "malcev", &malcev_residual, exec);
}

CheckResult check_jacobi(const AlgebraStructure& A) {
    ProductTable T(A);
    const int n = A.dim();
    for (int p = 1; p <= n; ++p)
        for (int q = p + 1; q <= n; ++q)
            for (int r = q + 1; r <= n; ++r) {
                Element res = T.basis_jacobian(p, q, r);
                if (!res.is_zero()) return IdentityWitness{"jacobi", {p, q, r}, std::move(res)};
            }
    return std::nullopt;
}

CheckResult check_metabelian(const AlgebraStructure& A) {
    ProductTable T(A);
    const int n = A.dim();
    for (int p = 1; p <= n; ++p)
        for (int q = p + 1; q <= n; ++q)
            for (int r = 1; r <= n; ++r)
                for (int s = r + 1; s <= n; ++s) {
                    Element res = T.mult(T.at(p, q), T.at(r, s));
                    if (!res.is_zero())
                        return IdentityWitness{"metabelian", {p, q, r, s}, std::move(res)};
                }
    return std::nullopt;
}

namespace {

/// Independent basis of the span, extracted from the reduced row-echelon
/// rows (same row space over the function field).
std::vector<Element> span_basis(const std::vector<Element>& span, int dim) {
    if (span.empty()) return {};
    Matrix m(static_cast<int>(span.size()), dim);
    for (std::size_t r = 0; r < span.size(); ++r)
        for (int c = 0; c < dim; ++c) m.at(static_cast<int>(r), c) = span[r].coords[c];
    RrefResult red = rref(m);
    std::vector<Element> basis;
    for (int r = 0; r < red.rank; ++r) {
        Element e(dim);
        for (int c = 0; c < dim; ++c) e.coords[static_cast<std::size_t>(c)] = red.mat.at(r, c);
        basis.push_back(std::move(e));
    }
    return basis;
}

}  // namespace

std::vector<int> lcs_dimensions(const AlgebraStructure& A) {
    const int n = A.dim();
    std::vector<std::vector<Element>> powers;  // powers[k-1] is a basis of A^k
    std::vector<int> dims;
    {
        std::vector<Element> base;
        for (int i = 1; i <= n; ++i) base.push_back(Element::basis(n, i));
        powers.push_back(std::move(base));
        dims.push_back(n);
    }
    while (dims.back() > 0) {
        const std::size_t k = powers.size() + 1;  // computing A^k
        std::vector<Element> span;
        for (std::size_t i = 1; i <= k / 2; ++i) {
            const std::size_t j = k - i;
            for (const Element& u : powers[i - 1])
                for (const Element& v : powers[j - 1]) {
                    Element w = product(A, u, v);
                    if (!w.is_zero()) span.push_back(std::move(w));
                }
        }
        std::vector<Element> basis = span_basis(span, n);
        const int d = static_cast<int>(basis.size());
        if (d == dims.back()) break;  // stabilized (non-nilpotent input)
        dims.push_back(d);
        powers.push_back(std::move(basis));
    }
    return dims;
}

int annihilator_dimension(const AlgebraStructure& A) {
    const int n = A.dim();
    Matrix m(n * n, n);
    // row ((j-1)*n + (k-1)): coefficient of e_k in e_i e_j as a function of i
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= n; ++i) {
            Element col = A.basis_product(i, j);
            for (int k = 1; k <= n; ++k)
                m.at((j - 1) * n + (k - 1), i - 1) = col.coords[static_cast<std::size_t>(k - 1)];
        }
    return nullspace_dimension(m);
}

}  // namespace degen

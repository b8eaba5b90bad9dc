#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "degen/exec.hpp"
#include "degen/matrix.hpp"
#include "degen/ratfunc.hpp"

namespace degen {

/// Vector in the ambient space of an algebra, coordinates in the fixed basis.
struct Element {
    std::vector<RationalFunction> coords;

    explicit Element(int dim = 0) : coords(static_cast<std::size_t>(dim)) {}
    static Element basis(int dim, int i);  // e_i, 1-based

    int dim() const { return static_cast<int>(coords.size()); }
    bool is_zero() const;
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element& operator*=(const RationalFunction& c);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    bool operator==(const Element& o) const = default;
    std::string str() const;  // e.g. "e3 - 2*e4"
};

/// Anticommutative algebra given by structure constants c_{i,j}^k for i < j;
/// e_i e_i = 0 and the i > j products are implied. Constants are t-free
/// rational functions in the declared parameter symbols.
class AlgebraStructure {
public:
    AlgebraStructure(std::string name, int dim, std::set<std::string> params = {});

    const std::string& name() const { return name_; }
    int dim() const { return dim_; }
    const std::set<std::string>& params() const { return params_; }

    /// Registers c_{i,j}^k; requires 1 <= i < j <= dim, 1 <= k <= dim, a
    /// t-free value over declared parameters. Replaces any previous value.
    void set_constant(int i, int j, int k, RationalFunction value);

    /// c_{i,j}^k for i < j (zero when absent).
    const RationalFunction& constant(int i, int j, int k) const;
    /// Stored nonzero constants, keyed (i, j, k) with i < j, in lex order.
    const std::map<std::array<int, 3>, RationalFunction>& constants() const { return constants_; }

    /// e_i e_j for arbitrary i, j (sign handled, zero on the diagonal).
    Element basis_product(int i, int j) const;

    /// Parameters evaluated at rational values; throws EvaluationPole when a
    /// constant's denominator vanishes there.
    AlgebraStructure specialize(const std::map<std::string, Rational>& assignment) const;

    /// Parameters replaced by polynomial expressions (e.g. a -> -a-1).
    AlgebraStructure substitute_params(const std::map<std::string, Polynomial>& repl) const;

private:
    std::string name_;
    int dim_;
    std::set<std::string> params_;
    std::map<std::array<int, 3>, RationalFunction> constants_;
    RationalFunction zero_;
};

/// Bilinear antisymmetric product of two elements.
Element product(const AlgebraStructure& A, const Element& x, const Element& y);

/// J(a, b, c) = (ab)c + (bc)a + (ca)b.
Element jacobian(const AlgebraStructure& A, const Element& a, const Element& b, const Element& c);

/// Failure certificate for an identity check: the basis tuple that broke the
/// identity and the nonzero residual it produced.
struct IdentityWitness {
    std::string identity;
    std::vector<int> indices;  // 1-based basis indices
    Element residual;
};

/// Empty result means the identity holds.
using CheckResult = std::optional<IdentityWitness>;

/// (ab)(cb) = J(a,b,c)b, verified through its full linearization in b over
/// all basis 4-tuples; equivalent over characteristic 0. The witness is the
/// lexicographically first failing tuple (a, b, c, b').
CheckResult check_tortkara(const AlgebraStructure& A, Exec exec = Exec::Serial);

/// Malcev identity (xy)(xz) = ((xy)z)x + ((yz)x)x + ((zx)x)y, via the full
/// linearization in x over all basis 4-tuples (x, x', y, z).
CheckResult check_malcev(const AlgebraStructure& A, Exec exec = Exec::Serial);

/// Jacobi identity J = 0 on basis triples p < q < r.
CheckResult check_jacobi(const AlgebraStructure& A);

/// Metabelian identity (xy)(zt) = 0 on basis pairs (p < q) x (r < s).
CheckResult check_metabelian(const AlgebraStructure& A);

/// Dimensions of the lower central series A^1 = A, A^k = sum of A^i A^j over
/// i + j = k, computed at generic parameters, until 0 or stabilization.
std::vector<int> lcs_dimensions(const AlgebraStructure& A);

/// Dimension of { x : x e_j = 0 for all j } at generic parameters.
int annihilator_dimension(const AlgebraStructure& A);

}  // namespace degen

#include "degen/degeneration.hpp"

#include "degen/catalog.hpp"
#include "degen/derivations.hpp"
#include "degen/error.hpp"

namespace degen {

TransformResult transformed_constants_traced(const AlgebraStructure& A, const BasisFamily& F,
                                             Exec exec) {
    const int n = A.dim();
    if (F.dim != n || F.entries.rows() != n || F.entries.cols() != n)
        throw DimensionMismatch("basis family does not match the algebra dimension");
    if (determinant(F.entries, exec).is_zero())
        throw SingularFamily("basis family determinant is the zero function");

    // products E_i^t E_j^t in e-coordinates, one column per pair (i < j)
    const int pairs = n * (n - 1) / 2;
    Matrix rhs(n, pairs);
    std::vector<Element> rows;
    rows.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Element e(n);
        for (int c = 0; c < n; ++c) e.coords[static_cast<std::size_t>(c)] = F.entries.at(i, c);
        rows.push_back(std::move(e));
    }
    {
        int p = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++p) {
                Element v = product(A, rows[static_cast<std::size_t>(i)],
                                    rows[static_cast<std::size_t>(j)]);
                for (int k = 0; k < n; ++k) rhs.at(k, p) = v.coords[static_cast<std::size_t>(k)];
            }
    }

    // coordinates in the E-basis: solve entries^T x = v for all pairs at once
    SolveResult sol = solve(F.entries.transpose(), rhs, exec);
    if (!sol.solution.has_value())
        throw SingularFamily("basis family rows are dependent");  // unreachable when det != 0

    TransformResult out;
    out.pivots = std::move(sol.pivot_values);
    int p = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j, ++p)
            for (int k = 1; k <= n; ++k)
                out.constants.emplace(std::array<int, 3>{i, j, k}, sol.solution->at(k - 1, p));
    return out;
}

TransformedConstants transformed_constants(const AlgebraStructure& A, const BasisFamily& F,
                                           Exec exec) {
    return transformed_constants_traced(A, F, exec).constants;
}

namespace {

/// det is u * t^k with u free of t exactly when numerator and denominator
/// each live in a single t-degree.
DetClass classify_det(const RationalFunction& det) {
    const bool mono = det.num().min_degree("t") == det.num().degree("t") &&
                      det.den().min_degree("t") == det.den().degree("t");
    return mono ? DetClass::MonomialInT : DetClass::NonMonomialNonzero;
}

}  // namespace

VerificationReport verify_certificate(const DegenerationCertificate& cert, const Catalog& catalog,
                                      Exec exec) {
    const AlgebraStructure& src = catalog.algebra(cert.source);
    const AlgebraStructure& tgt = catalog.algebra(cert.target);
    if (src.dim() != tgt.dim() || src.dim() != cert.family.dim)
        throw DimensionMismatch("certificate " + cert.id() + " has mismatched dimensions");

    VerificationReport rep;
    rep.certificate = cert.id();
    rep.source = cert.source;
    rep.target = cert.target;
    for (const RationalFunction& e : cert.family.domain) rep.exclusions.push_back(e.str());

    RationalFunction det = determinant(cert.family.entries, exec);
    if (det.is_zero()) throw SingularFamily("certificate " + cert.id() + " has det = 0");
    rep.det = det.str();
    rep.det_class = classify_det(det);

    TransformResult tr = transformed_constants_traced(src, cert.family, exec);
    for (const Polynomial& p : collect_assumed_nonzero(tr.pivots))
        rep.assumed_nonzero.push_back(p.str());

    for (const auto& [key, value] : tr.constants) {
        const auto [i, j, k] = key;
        LimitResult lim = limit_t0(value);
        const RationalFunction& expected = tgt.constant(i, j, k);
        if (!lim.has_value()) {
            rep.discrepancies.push_back({i, j, k,
                                         "pole (t-order " + std::to_string(lim.order.value) + ")",
                                         expected.str()});
            continue;
        }
        if (!(*lim.value == expected))
            rep.discrepancies.push_back({i, j, k, lim.value->str(), expected.str()});
    }

    rep.derdim.proper = cert.source != cert.target;
    rep.derdim.source_dim = derivation_dimension(src, exec).dim;
    rep.derdim.target_dim = derivation_dimension(tgt, exec).dim;
    rep.derdim.strict = rep.derdim.source_dim < rep.derdim.target_dim;

    rep.verified = rep.discrepancies.empty();
    return rep;
}

std::vector<VerificationReport> verify_all(const Catalog& catalog, Exec exec) {
    const int count = static_cast<int>(catalog.certificates.size());
    std::vector<VerificationReport> reports(static_cast<std::size_t>(count));
    (void)exec;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(worker_threads()) \
    if (exec == Exec::Parallel)
#endif
    for (int i = 0; i < count; ++i) {
        reports[static_cast<std::size_t>(i)] =
            verify_certificate(catalog.certificates[static_cast<std::size_t>(i)], catalog,
                               Exec::Serial);
        reports[static_cast<std::size_t>(i)].index = i;
    }
    return reports;
}

}  // namespace degen

#include "degen/report_json.hpp"

#include "degen/error.hpp"
#include "degen/expr.hpp"

namespace degen {

namespace {

std::string det_class_name(DetClass c) {
    return c == DetClass::MonomialInT ? "monomial_in_t" : "nonzero_nonmonomial";
}

DetClass det_class_from(const std::string& s) {
    if (s == "monomial_in_t") return DetClass::MonomialInT;
    if (s == "nonzero_nonmonomial") return DetClass::NonMonomialNonzero;
    throw Error("unknown det classification '" + s + "'");
}

}  // namespace

Json report_to_json(const VerificationReport& rep) {
    Json j;
    j["certificate"] = rep.certificate;
    j["index"] = rep.index;
    j["source"] = rep.source;
    j["target"] = rep.target;
    j["verified"] = rep.verified;
    j["det"] = rep.det;
    j["det_class"] = det_class_name(rep.det_class);
    j["exclusions"] = rep.exclusions;
    j["assumed_nonzero"] = rep.assumed_nonzero;
    Json ds = Json::array();
    for (const auto& d : rep.discrepancies) {
        Json dj;
        dj["i"] = d.i;
        dj["j"] = d.j;
        dj["k"] = d.k;
        dj["computed"] = d.computed;
        dj["expected"] = d.expected;
        ds.push_back(std::move(dj));
    }
    j["discrepancies"] = std::move(ds);
    j["derdim"] = Json{{"source", rep.derdim.source_dim},
                       {"target", rep.derdim.target_dim},
                       {"strict", rep.derdim.strict},
                       {"proper", rep.derdim.proper}};
    return j;
}

VerificationReport report_from_json(const Json& j) {
    VerificationReport rep;
    rep.certificate = j.at("certificate").get<std::string>();
    rep.index = j.at("index").get<int>();
    rep.source = j.at("source").get<std::string>();
    rep.target = j.at("target").get<std::string>();
    rep.verified = j.at("verified").get<bool>();
    rep.det = j.at("det").get<std::string>();
    rep.det_class = det_class_from(j.at("det_class").get<std::string>());
    rep.exclusions = j.at("exclusions").get<std::vector<std::string>>();
    rep.assumed_nonzero = j.at("assumed_nonzero").get<std::vector<std::string>>();
    for (const auto& dj : j.at("discrepancies")) {
        Discrepancy d;
        d.i = dj.at("i").get<int>();
        d.j = dj.at("j").get<int>();
        d.k = dj.at("k").get<int>();
        d.computed = dj.at("computed").get<std::string>();
        d.expected = dj.at("expected").get<std::string>();
        rep.discrepancies.push_back(std::move(d));
    }
    const Json& dd = j.at("derdim");
    rep.derdim.source_dim = dd.at("source").get<int>();
    rep.derdim.target_dim = dd.at("target").get<int>();
    rep.derdim.strict = dd.at("strict").get<bool>();
    rep.derdim.proper = dd.at("proper").get<bool>();
    return rep;
}

Json witness_to_json(const IdentityWitness& w) {
    Json j;
    j["identity"] = w.identity;
    j["indices"] = w.indices;
    j["dim"] = w.residual.dim();
    j["residual"] = w.residual.str();
    return j;
}

IdentityWitness witness_from_json(const Json& j) {
    IdentityWitness w;
    w.identity = j.at("identity").get<std::string>();
    w.indices = j.at("indices").get<std::vector<int>>();
    const int dim = j.at("dim").get<int>();
    // the residual rendering is a linear combination of e1..en; substituting
    // unit vectors through the expression parser recovers each coordinate
    RationalFunction rf = parse_expression(j.at("residual").get<std::string>());
    Element e(dim);
    for (int k = 1; k <= dim; ++k) {
        std::map<std::string, Polynomial> pick;
        for (int m = 1; m <= dim; ++m)
            pick.emplace("e" + std::to_string(m),
                         m == k ? Polynomial(Rational(1)) : Polynomial{});
        e.coords[static_cast<std::size_t>(k - 1)] = rf.substitute(pick);
    }
    w.residual = std::move(e);
    return w;
}

}  // namespace degen

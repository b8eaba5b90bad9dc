#include "degen/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <ostream>
#include <sstream>

#include "degen/catalog.hpp"
#include "degen/derivations.hpp"
#include "degen/error.hpp"
#include "degen/report_json.hpp"

namespace degen {

namespace {

constexpr int kSchemaVersion = 1;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw Error("cannot read file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Splits a file into blocks starting at lines whose first token is
/// `algebra` or `degeneration`; parses algebras first, then certificates.
void load_into(const std::string& text, Catalog& work) {
    std::vector<std::string> blocks;
    std::istringstream in(text);
    std::string line;
    std::string cur;
    auto starts_block = [](const std::string& l) {
        std::istringstream t(l);
        std::string first;
        t >> first;
        return first == "algebra" || first == "degeneration";
    };
    while (std::getline(in, line)) {
        if (starts_block(line) && !cur.empty()) {
            blocks.push_back(cur);
            cur.clear();
        }
        cur += line + "\n";
    }
    if (!cur.empty()) blocks.push_back(cur);

    std::vector<std::string> cert_blocks;
    for (const auto& b : blocks) {
        std::istringstream t(b);
        std::string first;
        t >> first;
        if (first == "algebra")
            work.add_algebra(parse_algebra(b));
        else if (first == "degeneration")
            cert_blocks.push_back(b);
        // anything else: comments / blank prologue, ignore
    }
    for (const auto& b : cert_blocks) work.certificates.push_back(parse_certificate(b, work));
}

std::map<std::string, Rational> parse_params(const std::vector<std::string>& raw) {
    std::map<std::string, Rational> out;
    for (const auto& s : raw) {
        std::size_t eq = s.find('=');
        if (eq == std::string::npos || eq == 0)
            throw Error("--param expects <symbol>=<rational>, got '" + s + "'");
        out.insert_or_assign(s.substr(0, eq), Rational::parse(s.substr(eq + 1)));
    }
    return out;
}

std::map<std::string, Polynomial> as_polynomials(const std::map<std::string, Rational>& params) {
    std::map<std::string, Polynomial> repl;
    for (const auto& [s, v] : params) repl.emplace(s, Polynomial(v));
    return repl;
}

// ---------------------------------------------------------------- list ----

int cmd_list(const Catalog& cat, const RunConfig& cfg, std::ostream& out) {
    if (cfg.json) {
        Json j;
        j["schema"] = kSchemaVersion;
        j["command"] = "list";
        Json algs = Json::array();
        for (const auto& [name, a] : cat.algebras) {
            Json ja;
            ja["name"] = name;
            ja["dim"] = a.dim();
            ja["params"] = a.params();
            Json prods = Json::array();
            std::set<std::pair<int, int>> pairs;
            for (const auto& [key, c] : a.constants()) pairs.emplace(key[0], key[1]);
            for (const auto& [i, j2] : pairs) {
                std::vector<RationalFunction> coeffs;
                for (int k = 1; k <= a.dim(); ++k) coeffs.push_back(a.constant(i, j2, k));
                Element e(a.dim());
                e.coords = coeffs;
                prods.push_back("e" + std::to_string(i) + "*e" + std::to_string(j2) + " = " +
                                e.str());
            }
            ja["products"] = std::move(prods);
            algs.push_back(std::move(ja));
        }
        j["algebras"] = std::move(algs);
        Json certs = Json::array();
        for (std::size_t i = 0; i < cat.certificates.size(); ++i) {
            const auto& c = cat.certificates[i];
            Json jc;
            jc["index"] = i;
            jc["id"] = c.id();
            jc["source"] = c.source;
            jc["target"] = c.target;
            std::vector<std::string> excl;
            for (const auto& e : c.family.domain) excl.push_back(e.str());
            jc["exclusions"] = std::move(excl);
            certs.push_back(std::move(jc));
        }
        j["certificates"] = std::move(certs);
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "algebras (" << cat.algebras.size() << "):\n";
    for (const auto& [name, a] : cat.algebras) {
        out << "  " << name << "  dim " << a.dim();
        if (!a.params().empty()) {
            out << "  params";
            for (const auto& p : a.params()) out << " " << p;
        }
        out << "  (" << a.constants().size() << " nonzero constants)\n";
    }
    out << "certificates (" << cat.certificates.size() << "):\n";
    for (std::size_t i = 0; i < cat.certificates.size(); ++i) {
        const auto& c = cat.certificates[i];
        out << "  " << i << ": " << c.id();
        for (const auto& e : c.family.domain) out << "  [" << e.str() << " != 0]";
        out << "\n";
    }
    return 0;
}

// ---------------------------------------------------------- identities ----

int cmd_identities(const Catalog& cat, const RunConfig& cfg, std::ostream& out,
                   std::ostream& err) {
    std::vector<std::string> checks =
        cfg.checks.empty() ? std::vector<std::string>{"tortkara", "malcev", "jacobi", "metabelian"}
                           : cfg.checks;
    for (const auto& c : checks)
        if (c != "tortkara" && c != "malcev" && c != "jacobi" && c != "metabelian") {
            err << "unknown identity check '" << c << "'\n";
            return 2;
        }

    std::vector<std::string> targets = cfg.targets;
    if (targets.empty())
        for (const auto& [name, a] : cat.algebras) targets.push_back(name);

    bool all_pass = true;
    Json results = Json::array();
    for (const auto& name : targets) {
        AlgebraStructure A = cat.algebra(name);
        if (!cfg.params.empty()) A = A.specialize(cfg.params);
        Json jr;
        jr["algebra"] = name;
        std::string line = name + ":";
        Json jchecks;
        for (const auto& c : checks) {
            CheckResult r = c == "tortkara"     ? check_tortkara(A)
                            : c == "malcev"     ? check_malcev(A)
                            : c == "jacobi"     ? check_jacobi(A)
                                                : check_metabelian(A);
            line += " " + c + ": " + (r ? "fail" : "pass");
            if (r) {
                all_pass = false;
                Json jc;
                jc["status"] = "fail";
                jc["witness"] = witness_to_json(*r);
                jchecks[c] = std::move(jc);
                line += " (witness at (";
                for (std::size_t ix = 0; ix < r->indices.size(); ++ix)
                    line += (ix ? "," : "") + std::to_string(r->indices[ix]);
                line += "): " + r->residual.str() + ")";
            } else {
                jchecks[c] = Json{{"status", "pass"}};
            }
            if (&c != &checks.back()) line += ",";
        }
        jr["checks"] = std::move(jchecks);
        results.push_back(std::move(jr));
        if (!cfg.json) out << line << "\n";
    }
    if (cfg.json) {
        Json j;
        j["schema"] = kSchemaVersion;
        j["command"] = "identities";
        j["results"] = std::move(results);
        j["all_passed"] = all_pass;
        out << j.dump(2) << "\n";
    }
    return all_pass ? 0 : 1;
}

// -------------------------------------------------------------- derdim ----

int cmd_derdim(const Catalog& cat, const RunConfig& cfg, std::ostream& out) {
    std::vector<std::string> targets = cfg.targets;
    if (targets.empty())
        for (const auto& [name, a] : cat.algebras) targets.push_back(name);

    Json results = Json::array();
    for (const auto& name : targets) {
        const AlgebraStructure& A = cat.algebra(name);
        Json jr;
        jr["algebra"] = name;
        if (!cfg.params.empty()) {
            int dim = derivation_dimension_at(A, cfg.params);
            jr["dim"] = dim;
            Json at;
            for (const auto& [s, v] : cfg.params)
                if (A.params().contains(s)) at[s] = v.str();
            jr["at"] = std::move(at);
            jr["derived"] = true;
            if (!cfg.json) {
                out << "dim Der(" << name;
                for (const auto& [s, v] : cfg.params)
                    if (A.params().contains(s)) out << ", " << s << " = " << v.str();
                out << ") = " << dim << " [computed]\n";
            }
        } else {
            DerivationDimension d = derivation_dimension(A);
            jr["dim"] = d.dim;
            std::vector<std::string> assumed;
            for (const auto& p : d.assumed_nonzero) assumed.push_back(p.str());
            jr["assumed_nonzero"] = assumed;
            auto known = cat.known_derivation_dims.find(name);
            if (known != cat.known_derivation_dims.end())
                jr["reference"] = known->second;
            else
                jr["derived"] = true;
            if (!cfg.json) {
                out << "dim Der(" << name << ") = " << d.dim;
                if (!assumed.empty()) {
                    out << " (generic; assumed nonzero: ";
                    for (std::size_t i = 0; i < assumed.size(); ++i)
                        out << (i ? ", " : "") << assumed[i];
                    out << ")";
                }
                if (known != cat.known_derivation_dims.end())
                    out << " [reference " << known->second << "]";
                else
                    out << " [computed]";
                out << "\n";
            }
        }
        results.push_back(std::move(jr));
    }
    if (cfg.json) {
        Json j;
        j["schema"] = kSchemaVersion;
        j["command"] = "derdim";
        j["results"] = std::move(results);
        out << j.dump(2) << "\n";
    }
    return 0;
}

// ---------------------------------------------------------- invariants ----

int cmd_invariants(const Catalog& cat, const RunConfig& cfg, std::ostream& out) {
    std::vector<std::string> targets = cfg.targets;
    if (targets.empty())
        for (const auto& [name, a] : cat.algebras) targets.push_back(name);

    Json results = Json::array();
    for (const auto& name : targets) {
        AlgebraStructure A = cat.algebra(name);
        if (!cfg.params.empty()) A = A.specialize(cfg.params);
        std::vector<int> lcs = lcs_dimensions(A);
        int ann = annihilator_dimension(A);
        int der = derivation_dimension(A).dim;
        Json jr;
        jr["algebra"] = name;
        jr["lcs"] = lcs;
        jr["annihilator"] = ann;
        jr["derivation_dim"] = der;
        jr["nilpotent"] = lcs.back() == 0;
        results.push_back(std::move(jr));
        if (!cfg.json) {
            out << name << ": lcs [";
            for (std::size_t i = 0; i < lcs.size(); ++i) out << (i ? " " : "") << lcs[i];
            out << "] annihilator " << ann << " dim Der " << der << "\n";
        }
    }
    if (cfg.json) {
        Json j;
        j["schema"] = kSchemaVersion;
        j["command"] = "invariants";
        j["results"] = std::move(results);
        out << j.dump(2) << "\n";
    }
    return 0;
}

// -------------------------------------------------------------- verify ----

void render_report_text(const VerificationReport& r, std::ostream& out) {
    out << r.certificate << ": " << (r.verified ? "Verified" : "FAILED");
    out << "  det " << r.det
        << (r.det_class == DetClass::MonomialInT ? " [monomial in t]" : " [nonzero, not a t-monomial]");
    out << "  dim Der " << r.derdim.source_dim << " -> " << r.derdim.target_dim;
    if (r.derdim.proper) out << (r.derdim.strict ? " (strict)" : " (NOT strict)");
    for (const auto& e : r.exclusions) out << "  [" << e << " != 0]";
    out << "\n";
    for (const auto& d : r.discrepancies)
        out << "    c(" << d.i << "," << d.j << "," << d.k << "): computed " << d.computed
            << ", expected " << d.expected << "\n";
}

Json verify_json(const std::vector<VerificationReport>& reports, const std::string& command) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["command"] = command;
    Json rs = Json::array();
    int ok = 0;
    for (const auto& r : reports) {
        rs.push_back(report_to_json(r));
        if (r.verified) ++ok;
    }
    j["reports"] = std::move(rs);
    j["summary"] = Json{{"total", reports.size()},
                        {"verified", ok},
                        {"failed", reports.size() - static_cast<std::size_t>(ok)}};
    return j;
}

/// Specializes one certificate at the given parameter values after checking
/// the declared exclusions; returns the report of the specialized run.
VerificationReport verify_specialized(const DegenerationCertificate& cert, const Catalog& cat,
                                      const std::map<std::string, Rational>& params, Exec exec) {
    for (const RationalFunction& excl : cert.family.domain) {
        bool covered = true;
        for (const Polynomial* p : {&excl.num(), &excl.den()})
            for (const auto& s : p->symbols())
                if (!params.contains(s)) covered = false;
        if (covered && excl.evaluate(params).is_zero())
            throw Error("parameter binding violates exclusion '" + excl.str() +
                        " != 0' of certificate " + cert.id());
    }
    Catalog work;
    work.add_algebra(cat.algebra(cert.source).specialize(params));
    if (cert.target != cert.source) work.add_algebra(cat.algebra(cert.target).specialize(params));

    DegenerationCertificate spec = cert;
    const auto repl = as_polynomials(params);
    for (int r = 0; r < spec.family.dim; ++r)
        for (int c = 0; c < spec.family.dim; ++c)
            spec.family.entries.at(r, c) = spec.family.entries.at(r, c).substitute(repl);
    std::vector<RationalFunction> remaining;
    for (const auto& excl : spec.family.domain) {
        RationalFunction image = excl.substitute(repl);
        if (!image.is_constant()) remaining.push_back(image);
    }
    spec.family.domain = std::move(remaining);
    return verify_certificate(spec, work, exec);
}

int cmd_verify(const Catalog& cat, const RunConfig& cfg, std::ostream& out, bool all_builtin) {
    std::vector<DegenerationCertificate> selected;
    if (all_builtin || cfg.targets.empty()) {
        selected = cat.certificates;
    } else {
        for (const auto& id : cfg.targets) {
            bool found = false;
            for (const auto& c : cat.certificates)
                if (c.id() == id) {
                    selected.push_back(c);
                    found = true;
                }
            if (!found) throw Error("no certificate '" + id + "' (use <source>-><target>)");
        }
    }

    std::vector<VerificationReport> reports;
    if (all_builtin && cfg.params.empty()) {
        reports = verify_all(cat, Exec::Parallel);
    } else {
        for (std::size_t i = 0; i < selected.size(); ++i) {
            VerificationReport r = cfg.params.empty()
                                       ? verify_certificate(selected[i], cat)
                                       : verify_specialized(selected[i], cat, cfg.params,
                                                            Exec::Serial);
            r.index = static_cast<int>(i);
            reports.push_back(std::move(r));
        }
    }

    bool all_ok = true;
    for (const auto& r : reports) all_ok = all_ok && r.verified;
    if (cfg.json) {
        out << verify_json(reports, all_builtin ? "verify-all" : "verify").dump(2) << "\n";
    } else {
        for (const auto& r : reports) render_report_text(r, out);
        int ok = 0;
        for (const auto& r : reports)
            if (r.verified) ++ok;
        out << ok << "/" << reports.size() << " verified\n";
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact structure-constant algebra checks: polynomial identities, derivation\n"
                 "dimensions and degeneration certificates for the built-in catalog"};
    app.name("degencheck");

    RunConfig cfg;
    std::vector<std::string> raw_params;

    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--json", cfg.json, "machine-readable output (schema 1)");
        sub->add_option("--param", raw_params, "parameter binding <symbol>=<rational>");
        sub->add_option("--file", cfg.files, "load algebras/certificates from a file");
    };

    CLI::App* list = app.add_subcommand("list", "list the catalog contents");
    add_common(list);

    CLI::App* ident = app.add_subcommand("identities", "run polynomial-identity checks");
    ident->add_option("targets", cfg.targets, "algebra names (default: all)");
    ident->add_option("--check", cfg.checks, "subset of tortkara,malcev,jacobi,metabelian")
        ->delimiter(',');
    add_common(ident);

    CLI::App* derdim = app.add_subcommand("derdim", "derivation-algebra dimensions");
    derdim->add_option("targets", cfg.targets, "algebra names (default: all)");
    add_common(derdim);

    CLI::App* invar = app.add_subcommand("invariants", "lower central series, annihilator, dim Der");
    invar->add_option("targets", cfg.targets, "algebra names (default: all)");
    add_common(invar);

    CLI::App* verify = app.add_subcommand("verify", "verify degeneration certificates");
    verify->add_option("targets", cfg.targets, "certificate ids <source>-><target> (default: all)");
    add_common(verify);

    CLI::App* verify_all_cmd = app.add_subcommand("verify-all", "verify the whole built-in table");
    add_common(verify_all_cmd);

    app.require_subcommand(1);

    std::vector<const char*> argv;
    argv.push_back("degencheck");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        cfg.params = parse_params(raw_params);

        Catalog work = builtin_catalog();
        for (const auto& f : cfg.files) load_into(read_file(f), work);

        if (list->parsed()) return cmd_list(work, cfg, out);
        if (ident->parsed()) {
            cfg.command = RunConfig::Command::Identities;
            return cmd_identities(work, cfg, out, err);
        }
        if (derdim->parsed()) {
            cfg.command = RunConfig::Command::DerDim;
            return cmd_derdim(work, cfg, out);
        }
        if (invar->parsed()) {
            cfg.command = RunConfig::Command::Invariants;
            return cmd_invariants(work, cfg, out);
        }
        if (verify->parsed()) {
            cfg.command = RunConfig::Command::Verify;
            return cmd_verify(work, cfg, out, false);
        }
        cfg.command = RunConfig::Command::VerifyAll;
        return cmd_verify(work, cfg, out, true);
    } catch (const SyntaxError& e) {
        err << "syntax error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace degen

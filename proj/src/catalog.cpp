#include "degen/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "degen/error.hpp"
#include "degen/expr.hpp"

namespace degen {

const AlgebraStructure& Catalog::algebra(const std::string& name) const {
    auto it = algebras.find(name);
    if (it == algebras.end()) throw UnknownAlgebra("unknown algebra '" + name + "'");
    return it->second;
}

void Catalog::add_algebra(AlgebraStructure a) {
    std::string name = a.name();
    if (!algebras.emplace(name, std::move(a)).second)
        throw Error("duplicate algebra name '" + name + "'");
}

namespace {

struct Statement {
    int line = 1;
    std::string text;
};

/// Splits into statements at newlines and at '/' separators (paren depth 0,
/// whitespace on both sides — division never carries surrounding spaces in
/// this format). '#' starts a comment.
std::vector<Statement> split_statements(const std::string& text) {
    std::vector<Statement> out;
    std::string cur;
    int line = 1;
    int start_line = 1;
    int depth = 0;
    bool comment = false;
    auto flush = [&]() {
        std::size_t a = cur.find_first_not_of(" \t\r");
        std::size_t b = cur.find_last_not_of(" \t\r");
        if (a != std::string::npos) out.push_back({start_line, cur.substr(a, b - a + 1)});
        cur.clear();
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '\n') {
            flush();
            comment = false;
            ++line;
            start_line = line;
            depth = 0;
            continue;
        }
        if (comment) continue;
        if (c == '#') {
            comment = true;
            continue;
        }
        if (c == '(') ++depth;
        if (c == ')') --depth;
        const bool spaced_slash =
            c == '/' && depth == 0 && i > 0 && (text[i - 1] == ' ' || text[i - 1] == '\t') &&
            i + 1 < text.size() && (text[i + 1] == ' ' || text[i + 1] == '\t');
        if (spaced_slash) {
            flush();
            start_line = line;
            continue;
        }
        if (cur.empty() && std::isspace(static_cast<unsigned char>(c))) {
            start_line = line;
            continue;
        }
        cur += c;
    }
    flush();
    return out;
}

std::vector<std::string> whitespace_tokens(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

/// e<digits> -> index, 0 otherwise.
int basis_index(const std::string& name) {
    if (name.size() < 2 || name[0] != 'e') return 0;
    int v = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) return 0;
        v = v * 10 + (name[i] - '0');
        if (v > 1000) return -1;
    }
    return v == 0 ? -1 : v;
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

/// Interprets an expression over e1..en as a linear combination of the basis
/// vectors; coefficients may involve the remaining symbols.
std::vector<RationalFunction> to_basis_combination(const RationalFunction& rf, int n, int line) {
    for (const auto& s : rf.den().symbols())
        if (basis_index(s) != 0)
            throw SyntaxError("basis vector '" + s + "' in a denominator", line, 1);

    std::vector<Polynomial> nums(static_cast<std::size_t>(n));
    const Polynomial& num = rf.num();
    const auto& syms = num.symbols();
    for (const auto& [exps, coeff] : num.terms()) {
        int which = -1;
        int count = 0;
        for (std::size_t idx = 0; idx < syms.size(); ++idx) {
            if (basis_index(syms[idx]) == 0 || exps[idx] == 0) continue;
            count += exps[idx];
            which = static_cast<int>(idx);
        }
        if (count != 1)
            throw SyntaxError("expression is not linear in the basis vectors", line, 1);
        const int k = basis_index(syms[static_cast<std::size_t>(which)]);
        if (k < 1 || k > n)
            throw SyntaxError("basis vector e" + std::to_string(k) + " out of range (dim " +
                                  std::to_string(n) + ")",
                              line, 1);
        Polynomial mono{coeff};
        for (std::size_t idx = 0; idx < syms.size(); ++idx)
            if (static_cast<int>(idx) != which && exps[idx] > 0)
                mono *= Polynomial::symbol(syms[idx], exps[idx]);
        nums[static_cast<std::size_t>(k - 1)] += mono;
    }
    std::vector<RationalFunction> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        out.emplace_back(nums[static_cast<std::size_t>(k)], rf.den());
    return out;
}

RationalFunction parse_expr_at(const std::string& text, int line) {
    try {
        return parse_expression(text);
    } catch (const SyntaxError& e) {
        throw SyntaxError(e.raw(), line + e.line() - 1, e.col());
    }
}

bool valid_symbol_name(const std::string& s) {
    if (s.empty() || (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')) return false;
    return std::all_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '_';
    });
}

}  // namespace

AlgebraStructure parse_algebra(const std::string& text) {
    std::vector<Statement> stmts = split_statements(text);
    if (stmts.empty()) throw SyntaxError("empty algebra definition", 1, 1);

    // header: algebra <name> dim <n> [params <sym>{,<sym>}]
    const Statement& head = stmts.front();
    std::vector<std::string> toks = whitespace_tokens(head.text);
    if (toks.size() < 4 || toks[0] != "algebra" || toks[2] != "dim")
        throw SyntaxError("expected 'algebra <name> dim <n>'", head.line, 1);
    const std::string name = toks[1];
    int dim = 0;
    try {
        dim = std::stoi(toks[3]);
    } catch (...) {
        throw SyntaxError("invalid dimension '" + toks[3] + "'", head.line, 1);
    }
    if (dim <= 0 || dim > 100) throw SyntaxError("dimension out of range", head.line, 1);

    std::set<std::string> params;
    if (toks.size() > 4) {
        if (toks[4] != "params")
            throw SyntaxError("unexpected token '" + toks[4] + "' in header", head.line, 1);
        std::string rest;
        for (std::size_t i = 5; i < toks.size(); ++i) rest += toks[i];
        std::stringstream ss(rest);
        std::string sym;
        while (std::getline(ss, sym, ',')) {
            sym = trim(sym);
            if (!valid_symbol_name(sym) || sym == "t" || basis_index(sym) != 0)
                throw SyntaxError("invalid parameter name '" + sym + "'", head.line, 1);
            params.insert(sym);
        }
    }

    AlgebraStructure out(name, dim, params);
    std::set<std::pair<int, int>> seen;
    for (std::size_t s = 1; s < stmts.size(); ++s) {
        const Statement& st = stmts[s];
        std::size_t eq = st.text.find('=');
        if (eq == std::string::npos)
            throw SyntaxError("expected 'e<i>*e<j> = <expression>'", st.line, 1);
        std::string lhs = trim(st.text.substr(0, eq));
        std::size_t star = lhs.find('*');
        if (star == std::string::npos)
            throw SyntaxError("product left-hand side needs '*'", st.line, 1);
        const int i = basis_index(trim(lhs.substr(0, star)));
        const int j = basis_index(trim(lhs.substr(star + 1)));
        if (i <= 0 || j <= 0)
            throw SyntaxError("left-hand side must be e<i>*e<j>", st.line, 1);
        if (i > dim || j > dim)
            throw SyntaxError("basis index out of range on the left-hand side", st.line, 1);
        if (i >= j)
            throw IndexOrderError("product e" + std::to_string(i) + "*e" + std::to_string(j) +
                                  " requires i < j (line " + std::to_string(st.line) + ")");
        if (!seen.emplace(i, j).second)
            throw DuplicateProduct("duplicate product e" + std::to_string(i) + "*e" +
                                   std::to_string(j) + " (line " + std::to_string(st.line) + ")");
        RationalFunction rhs = parse_expr_at(st.text.substr(eq + 1), st.line);
        std::vector<RationalFunction> coeffs = to_basis_combination(rhs, dim, st.line);
        for (int k = 1; k <= dim; ++k)
            out.set_constant(i, j, k, coeffs[static_cast<std::size_t>(k - 1)]);
    }
    return out;
}

DegenerationCertificate parse_certificate(const std::string& text, const Catalog& catalog) {
    std::vector<Statement> stmts = split_statements(text);
    if (stmts.empty()) throw SyntaxError("empty certificate", 1, 1);

    // header: degeneration <source> -> <target> [where <expr> != 0 {, ...}]
    const Statement& head = stmts.front();
    std::string h = head.text;
    if (whitespace_tokens(h).empty() || whitespace_tokens(h)[0] != "degeneration")
        throw SyntaxError("expected 'degeneration <source> -> <target>'", head.line, 1);
    h = trim(h.substr(std::string("degeneration").size()));
    std::size_t arrow = h.find("->");
    if (arrow == std::string::npos)
        throw SyntaxError("expected '->' in certificate header", head.line, 1);
    const std::string source = trim(h.substr(0, arrow));
    std::string rest = trim(h.substr(arrow + 2));
    std::string target = rest;
    std::vector<RationalFunction> domain;
    std::size_t where = rest.find(" where ");
    if (rest.rfind("where ", 0) == 0) where = 0;
    if (where != std::string::npos) {
        target = trim(rest.substr(0, where));
        std::string clauses = trim(rest.substr(where + (where == 0 ? 6 : 7)));
        std::stringstream ss(clauses);
        std::string clause;
        while (std::getline(ss, clause, ',')) {
            clause = trim(clause);
            std::size_t neq = clause.rfind("!=");
            if (neq == std::string::npos || trim(clause.substr(neq + 2)) != "0")
                throw SyntaxError("exclusion must have the form '<expr> != 0'", head.line, 1);
            domain.push_back(parse_expr_at(clause.substr(0, neq), head.line));
        }
    }
    if (source.empty() || target.empty())
        throw SyntaxError("missing source or target name", head.line, 1);

    const AlgebraStructure& src = catalog.algebra(source);
    const AlgebraStructure& tgt = catalog.algebra(target);
    if (src.dim() != tgt.dim())
        throw DimensionMismatch("certificate endpoints have different dimensions");
    const int n = src.dim();

    DegenerationCertificate cert;
    cert.source = source;
    cert.target = target;
    cert.family.dim = n;
    cert.family.entries = Matrix(n, n);
    cert.family.domain = std::move(domain);

    std::set<int> seen;
    for (std::size_t s = 1; s < stmts.size(); ++s) {
        const Statement& st = stmts[s];
        std::size_t eq = st.text.find('=');
        if (eq == std::string::npos)
            throw SyntaxError("expected 'E<i> = <combination>'", st.line, 1);
        std::string lhs = trim(st.text.substr(0, eq));
        if (lhs.size() < 2 || lhs[0] != 'E')
            throw SyntaxError("row left-hand side must be E<i>", st.line, 1);
        int i = 0;
        try {
            i = std::stoi(lhs.substr(1));
        } catch (...) {
            throw SyntaxError("row left-hand side must be E<i>", st.line, 1);
        }
        if (i < 1 || i > n) throw SyntaxError("row index out of range", st.line, 1);
        if (!seen.insert(i).second)
            throw SyntaxError("duplicate row E" + std::to_string(i), st.line, 1);
        RationalFunction rhs = parse_expr_at(st.text.substr(eq + 1), st.line);
        std::vector<RationalFunction> coords = to_basis_combination(rhs, n, st.line);
        for (int c = 0; c < n; ++c)
            cert.family.entries.at(i - 1, c) = coords[static_cast<std::size_t>(c)];
    }
    if (static_cast<int>(seen.size()) != n)
        for (int i = 1; i <= n; ++i)
            if (!seen.contains(i))
                throw MissingBasisRow("certificate " + cert.id() + " is missing row E" +
                                      std::to_string(i));

    // family coefficients may use only t and the endpoint parameters
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            for (const Polynomial* p :
                 {&cert.family.entries.at(r, c).num(), &cert.family.entries.at(r, c).den()})
                for (const auto& sym : p->symbols())
                    if (sym != "t" && !src.params().contains(sym) && !tgt.params().contains(sym))
                        throw Error("certificate " + cert.id() + " uses undeclared symbol '" +
                                    sym + "'");
    return cert;
}

namespace {

/// Coefficient rendering for product and basis rows: no parentheses when the
/// string reparses as a single term ahead of '*e<k>'.
std::string coefficient_piece(const RationalFunction& c, const std::string& basis) {
    if (c.is_one()) return basis;
    if ((-c).is_one()) return "-" + basis;
    std::string s = c.str();
    const bool needs_parens = c.den() == Polynomial(Rational(1)) && c.num().terms().size() > 1;
    if (needs_parens) s = "(" + s + ")";
    return s + "*" + basis;
}

std::string combination_str(const std::vector<RationalFunction>& coeffs) {
    std::string out;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k].is_zero()) continue;
        std::string piece = coefficient_piece(coeffs[k], "e" + std::to_string(k + 1));
        if (out.empty())
            out = piece;
        else if (piece[0] == '-')
            out += " - " + piece.substr(1);
        else
            out += " + " + piece;
    }
    return out.empty() ? "0" : out;
}

}  // namespace

std::string serialize(const AlgebraStructure& a) {
    std::string out = "algebra " + a.name() + " dim " + std::to_string(a.dim());
    if (!a.params().empty()) {
        out += " params ";
        bool first = true;
        for (const auto& p : a.params()) {
            if (!first) out += ",";
            out += p;
            first = false;
        }
    }
    out += "\n";
    std::set<std::pair<int, int>> pairs;
    for (const auto& [key, c] : a.constants()) pairs.emplace(key[0], key[1]);
    for (const auto& [i, j] : pairs) {
        std::vector<RationalFunction> coeffs;
        for (int k = 1; k <= a.dim(); ++k) coeffs.push_back(a.constant(i, j, k));
        out += "e" + std::to_string(i) + "*e" + std::to_string(j) + " = " +
               combination_str(coeffs) + "\n";
    }
    return out;
}

std::string serialize(const DegenerationCertificate& c) {
    std::string out = "degeneration " + c.source + " -> " + c.target;
    if (!c.family.domain.empty()) {
        out += " where ";
        for (std::size_t i = 0; i < c.family.domain.size(); ++i) {
            if (i) out += ", ";
            out += c.family.domain[i].str() + " != 0";
        }
    }
    out += "\n";
    for (int i = 0; i < c.family.dim; ++i) {
        std::vector<RationalFunction> coords;
        for (int j = 0; j < c.family.dim; ++j) coords.push_back(c.family.entries.at(i, j));
        out += "E" + std::to_string(i + 1) + " = " + combination_str(coords) + "\n";
    }
    return out;
}

namespace {

constexpr const char* kAlgebraDefs[] = {
    "algebra abelian6 dim 6",

    "algebra g5 dim 6\n"
    "e1*e2 = e3 / e1*e3 = e4 / e1*e4 = e5 / e1*e5 = e6 / e2*e3 = e5 / e2*e4 = e6",

    "algebra M6e dim 6 params eps\n"
    "e1*e2 = e3 / e1*e3 = e5 / e1*e5 = e6 / e2*e4 = eps*e5 / e3*e4 = e6",

    "algebra T00 dim 6\n"
    "e1*e2 = e3 / e1*e3 = e4 / e2*e4 = e5",

    "algebra T01 dim 6\n"
    "e1*e2 = e3 / e1*e3 = e4 / e1*e4 = e5 / e2*e3 = e5 / e2*e4 = e6",

    "algebra T02 dim 6\n"
    "e1*e2 = e3 / e1*e3 = e4 / e2*e3 = e5 / e2*e4 = e6",

    "algebra T03 dim 6\n"
    "e1*e2 = e3 / e1*e3 = e4 / e1*e4 = e5 / e2*e4 = e6",

    "algebra T04 dim 6\n"
    "e1*e2 = e3 / e1*e3 = e4 / e1*e5 = e6 / e2*e4 = e6",

    "algebra T05 dim 6\n"
    "e1*e2 = e3 / e1*e3 = e4 / e2*e3 = e6 / e4*e5 = e6",

    "algebra T06 dim 6\n"
    "e1*e2 = e3 / e1*e3 = e4 / e2*e4 = e6 / e3*e5 = e6",

    "algebra T07 dim 6\n"
    "e1*e2 = e3 / e1*e3 = e4 / e4*e5 = e6",

    "algebra T08 dim 6\n"
    "e1*e2 = e3 / e1*e3 = e4 / e1*e4 = e6 / e1*e5 = -e6 / e2*e3 = e5 / e2*e4 = e6",

    "algebra T09 dim 6 params a\n"
    "e1*e2 = e3 / e1*e3 = e4 / e1*e5 = (a+1)*e6 / e2*e3 = e5 / e2*e4 = a*e6",

    "algebra T10 dim 6\n"
    "e1*e2 = e3 / e1*e3 = e6 / e1*e4 = e5 / e2*e3 = e5 / e4*e5 = e6",

    "algebra T11 dim 6\n"
    "e1*e2 = e3 / e1*e4 = e5 / e1*e5 = e6 / e2*e3 = e5",

    "algebra T12 dim 6\n"
    "e1*e2 = e3 / e1*e4 = e5 / e1*e5 = e6 / e2*e3 = e5 / e2*e4 = e6",

    "algebra T13 dim 6\n"
    "e1*e2 = e3 / e1*e4 = e5 / e1*e5 = e6 / e2*e3 = e5 / e3*e4 = e6",

    "algebra T14 dim 6\n"
    "e1*e2 = e3 / e1*e4 = e5 / e2*e3 = e5 / e4*e5 = e6",

    "algebra T15 dim 6\n"
    "e1*e2 = e3 / e1*e3 = e4 / e1*e4 = e5 / e1*e5 = e6 / e2*e4 = e6",

    "algebra T16 dim 6\n"
    "e1*e2 = e3 / e1*e3 = e4 / e1*e4 = e5 / e2*e5 = e6",

    "algebra T17 dim 6\n"
    "e1*e2 = e3 / e1*e3 = e4 / e1*e4 = e5 / e2*e3 = e5 / e2*e5 = e6",

    "algebra T18 dim 6 params a\n"
    "e1*e2 = e3 / e1*e3 = e4 / e1*e4 = e5 / e1*e5 = (a+1)*e6 / e2*e3 = e5 / e2*e4 = a*e6",

    "algebra T19 dim 6\n"
    "e1*e2 = e3 / e1*e3 = e4 / e1*e5 = e6 / e2*e4 = e5 / e3*e4 = e6",
};

constexpr const char* kCertificateDefs[] = {
    "degeneration T19 -> g5\n"
    "E1 = t*e1 + t^-2*e2 - t^-3*e3 - t^-4*e4\n"
    "E2 = e2 + t^-1*e3 + t^-2*e4\n"
    "E3 = t*e3 + e4 + 2*t^-4*e5\n"
    "E4 = t^2*e4 + t^-2*e5 + 2*t^-3*e6\n"
    "E5 = e5\n"
    "E6 = t*e6",

    "degeneration T19 -> M6e\n"
    "E1 = t*e1 - t^-1*e2 - t^-2*e3\n"
    "E2 = e2 - (eps-1)/t*e3\n"
    "E3 = e4 + eps*t^-3*e5\n"
    "E4 = e3 - eps*t^-1*e4 - eps*t^-4*e5\n"
    "E5 = -t^-1*e5 + (eps-1)/t^2*e6\n"
    "E6 = -e6",

    "degeneration T19 -> T00\n"
    "E1 = e1 / E2 = e2 / E3 = e3 / E4 = e4 / E5 = e5 / E6 = t^-1*e6",

    "degeneration T19 -> T01\n"
    "E1 = e1 + e2 - t^-2*e3\n"
    "E2 = t*e2 + e3 + t^-2*e4\n"
    "E3 = t*e3 + e4 + t^-2*e5 - t^-4*e6\n"
    "E4 = t*e4 + e5\n"
    "E5 = t*e5 + (1 - t^-1)*e6\n"
    "E6 = e6",

    "degeneration T19 -> T02\n"
    "E1 = t*e1\n"
    "E2 = e2 + t^-1*e3 + t^-3*e4\n"
    "E3 = t*e3 + e4\n"
    "E4 = t^2*e4\n"
    "E5 = e5 + (t^-1 - t^-2)*e6\n"
    "E6 = e6",

    "degeneration T19 -> T03\n"
    "E1 = t*e1 + t^-2*e2 - t^-4*e3\n"
    "E2 = e2 / E3 = t*e3 / E4 = t^2*e4\n"
    "E5 = e5 - t^-2*e6\n"
    "E6 = e6",

    "degeneration T19 -> T04\n"
    "E1 = t*e1 / E2 = e2 / E3 = t*e3 / E4 = t^2*e4\n"
    "E5 = e5 - t^-1*e6\n"
    "E6 = t*e6",

    "degeneration T10 -> T05\n"
    "E1 = e1 + t^-1*e2 - t*e5\n"
    "E2 = e2 / E3 = e3\n"
    "E4 = t^-1*e5 + e6\n"
    "E5 = t^2*e4\n"
    "E6 = -t*e6",

    "degeneration T05 -> T06\n"
    "E1 = -e1\n"
    "E2 = e2 + t^-1*e3 + t*e5\n"
    "E3 = -e3 - t^-1*e4\n"
    "E4 = e4 / E5 = t^2*e5 / E6 = -t*e6",

    "degeneration T05 -> T07\n"
    "E1 = t*e1 / E2 = e2 / E3 = t*e3 / E4 = t^2*e4 / E5 = t^-2*e5 / E6 = e6",

    "degeneration T19 -> T08\n"
    "E1 = t*e1 - t^-1*e3\n"
    "E2 = e2 + t^-1*e3 - t^-2*e4\n"
    "E3 = t*e3 + e4 + t^-3*e6\n"
    "E4 = t^2*e4 - t^-1*e6\n"
    "E5 = e5 + 2*t^-1*e6\n"
    "E6 = -t*e6",

    "degeneration T19 -> T09 where a+1 != 0\n"
    "E1 = t*e1\n"
    "E2 = e2 + t^-1*e3 + a/((a+1)*t^2)*e4\n"
    "E3 = t*e3 + e4\n"
    "E4 = t^2*e4\n"
    "E5 = e5 + 1/((a+1)*t)*e6\n"
    "E6 = t/(a+1)*e6",

    "degeneration T12 -> T11\n"
    "E1 = e1 / E2 = t*e2 / E3 = t*e3 / E4 = t^2*e4 / E5 = t^2*e5 / E6 = t^2*e6",

    "degeneration T19 -> T12\n"
    "E1 = e1 + e2 - t^-1*e3\n"
    "E2 = t*e2 + t^-1*e3 + t^-2*e4\n"
    "E3 = t*e3 + t^-1*e4 + t^-2*e5 - t^-3*e6\n"
    "E4 = e4 + t^-2*e5\n"
    "E5 = e5 + (t^-2 - t^-1)*e6\n"
    "E6 = e6",

    "degeneration T10 -> T13\n"
    "E1 = e1 + t^-1*e3 + t*e4\n"
    "E2 = t^2*e2\n"
    "E3 = t^2*e3 - t*e5\n"
    "E4 = t^4*e4 / E5 = t^4*e5 / E6 = t^5*e6",

    "degeneration T10 -> T14\n"
    "E1 = t*e1 / E2 = e2 / E3 = t*e3 / E4 = e4 / E5 = t*e5 / E6 = t*e6",

    "degeneration T19 -> T15\n"
    "E1 = t*e1 + t^-2*e2 - t^-3*e3\n"
    "E2 = e2 / E3 = t*e3 / E4 = t^2*e4\n"
    "E5 = e5 - t^-1*e6\n"
    "E6 = t*e6",

    "degeneration T17 -> T16\n"
    "E1 = t^-1*e1 / E2 = e2 / E3 = t^-1*e3 / E4 = t^-2*e4 / E5 = t^-3*e5 / E6 = t^-3*e6",

    "degeneration T19 -> T18 where a+1 != 0\n"
    "E1 = t*e1 + t^-2*e2 - a/((a+1)*t^3)*e3\n"
    "E2 = e2 + t^-1*e3 + a/((a+1)*t^2)*e4\n"
    "E3 = t*e3 + e4 + a/((a+1)*t^4)*e5 - a^2/((a+1)^2*t^5)*e6\n"
    "E4 = t^2*e4 + t^-2*e5\n"
    "E5 = e5 + 1/((a+1)*t)*e6\n"
    "E6 = t/(a+1)*e6",
};

Catalog build_builtin() {
    Catalog cat;
    for (const char* def : kAlgebraDefs) cat.add_algebra(parse_algebra(def));
    for (const char* def : kCertificateDefs)
        cat.certificates.push_back(parse_certificate(def, cat));
    cat.known_derivation_dims = {{"T10", 7}, {"T17", 7}, {"T19", 7}};
    return cat;
}

}  // namespace

const Catalog& builtin_catalog() {
    static const Catalog cat = build_builtin();
    return cat;
}

}  // namespace degen

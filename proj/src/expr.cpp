#include "degen/expr.hpp"

#include <cctype>

#include "degen/error.hpp"

namespace degen {

namespace {

struct Token {
    enum Kind { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    Kind kind;
    std::string text;
    int line;
    int col;
};

class Lexer {
public:
    explicit Lexer(std::string_view s) : s_(s) {}

    Token next() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) advance_();
        const int line = line_;
        const int col = col_;
        if (pos_ >= s_.size()) return {Token::End, "", line, col};
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string text;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                text += s_[pos_];
                advance_();
            }
            return {Token::Int, text, line, col};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string text;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
                text += s_[pos_];
                advance_();
            }
            return {Token::Ident, text, line, col};
        }
        advance_();
        switch (c) {
            case '+': return {Token::Plus, "+", line, col};
            case '-': return {Token::Minus, "-", line, col};
            case '*': return {Token::Star, "*", line, col};
            case '/': return {Token::Slash, "/", line, col};
            case '^': return {Token::Caret, "^", line, col};
            case '(': return {Token::LParen, "(", line, col};
            case ')': return {Token::RParen, ")", line, col};
            default: throw SyntaxError(std::string("unexpected character '") + c + "'", line, col);
        }
    }

private:
    void advance_() {
        if (s_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    explicit Parser(std::string_view s) : lex_(s) { shift_(); }

    RationalFunction parse() {
        RationalFunction v = expr_();
        expect_(Token::End, "end of expression");
        return v;
    }

private:
    void shift_() { tok_ = lex_.next(); }

    void expect_(Token::Kind k, const std::string& what) {
        if (tok_.kind != k)
            throw SyntaxError("expected " + what, tok_.line, tok_.col);
    }

    RationalFunction expr_() {
        RationalFunction v = term_();
        while (tok_.kind == Token::Plus || tok_.kind == Token::Minus) {
            const bool add = tok_.kind == Token::Plus;
            shift_();
            RationalFunction rhs = term_();
            v = add ? v + rhs : v - rhs;
        }
        return v;
    }

    RationalFunction term_() {
        RationalFunction v = unary_();
        while (tok_.kind == Token::Star || tok_.kind == Token::Slash) {
            const bool mul = tok_.kind == Token::Star;
            const Token op = tok_;
            shift_();
            RationalFunction rhs = unary_();
            if (!mul && rhs.is_zero())
                throw SyntaxError("division by zero", op.line, op.col);
            v = mul ? v * rhs : v / rhs;
        }
        return v;
    }

    RationalFunction unary_() {
        bool negate = false;
        while (tok_.kind == Token::Plus || tok_.kind == Token::Minus) {
            if (tok_.kind == Token::Minus) negate = !negate;
            shift_();
        }
        RationalFunction v = power_();
        return negate ? -v : v;
    }

    RationalFunction power_() {
        const Token base_tok = tok_;
        RationalFunction base = atom_();
        if (tok_.kind != Token::Caret) return base;
        shift_();
        bool neg_exp = false;
        if (tok_.kind == Token::Minus) {
            neg_exp = true;
            shift_();
        }
        expect_(Token::Int, "integer exponent");
        const long long e = std::stoll(tok_.text);
        if (e > 64) throw SyntaxError("exponent too large", tok_.line, tok_.col);
        shift_();
        if (neg_exp && !(base_tok.kind == Token::Ident && base_tok.text == "t"))
            throw SyntaxError("negative exponent allowed only for t", base_tok.line, base_tok.col);
        return base.pow(static_cast<int>(neg_exp ? -e : e));
    }

    RationalFunction atom_() {
        switch (tok_.kind) {
            case Token::Int: {
                BigInt v(tok_.text);
                shift_();
                return RationalFunction(Rational(std::move(v)));
            }
            case Token::Ident: {
                std::string name = tok_.text;
                shift_();
                return RationalFunction::monomial(name);
            }
            case Token::LParen: {
                shift_();
                RationalFunction v = expr_();
                expect_(Token::RParen, "')'");
                shift_();
                return v;
            }
            default:
                throw SyntaxError("expected integer, symbol or '('", tok_.line, tok_.col);
        }
    }

    Lexer lex_;
    Token tok_{Token::End, "", 1, 1};
};

}  // namespace

RationalFunction parse_expression(std::string_view text) { return Parser(text).parse(); }

}  // namespace degen

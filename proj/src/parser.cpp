// Recursive-descent parser for
//   expr   := term (("+"|"-") term)*
//   term   := factor (("*"|"/") factor)*
//   factor := base ("^" integer)?
//   base   := number | ident | ident "(" expr ")" | "(" expr ")" | "-" factor

#include <cctype>
#include <optional>

#include "geoquant/errors.hpp"
#include "geoquant/expr.hpp"

namespace geoquant {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string_view text;
    std::size_t offset;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        std::size_t start = pos_;
        if (pos_ >= src_.size()) return {Tok::End, {}, start};
        char c = src_[pos_];
        auto single = [&](Tok k) {
            ++pos_;
            return Token{k, src_.substr(start, 1), start};
        };
        switch (c) {
            case '+': return single(Tok::Plus);
            case '-': return single(Tok::Minus);
            case '*': return single(Tok::Star);
            case '/': return single(Tok::Slash);
            case '^': return single(Tok::Caret);
            case '(': return single(Tok::LParen);
            case ')': return single(Tok::RParen);
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            bool point = false;
            while (pos_ < src_.size()) {
                char d = src_[pos_];
                if (d == '.') {
                    if (point) break;
                    point = true;
                } else if (!std::isdigit(static_cast<unsigned char>(d))) {
                    break;
                }
                ++pos_;
            }
            auto text = src_.substr(start, pos_ - start);
            if (text == ".") throw ParseError("malformed number", start);
            return {Tok::Number, text, start};
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                ++pos_;
            return {Tok::Ident, src_.substr(start, pos_ - start), start};
        }
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;
};

std::optional<Func> lookup_function(std::string_view name) {
    if (name == "exp") return Func::Exp;
    if (name == "ln") return Func::Ln;
    if (name == "sin") return Func::Sin;
    if (name == "cos") return Func::Cos;
    if (name == "sqrt") return Func::Sqrt;
    return std::nullopt;
}

bool starts_operand(Tok k) {
    return k == Tok::Number || k == Tok::Ident || k == Tok::LParen || k == Tok::Minus;
}

class Parser {
public:
    Parser(std::string_view text, const SymbolTable& symbols) : lexer_(text), symbols_(symbols) {
        current_ = lexer_.next();
    }

    Expr parse_all() {
        if (current_.kind == Tok::End) throw ParseError("empty expression", current_.offset);
        Expr e = expr();
        if (current_.kind != Tok::End) throw ParseError("unexpected '" + std::string(current_.text) + "'", current_.offset);
        return e;
    }

private:
    void advance() { current_ = lexer_.next(); }

    // Reports a missing operand at the operator that needed it.
    void expect_operand(const Token& op) {
        if (!starts_operand(current_.kind))
            throw ParseError("expected operand after '" + std::string(op.text) + "'", op.offset);
    }

    Expr expr() {
        std::vector<Expr> terms{term()};
        while (current_.kind == Tok::Plus || current_.kind == Tok::Minus) {
            Token op = current_;
            advance();
            expect_operand(op);
            Expr t = term();
            terms.push_back(op.kind == Tok::Minus ? Expr::negate(t) : t);
        }
        return terms.size() == 1 ? terms.front() : Expr::sum(std::move(terms));
    }

    Expr term() {
        std::vector<Expr> factors{factor()};
        while (current_.kind == Tok::Star || current_.kind == Tok::Slash) {
            Token op = current_;
            advance();
            expect_operand(op);
            Expr f = factor();
            if (op.kind == Tok::Star) {
                factors.push_back(f);
            } else {
                Expr num = Expr::product(std::move(factors));
                factors = {Expr::quotient(num, f)};
            }
        }
        return Expr::product(std::move(factors));
    }

    Expr factor() {
        Expr b = base();
        if (current_.kind != Tok::Caret) return b;
        Token op = current_;
        advance();
        bool negative = false;
        if (current_.kind == Tok::Minus) {
            negative = true;
            advance();
        }
        if (current_.kind != Tok::Number || current_.text.find('.') != std::string_view::npos)
            throw ParseError("expected integer exponent after '^'", op.offset);
        long k = 0;
        try {
            k = std::stol(std::string(current_.text));
        } catch (const std::out_of_range&) {
            throw ParseError("exponent out of range", current_.offset);
        }
        advance();
        return Expr::power(b, negative ? -k : k);
    }

    Expr base() {
        Token t = current_;
        switch (t.kind) {
            case Tok::Number:
                advance();
                return Expr::constant(GaussianRational::from_decimal(t.text));
            case Tok::Minus: {
                advance();
                expect_operand(t);
                return Expr::negate(factor());
            }
            case Tok::LParen: {
                advance();
                expect_operand(t);
                Expr inner = expr();
                if (current_.kind != Tok::RParen) throw ParseError("expected ')'", current_.offset);
                advance();
                return inner;
            }
            case Tok::Ident: {
                advance();
                std::string name(t.text);
                if (current_.kind == Tok::LParen) {
                    auto f = lookup_function(name);
                    if (!f) throw ParseError("unknown function '" + name + "'", t.offset);
                    Token open = current_;
                    advance();
                    expect_operand(open);
                    Expr arg = expr();
                    if (current_.kind != Tok::RParen) throw ParseError("expected ')'", current_.offset);
                    advance();
                    return Expr::apply(*f, arg);
                }
                if (name == "i") return Expr::imaginary_unit();
                if (lookup_function(name)) throw ParseError("function '" + name + "' needs an argument", t.offset);
                if (!symbols_.contains(name)) throw UnknownSymbolError(name);
                return Expr::symbol(name);
            }
            case Tok::End: throw ParseError("unexpected end of input", t.offset);
            default: throw ParseError("unexpected '" + std::string(t.text) + "'", t.offset);
        }
    }

    Lexer lexer_;
    const SymbolTable& symbols_;
    Token current_;
};

}  // namespace

Expr parse(std::string_view text, const SymbolTable& symbols) { return Parser(text, symbols).parse_all(); }

}  // namespace geoquant

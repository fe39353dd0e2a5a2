#pragma once

// Recursive-descent parser for skew-polynomial expressions in the style of
// the problem files: integers, rationals a/b, the variable x, the algebra's
// operator symbol, + - * ^ and parentheses. Multiplication is noncommutative
// and evaluated left to right; juxtaposition is not allowed.

#include <cctype>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "orediag/skewpoly.hpp"

namespace orediag {

class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& msg, std::size_t line, std::size_t col)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
          line_(line),
          col_(col) {}
    std::size_t line() const { return line_; }
    std::size_t col() const { return col_; }

  private:
    std::size_t line_, col_;
};

namespace detail {

struct Token {
    enum class Kind { number, ident, plus, minus, star, slash, caret, lparen, rparen, end };
    Kind kind;
    std::string text;
    std::size_t line, col;
};

class Lexer {
  public:
    explicit Lexer(const std::string& src) : src_(src) {}

    Token next() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            advance();
        std::size_t line = line_, col = col_;
        if (pos_ >= src_.size()) return {Token::Kind::end, "", line, col};
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                num += src_[pos_];
                advance();
            }
            return {Token::Kind::number, num, line, col};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                id += src_[pos_];
                advance();
            }
            return {Token::Kind::ident, id, line, col};
        }
        advance();
        switch (c) {
            case '+': return {Token::Kind::plus, "+", line, col};
            case '-': return {Token::Kind::minus, "-", line, col};
            case '*': return {Token::Kind::star, "*", line, col};
            case '^': return {Token::Kind::caret, "^", line, col};
            case '(': return {Token::Kind::lparen, "(", line, col};
            case ')': return {Token::Kind::rparen, ")", line, col};
            case '/': return {Token::Kind::slash, "/", line, col};  // only valid inside a rational
            default:
                throw ParseError("unexpected character '" + std::string(1, c) + "'", line, col);
        }
    }

  private:
    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }
    const std::string& src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1, col_ = 1;
};

class ExprParser {
  public:
    ExprParser(const std::string& src, AlgebraSpec alg) : lexer_(src), alg_(std::move(alg)) {
        cur_ = lexer_.next();
    }

    OrePoly parse() {
        OrePoly e = expr();
        if (cur_.kind != Token::Kind::end)
            throw ParseError("unexpected trailing input '" + cur_.text + "'", cur_.line, cur_.col);
        return e;
    }

  private:
    using K = Token::Kind;

    void bump() { cur_ = lexer_.next(); }
    bool accept(K k) {
        if (cur_.kind != k) return false;
        bump();
        return true;
    }

    OrePoly expr() {
        bool neg = accept(K::minus);
        OrePoly acc = term();
        if (neg) acc = -acc;
        while (cur_.kind == K::plus || cur_.kind == K::minus) {
            bool minus = cur_.kind == K::minus;
            bump();
            OrePoly t = term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    OrePoly term() {
        OrePoly acc = factor();
        while (true) {
            if (accept(K::star)) {
                acc = acc * factor();
            } else if (cur_.kind == K::slash) {
                throw ParseError("division is only allowed in rational literals a/b", cur_.line,
                                 cur_.col);
            } else {
                break;
            }
        }
        return acc;
    }

    OrePoly factor() {
        OrePoly base = primary();
        if (accept(K::caret)) {
            if (cur_.kind != K::number)
                throw ParseError("expected a nonnegative integer exponent", cur_.line, cur_.col);
            unsigned long e = std::stoul(cur_.text);
            bump();
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    OrePoly primary() {
        if (cur_.kind == K::number) {
            Rat value = rat_from_string(cur_.text);
            Token numtok = cur_;
            bump();
            // rational literal a/b; '/' is lexed as star with text "/"
            if (cur_.kind == K::star && cur_.text == "/") {
                bump();
                if (cur_.kind != K::number)
                    throw ParseError("expected an integer denominator", cur_.line, cur_.col);
                Rat den = rat_from_string(cur_.text);
                if (orediag::is_zero(den))
                    throw ParseError("zero denominator", cur_.line, cur_.col);
                bump();
                value = value / den;
            }
            (void)numtok;
            return OrePoly::constant(alg_, value);
        }
        if (cur_.kind == K::ident) {
            if (cur_.text == "x") {
                bump();
                return OrePoly::variable_x(alg_);
            }
            if (cur_.text == alg_.op_symbol()) {
                bump();
                return OrePoly::op(alg_);
            }
            std::string msg = "unknown symbol '" + cur_.text + "'";
            for (const char* sym : {"d", "s", "y"})
                if (cur_.text == sym) {
                    msg += "; the " + to_string(alg_.kind()) + " algebra uses operator '" +
                           alg_.op_symbol() + "'";
                    break;
                }
            throw ParseError(msg, cur_.line, cur_.col);
        }
        if (accept(K::lparen)) {
            OrePoly e = expr();
            if (!accept(K::rparen)) throw ParseError("expected ')'", cur_.line, cur_.col);
            return e;
        }
        if (cur_.kind == K::star && cur_.text == "/")
            throw ParseError("division is only allowed in rational literals a/b", cur_.line,
                             cur_.col);
        throw ParseError("expected a number, symbol or parenthesized expression", cur_.line,
                         cur_.col);
    }

    Lexer lexer_;
    AlgebraSpec alg_;
    Token cur_;
};

}  // namespace detail

inline OrePoly parse_expression(const std::string& text, const AlgebraSpec& alg) {
    return detail::ExprParser(text, alg).parse();
}

}  // namespace orediag

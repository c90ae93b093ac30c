#ifndef FNF_EXPR_HPP
#define FNF_EXPR_HPP

#include <cctype>
#include <optional>
#include <set>
#include <string>

#include "fnf/field.hpp"

namespace fnf {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
    size_t position;
};

class UndeclaredGeneratorError : public ParseError {
public:
    UndeclaredGeneratorError(const std::string& name, size_t pos)
        : ParseError("undeclared generator '" + name + "'", pos) {}
};

// Recursive-descent evaluator for the coefficient-expression grammar:
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := ('+' | '-')* atom ('^' uint)?
//   atom   := uint | generator | '(' expr ')'
// Rational literals like 7/2 fall out of the '/' operator. Whitespace is
// insignificant. If `declared` is given, generators outside it are rejected.
class ExprParser {
public:
    ExprParser(std::string text, std::optional<std::set<int>> declared = std::nullopt)
        : text_(std::move(text)), declared_(std::move(declared)) {}

    FieldElement parse() {
        FieldElement v = expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
        return v;
    }

private:
    FieldElement expr() {
        FieldElement v = term();
        while (true) {
            skip_ws();
            if (peek() == '+') {
                ++pos_;
                v += term();
            } else if (peek() == '-') {
                ++pos_;
                v -= term();
            } else {
                return v;
            }
        }
    }

    FieldElement term() {
        FieldElement v = factor();
        while (true) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                v *= factor();
            } else if (peek() == '/') {
                ++pos_;
                size_t at = pos_;
                FieldElement d = factor();
                if (d.is_zero()) throw ParseError("division by zero", at);
                v /= d;
            } else {
                return v;
            }
        }
    }

    FieldElement factor() {
        skip_ws();
        bool neg = false;
        while (peek() == '-' || peek() == '+') {
            if (peek() == '-') neg = !neg;
            ++pos_;
            skip_ws();
        }
        FieldElement v = atom();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            size_t at = pos_;
            if (!std::isdigit(peek())) throw ParseError("expected nonnegative integer exponent", at);
            unsigned long e = 0;
            while (std::isdigit(peek())) {
                e = e * 10 + static_cast<unsigned long>(peek() - '0');
                if (e > 100000) throw ParseError("exponent too large", at);
                ++pos_;
            }
            v = v.pow(static_cast<unsigned>(e));
        }
        return neg ? -v : v;
    }

    FieldElement atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            FieldElement v = expr();
            skip_ws();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return v;
        }
        if (std::isdigit(c)) {
            std::string digits;
            while (std::isdigit(peek())) digits += text_[pos_++];
            return FieldElement(Poly(mpz_class(digits)), Poly(1));
        }
        if (c == 't') {
            size_t at = pos_;
            ++pos_;
            std::string digits;
            while (std::isdigit(peek())) digits += text_[pos_++];
            if (digits.empty()) throw ParseError("expected generator index after 't'", at);
            long idx = std::stol(digits);
            std::string name = "t" + digits;
            if (idx < 1 || idx > kMaxVars) throw UndeclaredGeneratorError(name, at);
            if (declared_ && !declared_->count(static_cast<int>(idx))) throw UndeclaredGeneratorError(name, at);
            return FieldElement::generator(static_cast<int>(idx));
        }
        if (c == '\0') throw ParseError("unexpected end of input", pos_);
        throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    std::string text_;
    std::optional<std::set<int>> declared_;
    size_t pos_ = 0;
};

inline FieldElement parse_coefficient(const std::string& text,
                                      std::optional<std::set<int>> declared = std::nullopt) {
    return ExprParser(text, std::move(declared)).parse();
}

}  // namespace fnf

#endif  // FNF_EXPR_HPP

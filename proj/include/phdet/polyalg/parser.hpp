#pragma once

#include "phdet/error.hpp"
#include "phdet/polyalg/polynomial.hpp"

#include <cctype>
#include <string>
#include <string_view>

namespace phdet {

namespace detail {

// expression := ['-'] term (('+'|'-') term)*
// term       := factor (('*'|'/') factor)*      '/' only by a nonzero constant
// factor     := base ('^' nonneg-integer)?
// base       := integer | identifier | '(' expression ')'
class PolynomialParser {
public:
    PolynomialParser(std::string_view text, const VariableList& vars) : text_(text), vars_(vars) {}

    Polynomial parse() {
        skip_ws();
        if (at_end()) throw ParseError("empty expression", pos_);
        Polynomial p = expression();
        skip_ws();
        if (!at_end()) {
            char c = text_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(')
                throw ParseError("implicit multiplication is not allowed; use '*'", pos_);
            throw ParseError(std::string("unexpected character '") + c + "'", pos_);
        }
        return p;
    }

private:
    static constexpr unsigned long kMaxExponent = 1u << 16;

    bool at_end() const { return pos_ >= text_.size(); }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (!at_end() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial expression() {
        bool negate = accept('-');
        Polynomial acc = term();
        if (negate) acc = -acc;
        for (;;) {
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Polynomial term() {
        Polynomial acc = factor();
        for (;;) {
            if (accept('*')) {
                acc *= factor();
            } else if (accept('/')) {
                skip_ws();
                std::size_t at = pos_;
                Polynomial d = factor();
                if (!d.is_constant())
                    throw ParseError("division is only allowed by a constant", at);
                Rational c = d.constant_term();
                if (c == 0) throw ParseError("division by zero", at);
                acc *= Rational(1) / c;
            } else {
                return acc;
            }
        }
    }

    Polynomial factor() {
        Polynomial b = base();
        if (accept('^')) {
            skip_ws();
            std::size_t at = pos_;
            if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                throw ParseError("exponent must be a non-negative integer literal", at);
            unsigned long e = 0;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                e = e * 10 + static_cast<unsigned long>(text_[pos_] - '0');
                if (e > kMaxExponent) throw ParseError("exponent too large", at);
                ++pos_;
            }
            b = b.pow(static_cast<unsigned>(e));
        }
        return b;
    }

    Polynomial base() {
        skip_ws();
        if (at_end()) throw ParseError("unexpected end of input", pos_);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial inner = expression();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            Integer value(std::string(text_.substr(start, pos_ - start)));
            return Polynomial::constant(vars_, Rational(value));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            auto idx = vars_.index_of(name);
            if (!idx) throw ParseError("unknown variable '" + name + "'", start);
            return Polynomial::variable(vars_, *idx);
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    std::string_view text_;
    const VariableList& vars_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses `text` into a canonical polynomial over `vars`. Throws ParseError
/// with the failing byte offset.
inline Polynomial parse_polynomial(std::string_view text, const VariableList& vars) {
    return detail::PolynomialParser(text, vars).parse();
}

}  // namespace phdet

#pragma once

#include "qcoh/element.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace qcoh {

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

// Recursive-descent parser for the expression grammar:
//   rational literals \d+(/\d+)?   identifiers [a-zA-Z][a-zA-Z0-9]*
//   ^ binds tightest, then *, then +/- (unary minus allowed); explicit *
//   required; parentheses group.
class Parser {
public:
    Parser(std::string text, ContextPtr ctx) : text_(std::move(text)), ctx_(std::move(ctx)) {}

    Element parse() {
        skip();
        Element e = parseSum();
        skip();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    Element parseSum() {
        Element e = parseProduct();
        for (;;) {
            skip();
            if (peek() == '+') {
                ++pos_;
                e += parseProduct();
            } else if (peek() == '-') {
                ++pos_;
                e -= parseProduct();
            } else {
                return e;
            }
        }
    }

    Element parseProduct() {
        Element e = parseFactor();
        for (;;) {
            skip();
            if (peek() == '*') {
                ++pos_;
                e = e * parseFactor();
            } else {
                return e;
            }
        }
    }

    Element parseFactor() {
        skip();
        if (peek() == '-') {
            ++pos_;
            return -parseFactor();
        }
        Element b = parsePrimary();
        skip();
        if (peek() == '^') {
            ++pos_;
            skip();
            if (!std::isdigit(peek())) fail("exponent must be a nonnegative integer");
            size_t start = pos_;
            while (std::isdigit(peek())) ++pos_;
            int n = std::stoi(text_.substr(start, pos_ - start));
            return b.pow(n);
        }
        return b;
    }

    Element parsePrimary() {
        skip();
        char c = peek();
        if (c == '(') {
            ++pos_;
            Element e = parseSum();
            skip();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return e;
        }
        if (std::isdigit(c)) {
            Integer num = parseInteger();
            skip();
            if (peek() == '/') {
                size_t save = pos_;
                ++pos_;
                skip();
                if (!std::isdigit(peek())) {
                    pos_ = save;  // not a rational literal; leave '/' for caller (will error)
                    fail("expected digits after '/'");
                }
                Integer den = parseInteger();
                if (den == 0) fail("zero denominator");
                return Element::constant(ctx_, Rational(num, den));
            }
            return Element::constant(ctx_, Rational(num));
        }
        if (std::isalpha(c)) {
            size_t start = pos_;
            while (std::isalnum(peek())) ++pos_;
            std::string name = text_.substr(start, pos_ - start);
            int gi = ctx_->find(name);
            if (gi < 0) fail("unknown generator name '" + name + "'", start);
            return Element::generator(ctx_, gi);
        }
        if (c == '\0') fail("unexpected end of input");
        fail(std::string("unexpected character '") + c + "'");
        return Element();  // unreachable
    }

    Integer parseInteger() {
        size_t start = pos_;
        while (std::isdigit(peek())) ++pos_;
        return Integer(text_.substr(start, pos_ - start));
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip() {
        while (pos_ < text_.size() && std::isspace((unsigned char)text_[pos_])) ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }
    [[noreturn]] void fail(const std::string& msg, size_t at) const { throw ParseError(msg, at); }

    std::string text_;
    ContextPtr ctx_;
    size_t pos_ = 0;
};

inline Element parse_element(const std::string& text, const ContextPtr& ctx) {
    return Parser(text, ctx).parse();
}

inline std::string format_element(const Element& e) { return e.str(); }

} // namespace qcoh

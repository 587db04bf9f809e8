// SPDX-License-Identifier: Apache-2.0
// Recursive-descent parser for rational-function expressions over
//   + - * / ^ ( ) x y <integer>
#include <cctype>
#include <string>

#include "akl/errors.hpp"
#include "akl/rational_function.hpp"

namespace akl {

namespace {

class Parser {
  public:
    explicit Parser(const std::string& text) : text_(text) {}

    RationalFunction2 parse() {
        RationalFunction2 v = expression();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return v;
    }

  private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("expression error at position " + std::to_string(pos_) +
                         ": " + msg + " in '" + text_ + "'");
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    RationalFunction2 expression() {
        RationalFunction2 v = eat('-') ? -term() : (eat('+'), term());
        for (;;) {
            if (eat('+')) v += term();
            else if (eat('-')) v -= term();
            else return v;
        }
    }

    RationalFunction2 term() {
        RationalFunction2 v = power();
        for (;;) {
            if (eat('*')) v *= power();
            else if (eat('/')) {
                const RationalFunction2 d = power();
                if (d.is_zero()) throw PoleError("division by zero in expression '" + text_ + "'");
                v /= d;
            } else return v;
        }
    }

    RationalFunction2 power() {
        RationalFunction2 base = atom();
        if (!eat('^')) return base;
        const long e = integer_literal();
        RationalFunction2 v = RationalFunction2::constant(Rational(1));
        for (long i = 0; i < e; ++i) v *= base;
        return v;
    }

    RationalFunction2 atom() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            RationalFunction2 v = expression();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (c == '-') { // unary minus inside a factor, e.g. 2*-3
            ++pos_;
            return -atom();
        }
        if (c == 'x') {
            ++pos_;
            return RationalFunction2::x();
        }
        if (c == 'y') {
            ++pos_;
            return RationalFunction2::y();
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return RationalFunction2::constant(Rational(Integer(digits())));
        fail("expected a number, 'x', 'y', or '('");
    }

    long integer_literal() {
        skip_ws();
        bool neg = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            neg = text_[pos_] == '-';
            ++pos_;
        }
        if (neg) fail("exponent must be a nonnegative integer");
        const std::string d = digits();
        return std::stol(d);
    }

    std::string digits() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected digits");
        return text_.substr(start, pos_ - start);
    }

    const std::string& text_;
    size_t pos_ = 0;
};

} // namespace

RationalFunction2 parse_rational_function(const std::string& text) {
    return Parser(text).parse();
}

} // namespace akl

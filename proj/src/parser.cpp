#include "ffsunit/parser.hpp"

#include <cctype>

#include "ffsunit/errors.hpp"

namespace ffsunit {

namespace {

class Parser {
  public:
    explicit Parser(const std::string& text) : s_(text) {}

    RatFunc parse() {
        RatFunc v = expr();
        skip_ws();
        if (!eof()) fail("unexpected trailing input");
        return v;
    }

  private:
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_, s_); }

    bool eof() const { return pos_ >= s_.size(); }
    char peek() const { return eof() ? '\0' : s_[pos_]; }

    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    RatFunc expr() {
        RatFunc v = term();
        while (true) {
            if (accept('+')) v = v + term();
            else if (accept('-')) v = v - term();
            else return v;
        }
    }

    RatFunc term() {
        RatFunc v = factor();
        while (true) {
            if (accept('*')) v = v * factor();
            else if (accept('/')) {
                RatFunc d = factor();
                if (d.is_zero()) throw DomainError("division by zero in expression");
                v = v / d;
            } else return v;
        }
    }

    RatFunc factor() {
        if (accept('-')) return -factor();
        return primary();
    }

    RatFunc primary() {
        RatFunc base = atom();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            // The exponent must be a bare nonnegative integer literal:
            // "x^(-1)" and "x^-1" are rejected here.
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                fail("exponent must be a nonnegative integer literal");
            unsigned long e = natural();
            return base.pow(static_cast<long>(e));
        }
        return base;
    }

    RatFunc atom() {
        skip_ws();
        if (eof()) fail("unexpected end of input");
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) return RatFunc(Rat(integer()));
        if (c == 'x') {
            ++pos_;
            return RatFunc::x();
        }
        if (c == '(') {
            ++pos_;
            RatFunc v = expr();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return v;
        }
        fail("expected a number, 'x' or '('");
    }

    Int integer() {
        std::size_t start = pos_;
        while (!eof() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return Int(s_.substr(start, pos_ - start), 10);
    }

    unsigned long natural() {
        Int v = integer();
        if (!v.fits_ulong_p()) fail("exponent too large");
        return v.get_ui();
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

} // namespace

RatFunc parse_ratfunc(const std::string& text) { return Parser(text).parse(); }

Poly parse_poly(const std::string& text) {
    RatFunc f = parse_ratfunc(text);
    if (!f.den().is_one())
        throw SpecError("expected a polynomial, got a proper rational function: " + text);
    return f.num();
}

} // namespace ffsunit

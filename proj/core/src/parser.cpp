#include "shellcalc/parser.hpp"

#include <cctype>
#include <cstdlib>
#include <string>

namespace shellcalc {

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos); }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    Expr parse_expr() {
        bool negate = false;
        if (accept('-')) {
            negate = true;
        } else {
            accept('+');
        }
        Expr acc = parse_term();
        if (negate) acc = Expr::neg(acc);
        for (;;) {
            if (accept('+')) {
                acc = acc + parse_term();
            } else if (accept('-')) {
                acc = acc - parse_term();
            } else {
                return acc;
            }
        }
    }

    Expr parse_term() {
        Expr acc = parse_factor();
        for (;;) {
            if (accept('*')) {
                acc = acc * parse_factor();
            } else if (accept('/')) {
                acc = acc / parse_factor();
            } else {
                return acc;
            }
        }
    }

    Expr parse_factor() {
        Expr base = parse_atom();
        if (!accept('^')) return base;
        skip_ws();
        if (accept('(')) {
            // Only the half exponent is parenthesized: '^(1/2)'.
            skip_ws();
            std::size_t mark = pos;
            if (pos + 3 <= text.size() && text.compare(pos, 3, "1/2") == 0) {
                pos += 3;
                expect(')');
                return Expr::pow_half(base);
            }
            pos = mark;
            fail("expected '1/2' exponent");
        }
        return Expr::pow(base, parse_signed_int());
    }

    int parse_signed_int() {
        skip_ws();
        std::size_t start = pos;
        bool neg = false;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            neg = text[pos] == '-';
            ++pos;
        }
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
            pos = start;
            fail("expected integer exponent");
        }
        long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > 1000000) fail("exponent too large");
            ++pos;
        }
        return static_cast<int>(neg ? -v : v);
    }

    Expr parse_atom() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input");
        char c = text[pos];
        if (c == '(') {
            ++pos;
            Expr e = parse_expr();
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_ident();
        fail("unexpected character");
    }

    Expr parse_number() {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos < text.size() && text[pos] == '.') {
            ++pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        }
        if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
            std::size_t mark = pos;
            ++pos;
            if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
            if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            } else {
                pos = mark;  // 'e' starts an identifier, not an exponent
            }
        }
        std::string num(text.substr(start, pos - start));
        if (num == ".") {
            pos = start;
            fail("malformed number");
        }
        char* end = nullptr;
        double v = std::strtod(num.c_str(), &end);
        if (end != num.c_str() + num.size()) {
            pos = start;
            fail("malformed number");
        }
        return Expr::constant(v);
    }

    Expr parse_ident() {
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
            ++pos;
        }
        std::string name(text.substr(start, pos - start));
        if (name == "i") return Expr::imaginary_unit();
        for (FuncName f : {FuncName::Sqrt, FuncName::Sinh, FuncName::Cosh, FuncName::Exp}) {
            if (name == func_name(f)) {
                if (peek() != '(') {
                    pos = start;
                    fail("function '" + name + "' requires an argument list");
                }
                ++pos;
                Expr arg = parse_expr();
                expect(')');
                return Expr::func(f, arg);
            }
        }
        if (peek() == '(') {
            pos = start;
            fail("unknown function '" + name + "'");
        }
        // Momentum-component aliases.
        if (name == "px") name = "p1";
        else if (name == "py") name = "p2";
        else if (name == "pz") name = "p3";
        return Expr::symbol(name);
    }
};

}  // namespace

Expr parse(std::string_view text) {
    Parser p{text};
    Expr e = p.parse_expr();
    if (!p.at_end()) p.fail("trailing input");
    return e;
}

}  // namespace shellcalc

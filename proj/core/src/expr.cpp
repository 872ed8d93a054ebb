#include "shellcalc/expr.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <sstream>
#include <utility>

namespace shellcalc {

namespace {

bool finite(Complex v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

// Zero components are kept as +0.0 so the sqrt branch cut is approached from
// the principal side regardless of how a value was assembled (-x vs the
// folded constant).
Complex canon(Complex v) {
    double re = v.real() == 0.0 ? 0.0 : v.real();
    double im = v.imag() == 0.0 ? 0.0 : v.imag();
    return {re, im};
}

std::shared_ptr<const ExprNode> make_node(ExprNode&& n) {
    return std::make_shared<const ExprNode>(std::move(n));
}

}  // namespace

const char* func_name(FuncName f) {
    switch (f) {
        case FuncName::Sqrt: return "sqrt";
        case FuncName::Sinh: return "sinh";
        case FuncName::Cosh: return "cosh";
        case FuncName::Exp: return "exp";
    }
    return "?";
}

Expr Expr::constant(Complex v) {
    if (!finite(v)) throw EvalError("non-finite constant");
    ExprNode n;
    n.kind = ExprKind::Const;
    n.value = canon(v);
    return Expr(make_node(std::move(n)));
}

Expr Expr::symbol(std::string name) {
    if (name.empty()) throw EvalError("empty symbol name");
    ExprNode n;
    n.kind = ExprKind::Sym;
    n.name = std::move(name);
    return Expr(make_node(std::move(n)));
}

Expr Expr::add(std::vector<Expr> terms) {
    if (terms.empty()) return constant(0.0);
    if (terms.size() == 1) return terms.front();
    ExprNode n;
    n.kind = ExprKind::Add;
    n.args = std::move(terms);
    return Expr(make_node(std::move(n)));
}

Expr Expr::mul(std::vector<Expr> factors) {
    if (factors.empty()) return constant(1.0);
    if (factors.size() == 1) return factors.front();
    ExprNode n;
    n.kind = ExprKind::Mul;
    n.args = std::move(factors);
    return Expr(make_node(std::move(n)));
}

Expr Expr::pow(Expr base, int exponent) {
    ExprNode n;
    n.kind = ExprKind::Pow;
    n.exponent = exponent;
    n.args = {std::move(base)};
    return Expr(make_node(std::move(n)));
}

Expr Expr::pow_half(Expr base) {
    ExprNode n;
    n.kind = ExprKind::Pow;
    n.half_exponent = true;
    n.args = {std::move(base)};
    return Expr(make_node(std::move(n)));
}

Expr Expr::neg(Expr arg) {
    ExprNode n;
    n.kind = ExprKind::Neg;
    n.args = {std::move(arg)};
    return Expr(make_node(std::move(n)));
}

Expr Expr::div(Expr num, Expr den) {
    ExprNode n;
    n.kind = ExprKind::Div;
    n.args = {std::move(num), std::move(den)};
    return Expr(make_node(std::move(n)));
}

Expr Expr::func(FuncName f, Expr arg) {
    ExprNode n;
    n.kind = ExprKind::Func;
    n.func = f;
    n.args = {std::move(arg)};
    return Expr(make_node(std::move(n)));
}

bool Expr::is_zero() const {
    return node_->kind == ExprKind::Const && node_->value == Complex{0.0, 0.0};
}

bool Expr::is_one() const {
    return node_->kind == ExprKind::Const && node_->value == Complex{1.0, 0.0};
}

namespace {

Complex ipow(Complex base, int exponent) {
    if (exponent == 0) return Complex{1.0, 0.0};
    bool invert = exponent < 0;
    unsigned long n = invert ? -static_cast<long>(exponent) : exponent;
    Complex acc{1.0, 0.0};
    Complex b = base;
    while (n > 0) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    if (invert) {
        if (acc == Complex{0.0, 0.0}) throw EvalError("zero raised to a negative power");
        acc = Complex{1.0, 0.0} / acc;
    }
    return acc;
}

Complex eval_func(FuncName f, Complex x) {
    switch (f) {
        case FuncName::Sqrt: return std::sqrt(x);
        case FuncName::Sinh: return std::sinh(x);
        case FuncName::Cosh: return std::cosh(x);
        case FuncName::Exp: return std::exp(x);
    }
    throw EvalError("unknown function");
}

Complex eval_node(const Expr& e, const Bindings& b);

Complex eval_impl(const Expr& e, const Bindings& b) { return canon(eval_node(e, b)); }

Complex eval_node(const Expr& e, const Bindings& b) {
    const ExprNode& n = e.node();
    switch (n.kind) {
        case ExprKind::Const:
            return n.value;
        case ExprKind::Sym: {
            auto it = b.find(n.name);
            if (it == b.end()) throw EvalError("unbound symbol: " + n.name);
            return it->second;
        }
        case ExprKind::Add: {
            Complex acc{0.0, 0.0};
            for (const Expr& a : n.args) acc += eval_impl(a, b);
            return acc;
        }
        case ExprKind::Mul: {
            Complex acc{1.0, 0.0};
            for (const Expr& a : n.args) acc *= eval_impl(a, b);
            return acc;
        }
        case ExprKind::Pow: {
            Complex base = eval_impl(n.args[0], b);
            if (n.half_exponent) return std::sqrt(base);
            return ipow(base, n.exponent);
        }
        case ExprKind::Neg:
            return -eval_impl(n.args[0], b);
        case ExprKind::Div: {
            Complex den = eval_impl(n.args[1], b);
            if (den == Complex{0.0, 0.0}) throw EvalError("division by zero");
            return eval_impl(n.args[0], b) / den;
        }
        case ExprKind::Func:
            return eval_func(n.func, eval_impl(n.args[0], b));
    }
    throw EvalError("corrupt expression node");
}

}  // namespace

Complex eval(const Expr& e, const Bindings& b) {
    Complex v = eval_impl(e, b);
    if (!finite(v)) throw EvalError("non-finite result");
    return v;
}

double eval_real(const Expr& e, const Bindings& b, double imag_tol) {
    Complex v = eval(e, b);
    if (std::abs(v.imag()) > imag_tol * (1.0 + std::abs(v))) {
        throw EvalError("expected a real value, got imaginary part " +
                        format_double(v.imag()));
    }
    return v.real();
}

Expr subst(const Expr& e, const std::string& s, const Expr& r) {
    const ExprNode& n = e.node();
    switch (n.kind) {
        case ExprKind::Const:
            return e;
        case ExprKind::Sym:
            return n.name == s ? r : e;
        default: {
            std::vector<Expr> args;
            args.reserve(n.args.size());
            bool changed = false;
            for (const Expr& a : n.args) {
                Expr sa = subst(a, s, r);
                changed = changed || !sa.same_node(a);
                args.push_back(std::move(sa));
            }
            if (!changed) return e;
            switch (n.kind) {
                case ExprKind::Add: return Expr::add(std::move(args));
                case ExprKind::Mul: return Expr::mul(std::move(args));
                case ExprKind::Pow:
                    return n.half_exponent ? Expr::pow_half(args[0])
                                           : Expr::pow(args[0], n.exponent);
                case ExprKind::Neg: return Expr::neg(args[0]);
                case ExprKind::Div: return Expr::div(args[0], args[1]);
                case ExprKind::Func: return Expr::func(n.func, args[0]);
                default: break;
            }
        }
    }
    throw EvalError("corrupt expression node");
}

namespace {

// Folds a constant-valued operation, keeping the node unfolded when the
// result would not be representable as a finite constant.
Expr fold_or(Expr fallback, Complex v) {
    if (std::isfinite(v.real()) && std::isfinite(v.imag())) return Expr::constant(v);
    return fallback;
}

Expr simplify_impl(const Expr& e);

void flatten_into(ExprKind kind, const Expr& e, std::vector<Expr>& out) {
    if (e.kind() == kind) {
        for (const Expr& a : e.node().args) flatten_into(kind, a, out);
    } else {
        out.push_back(e);
    }
}

Expr simplify_add(const std::vector<Expr>& args) {
    std::vector<Expr> flat;
    for (const Expr& a : args) flatten_into(ExprKind::Add, simplify_impl(a), flat);
    Complex c{0.0, 0.0};
    std::vector<Expr> rest;
    for (const Expr& a : flat) {
        if (a.is_constant()) {
            c += a.node().value;
        } else {
            rest.push_back(a);
        }
    }
    if (!finite(c)) return Expr::add(std::move(flat));
    if (c != Complex{0.0, 0.0} || rest.empty()) rest.push_back(Expr::constant(c));
    return Expr::add(std::move(rest));
}

Expr simplify_mul(const std::vector<Expr>& args) {
    std::vector<Expr> flat;
    for (const Expr& a : args) flatten_into(ExprKind::Mul, simplify_impl(a), flat);
    Complex c{1.0, 0.0};
    std::vector<Expr> rest;
    for (const Expr& a : flat) {
        if (a.is_constant()) {
            c *= a.node().value;
        } else {
            rest.push_back(a);
        }
    }
    if (!finite(c)) return Expr::mul(std::move(flat));
    if (c == Complex{0.0, 0.0}) return Expr::constant(0.0);
    if (c != Complex{1.0, 0.0} || rest.empty()) {
        rest.insert(rest.begin(), Expr::constant(c));
    }
    return Expr::mul(std::move(rest));
}

Expr simplify_impl(const Expr& e) {
    const ExprNode& n = e.node();
    switch (n.kind) {
        case ExprKind::Const:
        case ExprKind::Sym:
            return e;
        case ExprKind::Add:
            return simplify_add(n.args);
        case ExprKind::Mul:
            return simplify_mul(n.args);
        case ExprKind::Pow: {
            Expr base = simplify_impl(n.args[0]);
            if (n.half_exponent) {
                if (base.is_constant()) {
                    return fold_or(Expr::pow_half(base), std::sqrt(base.node().value));
                }
                return Expr::pow_half(base);
            }
            if (n.exponent == 0) return Expr::constant(1.0);
            if (n.exponent == 1) return base;
            if (base.is_constant()) {
                if (base.is_zero() && n.exponent < 0) return Expr::pow(base, n.exponent);
                return fold_or(Expr::pow(base, n.exponent),
                               ipow(base.node().value, n.exponent));
            }
            return Expr::pow(base, n.exponent);
        }
        case ExprKind::Neg: {
            Expr arg = simplify_impl(n.args[0]);
            if (arg.is_constant()) return Expr::constant(-arg.node().value);
            if (arg.kind() == ExprKind::Neg) return arg.node().args[0];
            return Expr::neg(arg);
        }
        case ExprKind::Div: {
            Expr num = simplify_impl(n.args[0]);
            Expr den = simplify_impl(n.args[1]);
            if (num.is_zero() && !(den.is_constant() && den.is_zero())) {
                return Expr::constant(0.0);
            }
            if (den.is_one()) return num;
            if (num.is_constant() && den.is_constant() && !den.is_zero()) {
                return fold_or(Expr::div(num, den),
                               num.node().value / den.node().value);
            }
            return Expr::div(num, den);
        }
        case ExprKind::Func: {
            Expr arg = simplify_impl(n.args[0]);
            if (arg.is_constant()) {
                return fold_or(Expr::func(n.func, arg),
                               eval_func(n.func, arg.node().value));
            }
            return Expr::func(n.func, arg);
        }
    }
    throw EvalError("corrupt expression node");
}

}  // namespace

Expr simplify(const Expr& e) { return simplify_impl(e); }

std::string format_double(double v) {
    char buf[40];
    for (int prec = 15; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    return buf;
}

namespace {

// Precedence: Add/Neg 1, Mul/Div 2, Pow 3, atoms 4.
int precedence(const ExprNode& n) {
    switch (n.kind) {
        case ExprKind::Add:
        case ExprKind::Neg:
            return 1;
        case ExprKind::Mul:
        case ExprKind::Div:
            return 2;
        case ExprKind::Pow:
            return 3;
        case ExprKind::Const:
            // Negative and complex constants print with an enclosing group.
            return 4;
        default:
            return 4;
    }
}

void print_expr(const Expr& e, int min_prec, std::string& out);

void print_const(Complex v, int min_prec, std::string& out) {
    const double re = v.real();
    const double im = v.imag();
    if (im == 0.0) {
        if (re >= 0.0 && !std::signbit(re)) {
            out += format_double(re);
        } else if (min_prec <= 1) {
            out += "-";
            out += format_double(-re);
        } else {
            out += "(-";
            out += format_double(-re);
            out += ")";
        }
        return;
    }
    if (re == 0.0) {
        if (im == 1.0) {
            out += "i";
            return;
        }
        std::string body = (im == -1.0) ? "-i"
                         : (im > 0.0)   ? format_double(im) + "*i"
                                        : "-" + format_double(-im) + "*i";
        if (im > 0.0 && min_prec <= 2) {
            out += body;
        } else {
            out += "(" + body + ")";
        }
        return;
    }
    std::string body = (re < 0.0 ? "-" + format_double(-re) : format_double(re));
    body += (im < 0.0 ? " - " : " + ");
    double aim = std::abs(im);
    body += (aim == 1.0) ? "i" : format_double(aim) + "*i";
    out += "(" + body + ")";
}

void print_expr(const Expr& e, int min_prec, std::string& out) {
    const ExprNode& n = e.node();
    if (n.kind == ExprKind::Const) {
        print_const(n.value, min_prec, out);
        return;
    }
    const int prec = precedence(n);
    const bool need_parens = prec < min_prec;
    if (need_parens) out += "(";
    switch (n.kind) {
        case ExprKind::Sym:
            out += n.name;
            break;
        case ExprKind::Add:
            for (std::size_t k = 0; k < n.args.size(); ++k) {
                const Expr& t = n.args[k];
                if (t.kind() == ExprKind::Neg) {
                    out += (k == 0) ? "-" : " - ";
                    print_expr(t.node().args[0], 2, out);
                } else if (t.is_constant() && t.node().value.imag() == 0.0 &&
                           t.node().value.real() < 0.0) {
                    out += (k == 0) ? "-" : " - ";
                    out += format_double(-t.node().value.real());
                } else {
                    if (k > 0) out += " + ";
                    print_expr(t, 2, out);
                }
            }
            break;
        case ExprKind::Mul:
            for (std::size_t k = 0; k < n.args.size(); ++k) {
                if (k > 0) out += "*";
                print_expr(n.args[k], 2, out);
            }
            break;
        case ExprKind::Div:
            print_expr(n.args[0], 2, out);
            out += "/";
            print_expr(n.args[1], 3, out);
            break;
        case ExprKind::Pow:
            print_expr(n.args[0], 4, out);
            out += "^";
            if (n.half_exponent) {
                out += "(1/2)";
            } else {
                out += std::to_string(n.exponent);
            }
            break;
        case ExprKind::Neg:
            out += "-";
            print_expr(n.args[0], 2, out);
            break;
        case ExprKind::Func:
            out += func_name(n.func);
            out += "(";
            print_expr(n.args[0], 1, out);
            out += ")";
            break;
        default:
            break;
    }
    if (need_parens) out += ")";
}

}  // namespace

std::string to_string(const Expr& e) {
    std::string out;
    print_expr(e, 1, out);
    return out;
}

namespace {

void collect_symbols(const Expr& e, std::set<std::string>& out) {
    const ExprNode& n = e.node();
    if (n.kind == ExprKind::Sym) {
        out.insert(n.name);
        return;
    }
    for (const Expr& a : n.args) collect_symbols(a, out);
}

}  // namespace

std::vector<std::string> free_symbols(const Expr& e) {
    std::set<std::string> s;
    collect_symbols(e, s);
    return {s.begin(), s.end()};
}

}  // namespace shellcalc

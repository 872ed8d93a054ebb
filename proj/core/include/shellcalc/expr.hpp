#pragma once

#include <complex>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace shellcalc {

using Complex = std::complex<double>;

/// Raised by the parser; `offset` is the byte position of the offending token.
struct ParseError : std::runtime_error {
    ParseError(const std::string& message, std::size_t offset_)
        : std::runtime_error(message), offset(offset_) {}
    std::size_t offset;
};

/// Raised on evaluation failures: unbound symbols, division by zero,
/// singular or non-finite results, unknown chart variables or generators.
struct EvalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when a sampler cannot produce a single non-singular point.
struct SamplerError : EvalError {
    using EvalError::EvalError;
};

enum class ExprKind { Const, Sym, Add, Mul, Pow, Neg, Div, Func };

enum class FuncName { Sqrt, Sinh, Cosh, Exp };

const char* func_name(FuncName f);

class Expr;

/// Immutable expression node. Nodes are shared; never mutated after construction.
struct ExprNode {
    ExprKind kind = ExprKind::Const;
    Complex value{0.0, 0.0};     // Const
    std::string name;            // Sym
    FuncName func = FuncName::Sqrt;
    int exponent = 0;            // Pow, integer exponent
    bool half_exponent = false;  // Pow, exponent is exactly 1/2
    std::vector<Expr> args;
};

/// Value handle to a shared immutable expression tree.
///
/// Constants are always finite (NaN/Inf is rejected at construction); the
/// imaginary unit is Const(0+1i). Arity is fixed per kind: Add/Mul take two
/// or more arguments, Neg/Func one, Div/Pow structured operands.
class Expr {
public:
    Expr() : Expr(constant(0.0)) {}

    static Expr constant(Complex v);
    static Expr constant(double re) { return constant(Complex{re, 0.0}); }
    static Expr imaginary_unit() { return constant(Complex{0.0, 1.0}); }
    static Expr symbol(std::string name);
    static Expr add(std::vector<Expr> terms);
    static Expr mul(std::vector<Expr> factors);
    static Expr pow(Expr base, int exponent);
    static Expr pow_half(Expr base);  // base^(1/2)
    static Expr neg(Expr arg);
    static Expr div(Expr num, Expr den);
    static Expr func(FuncName f, Expr arg);

    const ExprNode& node() const { return *node_; }
    ExprKind kind() const { return node_->kind; }

    bool is_constant() const { return node_->kind == ExprKind::Const; }
    bool is_zero() const;
    bool is_one() const;

    /// Structural equality (same tree); numeric equality lives in equal_numeric.
    bool same_node(const Expr& other) const { return node_ == other.node_; }

private:
    explicit Expr(std::shared_ptr<const ExprNode> n) : node_(std::move(n)) {}
    std::shared_ptr<const ExprNode> node_;
};

inline Expr operator+(const Expr& a, const Expr& b) { return Expr::add({a, b}); }
inline Expr operator-(const Expr& a, const Expr& b) { return Expr::add({a, Expr::neg(b)}); }
inline Expr operator*(const Expr& a, const Expr& b) { return Expr::mul({a, b}); }
inline Expr operator/(const Expr& a, const Expr& b) { return Expr::div(a, b); }
inline Expr operator-(const Expr& a) { return Expr::neg(a); }

/// Map from symbol name to value. Every free symbol of an expression must be
/// bound before evaluation.
using Bindings = std::map<std::string, Complex>;

/// Exact recursive evaluation. Integer powers use repeated multiplication,
/// sqrt the principal branch. Throws EvalError on unbound symbols, division
/// by zero, or non-finite results.
Complex eval(const Expr& e, const Bindings& b);

/// eval() for contexts that expect a real number; throws EvalError if the
/// imaginary part exceeds `imag_tol` relative to the magnitude.
double eval_real(const Expr& e, const Bindings& b, double imag_tol = 1e-10);

/// Replaces every occurrence of symbol `s` by `r` (flat symbol namespace,
/// no capture concerns).
Expr subst(const Expr& e, const std::string& s, const Expr& r);

/// Light simplifier: constant folding, 0/1 absorption, Add/Mul flattening,
/// double negation. Not a canonicalizer; equality is decided numerically.
Expr simplify(const Expr& e);

/// Prints in the grammar the parser accepts; parse(to_string(e)) is
/// numerically equal to e.
std::string to_string(const Expr& e);

/// Free symbol names, sorted, deduplicated.
std::vector<std::string> free_symbols(const Expr& e);

/// Shortest decimal form of `v` that round-trips through strtod.
std::string format_double(double v);

}  // namespace shellcalc

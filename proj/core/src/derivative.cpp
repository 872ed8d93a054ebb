#include "shellcalc/derivative.hpp"

namespace shellcalc {

namespace {

Expr d(const Expr& e, const std::string& s) {
    const ExprNode& n = e.node();
    switch (n.kind) {
        case ExprKind::Const:
            return Expr::constant(0.0);
        case ExprKind::Sym:
            return Expr::constant(n.name == s ? 1.0 : 0.0);
        case ExprKind::Add: {
            std::vector<Expr> terms;
            terms.reserve(n.args.size());
            for (const Expr& a : n.args) terms.push_back(d(a, s));
            return Expr::add(std::move(terms));
        }
        case ExprKind::Mul: {
            // n-ary product rule.
            std::vector<Expr> terms;
            terms.reserve(n.args.size());
            for (std::size_t k = 0; k < n.args.size(); ++k) {
                std::vector<Expr> factors;
                factors.reserve(n.args.size());
                for (std::size_t j = 0; j < n.args.size(); ++j) {
                    factors.push_back(j == k ? d(n.args[j], s) : n.args[j]);
                }
                terms.push_back(Expr::mul(std::move(factors)));
            }
            return Expr::add(std::move(terms));
        }
        case ExprKind::Pow: {
            const Expr& u = n.args[0];
            Expr du = d(u, s);
            if (n.half_exponent) {
                // (u^(1/2))' = u' / (2*sqrt(u))
                return du / (Expr::constant(2.0) * Expr::func(FuncName::Sqrt, u));
            }
            return Expr::constant(static_cast<double>(n.exponent)) *
                   Expr::pow(u, n.exponent - 1) * du;
        }
        case ExprKind::Neg:
            return Expr::neg(d(n.args[0], s));
        case ExprKind::Div: {
            const Expr& u = n.args[0];
            const Expr& v = n.args[1];
            return (d(u, s) * v - u * d(v, s)) / Expr::pow(v, 2);
        }
        case ExprKind::Func: {
            const Expr& u = n.args[0];
            Expr du = d(u, s);
            switch (n.func) {
                case FuncName::Sqrt:
                    return du / (Expr::constant(2.0) * Expr::func(FuncName::Sqrt, u));
                case FuncName::Sinh:
                    return Expr::func(FuncName::Cosh, u) * du;
                case FuncName::Cosh:
                    return Expr::func(FuncName::Sinh, u) * du;
                case FuncName::Exp:
                    return Expr::func(FuncName::Exp, u) * du;
            }
            break;
        }
    }
    throw EvalError("corrupt expression node");
}

}  // namespace

Expr diff_explicit(const Expr& e, const std::string& s) { return simplify(d(e, s)); }

}  // namespace shellcalc

#include "shellcalc/whole_partial.hpp"

#include <algorithm>
#include <cmath>

#include "shellcalc/derivative.hpp"

namespace shellcalc {

Expr whole_partial(const Chart& c, const Expr& f, const std::string& v) {
    if (c.is_derived(v)) return diff_explicit(f, v);
    if (!c.is_base(v)) throw EvalError("unknown chart variable: " + v);
    std::vector<Expr> terms;
    terms.push_back(diff_explicit(f, v));
    for (const DerivedVar& d : c.derived()) {
        const Expr* grad = d.gradient(v);
        if (grad == nullptr) continue;
        Expr df_dd = diff_explicit(f, d.name);
        if (df_dd.is_zero()) continue;
        terms.push_back(df_dd * *grad);
    }
    return simplify(Expr::add(std::move(terms)));
}

Expr commutator_apply(const Chart& c, const std::string& v1, const std::string& v2,
                      const Expr& f) {
    Expr first = whole_partial(c, whole_partial(c, f, v2), v1);
    Expr second = whole_partial(c, whole_partial(c, f, v1), v2);
    return simplify(first - second);
}

namespace {

std::string momentum_name(int axis) {
    if (axis < 1 || axis > 3) throw EvalError("momentum axis must be 1, 2 or 3");
    return "p" + std::to_string(axis);
}

}  // namespace

double commutator_coefficient_residual(const Chart& c, int axis, const Expr& f,
                                       Sampler& base_sampler, int trials) {
    const std::string p = momentum_name(axis);
    Expr lhs = commutator_apply(c, p, "E", f);
    Expr rhs = (Expr::symbol(p) / Expr::pow(Expr::symbol("E"), 2)) * diff_explicit(f, "E");
    double worst = 0.0;
    int valid = 0;
    for (int t = 0; t < trials; ++t) {
        Bindings b = base_sampler();
        try {
            Bindings full = c.extend_on_shell(std::move(b));
            worst = std::max(worst, relative_residual(eval(lhs, full), eval(rhs, full)));
            ++valid;
        } catch (const EvalError&) {
            continue;
        }
    }
    if (valid == 0) throw SamplerError("all samples hit singularities");
    return worst;
}

Expr momentum_commutator_apply(const Chart& c, int i, int j, const Expr& f,
                               const Expr& pcomm) {
    momentum_name(i);
    momentum_name(j);
    if (!c.is_derived("E")) throw EvalError("chart has no derived variable E");
    Expr dfdE = diff_explicit(f, "E");
    return simplify(dfdE * pcomm / Expr::pow(Expr::symbol("E"), 3));
}

Complex fd_whole_partial(const Chart& c, const Expr& f, const std::string& v,
                         const Bindings& point, double h) {
    if (h <= 0.0) throw EvalError("finite-difference step must be positive");
    if (c.is_base(v)) {
        // Strip any pre-bound derived values; they are recomputed so the
        // motion follows the constraint surface.
        Bindings base = point;
        for (const DerivedVar& d : c.derived()) base.erase(d.name);
        if (!base.count(v)) throw EvalError("point does not bind " + v);
        auto value_at = [&](double shift) {
            Bindings b = base;
            b[v] += shift;
            return eval(f, c.extend_on_shell(std::move(b)));
        };
        return (value_at(h) - value_at(-h)) / Complex{2.0 * h, 0.0};
    }
    if (!c.is_derived(v)) throw EvalError("unknown chart variable: " + v);
    Bindings full = c.extend_on_shell(point);
    auto value_at = [&](double shift) {
        Bindings b = full;
        b[v] += shift;
        return eval(f, b);
    };
    return (value_at(h) - value_at(-h)) / Complex{2.0 * h, 0.0};
}

DiffOp::DiffOp(const Chart& c, std::vector<std::string> vars) {
    steps_.reserve(vars.size());
    for (std::string& v : vars) {
        if (!c.has_variable(v)) throw EvalError("unknown chart variable: " + v);
        const bool derived = c.is_derived(v);
        steps_.push_back(Step{std::move(v), derived});
    }
}

Expr DiffOp::apply(const Chart& c, Expr f) const {
    for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
        f = whole_partial(c, f, it->var);
    }
    return f;
}

double whole_partial_jacobi_residual(const Chart& chart,
                                     const std::array<std::string, 3>& vars,
                                     const Expr& f, Sampler& base_sampler, int trials) {
    const auto& [a, b, c] = vars;
    // [[a,b],c] + [[b,c],a] + [[c,a],b], each double bracket expanded into
    // the four operator compositions it denotes.
    auto nested = [&](const std::string& x, const std::string& y, const std::string& z) {
        Expr xyz = DiffOp(chart, {x, y, z}).apply(chart, f);
        Expr yxz = DiffOp(chart, {y, x, z}).apply(chart, f);
        Expr zxy = DiffOp(chart, {z, x, y}).apply(chart, f);
        Expr zyx = DiffOp(chart, {z, y, x}).apply(chart, f);
        return simplify(xyz - yxz - zxy + zyx);
    };
    Expr total = simplify(nested(a, b, c) + nested(b, c, a) + nested(c, a, b));
    double worst = 0.0;
    int valid = 0;
    for (int t = 0; t < trials; ++t) {
        try {
            Bindings full = chart.extend_on_shell(base_sampler());
            worst = std::max(worst, std::abs(eval(total, full)));
            ++valid;
        } catch (const EvalError&) {
            continue;
        }
    }
    if (valid == 0) throw SamplerError("all samples hit singularities");
    return worst;
}

}  // namespace shellcalc

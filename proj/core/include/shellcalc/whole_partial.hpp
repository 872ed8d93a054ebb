#pragma once

#include <array>
#include <string>
#include <vector>

#include "shellcalc/chart.hpp"
#include "shellcalc/expr.hpp"
#include "shellcalc/numeric.hpp"

namespace shellcalc {

/// Derivative of f with both explicit and implicit dependence taken into
/// account. For a base variable v this is
///
///   df/dv + sum over derived d of (df/dd) * grad(d, v)
///
/// with the gradients kept in mixed form (NOT substituted); for a derived
/// variable it reduces to the explicit partial. Throws EvalError for a
/// variable outside the chart.
Expr whole_partial(const Chart& c, const Expr& f, const std::string& v);

/// Commutator of two whole-partial operators applied to f:
/// whole_partial(whole_partial(f, v2), v1) - whole_partial(whole_partial(f, v1), v2).
Expr commutator_apply(const Chart& c, const std::string& v1, const std::string& v2,
                      const Expr& f);

/// Max relative residual, over on-shell samples, of
/// commutator_apply(p_axis, E, f) against the closed form (p_axis/E^2) df/dE.
/// `base_sampler` yields base-variable points; derived values are completed
/// on shell before evaluation.
double commutator_coefficient_residual(const Chart& c, int axis, const Expr& f,
                                       Sampler& base_sampler, int trials);

/// Momentum-momentum commutator with the bracket [p_i, p_j] supplied by the
/// caller as an expression: (1/E^3) * df/dE * pcomm.
Expr momentum_commutator_apply(const Chart& c, int i, int j, const Expr& f,
                               const Expr& pcomm);

/// Central finite difference of f along `v` at `point` (base bindings).
/// For a base variable the derived values are recomputed at the shifted
/// points (the motion stays on shell); for a derived variable only that
/// slot is shifted, all other bindings held fixed.
Complex fd_whole_partial(const Chart& c, const Expr& f, const std::string& v,
                         const Bindings& point, double h);

/// An ordered composition of whole-partial operators; vars().front() is
/// applied last. Each step records whether its variable is base or derived
/// in the chart it was built against.
class DiffOp {
public:
    struct Step {
        std::string var;
        bool derived = false;
    };

    DiffOp(const Chart& c, std::vector<std::string> vars);

    const std::vector<Step>& steps() const { return steps_; }

    /// Applies the composition to f (rightmost step first).
    Expr apply(const Chart& c, Expr f) const;

private:
    std::vector<Step> steps_;
};

/// Max (over samples, on shell) absolute Jacobi defect of the whole-partial
/// bracket on the triple (a, b, c):
/// [[a,b],c]f + [[b,c],a]f + [[c,a],b]f, expanded into operator compositions.
/// Operator composition is associative, so this is expected to vanish to
/// rounding; it is computed, not assumed.
double whole_partial_jacobi_residual(const Chart& chart,
                                     const std::array<std::string, 3>& vars,
                                     const Expr& f, Sampler& base_sampler, int trials);

}  // namespace shellcalc

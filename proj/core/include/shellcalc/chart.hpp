#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shellcalc/expr.hpp"
#include "shellcalc/numeric.hpp"

namespace shellcalc {

/// A variable defined by a constraint on the base variables.
///
/// `def` is the defining expression in base symbols only; the effective
/// definition is branch * def. Each gradient is stored in MIXED form: it may
/// contain the derived symbol itself (dE/dp_i kept as "p1/E"), so that a
/// later explicit d/dE acts on it nontrivially. Substituting the definition
/// into the gradients would erase exactly the effect this library computes.
struct DerivedVar {
    std::string name;
    Expr def;
    int branch = +1;
    std::vector<std::pair<std::string, Expr>> gradients;  // base symbol -> mixed-form gradient

    const Expr* gradient(const std::string& base) const;
};

/// A set of base variables plus derived variables with defining constraints
/// and mixed-form gradients. Immutable after construction.
class Chart {
public:
    Chart(std::vector<std::string> base, std::vector<DerivedVar> derived);

    /// Momentum chart: base p1,p2,p3,m; derived E = branch*sqrt(m^2+|p|^2)
    /// with gradients p_i/E (and m/E when with_mass_gradient).
    static Chart standard(int branch = +1, bool with_mass_gradient = true);

    static Chart from_json_text(const std::string& text);
    static Chart load(const std::string& path);
    std::string to_json_text() const;

    const std::vector<std::string>& base() const { return base_; }
    const std::vector<DerivedVar>& derived() const { return derived_; }

    bool is_base(const std::string& name) const;
    bool is_derived(const std::string& name) const;
    bool has_variable(const std::string& name) const { return is_base(name) || is_derived(name); }

    const DerivedVar& derived_var(const std::string& name) const;

    /// Effective defining expression (branch folded in).
    Expr defining(const std::string& derived_name) const;

    /// Adds on-shell values for any derived variable not already bound.
    Bindings extend_on_shell(Bindings point) const;

    /// Max residual of the consistency invariant: for every derived d and
    /// base b, diff_explicit(defining(d), b) must equal the mixed-form
    /// gradient with d substituted by its definition.
    double gradient_consistency_residual(std::uint64_t seed, int trials = 50) const;

    /// Sampler over the base variables; the standard chart uses
    /// standard_base_ranges(), other charts default to [0.5, 2] per base.
    Sampler base_sampler(std::uint64_t seed) const;

private:
    std::vector<std::string> base_;
    std::vector<DerivedVar> derived_;
};

}  // namespace shellcalc

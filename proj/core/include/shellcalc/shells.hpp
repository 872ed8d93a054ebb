#pragma once

#include <array>
#include <functional>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace shellcalc {

/// Mass-shell residuals. Every shell is evaluated as a residual that
/// vanishes exactly on the shell; units c = hbar = 1.

inline constexpr double kPlanckLength = 1.6e-35;

enum class DeformationChoice { None, LinearE, QuadraticE };

const char* deformation_name(DeformationChoice c);
DeformationChoice deformation_from_name(const std::string& s);

struct StandardShell {
    double m = 1.0;
    int branch = +1;
};

struct DeSitterShell {
    double curvature_mass = 1.0;  // M = 1/ell
    double length() const { return 1.0 / curvature_mass; }
    static DeSitterShell from_length(double ell) { return {1.0 / ell}; }
};

struct DeformedShell {
    double m = 1.0;
    double planck_length = kPlanckLength;
    DeformationChoice choice = DeformationChoice::None;
    double alpha = 1.0;
};

struct ShellSpec {
    std::variant<StandardShell, DeSitterShell, DeformedShell> shell;

    // Factories validate the shell parameters: m >= 0, M > 0, L_p > 0.
    static ShellSpec standard(double m, int branch = +1);
    static ShellSpec desitter(double M);
    static ShellSpec deformed(double m, double planck_length, DeformationChoice choice,
                              double alpha);
};

/// branch * sqrt(m^2 + |p|^2).
double shell_energy(const std::array<double, 3>& p, double m, int branch);

/// E^2 - |p|^2 - m^2.
double standard_residual(double energy, const std::array<double, 3>& p, double m);

/// p0^2 - p1^2 - p2^2 - p3^2 - M^2 p4^2 + M^2 for the 5D shell with
/// curvature mass M = 1/ell.
double desitter_residual(const std::array<double, 5>& p, double curvature_mass);

/// The deformation f(E, p, m, L_p):
///   none        -> 0
///   linear-E    -> alpha * L_p   * E   * |p|^2
///   quadratic-E -> alpha * L_p^2 * E^2 * |p|^2
double deformation_term(double energy, const std::array<double, 3>& p, double m,
                        double planck_length, DeformationChoice choice, double alpha);

/// Deformation functions are a registry keyed by name, seeded with the three
/// choices above; callers may register their own f(E, p, m, L_p, alpha).
using DeformationFn =
    std::function<double(double energy, const std::array<double, 3>& p, double m,
                         double planck_length, double alpha)>;

void register_deformation(const std::string& name, DeformationFn fn);
const DeformationFn& deformation(const std::string& name);  // EvalError if unknown
std::vector<std::string> deformation_names();

/// E^2 - |p|^2 - m^2 + f. With choice = none this IS standard_residual
/// (bit-for-bit, not merely equal).
double deformed_residual(double energy, const std::array<double, 3>& p, double m,
                         double planck_length, DeformationChoice choice, double alpha);

struct DeformedMass {
    double mu;
    double m;   // sinh(mu)
    double m4;  // cosh(mu); m4^2 - m^2 = 1
};

DeformedMass mass_relation(double mu);

/// Named shell presets for the CLI; built-ins plus optional JSON overlays.
/// File format:
///   {"schema":1,"specs":[{"name":"...","kind":"standard","m":1.0,"branch":1},
///                        {"name":"...","kind":"desitter","M":1.0},
///                        {"name":"...","kind":"deformed","m":1.0,"Lp":1.6e-35,
///                         "choice":"linear-E","alpha":1.0}]}
/// A de Sitter spec may give "ell" instead of "M" (M = 1/ell).
std::map<std::string, ShellSpec> builtin_shell_presets();
std::map<std::string, ShellSpec> load_shell_presets(const std::string& path);

/// Residual of a spec at a coordinate point. Standard/deformed shells read
/// E, p1, p2, p3 (missing E is completed from the shell's own branch); the
/// de Sitter shell reads p0..p4.
double shell_residual(const ShellSpec& spec, const std::map<std::string, double>& coords);

}  // namespace shellcalc

#include "shellcalc/shells.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "shellcalc/expr.hpp"

namespace shellcalc {

const char* deformation_name(DeformationChoice c) {
    switch (c) {
        case DeformationChoice::None: return "none";
        case DeformationChoice::LinearE: return "linear-E";
        case DeformationChoice::QuadraticE: return "quadratic-E";
    }
    return "?";
}

DeformationChoice deformation_from_name(const std::string& s) {
    if (s == "none") return DeformationChoice::None;
    if (s == "linear-E") return DeformationChoice::LinearE;
    if (s == "quadratic-E") return DeformationChoice::QuadraticE;
    throw EvalError("unknown deformation choice: " + s);
}

namespace {

double norm3_sq(const std::array<double, 3>& p) {
    return p[0] * p[0] + p[1] * p[1] + p[2] * p[2];
}

std::map<std::string, DeformationFn>& deformation_registry() {
    static std::map<std::string, DeformationFn> registry = [] {
        std::map<std::string, DeformationFn> r;
        r["none"] = [](double, const std::array<double, 3>&, double, double, double) {
            return 0.0;
        };
        r["linear-E"] = [](double e, const std::array<double, 3>& p, double, double lp,
                           double alpha) { return alpha * lp * e * norm3_sq(p); };
        r["quadratic-E"] = [](double e, const std::array<double, 3>& p, double, double lp,
                              double alpha) { return alpha * lp * lp * e * e * norm3_sq(p); };
        return r;
    }();
    return registry;
}

}  // namespace

void register_deformation(const std::string& name, DeformationFn fn) {
    deformation_registry()[name] = std::move(fn);
}

const DeformationFn& deformation(const std::string& name) {
    auto& registry = deformation_registry();
    auto it = registry.find(name);
    if (it == registry.end()) throw EvalError("unknown deformation choice: " + name);
    return it->second;
}

std::vector<std::string> deformation_names() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : deformation_registry()) names.push_back(name);
    return names;
}

ShellSpec ShellSpec::standard(double m, int branch) {
    if (m < 0.0) throw EvalError("mass must be non-negative");
    if (branch != 1 && branch != -1) throw EvalError("branch must be +1 or -1");
    return {StandardShell{m, branch}};
}

ShellSpec ShellSpec::desitter(double M) {
    if (M <= 0.0) throw EvalError("curvature mass must be positive");
    return {DeSitterShell{M}};
}

ShellSpec ShellSpec::deformed(double m, double planck_length, DeformationChoice choice,
                              double alpha) {
    if (m < 0.0) throw EvalError("mass must be non-negative");
    if (planck_length <= 0.0) throw EvalError("Planck length must be positive");
    return {DeformedShell{m, planck_length, choice, alpha}};
}

double shell_energy(const std::array<double, 3>& p, double m, int branch) {
    if (m < 0.0) throw EvalError("mass must be non-negative");
    if (branch != 1 && branch != -1) throw EvalError("branch must be +1 or -1");
    return branch * std::sqrt(m * m + norm3_sq(p));
}

double standard_residual(double energy, const std::array<double, 3>& p, double m) {
    return energy * energy - norm3_sq(p) - m * m;
}

double desitter_residual(const std::array<double, 5>& p, double curvature_mass) {
    if (curvature_mass <= 0.0) throw EvalError("curvature mass must be positive");
    const double m2 = curvature_mass * curvature_mass;
    return p[0] * p[0] - p[1] * p[1] - p[2] * p[2] - p[3] * p[3] - m2 * p[4] * p[4] + m2;
}

double deformation_term(double energy, const std::array<double, 3>& p, double m,
                        double planck_length, DeformationChoice choice, double alpha) {
    return deformation(deformation_name(choice))(energy, p, m, planck_length, alpha);
}

double deformed_residual(double energy, const std::array<double, 3>& p, double m,
                         double planck_length, DeformationChoice choice, double alpha) {
    if (choice == DeformationChoice::None) return standard_residual(energy, p, m);
    return standard_residual(energy, p, m) +
           deformation_term(energy, p, m, planck_length, choice, alpha);
}

DeformedMass mass_relation(double mu) {
    if (!std::isfinite(mu)) throw EvalError("mu must be finite");
    return {mu, std::sinh(mu), std::cosh(mu)};
}

std::map<std::string, ShellSpec> builtin_shell_presets() {
    return {
        {"standard", ShellSpec::standard(1.0, +1)},
        {"standard-negative", ShellSpec::standard(1.0, -1)},
        {"desitter", ShellSpec::desitter(1.0)},
        {"deformed-none", ShellSpec::deformed(1.0, kPlanckLength, DeformationChoice::None, 1.0)},
        {"deformed-linear",
         ShellSpec::deformed(1.0, kPlanckLength, DeformationChoice::LinearE, 1.0)},
        {"deformed-quadratic",
         ShellSpec::deformed(1.0, kPlanckLength, DeformationChoice::QuadraticE, 1.0)},
    };
}

std::map<std::string, ShellSpec> load_shell_presets(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw EvalError("cannot open presets file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    nlohmann::json j = nlohmann::json::parse(ss.str());
    std::map<std::string, ShellSpec> out = builtin_shell_presets();
    for (const auto& sj : j.at("specs")) {
        const std::string name = sj.at("name").get<std::string>();
        const std::string kind = sj.at("kind").get<std::string>();
        if (kind == "standard") {
            out[name] = ShellSpec::standard(sj.at("m").get<double>(), sj.value("branch", 1));
        } else if (kind == "desitter") {
            double M = sj.contains("ell") ? 1.0 / sj.at("ell").get<double>()
                                          : sj.at("M").get<double>();
            out[name] = ShellSpec::desitter(M);
        } else if (kind == "deformed") {
            out[name] = ShellSpec::deformed(
                sj.at("m").get<double>(), sj.value("Lp", kPlanckLength),
                deformation_from_name(sj.value("choice", std::string("none"))),
                sj.value("alpha", 1.0));
        } else {
            throw EvalError("unknown shell kind: " + kind);
        }
    }
    return out;
}

namespace {

double coord(const std::map<std::string, double>& coords, const std::string& name) {
    auto it = coords.find(name);
    if (it == coords.end()) throw EvalError("missing coordinate: " + name);
    return it->second;
}

double coord_or(const std::map<std::string, double>& coords, const std::string& name,
                double fallback) {
    auto it = coords.find(name);
    return it == coords.end() ? fallback : it->second;
}

}  // namespace

double shell_residual(const ShellSpec& spec, const std::map<std::string, double>& coords) {
    if (const auto* s = std::get_if<StandardShell>(&spec.shell)) {
        std::array<double, 3> p{coord_or(coords, "p1", 0.0), coord_or(coords, "p2", 0.0),
                                coord_or(coords, "p3", 0.0)};
        double m = coord_or(coords, "m", s->m);
        double e = coords.count("E") ? coord(coords, "E") : shell_energy(p, m, s->branch);
        return standard_residual(e, p, m);
    }
    if (const auto* s = std::get_if<DeSitterShell>(&spec.shell)) {
        std::array<double, 5> p{coord(coords, "p0"), coord_or(coords, "p1", 0.0),
                                coord_or(coords, "p2", 0.0), coord_or(coords, "p3", 0.0),
                                coord(coords, "p4")};
        return desitter_residual(p, s->curvature_mass);
    }
    const auto& s = std::get<DeformedShell>(spec.shell);
    std::array<double, 3> p{coord_or(coords, "p1", 0.0), coord_or(coords, "p2", 0.0),
                            coord_or(coords, "p3", 0.0)};
    double m = coord_or(coords, "m", s.m);
    double e = coords.count("E") ? coord(coords, "E") : shell_energy(p, m, +1);
    return deformed_residual(e, p, m, s.planck_length, s.choice, s.alpha);
}

}  // namespace shellcalc

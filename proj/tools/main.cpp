// shellcalc: command-line front end for the on-shell derivative calculus,
// helicity field constructions, mass-shell residuals and coordinate algebras.

#include <array>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "shellcalc/chart.hpp"
#include "shellcalc/derivative.hpp"
#include "shellcalc/gamma.hpp"
#include "shellcalc/helicity.hpp"
#include "shellcalc/ncalgebra.hpp"
#include "shellcalc/numeric.hpp"
#include "shellcalc/parser.hpp"
#include "shellcalc/shells.hpp"
#include "shellcalc/verify.hpp"
#include "shellcalc/whole_partial.hpp"

namespace {

using nlohmann::json;
using namespace shellcalc;

constexpr int kExitVerifyFailure = 1;
constexpr int kExitParseError = 2;
constexpr int kExitEvalError = 3;

json complex_json(Complex v) { return json::array({v.real(), v.imag()}); }

json vec3_json(const std::array<Complex, 3>& v) {
    return json::array({complex_json(v[0]), complex_json(v[1]), complex_json(v[2])});
}

json four_vector_json(const FourVector& v) {
    json arr = json::array();
    for (int mu = 0; mu < 4; ++mu) arr.push_back(complex_json(v[mu]));
    return arr;
}

std::string format_complex(Complex v) {
    if (v.imag() == 0.0) return format_double(v.real());
    std::string s = format_double(v.real());
    s += v.imag() < 0.0 ? " - " : " + ";
    s += format_double(std::abs(v.imag()));
    s += "i";
    return s;
}

// --at tokens: "name=value" or "p=x,y,z" (expands to p1,p2,p3).
Bindings parse_at(const std::vector<std::string>& tokens) {
    Bindings out;
    for (const std::string& tok : tokens) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) {
            throw EvalError("--at expects name=value, got '" + tok + "'");
        }
        const std::string name = tok.substr(0, eq);
        const std::string value = tok.substr(eq + 1);
        std::vector<double> parts;
        std::size_t pos = 0;
        while (pos <= value.size()) {
            auto comma = value.find(',', pos);
            std::string piece =
                value.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            try {
                std::size_t used = 0;
                parts.push_back(std::stod(piece, &used));
                if (used != piece.size()) throw std::invalid_argument(piece);
            } catch (const std::exception&) {
                throw EvalError("--at: cannot parse number '" + piece + "'");
            }
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (parts.size() == 1) {
            out[name] = Complex{parts[0], 0.0};
        } else if (parts.size() == 3 && name == "p") {
            out["p1"] = Complex{parts[0], 0.0};
            out["p2"] = Complex{parts[1], 0.0};
            out["p3"] = Complex{parts[2], 0.0};
        } else {
            throw EvalError("--at: vector form is only p=x,y,z");
        }
    }
    return out;
}

std::array<double, 3> parse_vec3(const std::string& text) {
    Bindings b = parse_at({"p=" + text});
    return {b.at("p1").real(), b.at("p2").real(), b.at("p3").real()};
}

Chart chart_from_options(const std::string& chart_file, int branch) {
    if (!chart_file.empty()) return Chart::load(chart_file);
    return Chart::standard(branch);
}

struct DeriveArgs {
    std::string expr_text;
    std::string var;
    std::string chart_file;
    int branch = +1;
    std::vector<std::string> at;
    double h = 1e-5;
    double tol = 1e-6;
    bool as_json = false;
};

int cmd_derive(const DeriveArgs& args) {
    const Chart chart = chart_from_options(args.chart_file, args.branch);
    const Expr f = parse(args.expr_text);
    const Expr df = whole_partial(chart, f, args.var);
    json out{{"schema", 1},
             {"expr", args.expr_text},
             {"variable", args.var},
             {"derivative", to_string(df)}};
    Complex value{}, fd{};
    if (!args.at.empty()) {
        const Bindings point = parse_at(args.at);
        value = eval(df, chart.extend_on_shell(point));
        fd = fd_whole_partial(chart, f, args.var, point, args.h);
        const double residual = relative_residual(value, fd);
        out["value"] = complex_json(value);
        out["fd_value"] = complex_json(fd);
        out["fd_residual"] = residual;
        out["fd_agrees"] = residual <= args.tol;
    }
    if (args.as_json) {
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "d(" << args.expr_text << ")/d(" << args.var << ") = " << to_string(df) << "\n";
    if (out.contains("value")) {
        std::cout << "value       = " << format_complex(value) << "\n";
        std::printf("fd value    = %s\nfd residual = %.12g (%s)\n", format_complex(fd).c_str(),
                    out["fd_residual"].get<double>(),
                    out["fd_agrees"].get<bool>() ? "agrees" : "DISAGREES");
    }
    return 0;
}

struct CommuteArgs {
    std::string expr_text;
    std::string v1, v2;
    std::string chart_file;
    int branch = +1;
    std::vector<std::string> at;
    std::string pcomm_text;
    std::uint64_t seed = 42;
    int samples = 200;
    double tol = 1e-9;
    bool as_json = false;
};

int axis_of(const std::string& name) {
    if (name == "p1") return 1;
    if (name == "p2") return 2;
    if (name == "p3") return 3;
    return 0;
}

int cmd_commute(const CommuteArgs& args) {
    const Chart chart = chart_from_options(args.chart_file, args.branch);
    const Expr f = parse(args.expr_text);
    json out{{"schema", 1}, {"expr", args.expr_text}, {"v1", args.v1}, {"v2", args.v2}};

    Expr result;
    const int i = axis_of(args.v1);
    const int j = axis_of(args.v2);
    if (!args.pcomm_text.empty()) {
        if (i == 0 || j == 0) {
            throw EvalError("--pcomm applies to momentum-momentum commutators");
        }
        result = momentum_commutator_apply(chart, i, j, f, parse(args.pcomm_text));
        out["pcomm"] = args.pcomm_text;
    } else {
        result = commutator_apply(chart, args.v1, args.v2, f);
    }
    out["commutator"] = to_string(result);

    // Closed-form comparison for the momentum/energy bracket.
    std::optional<std::pair<int, double>> closed;  // axis, sign
    if (i != 0 && args.v2 == "E") closed = {{i, 1.0}};
    if (j != 0 && args.v1 == "E") closed = {{j, -1.0}};

    if (!args.at.empty()) {
        const Bindings full = chart.extend_on_shell(parse_at(args.at));
        const Complex value = eval(result, full);
        out["value"] = complex_json(value);
        if (closed) {
            const Expr rhs = (Expr::symbol("p" + std::to_string(closed->first)) /
                              Expr::pow(Expr::symbol("E"), 2)) *
                             diff_explicit(f, "E");
            const Complex expected = Complex{closed->second, 0.0} * eval(rhs, full);
            out["closed_form_residual"] = relative_residual(value, expected);
        }
    } else if (closed && args.pcomm_text.empty()) {
        Sampler s = chart.base_sampler(args.seed);
        double residual =
            commutator_coefficient_residual(chart, closed->first, f, s, args.samples);
        out["closed_form_residual"] = residual;
        out["samples"] = args.samples;
        out["seed"] = args.seed;
    }
    if (out.contains("closed_form_residual")) {
        out["closed_form_agrees"] = out["closed_form_residual"].get<double>() <= args.tol;
    }

    if (args.as_json) {
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "[d/d" << args.v1 << ", d/d" << args.v2 << "](" << args.expr_text
              << ") = " << out["commutator"].get<std::string>() << "\n";
    if (out.contains("value")) {
        std::cout << "value = "
                  << format_complex(
                         {out["value"][0].get<double>(), out["value"][1].get<double>()})
                  << "\n";
    }
    if (out.contains("closed_form_residual")) {
        std::printf("closed-form residual = %.12g (%s)\n",
                    out["closed_form_residual"].get<double>(),
                    out["closed_form_agrees"].get<bool>() ? "agrees" : "DISAGREES");
    }
    return 0;
}

struct KinArgs {
    std::string p_text;
    double m = 1.0;
};

Kinematics kin_from(const KinArgs& args) {
    const auto p = parse_vec3(args.p_text);
    return Kinematics(p[0], p[1], p[2], args.m);
}

int cmd_polvec(const KinArgs& kargs, const std::string& lambda_text, bool as_json) {
    const auto lambda = lambda_from_name(lambda_text);
    if (!lambda) throw EvalError("unknown helicity label: " + lambda_text);
    const Kinematics k = kin_from(kargs);
    const FourVector eps = pol_vector(k, *lambda);
    if (as_json) {
        json out{{"schema", 1},
                 {"lambda", lambda_name(*lambda)},
                 {"epsilon", four_vector_json(eps)},
                 {"norm", complex_json(eps.minkowski_dot_conj(eps))}};
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "epsilon(lambda=" << lambda_name(*lambda) << ") =";
    for (int mu = 0; mu < 4; ++mu) std::cout << "  " << format_complex(eps[mu]);
    std::cout << "\nminkowski norm = " << format_complex(eps.minkowski_dot_conj(eps)) << "\n";
    return 0;
}

int cmd_fields(const KinArgs& kargs, const std::string& lambda_text,
               const std::string& source, bool as_json) {
    const auto lambda = lambda_from_name(lambda_text);
    if (!lambda) throw EvalError("unknown helicity label: " + lambda_text);
    const Kinematics k = kin_from(kargs);
    FieldTriple ft;
    if (source == "closed") {
        ft = fields_closed(k, *lambda);
    } else if (source == "potential") {
        ft = fields_from_potential(k, pol_vector(k, *lambda), *lambda);
    } else {
        throw EvalError("--source must be closed or potential");
    }
    if (as_json) {
        json out{{"schema", 1},
                 {"lambda", lambda_name(*lambda)},
                 {"source", source},
                 {"E", vec3_json(ft.efield)},
                 {"B", vec3_json(ft.bfield)}};
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "E(lambda=" << lambda_name(*lambda) << ") =";
    for (Complex c : ft.efield) std::cout << "  " << format_complex(c);
    std::cout << "\nB(lambda=" << lambda_name(*lambda) << ") =";
    for (Complex c : ft.bfield) std::cout << "  " << format_complex(c);
    std::cout << "\n";
    return 0;
}

struct AnsatzArgs {
    std::string expr_text;
    KinArgs kin;
    bool no_i_factor = false;
    bool jacobi = false;
    std::uint64_t seed = 42;
    bool as_json = false;
};

int cmd_ansatz(const AnsatzArgs& args) {
    const Chart chart = Chart::standard();
    const Kinematics k = kin_from(args.kin);
    const Expr f = parse(args.expr_text);
    AnsatzOptions opts;
    opts.position_i_factor = !args.no_i_factor;
    const AnsatzResult ar = ansatz_commutator(chart, k, f, opts);
    const FieldTriple longitudinal = longitudinal_fields(k);

    json out{{"schema", 1},
             {"expr", args.expr_text},
             {"energy_dependent", ar.energy_dependent},
             {"longitudinal_E", vec3_json(longitudinal.efield)}};
    json coeff = json::array();
    for (int axis = 1; axis <= 3; ++axis) coeff.push_back(complex_json(ar.coeff[0][axis]));
    out["coefficient_0i"] = coeff;
    json omega = json::array();
    for (const auto& w : ar.omega) {
        omega.push_back(w ? complex_json(*w) : json());
    }
    out["omega"] = omega;

    if (ar.energy_dependent) {
        const std::array<Complex, 3> v{ar.coeff[0][1], ar.coeff[0][2], ar.coeff[0][3]};
        const auto& e = longitudinal.efield;
        const Complex cross[3] = {v[1] * e[2] - v[2] * e[1], v[2] * e[0] - v[0] * e[2],
                                  v[0] * e[1] - v[1] * e[0]};
        double norm = 0.0;
        for (const Complex& c : cross) norm += std::norm(c);
        out["parallelism_cross_norm"] = std::sqrt(norm);
        double spread = 0.0, scale = 0.0;
        for (const auto& w : ar.omega) {
            if (w) scale = std::max(scale, std::abs(*w));
        }
        for (int i = 0; i < 3; ++i) {
            for (int j = i + 1; j < 3; ++j) {
                if (ar.omega[i] && ar.omega[j]) {
                    spread = std::max(spread,
                                      std::abs(*ar.omega[i] - *ar.omega[j]) / (1.0 + scale));
                }
            }
        }
        out["omega_spread"] = spread;
    }

    if (args.jacobi) {
        json jac = json::object();
        const std::array<std::array<std::string, 3>, 2> triples{
            {{"p1", "p2", "p3"}, {"E", "p1", "p2"}}};
        for (const auto& triple : triples) {
            Sampler s = chart.base_sampler(sub_seed(args.seed, triple[0] + triple[1] + triple[2]));
            double r = whole_partial_jacobi_residual(chart, triple, f, s, 25);
            jac[triple[0] + "," + triple[1] + "," + triple[2]] = r;
        }
        out["bracket_jacobi_residual"] = jac;
    }

    if (args.as_json) {
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "coefficient of df/dE in [x^0, x^i]:";
    for (int axis = 1; axis <= 3; ++axis) std::cout << "  " << format_complex(ar.coeff[0][axis]);
    std::cout << "\nomega per axis:";
    for (const auto& w : ar.omega) std::cout << "  " << (w ? format_complex(*w) : "absent");
    std::cout << "\n";
    if (out.contains("parallelism_cross_norm")) {
        std::printf("parallelism cross norm = %.12g\nomega spread = %.12g\n",
                    out["parallelism_cross_norm"].get<double>(),
                    out["omega_spread"].get<double>());
    }
    if (args.jacobi) {
        for (const auto& [name, val] : out["bracket_jacobi_residual"].items()) {
            std::printf("bracket jacobi [%s] = %.12g\n", name.c_str(), val.get<double>());
        }
    }
    return 0;
}

int cmd_shell(const std::string& name, const std::string& presets_file,
              const std::vector<std::string>& at, bool as_json) {
    const auto presets =
        presets_file.empty() ? builtin_shell_presets() : load_shell_presets(presets_file);
    auto it = presets.find(name);
    if (it == presets.end()) throw EvalError("unknown shell preset: " + name);
    std::map<std::string, double> coords;
    for (const auto& [k, v] : parse_at(at)) coords[k] = v.real();
    const double residual = shell_residual(it->second, coords);
    if (as_json) {
        json out{{"schema", 1}, {"shell", name}, {"residual", residual}};
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::printf("%s residual = %.12g\n", name.c_str(), residual);
    return 0;
}

struct DiracArgs {
    std::string p_text;  // p0,p1,p2,p3
    double p4 = 1.0;
    double mu = 0.0;
    std::string variant = "psi";
    std::string reading = "half";
    bool as_json = false;
};

int cmd_dirac(const DiracArgs& args) {
    std::array<double, 4> p{};
    {
        std::size_t pos = 0;
        int idx = 0;
        const std::string& t = args.p_text;
        while (idx < 4) {
            auto comma = t.find(',', pos);
            std::string piece =
                t.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            p[idx++] = std::stod(piece);
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (idx != 4) throw EvalError("--p expects p0,p1,p2,p3");
    }
    const MassTermReading reading = args.reading == "half" ? MassTermReading::HalfArgument
                                   : args.reading == "full" ? MassTermReading::FullArgument
                                   : throw EvalError("--reading must be half or full");
    std::vector<DiracVariant> variants;
    if (args.variant == "psi") variants = {DiracVariant::Psi};
    else if (args.variant == "psiR") variants = {DiracVariant::PsiR};
    else if (args.variant == "both") variants = {DiracVariant::Psi, DiracVariant::PsiR};
    else throw EvalError("--variant must be psi, psiR or both");

    json out{{"schema", 1}, {"p", args.p_text}, {"p4", args.p4}, {"mu", args.mu}};
    json results = json::array();
    for (DiracVariant v : variants) {
        const DiracShellResidual r = dirac_shell_residual(p, args.p4, args.mu, v, reading);
        results.push_back({{"variant", v == DiracVariant::Psi ? "psi" : "psiR"},
                           {"det", complex_json(r.det)},
                           {"abs_det", std::abs(r.det)},
                           {"algebraic_residual", r.algebraic}});
    }
    out["results"] = results;
    if (args.as_json) {
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    for (const auto& r : results) {
        std::printf("%s: |det| = %.12g, algebraic residual = %.12g\n",
                    r["variant"].get<std::string>().c_str(), r["abs_det"].get<double>(),
                    r["algebraic_residual"].get<double>());
    }
    return 0;
}

struct AlgebraArgs {
    std::string file;
    std::string preset = "kappa";
    double kappa = 1.0;
    std::string commutator_pair;  // "g1,g2"
    bool jacobi = false;
    bool as_json = false;
};

int cmd_algebra(const AlgebraArgs& args) {
    CoordAlgebra algebra = !args.file.empty()   ? CoordAlgebra::load(args.file)
                           : args.preset == "kappa" ? CoordAlgebra::kappa_minkowski(args.kappa)
                                                    : throw EvalError("unknown algebra preset: " +
                                                                      args.preset);
    json out{{"schema", 1}, {"generators", algebra.generators()}};
    if (!args.commutator_pair.empty()) {
        auto comma = args.commutator_pair.find(',');
        if (comma == std::string::npos) throw EvalError("--commutator expects g1,g2");
        const std::string g1 = args.commutator_pair.substr(0, comma);
        const std::string g2 = args.commutator_pair.substr(comma + 1);
        const AlgebraElement el = commutator(algebra, g1, g2);
        json coeffs = json::object();
        for (std::size_t k = 0; k < algebra.dimension(); ++k) {
            if (el.coeffs[k] != Complex{0.0, 0.0}) {
                coeffs[algebra.generators()[k]] = complex_json(el.coeffs[k]);
            }
        }
        out["commutator"] = {{"pair", {g1, g2}},
                             {"scalar", complex_json(el.scalar)},
                             {"coeffs", coeffs}};
    }
    if (args.jacobi || args.commutator_pair.empty()) {
        out["jacobi_residual"] = jacobi_residual(algebra);
    }
    if (args.as_json) {
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    if (out.contains("commutator")) {
        std::cout << "[" << out["commutator"]["pair"][0].get<std::string>() << ", "
                  << out["commutator"]["pair"][1].get<std::string>() << "] = ";
        const auto& el = out["commutator"];
        std::string rendered;
        const auto scalar = Complex{el["scalar"][0].get<double>(), el["scalar"][1].get<double>()};
        if (scalar != Complex{0.0, 0.0}) rendered = format_complex(scalar);
        for (const auto& [g, c] : el["coeffs"].items()) {
            if (!rendered.empty()) rendered += " + ";
            rendered += "(" + format_complex({c[0].get<double>(), c[1].get<double>()}) + ")*" + g;
        }
        std::cout << (rendered.empty() ? "0" : rendered) << "\n";
    }
    if (out.contains("jacobi_residual")) {
        std::printf("jacobi residual = %.12g\n", out["jacobi_residual"].get<double>());
    }
    return 0;
}

int cmd_verify(std::uint64_t seed, std::optional<double> tol, bool as_json) {
    VerifyOptions opts;
    opts.seed = seed;
    opts.tolerance_override = tol;
    const VerifyReport report = run_verify(opts);
    if (as_json) {
        std::cout << verify_report_json(report) << "\n";
    } else {
        std::cout << verify_report_text(report);
    }
    return report.all_passed() ? 0 : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"on-shell derivative calculus, helicity fields, mass shells and "
                 "coordinate algebras"};
    app.set_version_flag("--version", "shellcalc 0.1.0");
    app.require_subcommand(1);

    DeriveArgs derive_args;
    auto* derive = app.add_subcommand("derive", "whole-partial derivative of an expression");
    derive->add_option("expr", derive_args.expr_text, "expression")->required();
    derive->add_option("--var", derive_args.var, "variable to differentiate by")->required();
    derive->add_option("--chart", derive_args.chart_file, "chart JSON file");
    derive->add_option("--branch", derive_args.branch, "energy branch of the standard chart")
        ->check(CLI::IsMember({1, -1}));
    derive->add_option("--at", derive_args.at, "point bindings, e.g. --at p=1,0,0 m=2");
    derive->add_option("--step", derive_args.h, "finite-difference step");
    derive->add_option("--tol", derive_args.tol, "agreement tolerance");
    derive->add_flag("--json", derive_args.as_json, "machine-readable output");

    CommuteArgs commute_args;
    auto* commute = app.add_subcommand("commute", "commutator of two whole-partial operators");
    commute->add_option("expr", commute_args.expr_text, "expression")->required();
    commute->add_option("v1", commute_args.v1, "first variable")->required();
    commute->add_option("v2", commute_args.v2, "second variable")->required();
    commute->add_option("--chart", commute_args.chart_file, "chart JSON file");
    commute->add_option("--branch", commute_args.branch, "energy branch of the standard chart")
        ->check(CLI::IsMember({1, -1}));
    commute->add_option("--at", commute_args.at, "point bindings");
    commute->add_option("--pcomm", commute_args.pcomm_text,
                        "expression for [p_i, p_j], e.g. i*B3");
    commute->add_option("--seed", commute_args.seed, "sampler seed");
    commute->add_option("--samples", commute_args.samples, "sample count");
    commute->add_option("--tol", commute_args.tol, "agreement tolerance");
    commute->add_flag("--json", commute_args.as_json, "machine-readable output");

    KinArgs pol_kin;
    std::string pol_lambda;
    bool pol_json = false;
    auto* polvec = app.add_subcommand("polvec", "helicity-basis polarization 4-vector");
    polvec->add_option("--p", pol_kin.p_text, "momentum x,y,z")->required();
    polvec->add_option("--m", pol_kin.m, "mass")->required();
    polvec->add_option("--lambda", pol_lambda, "helicity: +1, -1, 0 or 0t")->required();
    polvec->add_flag("--json", pol_json, "machine-readable output");

    KinArgs field_kin;
    std::string field_lambda;
    std::string field_source = "closed";
    bool field_json = false;
    auto* fields = app.add_subcommand("fields", "E and B fields of a helicity mode");
    fields->add_option("--p", field_kin.p_text, "momentum x,y,z")->required();
    fields->add_option("--m", field_kin.m, "mass")->required();
    fields->add_option("--lambda", field_lambda, "helicity: +1, -1 or 0")->required();
    fields->add_option("--source", field_source, "closed | potential");
    fields->add_flag("--json", field_json, "machine-readable output");

    AnsatzArgs ansatz_args;
    auto* ansatz = app.add_subcommand(
        "ansatz", "coordinate-commutator coefficients and extracted weight");
    ansatz->add_option("expr", ansatz_args.expr_text, "test function")->required();
    ansatz->add_option("--p", ansatz_args.kin.p_text, "momentum x,y,z")->required();
    ansatz->add_option("--m", ansatz_args.kin.m, "mass")->required();
    ansatz->add_flag("--no-i-factor", ansatz_args.no_i_factor,
                     "drop the i factor in the position-operator correspondence");
    ansatz->add_flag("--jacobi", ansatz_args.jacobi,
                     "also report the bracket's triple-nesting residual");
    ansatz->add_option("--seed", ansatz_args.seed, "sampler seed");
    ansatz->add_flag("--json", ansatz_args.as_json, "machine-readable output");

    std::string shell_name;
    std::string shell_presets;
    std::vector<std::string> shell_at;
    bool shell_json = false;
    auto* shell = app.add_subcommand("shell", "mass-shell residual at a point");
    shell->add_option("--shell", shell_name, "preset name")->required();
    shell->add_option("--presets", shell_presets, "presets JSON file");
    shell->add_option("--at", shell_at, "coordinates, e.g. --at E=5 p=4,0,0 or p0=1 p4=1");
    shell->add_flag("--json", shell_json, "machine-readable output");

    DiracArgs dirac_args;
    auto* dirac = app.add_subcommand("dirac", "spinor-operator determinant and shell residual");
    dirac->add_option("--p", dirac_args.p_text, "four-momentum p0,p1,p2,p3")->required();
    dirac->add_option("--p4", dirac_args.p4, "fifth momentum component")->required();
    dirac->add_option("--mu", dirac_args.mu, "rapidity-like mass parameter")->required();
    dirac->add_option("--variant", dirac_args.variant, "psi | psiR | both");
    dirac->add_option("--reading", dirac_args.reading,
                      "mass-term reading: half (2 sinh(mu/2)) or full (sinh mu)");
    dirac->add_flag("--json", dirac_args.as_json, "machine-readable output");

    AlgebraArgs algebra_args;
    auto* algebra = app.add_subcommand("algebra", "coordinate algebra brackets and Jacobi check");
    algebra->add_option("--file", algebra_args.file, "algebra JSON file");
    algebra->add_option("--preset", algebra_args.preset, "built-in preset (kappa)");
    algebra->add_option("--kappa", algebra_args.kappa, "kappa for the preset");
    algebra->add_option("--commutator", algebra_args.commutator_pair, "generator pair g1,g2");
    algebra->add_flag("--jacobi", algebra_args.jacobi, "report the Jacobi residual");
    algebra->add_flag("--json", algebra_args.as_json, "machine-readable output");

    std::uint64_t verify_seed = 42;
    std::optional<double> verify_tol;
    double verify_tol_value = 0.0;
    bool verify_json = false;
    auto* verify = app.add_subcommand("verify", "run the full reproduction suite");
    verify->add_option("--seed", verify_seed, "suite seed");
    auto* tol_opt = verify->add_option("--tol", verify_tol_value,
                                       "override every upper-bound tolerance");
    verify->add_flag("--json", verify_json, "machine-readable output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (derive->parsed()) return cmd_derive(derive_args);
        if (commute->parsed()) return cmd_commute(commute_args);
        if (polvec->parsed()) return cmd_polvec(pol_kin, pol_lambda, pol_json);
        if (fields->parsed()) return cmd_fields(field_kin, field_lambda, field_source, field_json);
        if (ansatz->parsed()) return cmd_ansatz(ansatz_args);
        if (shell->parsed()) return cmd_shell(shell_name, shell_presets, shell_at, shell_json);
        if (dirac->parsed()) return cmd_dirac(dirac_args);
        if (algebra->parsed()) return cmd_algebra(algebra_args);
        if (verify->parsed()) {
            if (tol_opt->count() > 0) verify_tol = verify_tol_value;
            return cmd_verify(verify_seed, verify_tol, verify_json);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error at byte " << e.offset << ": " << e.what() << "\n";
        return kExitParseError;
    } catch (const EvalError& e) {
        std::cerr << "evaluation error: " << e.what() << "\n";
        return kExitEvalError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitEvalError;
    }
    return 0;
}

#include "shellcalc/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstring>
#include <functional>
#include <random>

#include <json.hpp>

#include "shellcalc/chart.hpp"
#include "shellcalc/derivative.hpp"
#include "shellcalc/gamma.hpp"
#include "shellcalc/helicity.hpp"
#include "shellcalc/ncalgebra.hpp"
#include "shellcalc/numeric.hpp"
#include "shellcalc/parser.hpp"
#include "shellcalc/shells.hpp"
#include "shellcalc/whole_partial.hpp"

namespace shellcalc {

bool VerifyReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const VerifyCheck& c) { return c.passed; });
}

namespace {

struct BatteryFn {
    const char* name;
    const char* f;
    const char* dfdE;  // hand-written derivative, the independent route
};

// Fixed battery mixing E, momentum components, sinh and exp.
const BatteryFn kBattery[] = {
    {"f01", "E*p1", "p1"},
    {"f02", "p3^2", "0"},
    {"f03", "exp(E)*sinh(p2)", "exp(E)*sinh(p2)"},
    {"f04", "E^2 + p1*p2", "2*E"},
    {"f05", "sinh(E)*cosh(p1)", "cosh(E)*cosh(p1)"},
    {"f06", "p1*p2*p3/E", "-p1*p2*p3/E^2"},
    {"f07", "E*sinh(p3)", "sinh(p3)"},
    {"f08", "exp(p2)*E^2", "2*exp(p2)*E"},
    {"f09", "(p1^2 + p2^2)/E^2", "-2*(p1^2 + p2^2)/E^3"},
    {"f10", "cosh(E/2)*p2 + exp(p3)", "sinh(E/2)*p2/2"},
};

double rand_in(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform_unit(rng);
}

double rand_signed(std::mt19937_64& rng, double lo, double hi) {
    double v = rand_in(rng, lo, hi);
    return (rng() & 1u) ? -v : v;
}

Kinematics random_kinematics(std::mt19937_64& rng) {
    return Kinematics(rand_signed(rng, 0.1, 2.0), rand_signed(rng, 0.1, 2.0),
                      rand_signed(rng, 0.1, 2.0), rand_in(rng, 0.5, 2.0));
}

Bindings random_base_point(std::mt19937_64& rng) {
    return {{"p1", Complex{rand_signed(rng, 0.1, 2.0), 0.0}},
            {"p2", Complex{rand_signed(rng, 0.1, 2.0), 0.0}},
            {"p3", Complex{rand_signed(rng, 0.1, 2.0), 0.0}},
            {"m", Complex{rand_in(rng, 0.5, 2.0), 0.0}}};
}

// Random smooth test function with guaranteed curvature along `v`, so the
// central-difference truncation term never degenerates.
Expr random_smooth(std::mt19937_64& rng, const std::string& v) {
    static const char* cores[] = {"sinh(%/2)", "cosh(%/2)", "exp(%/3)", "%^3"};
    static const char* extras[] = {"E",          "p1",          "p2",       "p3",
                                   "m",          "E*p1",        "p2*p3",    "E^2",
                                   "p1*p2/E",    "sinh(p2)",    "cosh(p3)", "exp(E/3)",
                                   "m*E",        "sqrt(m^2 + p1^2)",        "p3^2"};
    std::string core = cores[rng() % std::size(cores)];
    auto at = core.find('%');
    core.replace(at, 1, v);
    Expr f = Expr::constant(rand_signed(rng, 0.5, 1.5)) * parse(core);
    const int n_extra = static_cast<int>(rng() % 4);
    for (int k = 0; k < n_extra; ++k) {
        Expr term = parse(extras[rng() % std::size(extras)]);
        f = f + Expr::constant(rand_signed(rng, 0.25, 1.5)) * term;
    }
    return f;
}

struct CheckBuilder {
    std::uint64_t seed;
    std::optional<double> tol_override;
    std::vector<VerifyCheck>* out;

    void add(const std::string& name, int criterion, double tolerance,
             CheckDirection direction, const std::function<double(std::mt19937_64&, long&)>& body) {
        VerifyCheck c;
        c.name = name;
        c.criterion = criterion;
        c.direction = direction;
        c.tolerance = (direction == CheckDirection::AtMost && tol_override)
                          ? *tol_override
                          : tolerance;
        std::mt19937_64 rng(sub_seed(seed, name));
        auto start = std::chrono::steady_clock::now();
        c.residual = body(rng, c.samples);
        c.wall_ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
        c.passed = direction == CheckDirection::AtMost ? c.residual <= c.tolerance
                                                       : c.residual >= c.tolerance;
        out->push_back(std::move(c));
    }
};

// --- criterion 1: whole-partial vs on-shell central finite difference ---

double check_fd_oracle(std::mt19937_64& rng, long& samples) {
    const Chart chart = Chart::standard();
    const char* vars[] = {"p1", "p2", "p3", "m", "E"};
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        const std::string v = vars[rng() % std::size(vars)];
        const Expr f = random_smooth(rng, v);
        const Bindings point = random_base_point(rng);
        const Complex wp = eval(whole_partial(chart, f, v), chart.extend_on_shell(point));
        const Complex fd = fd_whole_partial(chart, f, v, point, 1e-5);
        worst = std::max(worst, relative_residual(wp, fd));
        ++samples;
    }
    return worst;
}

double check_fd_order(std::mt19937_64& rng, long& samples) {
    const Chart chart = Chart::standard();
    const char* vars[] = {"p1", "p2", "p3", "m", "E"};
    const double hs[] = {1e-3, 1e-4, 1e-5};
    double sq_sum[3] = {0.0, 0.0, 0.0};
    const int pairs = 100;
    for (int k = 0; k < pairs; ++k) {
        const std::string v = vars[rng() % std::size(vars)];
        const Expr f = random_smooth(rng, v);
        const Bindings point = random_base_point(rng);
        const Complex wp = eval(whole_partial(chart, f, v), chart.extend_on_shell(point));
        for (int hi = 0; hi < 3; ++hi) {
            const Complex fd = fd_whole_partial(chart, f, v, point, hs[hi]);
            const double r = relative_residual(wp, fd);
            sq_sum[hi] += r * r;
            ++samples;
        }
    }
    // Least-squares slope of log(rms error) against log(h).
    double x[3], y[3], xbar = 0.0, ybar = 0.0;
    for (int hi = 0; hi < 3; ++hi) {
        x[hi] = std::log(hs[hi]);
        y[hi] = 0.5 * std::log(sq_sum[hi] / pairs);
        xbar += x[hi] / 3.0;
        ybar += y[hi] / 3.0;
    }
    double num = 0.0, den = 0.0;
    for (int hi = 0; hi < 3; ++hi) {
        num += (x[hi] - xbar) * (y[hi] - ybar);
        den += (x[hi] - xbar) * (x[hi] - xbar);
    }
    const double order = num / den;
    return std::abs(order - 2.0);
}

// --- criterion 2: commutator closed form, both branches ---

double check_commutator_closed_form(std::mt19937_64& rng, long& samples) {
    double worst = 0.0;
    for (int branch : {+1, -1}) {
        const Chart chart = Chart::standard(branch);
        for (const BatteryFn& fn : kBattery) {
            const Expr f = parse(fn.f);
            for (int axis = 1; axis <= 3; ++axis) {
                Sampler s = chart.base_sampler(rng());
                worst = std::max(
                    worst, commutator_coefficient_residual(chart, axis, f, s, 200));
                samples += 200;
            }
        }
    }
    return worst;
}

// --- criterion 3: momentum-momentum commutator ---

double check_momentum_classical(std::mt19937_64& rng, long& samples) {
    const Chart chart = Chart::standard();
    const int pairs[3][2] = {{1, 2}, {2, 3}, {3, 1}};
    double worst = 0.0;
    for (const BatteryFn& fn : kBattery) {
        const Expr f = parse(fn.f);
        for (const auto& pq : pairs) {
            const Expr comm = commutator_apply(chart, "p" + std::to_string(pq[0]),
                                               "p" + std::to_string(pq[1]), f);
            for (int k = 0; k < 50; ++k) {
                Bindings b = chart.extend_on_shell(random_base_point(rng));
                worst = std::max(worst, relative_residual(eval(comm, b), Complex{0.0, 0.0}));
                ++samples;
            }
        }
    }
    return worst;
}

double check_momentum_zero_bracket(std::mt19937_64& rng, long& samples) {
    const Chart chart = Chart::standard();
    double worst = 0.0;
    for (const BatteryFn& fn : kBattery) {
        const Expr out = momentum_commutator_apply(chart, 1, 2, parse(fn.f), Expr::constant(0.0));
        if (!out.is_zero()) worst = std::max(worst, 1.0);
        for (int k = 0; k < 20; ++k) {
            Bindings b = chart.extend_on_shell(random_base_point(rng));
            worst = std::max(worst, std::abs(eval(out, b)));
            ++samples;
        }
    }
    return worst;
}

double check_momentum_substitution(std::mt19937_64& rng, long& samples) {
    const Chart chart = Chart::standard();
    const int eps[3][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};  // (i, j, k) with eps_ijk = +1
    double worst = 0.0;
    for (const BatteryFn& fn : kBattery) {
        const Expr f = parse(fn.f);
        const Expr dfdE_hand = parse(fn.dfdE);
        for (const auto& ijk : eps) {
            const Expr pcomm = Expr::imaginary_unit() * Expr::symbol("B" + std::to_string(ijk[2]));
            const Expr op = momentum_commutator_apply(chart, ijk[0], ijk[1], f, pcomm);
            for (int k = 0; k < 50; ++k) {
                Bindings b = chart.extend_on_shell(random_base_point(rng));
                const Complex bfield{rand_signed(rng, 0.1, 2.0), 0.0};
                b["B" + std::to_string(ijk[2])] = bfield;
                const Complex energy = b.at("E");
                const Complex direct =
                    Complex{0.0, 1.0} * bfield * eval(dfdE_hand, b) / (energy * energy * energy);
                worst = std::max(worst, relative_residual(eval(op, b), direct));
                ++samples;
            }
        }
    }
    return worst;
}

// --- criterion 4: helicity polarization suite ---

double check_helicity_normalization(std::mt19937_64& rng, long& samples) {
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        const Kinematics kin = random_kinematics(rng);
        const struct { Lambda l; double target; } cases[] = {
            {Lambda::PlusOne, -1.0},
            {Lambda::MinusOne, -1.0},
            {Lambda::Zero, -1.0},
            {Lambda::ZeroTime, 1.0},
        };
        for (const auto& cs : cases) {
            const FourVector eps = pol_vector(kin, cs.l);
            worst = std::max(worst,
                             std::abs(eps.minkowski_dot_conj(eps) - Complex{cs.target, 0.0}));
            ++samples;
        }
    }
    return worst;
}

double check_helicity_transversality(std::mt19937_64& rng, long& samples) {
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        const Kinematics kin = random_kinematics(rng);
        const auto pv = kin.four_momentum();
        for (Lambda l : {Lambda::PlusOne, Lambda::MinusOne}) {
            const FourVector eps = pol_vector(kin, l);
            Complex dot{0.0, 0.0};
            for (int mu = 0; mu < 4; ++mu) dot += pv[mu] * eps[mu];
            worst = std::max(worst, std::abs(dot));
            ++samples;
        }
    }
    return worst;
}

double check_helicity_b_zero(std::mt19937_64& rng, long& samples) {
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        const FieldTriple ft = fields_closed(random_kinematics(rng), Lambda::Zero);
        for (Complex c : ft.bfield) worst = std::max(worst, std::abs(c));
        ++samples;
    }
    return worst;
}

double check_helicity_cross_check(std::mt19937_64& rng, long& samples) {
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        const Kinematics kin = random_kinematics(rng);
        for (Lambda l : {Lambda::PlusOne, Lambda::MinusOne, Lambda::Zero}) {
            const FieldTriple closed = fields_closed(kin, l);
            const FieldTriple derived = fields_from_potential(kin, pol_vector(kin, l), l);
            for (int c = 0; c < 3; ++c) {
                worst = std::max(worst, relative_residual(closed.efield[c], derived.efield[c]));
                worst = std::max(worst, relative_residual(closed.bfield[c], derived.bfield[c]));
            }
            ++samples;
        }
    }
    return worst;
}

// --- criterion 5: coordinate-commutator ansatz ---

double check_ansatz_parallelism(std::mt19937_64& rng, long& samples) {
    const Chart chart = Chart::standard();
    const Expr fs[] = {parse("E^2"), parse("exp(E)*p1")};
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
        const Kinematics kin = random_kinematics(rng);
        const FieldTriple longitudinal = longitudinal_fields(kin);
        for (const Expr& f : fs) {
            const AnsatzResult ar = ansatz_commutator(chart, kin, f);
            const std::array<Complex, 3> v{ar.coeff[0][1], ar.coeff[0][2], ar.coeff[0][3]};
            const auto& e = longitudinal.efield;
            const Complex cross[3] = {v[1] * e[2] - v[2] * e[1], v[2] * e[0] - v[0] * e[2],
                                      v[0] * e[1] - v[1] * e[0]};
            double norm = 0.0;
            for (const Complex& c : cross) norm += std::norm(c);
            worst = std::max(worst, std::sqrt(norm));
            ++samples;
        }
    }
    return worst;
}

double check_ansatz_omega(std::mt19937_64& rng, long& samples) {
    const Chart chart = Chart::standard();
    const Expr fs[] = {parse("E^2"), parse("exp(E)*p1")};
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
        const Kinematics kin = random_kinematics(rng);
        for (const Expr& f : fs) {
            const AnsatzResult ar = ansatz_commutator(chart, kin, f);
            double scale = 0.0;
            for (const auto& w : ar.omega) {
                if (w) scale = std::max(scale, std::abs(*w));
            }
            for (int i = 0; i < 3; ++i) {
                for (int j = i + 1; j < 3; ++j) {
                    if (!ar.omega[i] || !ar.omega[j]) continue;
                    worst = std::max(worst,
                                     std::abs(*ar.omega[i] - *ar.omega[j]) / (1.0 + scale));
                }
            }
            ++samples;
        }
    }
    return worst;
}

// --- criterion 6: de Sitter spinor operator ---

double check_dirac_onshell_det(std::mt19937_64& rng, long& samples) {
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
        const double mu = rand_signed(rng, 0.0, 2.0);
        const double a = dirac_mass_term(mu);
        std::array<double, 4> p{0.0, rand_signed(rng, 0.1, 2.0), rand_signed(rng, 0.1, 2.0),
                                rand_signed(rng, 0.1, 2.0)};
        const double space = p[1] * p[1] + p[2] * p[2] + p[3] * p[3];
        const double t = rand_signed(rng, 0.0, 0.9) * std::sqrt(a * a + space);
        const double p4 = 1.0 + t;
        // On shell: p0^2 = a^2 + |p|^2 - t^2 (non-negative by construction).
        p[0] = std::sqrt(a * a + space - t * t);
        if (rng() & 1u) p[0] = -p[0];
        for (DiracVariant v : {DiracVariant::Psi, DiracVariant::PsiR}) {
            worst = std::max(worst, std::abs(dirac_shell_residual(p, p4, mu, v).det));
            ++samples;
        }
    }
    return worst;
}

double check_dirac_offshell_det(std::mt19937_64& rng, long& samples) {
    double best = std::numeric_limits<double>::infinity();
    int accepted = 0;
    while (accepted < 50) {
        const double mu = rand_signed(rng, 0.0, 2.0);
        const std::array<double, 4> p{rand_signed(rng, 0.1, 2.0), rand_signed(rng, 0.1, 2.0),
                                      rand_signed(rng, 0.1, 2.0), rand_signed(rng, 0.1, 2.0)};
        const double p4 = rand_signed(rng, 0.0, 2.0);
        const DiracShellResidual r = dirac_shell_residual(p, p4, mu);
        if (std::abs(r.algebraic) < 0.1) continue;  // too close to the shell
        best = std::min(best, std::abs(r.det));
        ++accepted;
        ++samples;
    }
    return best;
}

double check_dirac_factorization(std::mt19937_64& rng, long& samples) {
    double worst = 0.0;
    for (int k = 0; k < 200; ++k) {
        const double mu = rand_signed(rng, 0.0, 2.0);
        const std::array<double, 4> p{rand_signed(rng, 0.0, 2.0), rand_signed(rng, 0.0, 2.0),
                                      rand_signed(rng, 0.0, 2.0), rand_signed(rng, 0.0, 2.0)};
        const double p4 = rand_signed(rng, 0.0, 2.0);
        for (DiracVariant v : {DiracVariant::Psi, DiracVariant::PsiR}) {
            const DiracShellResidual r = dirac_shell_residual(p, p4, mu, v);
            const Complex closed{r.algebraic * r.algebraic, 0.0};
            worst = std::max(worst, relative_residual(r.det, closed));
            ++samples;
        }
    }
    return worst;
}

double check_dirac_mass_relation(std::mt19937_64&, long& samples) {
    double worst = 0.0;
    for (int k = -16; k <= 16; ++k) {
        const DeformedMass dm = mass_relation(0.125 * k);
        worst = std::max(worst, std::abs(dm.m4 * dm.m4 - dm.m * dm.m - 1.0));
        worst = std::max(worst, std::abs(std::sqrt(1.0 + dm.m * dm.m) - dm.m4));
        ++samples;
    }
    return worst;
}

// --- criterion 7: coordinate algebras and deformed dispersion ---

double check_algebra_jacobi_kappa(std::mt19937_64&, long& samples) {
    double worst = 0.0;
    for (double kappa : {0.1, 1.0, 10.0}) {
        worst = std::max(worst, jacobi_residual(CoordAlgebra::kappa_minkowski(kappa)));
        ++samples;
    }
    return worst;
}

double check_algebra_jacobi_canonical(std::mt19937_64& rng, long& samples) {
    double worst = 0.0;
    for (int k = 0; k < 5; ++k) {
        std::vector<std::vector<double>> theta(4, std::vector<double>(4, 0.0));
        for (int i = 0; i < 4; ++i) {
            for (int j = i + 1; j < 4; ++j) {
                theta[i][j] = rand_signed(rng, 0.0, 2.0);
                theta[j][i] = -theta[i][j];
            }
        }
        CoordAlgebra a = CoordAlgebra::canonical({"x0", "x1", "x2", "x3"}, std::move(theta));
        worst = std::max(worst, jacobi_residual(a));
        ++samples;
    }
    return worst;
}

double check_algebra_jacobi_negative(std::mt19937_64&, long& samples) {
    // Corrupted constants: inconsistent kappa scaling plus an invented
    // bracket [x1, x2] = i t.
    const CoordAlgebra corrupted = CoordAlgebra::lie(
        {"t", "x1", "x2", "x3"},
        {{"x1", {"x1", "t"}, 1.0}, {"x2", {"x2", "t"}, 2.0}, {"t", {"x1", "x2"}, 1.0}});
    ++samples;
    return jacobi_residual(corrupted);
}

double check_dispersion_none_bitexact(std::mt19937_64& rng, long& samples) {
    long mismatches = 0;
    for (int k = 0; k < 1000; ++k) {
        const double e = rand_signed(rng, 0.0, 3.0);
        const std::array<double, 3> p{rand_signed(rng, 0.0, 2.0), rand_signed(rng, 0.0, 2.0),
                                      rand_signed(rng, 0.0, 2.0)};
        const double m = rand_in(rng, 0.0, 2.0);
        const double a = deformed_residual(e, p, m, kPlanckLength, DeformationChoice::None, 1.0);
        const double b = standard_residual(e, p, m);
        if (std::memcmp(&a, &b, sizeof(double)) != 0) ++mismatches;
        ++samples;
    }
    return static_cast<double>(mismatches);
}

double check_dispersion_alpha_linearity(std::mt19937_64& rng, long& samples) {
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        const double e = rand_signed(rng, 0.1, 3.0);
        const std::array<double, 3> p{rand_signed(rng, 0.1, 2.0), rand_signed(rng, 0.1, 2.0),
                                      rand_signed(rng, 0.1, 2.0)};
        const double m = rand_in(rng, 0.0, 2.0);
        const double alpha = rand_signed(rng, 0.1, 2.0);
        for (DeformationChoice choice : {DeformationChoice::LinearE, DeformationChoice::QuadraticE}) {
            const double base = deformation_term(e, p, m, kPlanckLength, choice, alpha);
            for (double s : {2.0, 3.0, 10.0}) {
                const double scaled = deformation_term(e, p, m, kPlanckLength, choice, s * alpha);
                worst = std::max(worst, relative_residual(Complex{scaled, 0.0},
                                                          Complex{s * base, 0.0}));
            }
            ++samples;
        }
    }
    return worst;
}

std::vector<VerifyCheck> run_checks(const VerifyOptions& options);

double check_determinism(const VerifyOptions& options);

std::string checks_json(const std::vector<VerifyCheck>& checks);

std::vector<VerifyCheck> run_checks(const VerifyOptions& options) {
    std::vector<VerifyCheck> checks;
    CheckBuilder b{options.seed, options.tolerance_override, &checks};
    using D = CheckDirection;

    b.add("wholepartial.fd_oracle", 1, 1e-6, D::AtMost, check_fd_oracle);
    b.add("wholepartial.fd_convergence_order", 1, 0.2, D::AtMost, check_fd_order);
    b.add("commutator.closed_form", 2, 1e-9, D::AtMost, check_commutator_closed_form);
    b.add("momentum_bracket.classical_zero", 3, 1e-9, D::AtMost, check_momentum_classical);
    b.add("momentum_bracket.zero_bracket", 3, 0.0, D::AtMost, check_momentum_zero_bracket);
    b.add("momentum_bracket.substitution", 3, 1e-10, D::AtMost, check_momentum_substitution);
    b.add("helicity.normalization", 4, 1e-10, D::AtMost, check_helicity_normalization);
    b.add("helicity.transversality", 4, 1e-10, D::AtMost, check_helicity_transversality);
    b.add("helicity.longitudinal_b_zero", 4, 0.0, D::AtMost, check_helicity_b_zero);
    b.add("helicity.potential_cross_check", 4, 1e-10, D::AtMost, check_helicity_cross_check);
    b.add("ansatz.parallelism", 5, 1e-10, D::AtMost, check_ansatz_parallelism);
    b.add("ansatz.omega_axis_independence", 5, 1e-9, D::AtMost, check_ansatz_omega);
    b.add("dirac.onshell_det", 6, 1e-9, D::AtMost, check_dirac_onshell_det);
    b.add("dirac.offshell_det_separation", 6, 1e-6, D::AtLeast, check_dirac_offshell_det);
    b.add("dirac.det_factorization", 6, 1e-9, D::AtMost, check_dirac_factorization);
    b.add("dirac.mass_relation", 6, 1e-12, D::AtMost, check_dirac_mass_relation);
    b.add("algebra.jacobi_kappa", 7, 1e-12, D::AtMost, check_algebra_jacobi_kappa);
    b.add("algebra.jacobi_canonical", 7, 1e-12, D::AtMost, check_algebra_jacobi_canonical);
    b.add("algebra.jacobi_negative_control", 7, 1e-3, D::AtLeast, check_algebra_jacobi_negative);
    b.add("dispersion.deformed_none_bitexact", 7, 0.0, D::AtMost, check_dispersion_none_bitexact);
    b.add("dispersion.deformation_alpha_linearity", 7, 1e-12, D::AtMost, check_dispersion_alpha_linearity);

    std::sort(checks.begin(), checks.end(),
              [](const VerifyCheck& a, const VerifyCheck& c) { return a.name < c.name; });
    return checks;
}

std::string checks_json(const std::vector<VerifyCheck>& checks) {
    nlohmann::json arr = nlohmann::json::array();
    for (const VerifyCheck& c : checks) {
        arr.push_back({{"name", c.name},
                       {"criterion", c.criterion},
                       {"residual", c.residual},
                       {"tolerance", c.tolerance},
                       {"direction", c.direction == CheckDirection::AtMost ? "<=" : ">="},
                       {"samples", c.samples},
                       {"passed", c.passed}});
    }
    return arr.dump();
}

double check_determinism(const VerifyOptions& options) {
    const std::string a = checks_json(run_checks(options));
    const std::string b = checks_json(run_checks(options));
    return a == b ? 0.0 : 1.0;
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& options) {
    VerifyReport report;
    report.seed = options.seed;
    report.checks = run_checks(options);

    VerifyCheck det;
    det.name = "determinism.verify_json";
    det.criterion = 8;
    det.tolerance = 0.0;
    det.direction = CheckDirection::AtMost;
    det.samples = 2;
    auto start = std::chrono::steady_clock::now();
    det.residual = check_determinism(options);
    det.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    det.passed = det.residual <= det.tolerance;
    report.checks.push_back(std::move(det));

    std::sort(report.checks.begin(), report.checks.end(),
              [](const VerifyCheck& a, const VerifyCheck& b) { return a.name < b.name; });
    return report;
}

std::string verify_report_json(const VerifyReport& report) {
    nlohmann::json j;
    j["schema"] = 1;
    j["seed"] = report.seed;
    j["all_passed"] = report.all_passed();
    j["checks"] = nlohmann::json::parse(checks_json(report.checks));
    return j.dump(2);
}

std::string verify_report_text(const VerifyReport& report) {
    std::string out;
    char line[256];
    std::snprintf(line, sizeof(line), "%-34s %-6s %13s    %10s %8s %9s\n", "check", "status",
                  "residual", "tolerance", "samples", "ms");
    out += line;
    for (const VerifyCheck& c : report.checks) {
        std::snprintf(line, sizeof(line), "%-34s %-6s %13.4e %s %8.1e %8ld %9.1f\n",
                      c.name.c_str(), c.passed ? "pass" : "FAIL", c.residual,
                      c.direction == CheckDirection::AtMost ? "<=" : ">=", c.tolerance,
                      c.samples, c.wall_ms);
        out += line;
    }
    std::snprintf(line, sizeof(line), "seed %llu: %s\n",
                  static_cast<unsigned long long>(report.seed),
                  report.all_passed() ? "all checks passed" : "FAILURES present");
    out += line;
    return out;
}

}  // namespace shellcalc

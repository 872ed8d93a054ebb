#include "shellcalc/helicity.hpp"

#include <cmath>

#include "shellcalc/derivative.hpp"
#include "shellcalc/whole_partial.hpp"

namespace shellcalc {

namespace {

constexpr Complex kI{0.0, 1.0};

bool finite(Complex v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

}  // namespace

const char* lambda_name(Lambda l) {
    switch (l) {
        case Lambda::PlusOne: return "+1";
        case Lambda::MinusOne: return "-1";
        case Lambda::Zero: return "0";
        case Lambda::ZeroTime: return "0t";
    }
    return "?";
}

std::optional<Lambda> lambda_from_name(const std::string& s) {
    if (s == "+1" || s == "1") return Lambda::PlusOne;
    if (s == "-1") return Lambda::MinusOne;
    if (s == "0") return Lambda::Zero;
    if (s == "0t" || s == "0_t") return Lambda::ZeroTime;
    return std::nullopt;
}

FourVector::FourVector(std::array<Complex, 4> components) : c_(components) {
    for (Complex v : c_) {
        if (!finite(v)) throw EvalError("non-finite four-vector component");
    }
}

Complex FourVector::minkowski_dot_conj(const FourVector& other) const {
    Complex acc = c_[0] * std::conj(other.c_[0]);
    for (int i = 1; i < 4; ++i) acc -= c_[i] * std::conj(other.c_[i]);
    return acc;
}

Kinematics::Kinematics(double p1_, double p2_, double p3_, double m_)
    : p1(p1_), p2(p2_), p3(p3_), m(m_) {
    if (!std::isfinite(p1) || !std::isfinite(p2) || !std::isfinite(p3) || !std::isfinite(m)) {
        throw EvalError("non-finite kinematics");
    }
    if (m < 0.0) throw EvalError("mass must be non-negative");
}

double Kinematics::p() const { return std::sqrt(p1 * p1 + p2 * p2 + p3 * p3); }
double Kinematics::p_perp() const { return std::sqrt(p1 * p1 + p2 * p2); }
double Kinematics::energy() const { return std::sqrt(m * m + p1 * p1 + p2 * p2 + p3 * p3); }
Complex Kinematics::p_r() const { return {p1, p2}; }
Complex Kinematics::p_l() const { return {p1, -p2}; }

Complex Kinematics::phase() const {
    double pp = p_perp();
    if (pp == 0.0) throw EvalError("phase undefined at p_perp = 0");
    return p_r() / pp;
}

std::array<double, 4> Kinematics::four_momentum() const { return {energy(), p1, p2, p3}; }

Bindings Kinematics::bindings() const {
    return {{"p1", Complex{p1, 0.0}},
            {"p2", Complex{p2, 0.0}},
            {"p3", Complex{p3, 0.0}},
            {"m", Complex{m, 0.0}}};
}

FourVector pol_vector(const Kinematics& k, Lambda lambda) {
    const double p = k.p();
    const double pp = k.p_perp();
    const double e = k.energy();
    switch (lambda) {
        case Lambda::PlusOne: {
            if (pp == 0.0) throw EvalError("polarization +1 singular at p_perp = 0");
            Complex pref = k.phase() / (std::sqrt(2.0) * p);
            return FourVector({Complex{0.0, 0.0},
                               pref * Complex{k.p1 * k.p3, -k.p2 * p} / pp,
                               pref * Complex{k.p2 * k.p3, k.p1 * p} / pp,
                               pref * (-pp)});
        }
        case Lambda::MinusOne: {
            if (pp == 0.0) throw EvalError("polarization -1 singular at p_perp = 0");
            Complex pref = std::conj(k.phase()) / (std::sqrt(2.0) * p);
            return FourVector({Complex{0.0, 0.0},
                               pref * Complex{-k.p1 * k.p3, -k.p2 * p} / pp,
                               pref * Complex{-k.p2 * k.p3, k.p1 * p} / pp,
                               pref * pp});
        }
        case Lambda::Zero: {
            if (k.m == 0.0) throw EvalError("polarization 0 requires m > 0");
            if (p == 0.0) throw EvalError("polarization 0 singular at p = 0");
            double s = e / p;
            return FourVector({Complex{p / k.m, 0.0}, Complex{-s * k.p1 / k.m, 0.0},
                               Complex{-s * k.p2 / k.m, 0.0}, Complex{-s * k.p3 / k.m, 0.0}});
        }
        case Lambda::ZeroTime: {
            if (k.m == 0.0) throw EvalError("polarization 0t requires m > 0");
            return FourVector({Complex{e / k.m, 0.0}, Complex{-k.p1 / k.m, 0.0},
                               Complex{-k.p2 / k.m, 0.0}, Complex{-k.p3 / k.m, 0.0}});
        }
    }
    throw EvalError("unknown helicity label");
}

namespace {

std::array<Complex, 3> scaled(Complex s, const std::array<Complex, 3>& v) {
    return {s * v[0], s * v[1], s * v[2]};
}

std::array<Complex, 3> plus(const std::array<Complex, 3>& a, const std::array<Complex, 3>& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

}  // namespace

FieldTriple fields_closed(const Kinematics& k, Lambda lambda) {
    const double p = k.p();
    const double e = k.energy();
    const double rt2 = std::sqrt(2.0);
    const std::array<Complex, 3> pvec{Complex{k.p1, 0.0}, Complex{k.p2, 0.0},
                                      Complex{k.p3, 0.0}};
    const std::array<Complex, 3> ptilde{Complex{k.p2, 0.0}, Complex{-k.p1, 0.0},
                                        Complex{0.0, -p}};
    FieldTriple out;
    out.label = lambda;
    switch (lambda) {
        case Lambda::PlusOne: {
            if (k.p_perp() == 0.0) throw EvalError("fields +1 singular at p_perp = 0");
            Complex pl = k.p_l();
            out.efield = plus(scaled(-kI * e * k.p3 / (rt2 * p * pl), pvec),
                              scaled(-e / (rt2 * pl), ptilde));
            out.bfield = plus(scaled(-k.p3 / (rt2 * pl), pvec),
                              scaled(kI * p / (rt2 * pl), ptilde));
            return out;
        }
        case Lambda::MinusOne: {
            if (k.p_perp() == 0.0) throw EvalError("fields -1 singular at p_perp = 0");
            Complex pr = k.p_r();
            const std::array<Complex, 3> ptc{std::conj(ptilde[0]), std::conj(ptilde[1]),
                                             std::conj(ptilde[2])};
            out.efield = plus(scaled(kI * e * k.p3 / (rt2 * p * pr), pvec),
                              scaled(-e / (rt2 * pr), ptc));
            out.bfield = plus(scaled(-k.p3 / (rt2 * pr), pvec),
                              scaled(-kI * p / (rt2 * pr), ptc));
            return out;
        }
        case Lambda::Zero: {
            if (p == 0.0) throw EvalError("fields 0 singular at p = 0");
            out.efield = scaled(kI * k.m / p, pvec);
            out.bfield = {Complex{0.0, 0.0}, Complex{0.0, 0.0}, Complex{0.0, 0.0}};
            return out;
        }
        case Lambda::ZeroTime:
            throw EvalError("no field formulas for the scalar mode 0t");
    }
    throw EvalError("unknown helicity label");
}

FieldTriple fields_from_potential(const Kinematics& k, const FourVector& eps,
                                  std::optional<Lambda> label) {
    const std::array<double, 4> pv = k.four_momentum();
    // Raise the polarization index: eps^0 = eps_0, eps^i = -eps_i.
    const std::array<Complex, 4> eu{eps[0], -eps[1], -eps[2], -eps[3]};
    FieldTensor f{};
    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = 0; nu < 4; ++nu) {
            f[mu][nu] = -kI * (pv[mu] * eu[nu] - pv[nu] * eu[mu]);
        }
    }
    FieldTriple out;
    out.label = label;
    for (int i = 0; i < 3; ++i) out.efield[i] = f[i + 1][0];
    out.bfield = {-(f[2][3]), -(f[3][1]), -(f[1][2])};
    return out;
}

FieldTriple longitudinal_fields(const Kinematics& k) {
    return fields_closed(k, Lambda::Zero);
}

FieldTensor field_tensor(const FieldTriple& fields) {
    FieldTensor f{};
    for (int i = 0; i < 3; ++i) {
        f[i + 1][0] = fields.efield[i];
        f[0][i + 1] = -fields.efield[i];
    }
    // F^{jk} = -eps_{jkl} B^l
    f[1][2] = -fields.bfield[2];
    f[2][1] = fields.bfield[2];
    f[2][3] = -fields.bfield[0];
    f[3][2] = fields.bfield[0];
    f[3][1] = -fields.bfield[1];
    f[1][3] = fields.bfield[1];
    return f;
}

FieldTensor longitudinal_tensor(const Kinematics& k) {
    return field_tensor(longitudinal_fields(k));
}

AnsatzResult ansatz_commutator(const Chart& c, const Kinematics& k, const Expr& f,
                               const AnsatzOptions& options) {
    AnsatzResult out;
    const Bindings full = c.extend_on_shell(k.bindings());
    const Expr dfdE_expr = diff_explicit(f, "E");
    const Complex dfdE = eval(dfdE_expr, full);
    if (dfdE_expr.is_zero() || dfdE == Complex{0.0, 0.0}) return out;
    out.energy_dependent = true;

    // x^mu = i * d-hat gives [x^0, x^i] = +[d-hat_{p_i}, d-hat_E]; without
    // the i factor the bare bracket [d-hat_E, d-hat_{p_i}] flips the sign.
    const double sign = options.position_i_factor ? 1.0 : -1.0;
    const std::array<std::string, 3> pnames{"p1", "p2", "p3"};
    for (int i = 0; i < 3; ++i) {
        Complex comm = eval(commutator_apply(c, pnames[i], "E", f), full);
        Complex coeff = sign * comm / dfdE;
        out.coeff[0][i + 1] = coeff;
        out.coeff[i + 1][0] = -coeff;
    }
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            Complex comm = eval(commutator_apply(c, pnames[i], pnames[j], f), full);
            Complex coeff = -comm / dfdE;  // i^2 from the two position factors
            if (!options.position_i_factor) coeff = -coeff;
            out.coeff[i + 1][j + 1] = coeff;
            out.coeff[j + 1][i + 1] = -coeff;
        }
    }

    const FieldTriple longitudinal = longitudinal_fields(k);
    const std::array<double, 3> pi{k.p1, k.p2, k.p3};
    for (int i = 0; i < 3; ++i) {
        if (pi[i] == 0.0) continue;  // axis skipped, no division by zero
        out.omega[i] = out.coeff[0][i + 1] / longitudinal.efield[i];
    }
    return out;
}

}  // namespace shellcalc

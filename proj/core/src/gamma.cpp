#include "shellcalc/gamma.hpp"

#include <cmath>

namespace shellcalc {

namespace {

using C = std::complex<double>;
constexpr C kI{0.0, 1.0};

GammaSet build_dirac() {
    GammaSet g;
    for (Mat4& m : g.gamma) m.setZero();
    g.gamma5.setZero();

    // g^0 = diag(1, 1, -1, -1)
    g.gamma[0](0, 0) = 1.0;
    g.gamma[0](1, 1) = 1.0;
    g.gamma[0](2, 2) = -1.0;
    g.gamma[0](3, 3) = -1.0;

    // g^k = [[0, sigma_k], [-sigma_k, 0]]
    auto set_spatial = [&](int k, const Eigen::Matrix2cd& sigma) {
        g.gamma[k].block<2, 2>(0, 2) = sigma;
        g.gamma[k].block<2, 2>(2, 0) = -sigma;
    };
    Eigen::Matrix2cd s1, s2, s3;
    s1 << 0, 1, 1, 0;
    s2 << 0, -kI, kI, 0;
    s3 << 1, 0, 0, -1;
    set_spatial(1, s1);
    set_spatial(2, s2);
    set_spatial(3, s3);

    // g^5 = [[0, I], [I, 0]]
    g.gamma5.block<2, 2>(0, 2) = Eigen::Matrix2cd::Identity();
    g.gamma5.block<2, 2>(2, 0) = Eigen::Matrix2cd::Identity();
    return g;
}

}  // namespace

const GammaSet& GammaSet::dirac() {
    static const GammaSet g = build_dirac();
    return g;
}

double GammaSet::identity_residual() const {
    const Mat4 id = Mat4::Identity();
    const double metric[4] = {1.0, -1.0, -1.0, -1.0};
    double worst = 0.0;
    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = 0; nu < 4; ++nu) {
            Mat4 anti = gamma[mu] * gamma[nu] + gamma[nu] * gamma[mu];
            double target = (mu == nu) ? 2.0 * metric[mu] : 0.0;
            worst = std::max(worst, (anti - target * id).cwiseAbs().maxCoeff());
        }
        Mat4 g5anti = gamma[mu] * gamma5 + gamma5 * gamma[mu];
        worst = std::max(worst, g5anti.cwiseAbs().maxCoeff());
    }
    worst = std::max(worst, (gamma5 * gamma5 - id).cwiseAbs().maxCoeff());
    return worst;
}

double dirac_mass_term(double mu, MassTermReading reading) {
    return reading == MassTermReading::HalfArgument ? 2.0 * std::sinh(0.5 * mu)
                                                    : std::sinh(mu);
}

double minkowski_square(const std::array<double, 4>& p) {
    return p[0] * p[0] - p[1] * p[1] - p[2] * p[2] - p[3] * p[3];
}

Mat4 dirac_operator(const std::array<double, 4>& p, double p4, double mu,
                    DiracVariant variant, MassTermReading reading, const GammaSet& gammas) {
    const double a = dirac_mass_term(mu, reading);
    const double s = (variant == DiracVariant::Psi) ? 1.0 : -1.0;
    // p_mu g^mu with p contravariant: p0 g^0 - p1 g^1 - p2 g^2 - p3 g^3.
    Mat4 slash = p[0] * gammas.gamma[0];
    for (int k = 1; k < 4; ++k) slash -= p[k] * gammas.gamma[k];
    return a * Mat4::Identity() - slash - s * (p4 - 1.0) * gammas.gamma5;
}

Mat8 dirac_operator_pair(const std::array<double, 4>& p, double p4, double mu,
                         MassTermReading reading, const GammaSet& gammas) {
    Mat8 out = Mat8::Zero();
    out.block<4, 4>(0, 0) = dirac_operator(p, p4, mu, DiracVariant::Psi, reading, gammas);
    out.block<4, 4>(4, 4) = dirac_operator(p, p4, mu, DiracVariant::PsiR, reading, gammas);
    return out;
}

DiracShellResidual dirac_shell_residual(const std::array<double, 4>& p, double p4, double mu,
                                        DiracVariant variant, MassTermReading reading) {
    const double a = dirac_mass_term(mu, reading);
    const double b = p4 - 1.0;
    DiracShellResidual out;
    out.det = dirac_operator(p, p4, mu, variant, reading).determinant();
    out.algebraic = a * a - minkowski_square(p) - b * b;
    return out;
}

}  // namespace shellcalc

#pragma once

#include <array>
#include <complex>

#include <Eigen/Dense>

namespace shellcalc {

using Mat4 = Eigen::Matrix4cd;
using Mat8 = Eigen::Matrix<std::complex<double>, 8, 8>;

/// Dirac-representation gamma matrices, metric (+,-,-,-):
/// {g^mu, g^nu} = 2 g^{mu nu} I, {g^mu, g^5} = 0, (g^5)^2 = I.
/// Entries are 0, +/-1, +/-i, so the defining identities hold exactly.
struct GammaSet {
    std::array<Mat4, 4> gamma;
    Mat4 gamma5;

    static const GammaSet& dirac();

    /// Max absolute deviation across all defining identities (0 for dirac()).
    double identity_residual() const;
};

enum class DiracVariant { Psi, PsiR };

/// Reading of the written mass term "2 sinh mu/2". The default takes the
/// half-argument form 2*sinh(mu/2); the alternative reading sinh(mu) is kept
/// behind this switch so both can be probed.
enum class MassTermReading { HalfArgument, FullArgument };

double dirac_mass_term(double mu, MassTermReading reading = MassTermReading::HalfArgument);

/// p.p with metric (+,-,-,-); p given contravariant (p0, p1, p2, p3).
double minkowski_square(const std::array<double, 4>& p);

/// The operator  a I - p_mu g^mu - s (p4 - 1) g^5  with a the mass term and
/// s = +1 for Psi, -1 for PsiR.
Mat4 dirac_operator(const std::array<double, 4>& p, double p4, double mu,
                    DiracVariant variant,
                    MassTermReading reading = MassTermReading::HalfArgument,
                    const GammaSet& gammas = GammaSet::dirac());

/// Block-diagonal 8x8 view carrying both variants at once.
Mat8 dirac_operator_pair(const std::array<double, 4>& p, double p4, double mu,
                         MassTermReading reading = MassTermReading::HalfArgument,
                         const GammaSet& gammas = GammaSet::dirac());

struct DiracShellResidual {
    std::complex<double> det;  // numeric determinant of the operator
    double algebraic;          // 4 sinh^2(mu/2) - p.p - (p4-1)^2
};

/// Solvability check: the determinant (numeric route) and the algebraic
/// residual a^2 - p.p - (p4-1)^2 (closed-form route, from (pslash + b g^5)^2
/// = (p.p + b^2) I) must vanish together; det = (algebraic residual)^2.
DiracShellResidual dirac_shell_residual(const std::array<double, 4>& p, double p4, double mu,
                                        DiracVariant variant = DiracVariant::Psi,
                                        MassTermReading reading = MassTermReading::HalfArgument);

}  // namespace shellcalc

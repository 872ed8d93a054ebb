#pragma once

#include <array>
#include <optional>
#include <string>

#include "shellcalc/chart.hpp"
#include "shellcalc/expr.hpp"

namespace shellcalc {

enum class Lambda { PlusOne, MinusOne, Zero, ZeroTime };

const char* lambda_name(Lambda l);                 // "+1", "-1", "0", "0t"
std::optional<Lambda> lambda_from_name(const std::string& s);

/// Complex 4-vector with metric (+,-,-,-). Polarization vectors are stored
/// with the index placement of the defining formulas (lower index);
/// minkowski_* contractions account for the metric.
class FourVector {
public:
    FourVector() = default;
    explicit FourVector(std::array<Complex, 4> components);

    Complex operator[](int mu) const { return c_[static_cast<std::size_t>(mu)]; }
    const std::array<Complex, 4>& components() const { return c_; }

    /// g^{mu nu} a_mu conj(b_nu) = a0 conj(b0) - a1 conj(b1) - ...
    Complex minkowski_dot_conj(const FourVector& other) const;

private:
    std::array<Complex, 4> c_{};
};

/// (E-field, B-field) pair for one helicity mode. For lambda = 0, B is
/// exactly zero by construction.
struct FieldTriple {
    std::array<Complex, 3> efield{};
    std::array<Complex, 3> bfield{};
    std::optional<Lambda> label;
};

/// Real momentum-space kinematics. E is the positive branch; the helicity
/// formulas are written for it.
struct Kinematics {
    Kinematics(double p1, double p2, double p3, double m);

    double p1, p2, p3, m;

    double p() const;        // |p|
    double p_perp() const;   // sqrt(p1^2 + p2^2)
    double energy() const;   // +sqrt(m^2 + p^2)
    Complex p_r() const;     // p1 + i p2
    Complex p_l() const;     // p1 - i p2
    Complex phase() const;   // e^{i phi} = p_r / p_perp

    std::array<double, 4> four_momentum() const;  // contravariant (E, p1, p2, p3)
    Bindings bindings() const;                    // base bindings p1,p2,p3,m
};

/// Helicity-basis polarization 4-vector (lower-index components):
///   +1 : (1/sqrt2)(e^{+i phi}/p) (0, (p1 p3 - i p2 p)/pp, (p2 p3 + i p1 p)/pp, -pp)
///   -1 : (1/sqrt2)(e^{-i phi}/p) (0, (-p1 p3 - i p2 p)/pp, (-p2 p3 + i p1 p)/pp, +pp)
///    0 : (1/m)(p, -(E/p) p1, -(E/p) p2, -(E/p) p3)
///   0t : (1/m)(E, -p1, -p2, -p3)
/// with pp = p_perp. Throws EvalError for +/-1 at p_perp = 0 (phi undefined
/// on the axis; this is a hard error, not a limit) and for 0/0t at p = 0 or
/// m = 0 respectively.
FourVector pol_vector(const Kinematics& k, Lambda lambda);

/// Closed-form fields for the mode, with ptilde = (p2, -p1, -i p):
///   E(+1) = -(i E p3/(sqrt2 p p_l)) p - (E/(sqrt2 p_l)) ptilde
///   B(+1) = -(p3/(sqrt2 p_l)) p + (i p/(sqrt2 p_l)) ptilde
///   E(-1) = +(i E p3/(sqrt2 p p_r)) p - (E/(sqrt2 p_r)) conj(ptilde)
///   B(-1) = -(p3/(sqrt2 p_r)) p - (i p/(sqrt2 p_r)) conj(ptilde)
///   E(0)  = (i m/p) p,   B(0) = 0
FieldTriple fields_closed(const Kinematics& k, Lambda lambda);

/// Fields from the momentum-space tensor F^{mu nu} = -i (p^mu eps^nu - p^nu eps^mu)
/// with E^i = F^{i0} and B^i = -(1/2) eps_ijk F^{jk}. `eps` holds lower-index
/// components (as pol_vector returns); indices are raised internally.
FieldTriple fields_from_potential(const Kinematics& k, const FourVector& eps,
                                  std::optional<Lambda> label = std::nullopt);

/// Longitudinal mode fields: E = (i m/p) p, B = 0.
FieldTriple longitudinal_fields(const Kinematics& k);

using FieldTensor = std::array<std::array<Complex, 4>, 4>;

/// Antisymmetric tensor with F^{i0} = E^i and F^{jk} = -eps_{jkl} B^l.
FieldTensor field_tensor(const FieldTriple& fields);

/// F_|| as a 4x4 array (the tensor of longitudinal_fields).
FieldTensor longitudinal_tensor(const Kinematics& k);

struct AnsatzOptions {
    /// Position operators carry one factor of i (x = i * d-hat); the i^2
    /// flips the sign of the coordinate commutator relative to the bare
    /// derivative bracket. Recorded convention, on by default.
    bool position_i_factor = true;
};

struct AnsatzResult {
    /// coeff[mu][nu]: coefficient of df/dE in the commutator [x^mu, x^nu]
    /// applied to f (antisymmetric; spatial block vanishes for commuting
    /// momenta).
    FieldTensor coeff{};
    /// Per-axis weight coeff[0][i] / E_long^i; absent where p_i = 0 or
    /// where df/dE vanishes.
    std::array<std::optional<Complex>, 3> omega{};
    /// False when df/dE is identically zero at the point (all coefficients
    /// zero, omega undefined).
    bool energy_dependent = false;
};

/// Coordinate-commutator ansatz evaluated at one kinematic point: computes
/// the commutators of position operators on f through the chart, extracts
/// the coefficient of df/dE, and divides by the longitudinal E-field to
/// produce the weight omega per axis. The weight is an OUTPUT; it is never
/// assumed.
AnsatzResult ansatz_commutator(const Chart& c, const Kinematics& k, const Expr& f,
                               const AnsatzOptions& options = {});

}  // namespace shellcalc

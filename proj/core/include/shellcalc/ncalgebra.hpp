#pragma once

#include <array>
#include <string>
#include <vector>

#include "shellcalc/expr.hpp"

namespace shellcalc {

/// Degree <= 1 element of a coordinate algebra: a central scalar plus a
/// linear combination of generators. Both Appendix-style bracket families
/// close in this space, so commutator outputs live here.
struct AlgebraElement {
    Complex scalar{0.0, 0.0};
    std::vector<Complex> coeffs;  // one per generator

    static AlgebraElement zero(std::size_t dim) { return {Complex{0.0, 0.0}, std::vector<Complex>(dim)}; }
    static AlgebraElement generator(std::size_t dim, std::size_t index);

    /// Max absolute value over scalar and coefficients.
    double norm() const;
};

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator*(Complex s, const AlgebraElement& a);

struct StructureConstant {
    std::string out;                  // generator the bracket lands on
    std::array<std::string, 2> pair;  // (mu, nu): [x_mu, x_nu] = i * val * x_out + ...
    double val = 0.0;
};

/// A noncommutative coordinate algebra: canonical ([x_mu, x_nu] = i theta_mu_nu,
/// theta real antisymmetric) or Lie type ([x_mu, x_nu] = i C^beta_mu_nu x_beta).
/// Structure data is stored real; the factor i is applied when a commutator
/// is evaluated, which keeps the Jacobi arithmetic real and exact.
class CoordAlgebra {
public:
    enum class Kind { Canonical, Lie };

    static CoordAlgebra canonical(std::vector<std::string> generators,
                                  std::vector<std::vector<double>> theta);
    static CoordAlgebra lie(std::vector<std::string> generators,
                            const std::vector<StructureConstant>& constants);

    /// Generators (t, x1, x2, x3) with [x_m, t] = (i/kappa) x_m and
    /// [x_m, x_l] = 0.
    static CoordAlgebra kappa_minkowski(double kappa);

    static CoordAlgebra from_json_text(const std::string& text);
    static CoordAlgebra load(const std::string& path);
    std::string to_json_text() const;

    Kind kind() const { return kind_; }
    std::size_t dimension() const { return generators_.size(); }
    const std::vector<std::string>& generators() const { return generators_; }
    std::size_t index_of(const std::string& generator) const;

    double theta(std::size_t mu, std::size_t nu) const;
    /// C^beta_{mu nu}.
    double structure_constant(std::size_t beta, std::size_t mu, std::size_t nu) const;

private:
    CoordAlgebra() = default;
    Kind kind_ = Kind::Canonical;
    std::vector<std::string> generators_;
    std::vector<std::vector<double>> theta_;  // canonical
    std::vector<double> constants_;           // lie, dense beta*n*n + mu*n + nu
};

/// Bracket of two generators: i*theta (central scalar) for the canonical
/// kind, i * sum_beta C^beta x_beta for the Lie kind.
AlgebraElement commutator(const CoordAlgebra& a, const std::string& mu, const std::string& nu);

/// Bilinear extension to degree <= 1 elements; scalar parts are central.
AlgebraElement commutator(const CoordAlgebra& a, const AlgebraElement& x,
                          const AlgebraElement& y);

/// Max over generator triples of the norm of
/// [[mu,nu],rho] + [[nu,rho],mu] + [[rho,mu],nu].
double jacobi_residual(const CoordAlgebra& a);

}  // namespace shellcalc

#include "shellcalc/ncalgebra.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace shellcalc {

namespace {

constexpr Complex kI{0.0, 1.0};

void check_generators(const std::vector<std::string>& generators) {
    if (generators.empty()) throw EvalError("algebra needs at least one generator");
    std::set<std::string> names(generators.begin(), generators.end());
    if (names.size() != generators.size()) throw EvalError("duplicate generator name");
}

}  // namespace

AlgebraElement AlgebraElement::generator(std::size_t dim, std::size_t index) {
    AlgebraElement e = zero(dim);
    e.coeffs[index] = Complex{1.0, 0.0};
    return e;
}

double AlgebraElement::norm() const {
    double worst = std::abs(scalar);
    for (Complex c : coeffs) worst = std::max(worst, std::abs(c));
    return worst;
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.coeffs.size() != b.coeffs.size()) throw EvalError("algebra dimension mismatch");
    AlgebraElement out = a;
    out.scalar += b.scalar;
    for (std::size_t k = 0; k < b.coeffs.size(); ++k) out.coeffs[k] += b.coeffs[k];
    return out;
}

AlgebraElement operator*(Complex s, const AlgebraElement& a) {
    AlgebraElement out = a;
    out.scalar *= s;
    for (Complex& c : out.coeffs) c *= s;
    return out;
}

CoordAlgebra CoordAlgebra::canonical(std::vector<std::string> generators,
                                     std::vector<std::vector<double>> theta) {
    check_generators(generators);
    const std::size_t n = generators.size();
    if (theta.size() != n) throw EvalError("theta must be n x n");
    for (const auto& row : theta) {
        if (row.size() != n) throw EvalError("theta must be n x n");
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (theta[i][j] != -theta[j][i]) {
                throw EvalError("theta must be exactly antisymmetric");
            }
        }
    }
    CoordAlgebra a;
    a.kind_ = Kind::Canonical;
    a.generators_ = std::move(generators);
    a.theta_ = std::move(theta);
    return a;
}

CoordAlgebra CoordAlgebra::lie(std::vector<std::string> generators,
                               const std::vector<StructureConstant>& constants) {
    check_generators(generators);
    CoordAlgebra a;
    a.kind_ = Kind::Lie;
    a.generators_ = std::move(generators);
    const std::size_t n = a.generators_.size();
    a.constants_.assign(n * n * n, 0.0);
    auto at = [&](std::size_t beta, std::size_t mu, std::size_t nu) -> double& {
        return a.constants_[(beta * n + mu) * n + nu];
    };
    for (const StructureConstant& c : constants) {
        std::size_t beta = a.index_of(c.out);
        std::size_t mu = a.index_of(c.pair[0]);
        std::size_t nu = a.index_of(c.pair[1]);
        if (mu == nu && c.val != 0.0) {
            throw EvalError("structure constant on a repeated pair must vanish");
        }
        // Stored antisymmetrized; conflicting duplicate entries are rejected.
        if (at(beta, mu, nu) != 0.0 && at(beta, mu, nu) != c.val) {
            throw EvalError("conflicting structure constants for " + c.out);
        }
        at(beta, mu, nu) = c.val;
        at(beta, nu, mu) = -c.val;
    }
    return a;
}

CoordAlgebra CoordAlgebra::kappa_minkowski(double kappa) {
    if (kappa == 0.0) throw EvalError("kappa must be nonzero");
    std::vector<StructureConstant> constants;
    for (const char* xm : {"x1", "x2", "x3"}) {
        constants.push_back({xm, {xm, "t"}, 1.0 / kappa});
    }
    return lie({"t", "x1", "x2", "x3"}, constants);
}

std::size_t CoordAlgebra::index_of(const std::string& generator) const {
    auto it = std::find(generators_.begin(), generators_.end(), generator);
    if (it == generators_.end()) throw EvalError("unknown generator: " + generator);
    return static_cast<std::size_t>(it - generators_.begin());
}

double CoordAlgebra::theta(std::size_t mu, std::size_t nu) const {
    if (kind_ != Kind::Canonical) throw EvalError("theta defined only for canonical algebras");
    return theta_[mu][nu];
}

double CoordAlgebra::structure_constant(std::size_t beta, std::size_t mu,
                                        std::size_t nu) const {
    if (kind_ != Kind::Lie) throw EvalError("structure constants defined only for Lie algebras");
    const std::size_t n = generators_.size();
    return constants_[(beta * n + mu) * n + nu];
}

AlgebraElement commutator(const CoordAlgebra& a, const std::string& mu,
                          const std::string& nu) {
    const std::size_t i = a.index_of(mu);
    const std::size_t j = a.index_of(nu);
    AlgebraElement out = AlgebraElement::zero(a.dimension());
    if (a.kind() == CoordAlgebra::Kind::Canonical) {
        out.scalar = kI * a.theta(i, j);
        return out;
    }
    for (std::size_t beta = 0; beta < a.dimension(); ++beta) {
        out.coeffs[beta] = kI * a.structure_constant(beta, i, j);
    }
    return out;
}

AlgebraElement commutator(const CoordAlgebra& a, const AlgebraElement& x,
                          const AlgebraElement& y) {
    const std::size_t n = a.dimension();
    if (x.coeffs.size() != n || y.coeffs.size() != n) {
        throw EvalError("algebra dimension mismatch");
    }
    AlgebraElement out = AlgebraElement::zero(n);
    // Scalars are central; only generator-generator pairs contribute.
    for (std::size_t i = 0; i < n; ++i) {
        if (x.coeffs[i] == Complex{0.0, 0.0}) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y.coeffs[j] == Complex{0.0, 0.0}) continue;
            Complex w = x.coeffs[i] * y.coeffs[j];
            if (a.kind() == CoordAlgebra::Kind::Canonical) {
                out.scalar += w * kI * a.theta(i, j);
            } else {
                for (std::size_t beta = 0; beta < n; ++beta) {
                    double c = a.structure_constant(beta, i, j);
                    if (c != 0.0) out.coeffs[beta] += w * kI * c;
                }
            }
        }
    }
    return out;
}

double jacobi_residual(const CoordAlgebra& a) {
    const std::size_t n = a.dimension();
    double worst = 0.0;
    for (std::size_t mu = 0; mu < n; ++mu) {
        for (std::size_t nu = 0; nu < n; ++nu) {
            for (std::size_t rho = 0; rho < n; ++rho) {
                AlgebraElement xm = AlgebraElement::generator(n, mu);
                AlgebraElement xn = AlgebraElement::generator(n, nu);
                AlgebraElement xr = AlgebraElement::generator(n, rho);
                AlgebraElement j = commutator(a, commutator(a, xm, xn), xr) +
                                   commutator(a, commutator(a, xn, xr), xm) +
                                   commutator(a, commutator(a, xr, xm), xn);
                worst = std::max(worst, j.norm());
            }
        }
    }
    return worst;
}

CoordAlgebra CoordAlgebra::from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    const std::string kind = j.at("kind").get<std::string>();
    std::vector<std::string> generators = j.at("generators").get<std::vector<std::string>>();
    if (kind == "canonical") {
        return canonical(std::move(generators),
                         j.at("theta").get<std::vector<std::vector<double>>>());
    }
    if (kind == "lie") {
        std::vector<StructureConstant> constants;
        for (const auto& cj : j.at("C")) {
            StructureConstant c;
            c.out = cj.at("out").get<std::string>();
            auto pair = cj.at("pair").get<std::vector<std::string>>();
            if (pair.size() != 2) throw EvalError("structure constant pair must have 2 entries");
            c.pair = {pair[0], pair[1]};
            c.val = cj.at("val").get<double>();
            constants.push_back(std::move(c));
        }
        return lie(std::move(generators), constants);
    }
    throw EvalError("unknown algebra kind: " + kind);
}

CoordAlgebra CoordAlgebra::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw EvalError("cannot open algebra file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

std::string CoordAlgebra::to_json_text() const {
    nlohmann::json j;
    j["generators"] = generators_;
    if (kind_ == Kind::Canonical) {
        j["kind"] = "canonical";
        j["theta"] = theta_;
        return j.dump(2);
    }
    j["kind"] = "lie";
    nlohmann::json cs = nlohmann::json::array();
    const std::size_t n = generators_.size();
    for (std::size_t beta = 0; beta < n; ++beta) {
        for (std::size_t mu = 0; mu < n; ++mu) {
            for (std::size_t nu = mu + 1; nu < n; ++nu) {
                double v = constants_[(beta * n + mu) * n + nu];
                if (v == 0.0) continue;
                cs.push_back({{"out", generators_[beta]},
                              {"pair", {generators_[mu], generators_[nu]}},
                              {"val", v}});
            }
        }
    }
    j["C"] = std::move(cs);
    return j.dump(2);
}

}  // namespace shellcalc

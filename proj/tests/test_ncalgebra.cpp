#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>

#include <gtest/gtest.h>

#include "shellcalc/ncalgebra.hpp"
#include "shellcalc/numeric.hpp"

using namespace shellcalc;

namespace {

constexpr Complex kI{0.0, 1.0};

double element_diff(const AlgebraElement& a, const AlgebraElement& b) {
    double worst = std::abs(a.scalar - b.scalar);
    for (std::size_t k = 0; k < a.coeffs.size(); ++k) {
        worst = std::max(worst, std::abs(a.coeffs[k] - b.coeffs[k]));
    }
    return worst;
}

}  // namespace

TEST(KappaMinkowski, SpaceTimeBracket) {
    CoordAlgebra a = CoordAlgebra::kappa_minkowski(2.0);
    AlgebraElement el = commutator(a, "x1", "t");
    EXPECT_EQ(el.scalar, (Complex{0.0, 0.0}));
    EXPECT_LT(std::abs(el.coeffs[a.index_of("x1")] - kI * 0.5), 1e-15);
    for (const char* g : {"t", "x2", "x3"}) {
        EXPECT_EQ(el.coeffs[a.index_of(g)], (Complex{0.0, 0.0}));
    }
}

TEST(KappaMinkowski, SpatialBracketsVanish) {
    CoordAlgebra a = CoordAlgebra::kappa_minkowski(1.0);
    EXPECT_EQ(commutator(a, "x1", "x2").norm(), 0.0);
    EXPECT_EQ(commutator(a, "x2", "x3").norm(), 0.0);
}

TEST(KappaMinkowski, BracketAntisymmetry) {
    CoordAlgebra a = CoordAlgebra::kappa_minkowski(4.0);
    AlgebraElement fwd = commutator(a, "x1", "t");
    AlgebraElement rev = commutator(a, "t", "x1");
    EXPECT_LT(std::abs(rev.coeffs[a.index_of("x1")] + kI * 0.25), 1e-15);
    EXPECT_LT(element_diff(fwd, Complex{-1.0, 0.0} * rev), 1e-15);
}

TEST(KappaMinkowski, CommutativeLimit) {
    CoordAlgebra a = CoordAlgebra::kappa_minkowski(1e12);
    EXPECT_LE(commutator(a, "x1", "t").norm(), 1e-12);
    EXPECT_THROW(CoordAlgebra::kappa_minkowski(0.0), EvalError);
}

TEST(Canonical, ThetaReadOff) {
    std::vector<std::vector<double>> theta(2, std::vector<double>(2, 0.0));
    theta[0][1] = 1.0;
    theta[1][0] = -1.0;
    CoordAlgebra a = CoordAlgebra::canonical({"x0", "x1"}, theta);
    AlgebraElement el = commutator(a, "x0", "x1");
    EXPECT_EQ(el.scalar, kI);
    EXPECT_EQ(commutator(a, "x0", "x0").norm(), 0.0);
}

TEST(Canonical, RejectsNonAntisymmetricTheta) {
    std::vector<std::vector<double>> theta(2, std::vector<double>(2, 0.0));
    theta[0][1] = 1.0;
    theta[1][0] = -0.5;
    EXPECT_THROW(CoordAlgebra::canonical({"x0", "x1"}, theta), EvalError);
}

TEST(Commutator, BilinearityAndAntisymmetry) {
    CoordAlgebra a = CoordAlgebra::kappa_minkowski(1.0);
    std::mt19937_64 rng(31);
    auto random_element = [&]() {
        AlgebraElement e = AlgebraElement::zero(a.dimension());
        e.scalar = Complex{2.0 * uniform_unit(rng) - 1.0, 2.0 * uniform_unit(rng) - 1.0};
        for (auto& c : e.coeffs) {
            c = Complex{2.0 * uniform_unit(rng) - 1.0, 2.0 * uniform_unit(rng) - 1.0};
        }
        return e;
    };
    for (int t = 0; t < 50; ++t) {
        AlgebraElement x = random_element();
        AlgebraElement y = random_element();
        AlgebraElement z = random_element();
        Complex ca{2.0 * uniform_unit(rng) - 1.0, 2.0 * uniform_unit(rng) - 1.0};
        Complex cb{2.0 * uniform_unit(rng) - 1.0, 2.0 * uniform_unit(rng) - 1.0};
        AlgebraElement lhs = commutator(a, ca * x + cb * y, z);
        AlgebraElement rhs = ca * commutator(a, x, z) + cb * commutator(a, y, z);
        EXPECT_LT(element_diff(lhs, rhs), 1e-12);
        AlgebraElement fwd = commutator(a, x, y);
        AlgebraElement rev = commutator(a, y, x);
        EXPECT_LT(element_diff(fwd, Complex{-1.0, 0.0} * rev), 1e-12);
    }
}

TEST(Jacobi, CanonicalAlwaysPasses) {
    std::mt19937_64 rng(32);
    for (int t = 0; t < 10; ++t) {
        std::vector<std::vector<double>> theta(3, std::vector<double>(3, 0.0));
        for (int i = 0; i < 3; ++i) {
            for (int j = i + 1; j < 3; ++j) {
                theta[i][j] = 4.0 * uniform_unit(rng) - 2.0;
                theta[j][i] = -theta[i][j];
            }
        }
        CoordAlgebra a = CoordAlgebra::canonical({"x0", "x1", "x2"}, theta);
        EXPECT_EQ(jacobi_residual(a), 0.0);
    }
}

TEST(Jacobi, KappaMinkowskiPasses) {
    for (double kappa : {0.1, 1.0, 10.0}) {
        EXPECT_LE(jacobi_residual(CoordAlgebra::kappa_minkowski(kappa)), 1e-12);
    }
}

TEST(Jacobi, CorruptedConstantsFail) {
    CoordAlgebra corrupted = CoordAlgebra::lie(
        {"t", "x1", "x2", "x3"},
        {{"x1", {"x1", "t"}, 1.0}, {"x2", {"x2", "t"}, 2.0}, {"t", {"x1", "x2"}, 1.0}});
    const double r = jacobi_residual(corrupted);
    EXPECT_GT(r, 1e-3);
    // Hand expansion gives 3/kappa with kappa = 1.
    EXPECT_NEAR(r, 3.0, 1e-12);
}

TEST(Json, SpecFormatLoads) {
    const std::string text = R"json({"kind":"lie","generators":["t","x1","x2","x3"],
        "C":[{"out":"x1","pair":["x1","t"],"val":1.0}]})json";
    CoordAlgebra a = CoordAlgebra::from_json_text(text);
    EXPECT_EQ(a.kind(), CoordAlgebra::Kind::Lie);
    AlgebraElement el = commutator(a, "x1", "t");
    EXPECT_LT(std::abs(el.coeffs[a.index_of("x1")] - kI), 1e-15);
}

TEST(Json, CanonicalRoundTrip) {
    std::vector<std::vector<double>> theta(2, std::vector<double>(2, 0.0));
    theta[0][1] = 0.75;
    theta[1][0] = -0.75;
    CoordAlgebra a = CoordAlgebra::canonical({"t", "x1"}, theta);
    CoordAlgebra back = CoordAlgebra::from_json_text(a.to_json_text());
    EXPECT_EQ(back.kind(), CoordAlgebra::Kind::Canonical);
    EXPECT_EQ(commutator(back, "t", "x1").scalar, kI * 0.75);
}

TEST(Json, LieRoundTripPreservesBrackets) {
    CoordAlgebra a = CoordAlgebra::kappa_minkowski(0.5);
    CoordAlgebra back = CoordAlgebra::from_json_text(a.to_json_text());
    for (const char* g : {"x1", "x2", "x3"}) {
        EXPECT_LT(element_diff(commutator(a, g, "t"), commutator(back, g, "t")), 1e-15);
    }
    EXPECT_LE(jacobi_residual(back), 1e-12);
}

TEST(Errors, UnknownGeneratorAndDimensionMismatch) {
    CoordAlgebra a = CoordAlgebra::kappa_minkowski(1.0);
    EXPECT_THROW(commutator(a, "x9", "t"), EvalError);
    AlgebraElement wrong = AlgebraElement::zero(2);
    EXPECT_THROW(commutator(a, wrong, wrong), EvalError);
    EXPECT_THROW(CoordAlgebra::lie({"t", "x1"}, {{"t", {"x1", "x1"}, 1.0}}), EvalError);
}

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "shellcalc/helicity.hpp"
#include "shellcalc/numeric.hpp"
#include "shellcalc/parser.hpp"

using namespace shellcalc;

namespace {

Kinematics random_kinematics(std::mt19937_64& rng) {
    auto draw = [&](double lo, double hi) {
        double v = lo + (hi - lo) * uniform_unit(rng);
        return (rng() & 1u) ? -v : v;
    };
    return Kinematics(draw(0.1, 2.0), draw(0.1, 2.0), draw(0.1, 2.0),
                      0.5 + 1.5 * uniform_unit(rng));
}

double field_diff(const FieldTriple& a, const FieldTriple& b) {
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) {
        worst = std::max(worst, relative_residual(a.efield[i], b.efield[i]));
        worst = std::max(worst, relative_residual(a.bfield[i], b.bfield[i]));
    }
    return worst;
}

}  // namespace

TEST(PolVector, RestFrameScalarMode) {
    Kinematics k(0.0, 0.0, 1e-9, 1.0);
    FourVector eps = pol_vector(k, Lambda::ZeroTime);
    EXPECT_NEAR(std::abs(eps[0] - Complex{1.0, 0.0}), 0.0, 1e-9);
    EXPECT_NEAR(std::abs(eps[3]), 1e-9, 1e-12);
}

TEST(PolVector, LongitudinalAtUnitMomentum) {
    Kinematics k(0.0, 0.0, 1.0, 1.0);  // E = sqrt(2)
    FourVector eps = pol_vector(k, Lambda::Zero);
    EXPECT_NEAR(eps[0].real(), 1.0, 1e-15);
    EXPECT_EQ(eps[1], (Complex{0.0, 0.0}));
    EXPECT_EQ(eps[2], (Complex{0.0, 0.0}));
    EXPECT_NEAR(eps[3].real(), -std::sqrt(2.0), 1e-15);
}

TEST(PolVector, NormsAtReferencePoint) {
    Kinematics k(1.0, 1.0, std::sqrt(2.0), 1.0);
    EXPECT_NEAR(std::abs(pol_vector(k, Lambda::PlusOne).minkowski_dot_conj(
                             pol_vector(k, Lambda::PlusOne)) -
                         Complex{-1.0, 0.0}),
                0.0, 1e-10);
    EXPECT_NEAR(std::abs(pol_vector(k, Lambda::MinusOne).minkowski_dot_conj(
                             pol_vector(k, Lambda::MinusOne)) -
                         Complex{-1.0, 0.0}),
                0.0, 1e-10);
    EXPECT_NEAR(std::abs(pol_vector(k, Lambda::Zero).minkowski_dot_conj(
                             pol_vector(k, Lambda::Zero)) -
                         Complex{-1.0, 0.0}),
                0.0, 1e-10);
    EXPECT_NEAR(std::abs(pol_vector(k, Lambda::ZeroTime).minkowski_dot_conj(
                             pol_vector(k, Lambda::ZeroTime)) -
                         Complex{1.0, 0.0}),
                0.0, 1e-10);
}

TEST(PolVector, NormalizationProperty) {
    std::mt19937_64 rng(404);
    for (int t = 0; t < 100; ++t) {
        Kinematics k = random_kinematics(rng);
        for (Lambda l : {Lambda::PlusOne, Lambda::MinusOne, Lambda::Zero}) {
            FourVector eps = pol_vector(k, l);
            EXPECT_NEAR(std::abs(eps.minkowski_dot_conj(eps) - Complex{-1.0, 0.0}), 0.0, 1e-10);
        }
        FourVector scalar = pol_vector(k, Lambda::ZeroTime);
        EXPECT_NEAR(std::abs(scalar.minkowski_dot_conj(scalar) - Complex{1.0, 0.0}), 0.0, 1e-10);
    }
}

TEST(PolVector, TransversalityProperty) {
    std::mt19937_64 rng(405);
    for (int t = 0; t < 100; ++t) {
        Kinematics k = random_kinematics(rng);
        const auto p = k.four_momentum();
        for (Lambda l : {Lambda::PlusOne, Lambda::MinusOne, Lambda::Zero}) {
            FourVector eps = pol_vector(k, l);
            Complex dot{0.0, 0.0};
            for (int mu = 0; mu < 4; ++mu) dot += p[mu] * eps[mu];
            EXPECT_LT(std::abs(dot), 1e-10);
        }
    }
}

TEST(PolVector, AxisSingularityIsHardError) {
    Kinematics axis(0.0, 0.0, 1.5, 1.0);
    EXPECT_THROW(pol_vector(axis, Lambda::PlusOne), EvalError);
    EXPECT_THROW(pol_vector(axis, Lambda::MinusOne), EvalError);
    Kinematics rest(0.0, 0.0, 0.0, 1.0);
    EXPECT_THROW(pol_vector(rest, Lambda::Zero), EvalError);
}

TEST(PolVector, AxisLimitKeepsNormalization) {
    // Approach p_perp -> 0 along fixed phi = pi/4; norms stay -1.
    for (double t : {1e-3, 1e-6, 1e-9}) {
        Kinematics k(t / std::sqrt(2.0), t / std::sqrt(2.0), 1.0, 1.0);
        for (Lambda l : {Lambda::PlusOne, Lambda::MinusOne}) {
            FourVector eps = pol_vector(k, l);
            EXPECT_NEAR(std::abs(eps.minkowski_dot_conj(eps) - Complex{-1.0, 0.0}), 0.0, 1e-10);
        }
    }
}

TEST(FieldsClosed, LongitudinalBIsExactlyZero) {
    std::mt19937_64 rng(406);
    for (int t = 0; t < 50; ++t) {
        FieldTriple ft = fields_closed(random_kinematics(rng), Lambda::Zero);
        for (Complex c : ft.bfield) EXPECT_EQ(c, (Complex{0.0, 0.0}));
    }
}

TEST(FieldsClosed, LongitudinalEFollowsMomentum) {
    // E(p, 0) = (i m / p) p; at p = (0,0,2), m = 1 the z component is i.
    FieldTriple ft = fields_closed(Kinematics(0.0, 0.0, 2.0, 1.0), Lambda::Zero);
    EXPECT_EQ(ft.efield[0], (Complex{0.0, 0.0}));
    EXPECT_EQ(ft.efield[1], (Complex{0.0, 0.0}));
    EXPECT_LT(std::abs(ft.efield[2] - Complex{0.0, 1.0}), 1e-15);
}

TEST(FieldsClosed, TransverseMatchesPotentialRoute) {
    Kinematics k(1.0, 0.0, 1.0, 1.0);
    FieldTriple closed = fields_closed(k, Lambda::PlusOne);
    FieldTriple derived = fields_from_potential(k, pol_vector(k, Lambda::PlusOne),
                                                Lambda::PlusOne);
    EXPECT_LE(field_diff(closed, derived), 1e-10);
}

TEST(FieldsFromPotential, PureGaugeVanishes) {
    // epsilon proportional to p itself (massless, on shell) produces no field.
    Kinematics k(1.0, 0.0, 1.0, 0.0);
    const auto p = k.four_momentum();
    FourVector eps({Complex{p[0], 0.0}, Complex{-p[1], 0.0}, Complex{-p[2], 0.0},
                    Complex{-p[3], 0.0}});  // lower-index components of p
    FieldTriple ft = fields_from_potential(k, eps);
    for (int i = 0; i < 3; ++i) {
        EXPECT_EQ(ft.efield[i], (Complex{0.0, 0.0}));
        EXPECT_EQ(ft.bfield[i], (Complex{0.0, 0.0}));
    }
}

TEST(FieldsFromPotential, LongitudinalReproducesClosedForm) {
    FieldTriple ft = fields_from_potential(Kinematics(0.0, 0.0, 2.0, 1.0),
                                           pol_vector(Kinematics(0.0, 0.0, 2.0, 1.0), Lambda::Zero),
                                           Lambda::Zero);
    EXPECT_LT(std::abs(ft.efield[2] - Complex{0.0, 1.0}), 1e-12);
    for (Complex c : ft.bfield) EXPECT_LT(std::abs(c), 1e-15);
}

TEST(FieldsCrossCheck, AllModesAgreeOverRandomKinematics) {
    std::mt19937_64 rng(407);
    for (int t = 0; t < 100; ++t) {
        Kinematics k = random_kinematics(rng);
        for (Lambda l : {Lambda::PlusOne, Lambda::MinusOne, Lambda::Zero}) {
            EXPECT_LE(field_diff(fields_closed(k, l),
                                 fields_from_potential(k, pol_vector(k, l), l)),
                      1e-10);
        }
    }
}

TEST(LongitudinalTensor, ComponentsAndAntisymmetry) {
    Kinematics k(0.0, 0.0, 1.0, 1.0);
    FieldTensor f = longitudinal_tensor(k);
    EXPECT_LT(std::abs(f[3][0] - Complex{0.0, 1.0}), 1e-15);
    // B block vanishes identically for the longitudinal mode.
    EXPECT_EQ(f[1][2], (Complex{0.0, 0.0}));
    EXPECT_EQ(f[2][3], (Complex{0.0, 0.0}));
    EXPECT_EQ(f[3][1], (Complex{0.0, 0.0}));
    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = 0; nu < 4; ++nu) {
            EXPECT_EQ(f[mu][nu], -f[nu][mu]);
        }
    }
}

TEST(Ansatz, EnergyIndependentFunctionReportsAbsent) {
    Chart c = Chart::standard();
    AnsatzResult ar = ansatz_commutator(c, Kinematics(1.0, 1.0, 1.0, 1.0), parse("p1^2"));
    EXPECT_FALSE(ar.energy_dependent);
    for (const auto& w : ar.omega) EXPECT_FALSE(w.has_value());
    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = 0; nu < 4; ++nu) EXPECT_EQ(ar.coeff[mu][nu], (Complex{0.0, 0.0}));
    }
}

TEST(Ansatz, CoefficientIsClosedFormValue) {
    Chart c = Chart::standard();
    AnsatzResult ar = ansatz_commutator(c, Kinematics(1.0, 0.0, 0.0, 1.0), parse("E*p1"));
    ASSERT_TRUE(ar.energy_dependent);
    EXPECT_LT(std::abs(ar.coeff[0][1] - Complex{0.5, 0.0}), 1e-12);  // p1/E^2 at E^2 = 2
    EXPECT_TRUE(ar.omega[0].has_value());
    EXPECT_FALSE(ar.omega[1].has_value());  // p2 = 0: axis skipped
    EXPECT_FALSE(ar.omega[2].has_value());
}

TEST(Ansatz, OmegaAxisIndependent) {
    Chart c = Chart::standard();
    Kinematics k(1.0, 1.0, 1.0, 1.0);  // E^2 = 4, p = sqrt(3)
    AnsatzResult ar = ansatz_commutator(c, k, parse("E*p1"));
    const Complex expected = Complex{std::sqrt(3.0), 0.0} / (Complex{0.0, 1.0} * 4.0);
    for (int i = 0; i < 3; ++i) {
        ASSERT_TRUE(ar.omega[i].has_value());
        EXPECT_LT(std::abs(*ar.omega[i] - expected), 1e-9);
    }
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            EXPECT_LT(std::abs(*ar.omega[i] - *ar.omega[j]), 1e-9);
        }
    }
}

TEST(Ansatz, SpatialBlockVanishesForCommutingMomenta) {
    Chart c = Chart::standard();
    AnsatzResult ar = ansatz_commutator(c, Kinematics(0.7, -0.9, 1.1, 1.2), parse("exp(E)"));
    for (int i = 1; i < 4; ++i) {
        for (int j = 1; j < 4; ++j) {
            EXPECT_LT(std::abs(ar.coeff[i][j]), 1e-12);
        }
    }
}

TEST(Ansatz, IFactorConventionFlipsSign) {
    Chart c = Chart::standard();
    Kinematics k(1.0, 1.0, 1.0, 1.0);
    AnsatzOptions bare;
    bare.position_i_factor = false;
    AnsatzResult with_i = ansatz_commutator(c, k, parse("E^2"));
    AnsatzResult without_i = ansatz_commutator(c, k, parse("E^2"), bare);
    for (int axis = 1; axis <= 3; ++axis) {
        EXPECT_LT(std::abs(with_i.coeff[0][axis] + without_i.coeff[0][axis]), 1e-14);
    }
}

TEST(Kinematics, ConventionScalars) {
    Kinematics k(1.0, 1.0, 0.0, 1.0);
    EXPECT_LT(std::abs(k.p_r() - Complex{1.0, 1.0}), 1e-15);
    EXPECT_LT(std::abs(k.p_l() - Complex{1.0, -1.0}), 1e-15);
    EXPECT_LT(std::abs(k.phase() - Complex{1.0, 1.0} / std::sqrt(2.0)), 1e-15);
    EXPECT_NEAR(k.energy() * k.energy() - k.p() * k.p(), 1.0, 1e-12);
    EXPECT_THROW(Kinematics(1.0, 0.0, 0.0, -1.0), EvalError);
}

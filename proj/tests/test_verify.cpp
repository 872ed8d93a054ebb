#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "shellcalc/verify.hpp"

using namespace shellcalc;

TEST(Verify, AllChecksPassAtDefaultTolerances) {
    VerifyReport report = run_verify();
    EXPECT_TRUE(report.all_passed());
    for (const VerifyCheck& c : report.checks) {
        EXPECT_TRUE(c.passed) << c.name << " residual " << c.residual;
    }
}

TEST(Verify, EveryCriterionRepresentedOnce) {
    VerifyReport report = run_verify();
    std::set<std::string> names;
    std::set<int> criteria;
    for (const VerifyCheck& c : report.checks) {
        EXPECT_TRUE(names.insert(c.name).second) << "duplicate check " << c.name;
        criteria.insert(c.criterion);
    }
    for (int k = 1; k <= 8; ++k) EXPECT_TRUE(criteria.count(k)) << "criterion " << k;
    // Output order is fixed by name.
    for (std::size_t k = 1; k < report.checks.size(); ++k) {
        EXPECT_LT(report.checks[k - 1].name, report.checks[k].name);
    }
}

TEST(Verify, CheckListIsStable) {
    // The check names are part of the report schema; renames are breaking.
    const std::vector<std::string> expected = {
        "algebra.jacobi_canonical",
        "algebra.jacobi_kappa",
        "algebra.jacobi_negative_control",
        "ansatz.omega_axis_independence",
        "ansatz.parallelism",
        "commutator.closed_form",
        "determinism.verify_json",
        "dirac.det_factorization",
        "dirac.mass_relation",
        "dirac.offshell_det_separation",
        "dirac.onshell_det",
        "dispersion.deformation_alpha_linearity",
        "dispersion.deformed_none_bitexact",
        "helicity.longitudinal_b_zero",
        "helicity.normalization",
        "helicity.potential_cross_check",
        "helicity.transversality",
        "momentum_bracket.classical_zero",
        "momentum_bracket.substitution",
        "momentum_bracket.zero_bracket",
        "wholepartial.fd_convergence_order",
        "wholepartial.fd_oracle",
    };
    VerifyReport report = run_verify();
    ASSERT_EQ(report.checks.size(), expected.size());
    for (std::size_t k = 0; k < expected.size(); ++k) {
        EXPECT_EQ(report.checks[k].name, expected[k]);
    }
}

TEST(Verify, JsonDeterministicForFixedSeed) {
    VerifyOptions opts;
    opts.seed = 1234;
    std::string a = verify_report_json(run_verify(opts));
    std::string b = verify_report_json(run_verify(opts));
    EXPECT_EQ(a, b);
    opts.seed = 1235;
    EXPECT_NE(a, verify_report_json(run_verify(opts)));
}

TEST(Verify, OverTightToleranceFailsControlled) {
    VerifyOptions opts;
    opts.tolerance_override = 1e-15;
    VerifyReport report = run_verify(opts);
    EXPECT_FALSE(report.all_passed());
    // Lower-bound (separation) checks are untouched by the override.
    for (const VerifyCheck& c : report.checks) {
        if (c.direction == CheckDirection::AtLeast) {
            EXPECT_TRUE(c.passed) << c.name;
        }
    }
}

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "zeno/bessel.hpp"
#include "zeno/bound_states.hpp"
#include "zeno/errors.hpp"

using namespace zeno;

TEST(BoundStates, ClosedFormAtResonance) {
    const ModelParams p = reference_params(0.0);
    const auto bs = bound_state_solve(p, Branch::upper);
    const double ref = 0.5 * std::asinh(p.g * p.g / (2.0 * p.xi * p.xi));
    EXPECT_NEAR(bs.kappa, ref, 1e-12);
    EXPECT_NEAR(bs.energy, 2.0 * p.xi * std::cosh(ref), 1e-12);
    const auto lower = bound_state_solve(p, Branch::lower);
    EXPECT_NEAR(lower.kappa, ref, 1e-12);
    EXPECT_NEAR(lower.energy, -bs.energy, 1e-12);
}

TEST(BoundStates, RootSatisfiesConditionWithDetuning) {
    ModelParams p = reference_params(0.8);
    for (double delta : {-1.5, -0.3, 0.4, 2.5}) {
        p.omega_c = delta;
        for (Branch b : {Branch::upper, Branch::lower}) {
            const auto bs = bound_state_solve(p, b);
            EXPECT_GT(bs.kappa, 0.0);
            EXPECT_LT(std::abs(bound_condition_residual(p, b, bs.kappa)), 1e-15);
            // Energies lie outside the band [Delta - 2 xi, Delta + 2 xi].
            EXPECT_GT(std::abs(bs.energy - delta), 2.0 * p.xi);
        }
    }
}

TEST(BoundStates, ProfileNormalized) {
    const auto bs = bound_state_solve(reference_params(0.5), Branch::upper);
    double sum = 0.0;
    for (const auto& pt : bound_profile(bs, -20000, 20000)) sum += pt.density;
    EXPECT_NEAR(sum, 1.0, 1e-10);
    EXPECT_LT(bs.amplitude(1).real(), 0.0);
    EXPECT_GT(bs.amplitude(2).real(), 0.0);
    EXPECT_NEAR(bs.width(), 1.0 / bs.kappa, 1e-15);
}

TEST(BoundStates, AgreesWithLargeLattice) {
    const ModelParams p = reference_params(0.0);
    for (Branch b : {Branch::upper, Branch::lower}) {
        const auto bs = bound_state_solve(p, b);
        const auto lat = lattice_bound_state(p, bs, 2001);
        EXPECT_NEAR(lat.energy, bs.energy, 1e-10);
        EXPECT_GT(lat.overlap, 0.99999);
    }
}

TEST(BoundStates, AgreesWithLatticeWhenStronglyLocalized) {
    ModelParams p = reference_params(0.0);
    p.g = 0.8;
    p.omega_c = 0.5;
    for (Branch b : {Branch::upper, Branch::lower}) {
        const auto bs = bound_state_solve(p, b);
        const auto lat = lattice_bound_state(p, bs, 401);
        EXPECT_NEAR(lat.energy, bs.energy, 1e-12);
        EXPECT_GT(lat.overlap, 1.0 - 1e-12);
    }
}

TEST(BoundStates, DelocalizedAtBesselZeros) {
    for (int k = 1; k <= 3; ++k) {
        const ModelParams p = reference_params(bessel_zero(0, k));
        EXPECT_THROW(bound_state_solve(p, Branch::upper), DelocalizedError);
        EXPECT_NO_THROW(bound_state_solve(p.with_ratio(bessel_zero(0, k) + 1e-3), Branch::upper));
        EXPECT_NO_THROW(bound_state_solve(p.with_ratio(bessel_zero(0, k) - 1e-3), Branch::upper));
    }
}

TEST(BoundStates, LocalizationMapMarksZeros) {
    const ModelParams p = reference_params(0.0);
    const std::vector<double> ratios = {0.0, 1.0, bessel_zero(0, 1), 3.0};
    const auto rows = localization_map(p, ratios, -5, 5);
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_FALSE(rows[0].delocalized);
    EXPECT_TRUE(rows[2].delocalized);
    EXPECT_EQ(rows[2].density.size(), 11u);
    EXPECT_EQ(rows[2].kappa, 0.0);
    // Weaker effective coupling gives a wider state.
    EXPECT_GT(rows[0].kappa, rows[1].kappa);
    EXPECT_GT(rows[1].density[5], rows[3].density[5]);
}

TEST(BoundStates, BranchNames) {
    EXPECT_EQ(parse_branch("lower"), Branch::lower);
    EXPECT_EQ(to_string(Branch::upper), "upper");
    EXPECT_THROW(parse_branch("middle"), DomainError);
}

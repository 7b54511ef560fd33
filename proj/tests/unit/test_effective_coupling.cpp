#include <gtest/gtest.h>

#include <cmath>

#include "zeno/bessel.hpp"
#include "zeno/effective_coupling.hpp"
#include "zeno/errors.hpp"

using namespace zeno;

TEST(EffectiveCoupling, RenormalizedByJ0) {
    const ModelParams p = reference_params(1.5);
    EXPECT_NEAR(effective_g(p), 0.25 * std::cyl_bessel_j(0.0, 1.5), 1e-14);
    const auto ec = effective_coupling(p);
    EXPECT_EQ(ec.order, 0);
    EXPECT_NEAR(ec.value, effective_g(p), 1e-15);
}

TEST(EffectiveCoupling, VanishesAtBesselZero) {
    const ModelParams p = reference_params(bessel_zero(0, 1));
    EXPECT_LT(std::abs(effective_g(p)), 1e-14);
}

TEST(EffectiveCoupling, SidebandSelection) {
    EXPECT_EQ(resonant_sideband(0.0, 10.0), 0);
    EXPECT_EQ(resonant_sideband(12.0, 10.0), 1);
    EXPECT_EQ(resonant_sideband(-27.0, 10.0), -3);
    EXPECT_EQ(resonant_sideband(15.0, 10.0), 1);
    EXPECT_EQ(resonant_sideband(-15.0, 10.0), -1);
    ModelParams p = reference_params(1.2);
    p.omega_c = 20.1;
    const auto ec = effective_coupling(p);
    EXPECT_EQ(ec.order, 2);
    EXPECT_NEAR(ec.value, p.g * bessel_j(2, 1.2), 1e-15);
}

TEST(EffectiveCoupling, ResidualDetuningHandling) {
    ModelParams p = reference_params(1.0);
    p.nu = 20.0;
    p.amplitude = 20.0;
    p.omega_c = 20.3;
    EffectiveOptions keep;
    const auto hk = effective_hamiltonian(p, keep);
    EXPECT_NEAR(hk(p.sites, p.sites), p.omega_a + 20.0, 1e-14);
    EffectiveOptions drop;
    drop.residual = ResidualDetuning::drop;
    const auto hd = effective_hamiltonian(p, drop);
    EXPECT_NEAR(hd(p.sites, p.sites), p.omega_c, 1e-14);
    EXPECT_NEAR(hd(p.center(), p.sites), p.g * bessel_j(1, 1.0), 1e-14);
}

TEST(EffectiveCoupling, RegimeGuard) {
    ModelParams p = reference_params(1.0);
    p.nu = 2.0;
    p.amplitude = 2.0;
    EXPECT_FALSE(in_high_frequency_regime(p));
    EXPECT_THROW(effective_propagate(p, initial_excited(p), 1.0), RegimeError);
    EffectiveOptions o;
    o.allow_outside_regime = true;
    EXPECT_NO_THROW(effective_propagate(p, initial_excited(p), 1.0, o));
}

TEST(EffectiveCoupling, FrozenAtBesselZero) {
    const ModelParams p = reference_params(bessel_zero(0, 1));
    const auto s = effective_propagate(p, initial_excited(p), 20.0);
    EXPECT_NEAR(excited_probability(s), 1.0, 1e-12);
}

TEST(EffectiveCoupling, UnitaryEvolution) {
    const ModelParams p = reference_params(0.7);
    const EffectivePropagator prop(p);
    for (double t : {0.0, 3.0, 17.0}) EXPECT_NEAR(prop.evolve(initial_excited(p), t).norm_squared(), 1.0, 1e-12);
}

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "zeno/bessel.hpp"
#include "zeno/effective_coupling.hpp"
#include "zeno/bound_states.hpp"
#include "zeno/direct.hpp"
#include "zeno/floquet.hpp"
#include "zeno/scattering.hpp"
#include "zeno/zeno_decay.hpp"

using namespace zeno;

namespace {

constexpr int kCases = 200;

ModelParams random_params(oracle::Gen& gen) {
    ModelParams p;
    p.omega_c = gen.uniform(-1.0, 1.0);
    p.omega_a = gen.uniform(-1.0, 1.0);
    p.nu = gen.uniform(4.0, 15.0);
    p.amplitude = gen.uniform(0.0, 6.0) * p.nu;
    p.xi = gen.uniform(0.5, 1.5);
    p.g = gen.uniform(0.05, 0.8);
    p.sites = gen.odd(3, 41);
    return p;
}

} // namespace

TEST(Properties, HamiltonianIsHermitian) {
    oracle::Gen gen(11);
    for (int i = 0; i < kCases; ++i) {
        const ModelParams p = random_params(gen);
        const Eigen::MatrixXd h = hamiltonian_at(p, gen.uniform(0.0, 50.0));
        ASSERT_EQ((h - h.transpose()).cwiseAbs().maxCoeff(), 0.0);
    }
}

TEST(Properties, BesselSumRule) {
    oracle::Gen gen(12);
    for (int i = 0; i < kCases; ++i) {
        const double x = gen.uniform(-40.0, 40.0);
        const auto j = bessel_j_sequence(static_cast<int>(std::abs(x)) + 40, x);
        double s = j[0] * j[0];
        for (std::size_t n = 1; n < j.size(); ++n) s += 2.0 * j[n] * j[n];
        ASSERT_NEAR(s, 1.0, 1e-13) << "x=" << x;
    }
}

TEST(Properties, ScatteringIsUnitary) {
    oracle::Gen gen(13);
    for (int i = 0; i < kCases; ++i) {
        const ModelParams p = random_params(gen);
        const auto r = transmission_amplitude(p, gen.uniform(1e-3, std::numbers::pi - 1e-3));
        ASSERT_NEAR(r.transmission() + r.reflection(), 1.0, 1e-12);
    }
}

TEST(Properties, DirectPropagationConservesNorm) {
    oracle::Gen gen(14);
    for (int i = 0; i < 20; ++i) {
        const ModelParams p = random_params(gen);
        const double t = gen.uniform(0.1, 3.0);
        DirectReport rep;
        direct_propagate(p, initial_excited(p), t, recommended_step(p, t, 1e-9), &rep);
        ASSERT_LE(rep.norm_drift, 1e-9);
    }
}

TEST(Properties, QuasiEnergyReplicaSymmetry) {
    oracle::Gen gen(15);
    for (int i = 0; i < 10; ++i) {
        ModelParams p = random_params(gen);
        p.sites = gen.odd(3, 11);
        p.amplitude = gen.uniform(0.0, 2.0) * p.nu;
        const auto spec = floquet_spectrum(p, 16);
        ASSERT_LT(replica_symmetry_defect(spec, p), 1e-8);
    }
}

TEST(Properties, BoundStatesSolveTheirCondition) {
    oracle::Gen gen(16);
    for (int i = 0; i < kCases; ++i) {
        const ModelParams p = random_params(gen);
        if (std::abs(effective_g(p)) < 1e-6) continue;
        for (Branch b : {Branch::upper, Branch::lower}) {
            const auto bs = bound_state_solve(p, b);
            ASSERT_GT(bs.kappa, 0.0);
            ASSERT_LT(std::abs(bound_condition_residual(p, b, bs.kappa)), 1e-14);
            ASSERT_GE(std::abs(bs.energy - p.detuning()), 2.0 * p.xi - 1e-12);
        }
    }
}

TEST(Properties, DecayProfileTermsNonNegative) {
    oracle::Gen gen(17);
    for (int i = 0; i < 30; ++i) {
        const ModelParams p = random_params(gen);
        const auto prof = decay_rate(p, gen.uniform(0.5, 40.0));
        double sum = 0.0;
        for (const auto& [n, term] : prof.sideband_terms) {
            ASSERT_GE(term, 0.0);
            sum += term;
        }
        ASSERT_NEAR(prof.R, sum, 1e-10);
    }
}

TEST(Properties, ModulationSpectrumNonNegativeAndNormalized) {
    oracle::Gen gen(18);
    for (int i = 0; i < 5; ++i) {
        ModelParams p = random_params(gen);
        const double t = gen.uniform(2.0, 5.0);
        // int F_t d omega = 2 pi for the diagonal form (sum rule of J_n^2).
        double integral = 0.0;
        const double h = 0.005;
        for (double w = -600.0; w <= 600.0; w += h) {
            const double f = modulation_spectrum(p, w, t);
            ASSERT_GE(f, 0.0);
            integral += f * h;
        }
        ASSERT_NEAR(integral, 2.0 * std::numbers::pi, 2e-2);
    }
}

TEST(Properties, SpectralDensitySymmetric) {
    oracle::Gen gen(19);
    for (int i = 0; i < kCases; ++i) {
        const double xi = gen.uniform(0.2, 3.0);
        const double w = gen.uniform(-5.0 * xi, 5.0 * xi);
        ASSERT_EQ(spectral_density(xi, w), spectral_density(xi, -w));
        ASSERT_GE(spectral_density(xi, w), 0.0);
    }
}

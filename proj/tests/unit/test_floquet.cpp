#include <gtest/gtest.h>

#include <cmath>

#include "zeno/direct.hpp"
#include "zeno/errors.hpp"
#include "zeno/floquet.hpp"

using namespace zeno;

namespace {

SingleExcitationState exact_static(const ModelParams& p, const SingleExcitationState& s0, double t) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(static_hamiltonian(p));
    const Eigen::MatrixXcd v = es.eigenvectors().cast<cplx>();
    Eigen::VectorXcd phase(es.eigenvalues().size());
    for (Eigen::Index i = 0; i < phase.size(); ++i) phase[i] = std::polar(1.0, -es.eigenvalues()[i] * t);
    return SingleExcitationState(Eigen::VectorXcd(v * phase.asDiagonal() * v.adjoint() * s0.amplitudes()));
}

} // namespace

TEST(Floquet, MatrixStructure) {
    ModelParams p = reference_params(1.0);
    p.sites = 5;
    const int M = 2;
    const Eigen::MatrixXd f = build_floquet_matrix(p, M);
    const int n = p.dimension();
    ASSERT_EQ(f.rows(), (2 * M + 1) * n);
    EXPECT_EQ((f - f.transpose()).cwiseAbs().maxCoeff(), 0.0);
    const Eigen::MatrixXd hs = static_hamiltonian(p);
    for (int m = -M; m <= M; ++m) {
        const int b = (m + M) * n;
        const Eigen::MatrixXd block = f.block(b, b, n, n);
        EXPECT_LT((block - hs - m * p.nu * Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff(), 1e-14);
    }
    // Off-diagonal blocks couple only the TLS entries.
    const Eigen::MatrixXd off = f.block(0, n, n, n);
    EXPECT_DOUBLE_EQ(off(n - 1, n - 1), 0.5 * p.amplitude);
    EXPECT_DOUBLE_EQ(off.cwiseAbs().sum(), 0.5 * p.amplitude);
}

TEST(Floquet, UnmodulatedQuasiEnergiesAreStaticEigenvalues) {
    const ModelParams p = reference_params(0.0);
    const auto spec = floquet_spectrum(p, 4);
    Eigen::VectorXd central = central_quasi_energies(spec, p);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(static_hamiltonian(p));
    ASSERT_EQ(central.size(), es.eigenvalues().size());
    std::sort(central.data(), central.data() + central.size());
    EXPECT_LT((central - es.eigenvalues()).cwiseAbs().maxCoeff(), 1e-11);
}

TEST(Floquet, ReplicaSymmetry) {
    const ModelParams p = reference_params(1.0);
    const auto spec = floquet_spectrum(p, 12);
    EXPECT_LT(replica_symmetry_defect(spec, p), 1e-8);
}

TEST(Floquet, TruncationChoiceConverges) {
    const ModelParams p = reference_params(1.0);
    const int M = choose_truncation(p, 1e-8);
    EXPECT_GE(M, 8);
    EXPECT_LE(check_truncation(p, M).shift, 1e-8);
}

TEST(Floquet, DimensionCap) {
    const ModelParams p = reference_params(1.0);
    EXPECT_THROW(build_floquet_matrix(p, 100, 1000), InfeasibleError);
    EXPECT_THROW(choose_truncation(p, 1e-8, 8, 500), ConvergenceError);
}

TEST(Floquet, PlanCoversInterval) {
    const auto plan = make_plan(1.0, 0.3);
    EXPECT_EQ(plan.steps, 4);
    EXPECT_NEAR(plan.total(), 1.0, 1e-15);
    EXPECT_EQ(make_plan(0.0, 0.1).steps, 0);
    EXPECT_EQ(make_plan(0.6, 0.2).steps, 3);
    EXPECT_THROW(make_plan(1.0, 0.0), DomainError);
}

TEST(Floquet, StaticLimitMatchesExactExponential) {
    const ModelParams p = reference_params(0.0);
    const auto s0 = initial_excited(p);
    const double t = 7.3;
    const auto f = floquet_propagate(p, s0, t, make_plan(t, default_slice(p)), 4);
    const auto ref = exact_static(p, s0, t);
    EXPECT_LT((f.amplitudes() - ref.amplitudes()).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(Floquet, AgreesWithDirectIntegration) {
    const ModelParams p = reference_params(1.0);
    const auto s0 = initial_excited(p);
    const double t = 4.0;
    const auto f = floquet_propagate(p, s0, t, make_plan(t, default_slice(p)), choose_truncation(p));
    const auto d = direct_propagate(p, s0, t, 1e-4);
    EXPECT_LT((f.amplitudes() - d.amplitudes()).cwiseAbs().maxCoeff(), 1e-7);
    EXPECT_NEAR(f.norm_squared(), 1.0, 1e-10);
}

TEST(Floquet, IncommensurateSliceStillAccurate) {
    const ModelParams p = reference_params(2.0);
    const auto s0 = initial_excited(p);
    const int M = choose_truncation(p);
    FloquetPropagator prop(p, M, 0.0123);
    const auto f = prop.propagate(s0, 0.0, 100);
    const auto d = direct_propagate(p, s0, 1.23, 1e-4);
    EXPECT_LT((f.amplitudes() - d.amplitudes()).cwiseAbs().maxCoeff(), 1e-7);
}

TEST(Floquet, RejectsUnnormalizedStateAndBadPlan) {
    const ModelParams p = reference_params(1.0);
    auto s0 = initial_excited(p);
    EXPECT_THROW(floquet_propagate(p, s0, 1.0, make_plan(2.0, 0.1), 8), DomainError);
    s0.excited() = 2.0;
    EXPECT_THROW(floquet_propagate(p, s0, 1.0, make_plan(1.0, 0.1), 8), DomainError);
}

TEST(Floquet, UnconvergedTruncationRejected) {
    const ModelParams p = reference_params(3.5);
    const auto s0 = initial_excited(p);
    EXPECT_THROW(floquet_propagate(p, s0, 1.0, make_plan(1.0, default_slice(p)), 2), ConvergenceError);
}

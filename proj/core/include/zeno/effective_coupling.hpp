#pragma once

#include <Eigen/Dense>

#include "zeno/model.hpp"

namespace zeno {

/// Modulation-renormalized TLS-photon coupling for the resonant sideband.
struct EffectiveCoupling {
    double ratio{0.0}; ///< Omega / nu
    int order{0};      ///< resonant sideband index n
    double value{0.0}; ///< g * J_n(ratio)
};

/// Nearest integer to detuning/nu; exact half-integers round toward zero.
int resonant_sideband(double detuning, double nu);

/// g * J_0(Omega/nu).
double effective_g(const ModelParams& p);

/// Coupling of the sideband n = [Delta/nu] closest to resonance.
EffectiveCoupling effective_coupling(const ModelParams& p);

/// How the residual detuning (Delta - n nu) of an off-resonant sideband enters
/// the static effective model.
enum class ResidualDetuning {
    keep, ///< TLS level placed at omega_a + n nu
    drop  ///< TLS level placed exactly on the cavity frequency
};

struct EffectiveOptions {
    bool allow_outside_regime{false};
    ResidualDetuning residual{ResidualDetuning::keep};
};

/// True when nu >= 5 max(xi, |Delta|).
bool in_high_frequency_regime(const ModelParams& p);

/// Time-independent high-frequency Hamiltonian in the fixed basis.
Eigen::MatrixXd effective_hamiltonian(const ModelParams& p, const EffectiveOptions& opts = {});

/**
 Evolves state0 for time t under the effective Hamiltonian by exact
 eigendecomposition. Outside the high-frequency regime this throws
 RegimeError unless opts.allow_outside_regime is set, in which case a
 warning is written to std::clog.
 */
SingleExcitationState effective_propagate(const ModelParams& p, const SingleExcitationState& state0,
                                          double t, const EffectiveOptions& opts = {});

/// Reusable effective-model propagator (one eigendecomposition, many times).
class EffectivePropagator {
public:
    EffectivePropagator(const ModelParams& p, const EffectiveOptions& opts = {});
    SingleExcitationState evolve(const SingleExcitationState& state0, double t) const;

private:
    Eigen::VectorXd energies_;
    Eigen::MatrixXd vectors_;
};

} // namespace zeno

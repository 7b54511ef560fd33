#pragma once

#include <cstddef>

#include "zeno/model.hpp"

namespace zeno {

/// Default integrator step, in units of 1/xi.
inline constexpr double kDefaultDirectStep = 1e-3;
/// Norm drift above which a run is rejected as under-resolved.
inline constexpr double kDirectDriftLimit = 1e-6;

struct DirectReport {
    double step{0.0};
    long steps{0};
    double norm_drift{0.0}; ///< |norm^2(t) - norm^2(0)| at the end of the run
};

/**
 Classical fixed-step RK4 for i d/dt psi = H(t) psi, from t_start to
 t_start + t_total with step dt (shortened so that an integer number of
 steps covers the interval). No renormalization: the final norm drift is
 the accuracy diagnostic, and a drift above kDirectDriftLimit throws
 ConvergenceError.
 */
SingleExcitationState direct_propagate(const ModelParams& p, const SingleExcitationState& state0,
                                       double t_total, double dt, DirectReport* report = nullptr,
                                       double t_start = 0.0);

/**
 Largest step (capped at kDefaultDirectStep) for which the RK4 norm drift
 over t_total stays below `drift_target`, from the amplification factor
 |R(i h lambda)|^2 = 1 - (h lambda)^6/72 + ... and the spectral bound lambda.
 */
double recommended_step(const ModelParams& p, double t_total, double drift_target = 1e-8);

struct ConvergedRun {
    SingleExcitationState state;
    double step{0.0};
    double change{0.0}; ///< max amplitude change under the last halving
};

/**
 Halves dt until one more halving changes every amplitude by less than
 `tolerance`; ConvergenceError after `max_halvings`.
 */
ConvergedRun direct_propagate_converged(const ModelParams& p, const SingleExcitationState& state0,
                                        double t_total, double dt0, double tolerance = 1e-6,
                                        int max_halvings = 8);

} // namespace zeno

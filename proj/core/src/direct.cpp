#include "zeno/direct.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zeno/errors.hpp"

namespace zeno {

SingleExcitationState direct_propagate(const ModelParams& p, const SingleExcitationState& state0,
                                       double t_total, double dt, DirectReport* report,
                                       double t_start) {
    p.validate();
    if (!(dt > 0.0)) throw DomainError("direct_propagate: dt must be > 0");
    if (!(t_total >= 0.0)) throw DomainError("direct_propagate: total time must be >= 0");
    if (state0.amplitudes().size() != p.dimension()) {
        throw DomainError("direct_propagate: state size does not match the model");
    }

    const long steps = t_total == 0.0 ? 0 : std::max(1L, static_cast<long>(std::ceil(t_total / dt - 1e-9)));
    const double h = steps > 0 ? t_total / static_cast<double>(steps) : dt;
    const cplx minus_i(0.0, -1.0);

    Eigen::VectorXcd y = state0.amplitudes();
    const double norm0 = y.squaredNorm();
    Eigen::VectorXcd k1, k2, k3, k4, tmp;
    for (long s = 0; s < steps; ++s) {
        const double t = t_start + static_cast<double>(s) * h;
        apply_hamiltonian(p, t, y, k1);
        k1 *= minus_i;
        tmp = y + (0.5 * h) * k1;
        apply_hamiltonian(p, t + 0.5 * h, tmp, k2);
        k2 *= minus_i;
        tmp = y + (0.5 * h) * k2;
        apply_hamiltonian(p, t + 0.5 * h, tmp, k3);
        k3 *= minus_i;
        tmp = y + h * k3;
        apply_hamiltonian(p, t + h, tmp, k4);
        k4 *= minus_i;
        y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }

    const double drift = std::abs(y.squaredNorm() - norm0);
    if (report) {
        report->step = h;
        report->steps = steps;
        report->norm_drift = drift;
    }
    if (drift > kDirectDriftLimit) {
        throw ConvergenceError("direct_propagate: norm drift " + std::to_string(drift) +
                               " exceeds limit; step " + std::to_string(h) + " too large");
    }
    return SingleExcitationState(std::move(y));
}

double recommended_step(const ModelParams& p, double t_total, double drift_target) {
    const double lambda = spectral_bound(p);
    if (t_total <= 0.0 || lambda <= 0.0) return kDefaultDirectStep;
    // steps * (h lambda)^6 / 72 <= target  ->  h^5 <= 72 target / (t lambda^6)
    const double h = std::pow(72.0 * drift_target / (t_total * std::pow(lambda, 6)), 0.2);
    return std::min(kDefaultDirectStep, 0.8 * h);
}

ConvergedRun direct_propagate_converged(const ModelParams& p, const SingleExcitationState& state0,
                                        double t_total, double dt0, double tolerance,
                                        int max_halvings) {
    double dt = dt0;
    int halvings = 0;
    SingleExcitationState prev;
    for (;; ++halvings) {
        if (halvings > max_halvings) {
            throw ConvergenceError("direct_propagate_converged: norm drift not controlled after " +
                                   std::to_string(max_halvings) + " halvings");
        }
        try {
            prev = direct_propagate(p, state0, t_total, dt);
            break;
        } catch (const ConvergenceError&) {
            dt *= 0.5;
        }
    }
    for (int i = halvings; i < max_halvings; ++i) {
        dt *= 0.5;
        SingleExcitationState next = direct_propagate(p, state0, t_total, dt);
        const double change = (next.amplitudes() - prev.amplitudes()).cwiseAbs().maxCoeff();
        if (change < tolerance) return {std::move(next), dt, change};
        prev = std::move(next);
    }
    throw ConvergenceError("direct_propagate_converged: no convergence after " +
                           std::to_string(max_halvings) + " halvings");
}

} // namespace zeno

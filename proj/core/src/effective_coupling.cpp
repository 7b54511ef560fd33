#include "zeno/effective_coupling.hpp"

#include <cmath>
#include <iostream>

#include "zeno/bessel.hpp"
#include "zeno/errors.hpp"

namespace zeno {

int resonant_sideband(double detuning, double nu) {
    if (nu <= 0.0) throw DomainError("resonant_sideband: nu must be > 0");
    const double q = detuning / nu;
    const double fl = std::floor(q);
    const double frac = q - fl;
    if (frac == 0.5) return static_cast<int>(q > 0.0 ? fl : fl + 1.0);
    return static_cast<int>(std::lround(q));
}

double effective_g(const ModelParams& p) {
    if (p.nu <= 0.0) throw DomainError("effective_g: nu must be > 0");
    return p.g * bessel_j(0, p.amplitude / p.nu);
}

EffectiveCoupling effective_coupling(const ModelParams& p) {
    EffectiveCoupling c;
    c.ratio = p.amplitude / p.nu;
    c.order = resonant_sideband(p.detuning(), p.nu);
    c.value = p.g * bessel_j(c.order, c.ratio);
    return c;
}

bool in_high_frequency_regime(const ModelParams& p) {
    return p.nu >= 5.0 * std::max(p.xi, std::abs(p.detuning()));
}

Eigen::MatrixXd effective_hamiltonian(const ModelParams& p, const EffectiveOptions& opts) {
    const EffectiveCoupling c = effective_coupling(p);
    ModelParams bare = p;
    bare.amplitude = 0.0;
    Eigen::MatrixXd h = static_hamiltonian(bare);
    const int L = p.sites;
    h(L, L) = (opts.residual == ResidualDetuning::keep) ? p.omega_a + c.order * p.nu : p.omega_c;
    h(L, p.center()) = c.value;
    h(p.center(), L) = c.value;
    return h;
}

EffectivePropagator::EffectivePropagator(const ModelParams& p, const EffectiveOptions& opts) {
    p.validate();
    if (!in_high_frequency_regime(p)) {
        if (!opts.allow_outside_regime) {
            throw RegimeError("effective model requires nu >= 5 max(xi, |Delta|)");
        }
        std::clog << "warning: effective model used outside the high-frequency regime (nu="
                  << p.nu << ", xi=" << p.xi << ", Delta=" << p.detuning() << ")\n";
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(effective_hamiltonian(p, opts));
    energies_ = es.eigenvalues();
    vectors_ = es.eigenvectors();
}

SingleExcitationState EffectivePropagator::evolve(const SingleExcitationState& state0, double t) const {
    if (state0.amplitudes().size() != vectors_.rows()) {
        throw DomainError("effective propagation: state size does not match the model");
    }
    Eigen::VectorXcd coeff = vectors_.transpose() * state0.amplitudes();
    for (Eigen::Index i = 0; i < coeff.size(); ++i) coeff[i] *= std::polar(1.0, -energies_[i] * t);
    return SingleExcitationState(Eigen::VectorXcd(vectors_ * coeff));
}

SingleExcitationState effective_propagate(const ModelParams& p, const SingleExcitationState& state0,
                                          double t, const EffectiveOptions& opts) {
    return EffectivePropagator(p, opts).evolve(state0, t);
}

} // namespace zeno

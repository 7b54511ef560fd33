#include "zeno/model.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "zeno/errors.hpp"

namespace zeno {

double ModelParams::period() const noexcept { return 2.0 * std::numbers::pi / nu; }

void ModelParams::validate() const {
    auto finite = [](double v) { return std::isfinite(v); };
    if (!finite(omega_c) || !finite(omega_a) || !finite(amplitude) || !finite(nu) ||
        !finite(xi) || !finite(g)) {
        throw DomainError("model parameters must be finite");
    }
    if (amplitude < 0.0) throw DomainError("modulation amplitude must be >= 0");
    if (nu <= 0.0) throw DomainError("modulation frequency nu must be > 0");
    if (xi <= 0.0) throw DomainError("hopping xi must be > 0");
    if (g < 0.0) throw DomainError("coupling g must be >= 0");
    if (sites < 3 || sites % 2 == 0) {
        throw DomainError("sites must be an odd integer >= 3, got " + std::to_string(sites));
    }
}

ModelParams ModelParams::with_ratio(double r) const {
    ModelParams p = *this;
    p.amplitude = r * nu;
    return p;
}

ModelParams reference_params(double ratio) {
    ModelParams p;
    p.omega_c = 0.0;
    p.omega_a = 0.0;
    p.nu = 10.0;
    p.xi = 1.0;
    p.g = 0.25;
    p.sites = 41;
    p.amplitude = ratio * p.nu;
    return p;
}

SingleExcitationState::SingleExcitationState(int sites)
    : amps_(Eigen::VectorXcd::Zero(sites + 1)) {}

SingleExcitationState::SingleExcitationState(Eigen::VectorXcd amplitudes)
    : amps_(std::move(amplitudes)) {
    if (amps_.size() < 4 || amps_.size() % 2 != 0) {
        throw DomainError("state vector must have L+1 entries with L odd >= 3");
    }
}

cplx SingleExcitationState::photon(int j) const {
    const int half = (sites() - 1) / 2;
    if (j < -half || j > half) throw DomainError("cavity index out of range");
    return amps_[j + half];
}

cplx& SingleExcitationState::photon(int j) {
    const int half = (sites() - 1) / 2;
    if (j < -half || j > half) throw DomainError("cavity index out of range");
    return amps_[j + half];
}

Eigen::MatrixXd static_hamiltonian(const ModelParams& p) {
    p.validate();
    const int L = p.sites;
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(L + 1, L + 1);
    for (int i = 0; i < L; ++i) h(i, i) = p.omega_c;
    for (int i = 0; i + 1 < L; ++i) {
        h(i, i + 1) = -p.xi;
        h(i + 1, i) = -p.xi;
    }
    h(L, L) = p.omega_a;
    h(L, p.center()) = p.g;
    h(p.center(), L) = p.g;
    return h;
}

Eigen::MatrixXd hamiltonian_at(const ModelParams& p, double t) {
    Eigen::MatrixXd h = static_hamiltonian(p);
    h(p.sites, p.sites) += p.amplitude * std::cos(p.nu * t);
    return h;
}

void apply_hamiltonian(const ModelParams& p, double t, const Eigen::VectorXcd& in,
                       Eigen::VectorXcd& out) {
    const int L = p.sites;
    const int c = p.center();
    out.resize(L + 1);
    const double xi = p.xi;
    const double wc = p.omega_c;
    out[0] = wc * in[0] - xi * in[1];
    for (int i = 1; i + 1 < L; ++i) out[i] = wc * in[i] - xi * (in[i - 1] + in[i + 1]);
    out[L - 1] = wc * in[L - 1] - xi * in[L - 2];
    out[c] += p.g * in[L];
    out[L] = (p.omega_a + p.amplitude * std::cos(p.nu * t)) * in[L] + p.g * in[c];
}

double spectral_bound(const ModelParams& p) {
    const double cavity = std::abs(p.omega_c) + 2.0 * p.xi;
    const double tls = std::abs(p.omega_a) + p.amplitude;
    return std::max(cavity, tls) + p.g;
}

SingleExcitationState initial_excited(const ModelParams& p) {
    p.validate();
    SingleExcitationState s(p.sites);
    s.excited() = 1.0;
    return s;
}

double excited_probability(const SingleExcitationState& s) { return std::norm(s.excited()); }

std::vector<double> photon_density(const SingleExcitationState& s) {
    std::vector<double> d(static_cast<std::size_t>(s.sites()));
    for (int i = 0; i < s.sites(); ++i) d[static_cast<std::size_t>(i)] = std::norm(s.amplitudes()[i]);
    return d;
}

} // namespace zeno

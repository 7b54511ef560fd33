#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace zeno {

using cplx = std::complex<double>;

/**
 Physical constants of the coupled-resonator waveguide with an embedded,
 frequency-modulated two-level system. Units: hbar = 1, energies in xi,
 times in 1/xi for the default parameter set.

 The TLS sits in the central cavity j = 0; cavity indices run from
 -(sites-1)/2 to (sites-1)/2.
 */
struct ModelParams {
    double omega_c{0.0};   ///< cavity frequency
    double omega_a{0.0};   ///< bare TLS level spacing
    double amplitude{0.0}; ///< modulation amplitude Omega
    double nu{10.0};       ///< modulation frequency
    double xi{1.0};        ///< inter-cavity hopping
    double g{0.25};        ///< TLS-cavity coupling
    int sites{41};         ///< number of cavities L (odd, >= 3)

    /// omega_c - omega_a
    double detuning() const noexcept { return omega_c - omega_a; }
    /// Omega / nu
    double ratio() const noexcept { return amplitude / nu; }
    double period() const noexcept;
    /// Index of cavity j = 0 in the basis ordering.
    int center() const noexcept { return (sites - 1) / 2; }
    int dimension() const noexcept { return sites + 1; }
    /// Time for a band-centre photon to reach the wall and return to the TLS.
    double revival_time() const noexcept { return sites / (2.0 * xi); }

    /// Throws DomainError when an invariant is violated.
    void validate() const;

    /// Copy with Omega = ratio * nu.
    ModelParams with_ratio(double ratio) const;
};

/// Parameter set of the paper-style reference run: resonance, xi = 1,
/// g = 0.25, nu = 10, L = 41.
ModelParams reference_params(double ratio = 0.0);

/**
 Single-excitation state: one photon in cavity j with the TLS in |g>, or
 no photon with the TLS in |e>. Stored in the fixed basis order
 (|1_j g> for j ascending, then |0 e>).
 */
class SingleExcitationState {
public:
    SingleExcitationState() = default;
    explicit SingleExcitationState(int sites);
    explicit SingleExcitationState(Eigen::VectorXcd amplitudes);

    int sites() const noexcept { return static_cast<int>(amps_.size()) - 1; }

    /// Photon amplitude at cavity j, j in [-(L-1)/2, (L-1)/2].
    cplx photon(int j) const;
    cplx& photon(int j);
    cplx excited() const { return amps_[amps_.size() - 1]; }
    cplx& excited() { return amps_[amps_.size() - 1]; }

    double norm_squared() const { return amps_.squaredNorm(); }

    const Eigen::VectorXcd& amplitudes() const noexcept { return amps_; }
    Eigen::VectorXcd& amplitudes() noexcept { return amps_; }

private:
    Eigen::VectorXcd amps_;
};

/// H(t) in the fixed basis; real symmetric, dimension L+1.
Eigen::MatrixXd hamiltonian_at(const ModelParams& p, double t);

/// H(t) with the Omega cos(nu t) term removed.
Eigen::MatrixXd static_hamiltonian(const ModelParams& p);

/// out = H(t) * in, exploiting the tridiagonal-plus-defect structure.
void apply_hamiltonian(const ModelParams& p, double t, const Eigen::VectorXcd& in,
                       Eigen::VectorXcd& out);

/// Crude upper bound on the spectral radius of H(t) over one period.
double spectral_bound(const ModelParams& p);

SingleExcitationState initial_excited(const ModelParams& p);

double excited_probability(const SingleExcitationState& s);
std::vector<double> photon_density(const SingleExcitationState& s);

} // namespace zeno

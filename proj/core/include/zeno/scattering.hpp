#pragma once

#include <optional>
#include <span>
#include <vector>

#include "zeno/direct.hpp"
#include "zeno/model.hpp"

namespace zeno {

/// Single-photon scattering record at Bloch wave number k (lattice constant 1).
struct ScatteringResult {
    double k{0.0};
    double omega_k{0.0}; ///< omega_c - 2 xi cos k
    double v_g{0.0};     ///< 2 xi sin k
    cplx s{};            ///< transmission amplitude
    cplx r{};            ///< reflection amplitude, r = s - 1

    double transmission() const { return std::norm(s); }
    double reflection() const { return std::norm(r); }
};

/**
 Transmission through the TLS with the modulation-renormalized coupling:

   s = (omega_k - omega_a) / (omega_k - omega_a + i g^2 J_0^2(Omega/nu) / v_g).

 k must lie strictly inside (0, pi); v_g below 1e-12 is rejected.
 */
ScatteringResult transmission_amplitude(const ModelParams& p, double k);

/// V(E) = g^2 J_0^2(Omega/nu) / E; E = 0 is rejected.
double resonant_potential(const ModelParams& p, double energy);

std::vector<ScatteringResult> spectrum(const ModelParams& p, std::span<const double> k_grid);

/// Bloch wave number with omega_k = omega_a, if the TLS lies inside the band.
std::optional<double> resonant_wavenumber(const ModelParams& p);

/// Half width (in energy) at which |s|^2 crosses 1/2 on either side of the
/// dip, interpolated on a sweep sorted by k. Empty if no crossing pair exists.
std::optional<double> measure_dip_half_width(std::span<const ScatteringResult> sweep);

struct WavepacketOptions {
    int sites{401};
    int center{-100};      ///< launch site j0
    double sigma{10.0};    ///< std. deviation of |u_j|^2 in sites
    int cut{20};           ///< transmitted probability counted for j > cut
    int readout{60};       ///< read out when a free packet centroid reaches this site
    int edge_sites{10};    ///< width of the boundary strips checked for collisions
    double edge_limit{1e-4};
    double dt{0.0};        ///< 0: recommended_step with drift_target
    double drift_target{1e-8};
};

struct WavepacketResult {
    double transmitted{0.0};
    double reflected{0.0};  ///< probability at j < -cut
    double excited{0.0};    ///< TLS population at readout
    double readout_time{0.0};
    double edge_probability{0.0};
    double analytic{0.0};   ///< |s(k0)|^2 for comparison
    DirectReport integrator{};
};

/// Normalized Gaussian packet exp(-(j-j0)^2 / (4 sigma^2) + i k0 j) on `sites` cavities.
SingleExcitationState gaussian_packet(int sites, int center, double sigma, double k0);

/**
 Time-domain transport oracle: launches a Gaussian packet left of the TLS,
 evolves it with the full H(t) by RK4 and integrates the probability past
 `cut` once the free centroid would have reached `readout`. Throws
 DomainError when probability in the boundary strips exceeds edge_limit.
 */
WavepacketResult wavepacket_transmission(const ModelParams& p, double k0, const WavepacketOptions& opts = {});

} // namespace zeno

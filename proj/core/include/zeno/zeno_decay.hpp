#pragma once

#include <map>
#include <span>
#include <vector>

#include "zeno/model.hpp"

namespace zeno {

/// rho(omega) = 1 / (pi sqrt(4 xi^2 - omega^2)) inside the band, 0 outside.
/// Exact band-edge input |omega| = 2 xi is rejected.
double spectral_density(double xi, double omega);

/// Integral of rho over the band by tanh-sinh quadrature in omega.
double spectral_density_integral(double xi);

/// Photon reservoir seen by the TLS: density of states and coupling spectrum.
struct ReservoirSpectrum {
    double xi{1.0};
    double g{0.25};

    double density(double omega) const { return spectral_density(xi, omega); }
    double spectrum(double omega) const { return g * g * density(omega); }
};

/// Continuum memory function g^2 J_0(2 xi t).
cplx memory_function(const ModelParams& p, double t);

/// (g^2 / N) sum_k exp(i 2 xi t cos k) over k = 2 pi m / N.
cplx memory_function_discrete(const ModelParams& p, double t, int modes);

/**
 Normalized modulation intensity F_t(omega) of eps(t) = exp(-i (Omega/nu) sin nu t),

   F_t = t |sum_n J_n e^{i w_n t / 2} sinc(w_n t / 2)|^2,   w_n = omega - n nu.

 With cross_terms = false only the diagonal t sum_n J_n^2 sinc^2 is kept.
 */
double modulation_spectrum(const ModelParams& p, double omega, double t, bool cross_terms = false);

/// Smallest N with J_0^2 + 2 sum_{1..N} J_n^2 >= 1 - tolerance.
int sideband_cutoff(double ratio, double tolerance = 1e-10);

struct DecayRateOptions {
    bool include_cross_terms{false};
    double rate_constant{1.0};         ///< overall prefactor on R
    double weight_tolerance{1e-10};    ///< sideband truncation
    double quadrature_tolerance{1e-8}; ///< per-panel relative target
};

struct DecayRateProfile {
    double t{0.0};
    double Q{0.0};
    double R{0.0};
    std::map<int, double> sideband_terms; ///< n -> J_n^2 times the overlap integral
    double cross_term{0.0};               ///< interference part, nonzero only with include_cross_terms
};

/**
 R(t) = t sum_n J_n^2 int Phi~(omega) sinc^2((omega - Delta - n nu) t / 2) d omega,
 integrated over omega = 2 xi sin theta on panels resolving the sinc^2 fringes.
 Throws ConvergenceError naming the sideband if a panel fails to converge.
 */
DecayRateProfile decay_rate(const ModelParams& p, double t, const DecayRateOptions& opts = {});

/// Long-time limit 2 pi sum_n J_n^2 Phi~(Delta + n nu).
double golden_rule_rate(const ModelParams& p);

struct SurvivalPoint {
    double t{0.0};
    double pe{1.0};
};

/// exp(-R(t) Q(t)) on the grid; t = 0 maps to 1.
std::vector<SurvivalPoint> survival_prediction(const ModelParams& p, std::span<const double> t_grid,
                                               const DecayRateOptions& opts = {});

/// Rate constant minimizing the squared misfit of exp(-c R t) to reference P_e values.
double calibrate_rate_constant(const ModelParams& p, std::span<const double> t_grid,
                               std::span<const double> reference_pe, const DecayRateOptions& opts = {});

} // namespace zeno

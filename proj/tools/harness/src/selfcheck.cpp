#include "zeno/harness/selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "zeno/bessel.hpp"
#include "zeno/bound_states.hpp"
#include "zeno/direct.hpp"
#include "zeno/dynamics.hpp"
#include "zeno/effective_coupling.hpp"
#include "zeno/errors.hpp"
#include "zeno/floquet.hpp"
#include "zeno/parallel.hpp"
#include "zeno/scattering.hpp"
#include "zeno/zeno_decay.hpp"

namespace zeno::harness {

namespace {

constexpr double pi = std::numbers::pi;

struct Check {
    const char* name;
    double tolerance;
    std::function<double()> measure;
};

double bessel_sum_rule() {
    double worst = 0.0;
    for (double x = -30.0; x <= 30.0; x += 0.37) {
        const auto j = bessel_j_sequence(static_cast<int>(std::abs(x)) + 40, x);
        double s = j[0] * j[0];
        for (std::size_t n = 1; n < j.size(); ++n) s += 2.0 * j[n] * j[n];
        worst = std::max(worst, std::abs(s - 1.0));
    }
    return worst;
}

double bessel_reference() {
    double worst = 0.0;
    for (int n = 0; n <= 20; ++n) {
        for (double x = 0.0; x <= 40.0; x += 0.29) {
            worst = std::max(worst, std::abs(bessel_j(n, x) - std::cyl_bessel_j(static_cast<double>(n), x)));
        }
    }
    return worst;
}

double hermiticity() {
    double worst = 0.0;
    for (double r : {0.0, 1.0, 2.4, 3.5}) {
        const ModelParams p = reference_params(r);
        for (double t = 0.0; t < p.period(); t += p.period() / 7.0) {
            const Eigen::MatrixXd h = hamiltonian_at(p, t);
            worst = std::max(worst, (h - h.transpose()).cwiseAbs().maxCoeff());
        }
        const Eigen::MatrixXd f = build_floquet_matrix(p, 4);
        worst = std::max(worst, (f - f.transpose()).cwiseAbs().maxCoeff());
    }
    return worst;
}

double replica_symmetry() {
    const ModelParams p = reference_params(1.0);
    return replica_symmetry_defect(floquet_spectrum(p, choose_truncation(p)), p);
}

double truncation_shift() {
    const ModelParams p = reference_params(1.0);
    return check_truncation(p, choose_truncation(p)).shift;
}

double floquet_vs_direct() {
    const ModelParams p = reference_params(1.0);
    const std::vector<double> grid = {1.0, 2.5, 5.0};
    const auto s0 = initial_excited(p);
    const auto f = trace_states(p, s0, grid, Method::floquet);
    DynamicsOptions o;
    o.dt = 1e-4;
    const auto d = trace_states(p, s0, grid, Method::direct, o);
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        worst = std::max(worst, (f[i].amplitudes() - d[i].amplitudes()).cwiseAbs().maxCoeff());
    }
    return worst;
}

double direct_drift() {
    const ModelParams p = reference_params(2.4);
    DirectReport rep;
    direct_propagate(p, initial_excited(p), 20.0, recommended_step(p, 20.0, 1e-8), &rep);
    return rep.norm_drift;
}

double effective_unitarity() {
    const ModelParams p = reference_params(1.0);
    const EffectivePropagator prop(p);
    double worst = 0.0;
    for (double t : {1.0, 7.0, 20.0}) worst = std::max(worst, std::abs(prop.evolve(initial_excited(p), t).norm_squared() - 1.0));
    return worst;
}

std::vector<double> k_grid(int n) {
    std::vector<double> k(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) k[static_cast<std::size_t>(i)] = pi * (i + 0.5) / n;
    return k;
}

double scattering_unitarity() {
    double worst = 0.0;
    for (double r : {0.0, 1.0, 3.5}) {
        for (const auto& s : spectrum(reference_params(r), k_grid(1000))) {
            worst = std::max(worst, std::abs(s.transmission() + s.reflection() - 1.0));
        }
    }
    return worst;
}

double resonant_dip() { return transmission_amplitude(reference_params(0.0), *resonant_wavenumber(reference_params(0.0))).transmission(); }

double transparency_at_zero() {
    double worst = 0.0;
    for (const auto& s : spectrum(reference_params(bessel_zero(0, 1)), k_grid(1000))) {
        worst = std::max(worst, std::abs(1.0 - s.transmission()));
    }
    return worst;
}

double bound_closed_form() {
    const ModelParams p = reference_params(0.0);
    const double ref = 0.5 * std::asinh(p.g * p.g / (2.0 * p.xi * p.xi));
    return std::abs(bound_state_solve(p, Branch::upper).kappa - ref);
}

double bound_residual() {
    double worst = 0.0;
    for (double r : {0.0, 0.7, 1.9, 3.1}) {
        ModelParams p = reference_params(r);
        for (double delta : {-0.8, 0.0, 0.6}) {
            p.omega_c = delta;
            for (Branch b : {Branch::upper, Branch::lower}) {
                const auto bs = bound_state_solve(p, b);
                worst = std::max(worst, std::abs(bound_condition_residual(p, b, bs.kappa)));
            }
        }
    }
    return worst;
}

double bound_normalization() {
    const auto bs = bound_state_solve(reference_params(0.5), Branch::upper);
    double s = 0.0;
    for (const auto& pt : bound_profile(bs, -20000, 20000)) s += pt.density;
    return std::abs(s - 1.0);
}

double delocalization_flags() {
    // Count of misclassified ratios: zeros must be flagged, neighbours must not.
    double bad = 0.0;
    for (int k = 1; k <= 3; ++k) {
        const double z = bessel_zero(0, k);
        for (double r : {z - 1e-3, z, z + 1e-3}) {
            bool flagged = false;
            try {
                bound_state_solve(reference_params(r), Branch::upper);
            } catch (const DelocalizedError&) {
                flagged = true;
            }
            if (flagged != (r == z)) bad += 1.0;
        }
    }
    return bad;
}

double memory_identity() {
    const ModelParams p = reference_params(0.0);
    double worst = 0.0;
    for (double t : {0.0, 0.7, 3.0, 9.5}) {
        worst = std::max(worst, std::abs(memory_function(p, t) - memory_function_discrete(p, t, 4096)));
    }
    return worst;
}

double density_normalization() { return std::abs(spectral_density_integral(1.0) - 1.0); }

double sideband_weight() {
    double worst = 0.0;
    for (double r : {0.5, 2.4, 5.5, 8.0}) {
        const int n = sideband_cutoff(r);
        double w = 0.0;
        for (int m = -n; m <= n; ++m) w += bessel_j(m, r) * bessel_j(m, r);
        worst = std::max(worst, 1.0 - w);
    }
    return std::max(worst, 0.0);
}

double decay_profile_sum() {
    double worst = 0.0;
    for (double r : {0.0, 1.0, 3.5}) {
        const auto prof = decay_rate(reference_params(r), 20.0);
        double s = 0.0;
        for (const auto& [n, term] : prof.sideband_terms) {
            if (term < 0.0) return 1.0;
            s += term;
        }
        worst = std::max(worst, std::abs(prof.R - s));
    }
    return worst;
}

double suppression_law() {
    const double r0 = decay_rate(reference_params(0.0), 1000.0).R;
    double worst = 0.0;
    for (double x : {0.5, 1.0, 1.5, 3.0, 4.0, 6.0}) {
        const double j0 = bessel_j(0, x);
        worst = std::max(worst, std::abs(decay_rate(reference_params(x), 1000.0).R / r0 - j0 * j0));
    }
    return worst;
}

} // namespace

std::vector<CheckResult> run_selfcheck(unsigned workers) {
    const std::vector<Check> checks = {
        {"bessel_sum_rule", 1e-12, bessel_sum_rule},
        {"bessel_reference_values", 1e-12, bessel_reference},
        {"hamiltonian_hermiticity", 0.0, hermiticity},
        {"quasi_energy_replica_symmetry", 1e-8, replica_symmetry},
        {"floquet_truncation_shift", 1e-8, truncation_shift},
        {"floquet_vs_direct_amplitude", 1e-4, floquet_vs_direct},
        {"direct_norm_drift", 1e-8, direct_drift},
        {"effective_unitarity", 1e-12, effective_unitarity},
        {"scattering_unitarity", 1e-12, scattering_unitarity},
        {"scattering_resonant_dip", 1e-12, resonant_dip},
        {"scattering_transparency_at_j0_zero", 1e-10, transparency_at_zero},
        {"bound_state_closed_form", 1e-10, bound_closed_form},
        {"bound_state_condition_residual", 1e-14, bound_residual},
        {"bound_profile_normalization", 1e-10, bound_normalization},
        {"delocalization_flags", 0.0, delocalization_flags},
        {"memory_function_continuum_identity", 1e-6, memory_identity},
        {"spectral_density_normalization", 1e-6, density_normalization},
        {"sideband_weight_completeness", 1e-10, sideband_weight},
        {"decay_profile_sum", 1e-10, decay_profile_sum},
        {"suppression_factor_law", 1e-2, suppression_law},
    };
    return parallel_map<CheckResult>(checks.size(), workers, [&](std::size_t i) {
        const Check& c = checks[i];
        const double v = c.measure();
        return CheckResult{c.name, v, c.tolerance, std::isfinite(v) && v <= c.tolerance};
    });
}

} // namespace zeno::harness

#include "zeno/zeno_decay.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/tools/minima.hpp>

#include "zeno/bessel.hpp"
#include "zeno/errors.hpp"

namespace zeno {

namespace {

constexpr double pi = std::numbers::pi;

double sinc(double x) {
    if (std::abs(x) < 1e-4) return 1.0 - x * x / 6.0;
    return std::sin(x) / x;
}

// Panels in theta so that each spans at most about one sinc^2 fringe.
int panel_count(double xi, double t) { return std::max(16, static_cast<int>(std::ceil(2.0 * xi * t)) + 16); }

struct Sidebands {
    int cutoff{0};
    std::vector<double> j; // J_n for n = 0..cutoff
    double at(int n) const {
        const double v = j[static_cast<std::size_t>(std::abs(n))];
        return (n < 0 && (-n) % 2 == 1) ? -v : v;
    }
};

Sidebands sidebands(double ratio, double tolerance) {
    Sidebands s;
    s.cutoff = sideband_cutoff(ratio, tolerance);
    s.j = bessel_j_sequence(s.cutoff, ratio);
    return s;
}

template <class F>
double integrate_band(F&& f, double xi, double t, double tol, double& err_out) {
    using boost::math::quadrature::gauss_kronrod;
    const int panels = panel_count(xi, t);
    const double a = -0.5 * pi;
    const double h = pi / panels;
    double total = 0.0;
    err_out = 0.0;
    for (int i = 0; i < panels; ++i) {
        double err = 0.0;
        total += gauss_kronrod<double, 31>::integrate(f, a + i * h, a + (i + 1) * h, 5, tol, &err);
        err_out += err;
    }
    return total;
}

} // namespace

double spectral_density(double xi, double omega) {
    if (!(xi > 0.0)) throw DomainError("spectral_density: xi must be > 0");
    const double edge = 2.0 * xi;
    if (std::abs(omega) == edge) throw DomainError("spectral_density: band edge |omega| = 2 xi is singular");
    if (std::abs(omega) > edge) return 0.0;
    return 1.0 / (pi * std::sqrt(edge * edge - omega * omega));
}

double spectral_density_integral(double xi) {
    boost::math::quadrature::tanh_sinh<double> ts;
    const double edge = 2.0 * xi;
    auto f = [&](double w, double wc) {
        // wc is the distance to the nearer endpoint, which keeps 4 xi^2 - w^2 accurate there.
        const double d = wc > 0.0 ? wc * (2.0 * edge - wc) : (-wc) * (2.0 * edge + wc);
        (void)w;
        return 1.0 / (pi * std::sqrt(d));
    };
    return ts.integrate(f, -edge, edge);
}

cplx memory_function(const ModelParams& p, double t) { return p.g * p.g * bessel_j(0, 2.0 * p.xi * t); }

cplx memory_function_discrete(const ModelParams& p, double t, int modes) {
    if (modes < 1) throw DomainError("memory_function_discrete: modes must be >= 1");
    cplx sum = 0.0;
    for (int m = 0; m < modes; ++m) {
        const double k = 2.0 * pi * m / modes;
        sum += std::polar(1.0, 2.0 * p.xi * t * std::cos(k));
    }
    return p.g * p.g * sum / static_cast<double>(modes);
}

int sideband_cutoff(double ratio, double tolerance) {
    if (!std::isfinite(ratio)) throw DomainError("sideband_cutoff: non-finite ratio");
    const int nmax = static_cast<int>(std::abs(ratio)) + 40;
    const auto j = bessel_j_sequence(nmax, std::abs(ratio));
    double weight = j[0] * j[0];
    int n = 0;
    while (weight < 1.0 - tolerance && n < nmax) {
        ++n;
        weight += 2.0 * j[static_cast<std::size_t>(n)] * j[static_cast<std::size_t>(n)];
    }
    return n;
}

double modulation_spectrum(const ModelParams& p, double omega, double t, bool cross_terms) {
    if (!(t > 0.0)) throw DomainError("modulation_spectrum: t must be > 0");
    const Sidebands sb = sidebands(p.ratio(), 1e-14);
    if (!cross_terms) {
        double sum = 0.0;
        for (int n = -sb.cutoff; n <= sb.cutoff; ++n) {
            const double w = omega - n * p.nu;
            const double s = sb.at(n) * sinc(0.5 * w * t);
            sum += s * s;
        }
        return t * sum;
    }
    cplx amp = 0.0;
    for (int n = -sb.cutoff; n <= sb.cutoff; ++n) {
        const double w = omega - n * p.nu;
        amp += sb.at(n) * std::polar(sinc(0.5 * w * t), 0.5 * w * t);
    }
    return t * std::norm(amp);
}

DecayRateProfile decay_rate(const ModelParams& p, double t, const DecayRateOptions& o) {
    p.validate();
    if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("decay_rate: t must be finite and > 0");
    const Sidebands sb = sidebands(p.ratio(), o.weight_tolerance);
    const double xi = p.xi;
    const double scale = o.rate_constant * p.g * p.g * t / pi;

    DecayRateProfile out;
    out.t = t;
    out.Q = t;
    double diag = 0.0;
    for (int n = -sb.cutoff; n <= sb.cutoff; ++n) {
        const double jn = sb.at(n);
        if (jn == 0.0) {
            out.sideband_terms[n] = 0.0;
            continue;
        }
        const double c = p.detuning() + n * p.nu;
        auto f = [&](double th) {
            const double s = sinc(0.5 * (2.0 * xi * std::sin(th) - c) * t);
            return s * s;
        };
        double err = 0.0;
        const double integral = integrate_band(f, xi, t, o.quadrature_tolerance, err);
        if (!(err <= 1e-7 * std::abs(integral) + 1e-14) || !std::isfinite(integral)) {
            throw ConvergenceError("decay_rate: overlap integral for sideband n=" + std::to_string(n) +
                                   " did not converge (error estimate " + std::to_string(err) + ")");
        }
        const double term = scale * jn * jn * integral;
        out.sideband_terms[n] = term;
        diag += term;
    }
    out.R = diag;

    if (o.include_cross_terms) {
        auto f = [&](double th) {
            const double w0 = 2.0 * xi * std::sin(th) - p.detuning();
            cplx amp = 0.0;
            for (int n = -sb.cutoff; n <= sb.cutoff; ++n) {
                const double w = w0 - n * p.nu;
                amp += sb.at(n) * std::polar(sinc(0.5 * w * t), 0.5 * w * t);
            }
            return std::norm(amp);
        };
        double err = 0.0;
        const double integral = integrate_band(f, xi, t, o.quadrature_tolerance, err);
        if (!(err <= 1e-7 * std::abs(integral) + 1e-14) || !std::isfinite(integral)) {
            throw ConvergenceError("decay_rate: interference integral did not converge");
        }
        const double full = scale * integral;
        out.cross_term = full - diag;
        out.R = full;
    }
    return out;
}

double golden_rule_rate(const ModelParams& p) {
    p.validate();
    const Sidebands sb = sidebands(p.ratio(), 1e-14);
    const ReservoirSpectrum res{p.xi, p.g};
    double sum = 0.0;
    for (int n = -sb.cutoff; n <= sb.cutoff; ++n) {
        const double jn = sb.at(n);
        sum += jn * jn * res.spectrum(p.detuning() + n * p.nu);
    }
    return 2.0 * pi * sum;
}

std::vector<SurvivalPoint> survival_prediction(const ModelParams& p, std::span<const double> t_grid,
                                               const DecayRateOptions& opts) {
    std::vector<SurvivalPoint> out;
    out.reserve(t_grid.size());
    for (double t : t_grid) {
        if (t < 0.0 || !std::isfinite(t)) throw DomainError("survival_prediction: t must be finite and >= 0");
        if (t == 0.0) {
            out.push_back({0.0, 1.0});
            continue;
        }
        const DecayRateProfile prof = decay_rate(p, t, opts);
        out.push_back({t, std::exp(-prof.R * prof.Q)});
    }
    return out;
}

double calibrate_rate_constant(const ModelParams& p, std::span<const double> t_grid,
                               std::span<const double> reference_pe, const DecayRateOptions& opts) {
    if (t_grid.size() != reference_pe.size() || t_grid.empty()) {
        throw DomainError("calibrate_rate_constant: grid and reference sizes differ or are empty");
    }
    DecayRateOptions unit = opts;
    unit.rate_constant = 1.0;
    std::vector<double> exponent(t_grid.size(), 0.0);
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        if (t_grid[i] > 0.0) {
            const DecayRateProfile prof = decay_rate(p, t_grid[i], unit);
            exponent[i] = prof.R * prof.Q;
        }
    }
    auto misfit = [&](double c) {
        double s = 0.0;
        for (std::size_t i = 0; i < exponent.size(); ++i) {
            const double d = std::exp(-c * exponent[i]) - reference_pe[i];
            s += d * d;
        }
        return s;
    };
    return boost::math::tools::brent_find_minima(misfit, 0.0, 10.0, 40).first;
}

} // namespace zeno

#include "zeno/scattering.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "zeno/effective_coupling.hpp"
#include "zeno/errors.hpp"

namespace zeno {

namespace {
constexpr double kMinGroupVelocity = 1e-12;
}

ScatteringResult transmission_amplitude(const ModelParams& p, double k) {
    p.validate();
    if (!(k > 0.0 && k < std::numbers::pi)) {
        throw DomainError("transmission_amplitude: k must lie strictly inside (0, pi)");
    }
    ScatteringResult out;
    out.k = k;
    out.omega_k = p.omega_c - 2.0 * p.xi * std::cos(k);
    out.v_g = 2.0 * p.xi * std::sin(k);
    if (out.v_g < kMinGroupVelocity) {
        throw DomainError("transmission_amplitude: band-edge input (group velocity vanishes)");
    }
    const double G = effective_g(p);
    const double delta = out.omega_k - p.omega_a;
    out.s = delta / cplx(delta, G * G / out.v_g);
    out.r = out.s - 1.0;
    return out;
}

double resonant_potential(const ModelParams& p, double energy) {
    if (energy == 0.0) {
        throw DomainError("resonant_potential: E = 0 is the resonance (infinite delta potential)");
    }
    const double G = effective_g(p);
    return G * G / energy;
}

std::vector<ScatteringResult> spectrum(const ModelParams& p, std::span<const double> k_grid) {
    std::vector<ScatteringResult> out;
    out.reserve(k_grid.size());
    for (double k : k_grid) out.push_back(transmission_amplitude(p, k));
    return out;
}

std::optional<double> resonant_wavenumber(const ModelParams& p) {
    const double c = (p.omega_c - p.omega_a) / (2.0 * p.xi);
    if (c <= -1.0 || c >= 1.0) return std::nullopt;
    return std::acos(c);
}

std::optional<double> measure_dip_half_width(std::span<const ScatteringResult> sweep) {
    if (sweep.size() < 3) return std::nullopt;
    std::size_t dip = 0;
    for (std::size_t i = 1; i < sweep.size(); ++i) {
        if (sweep[i].transmission() < sweep[dip].transmission()) dip = i;
    }
    if (sweep[dip].transmission() >= 0.5) return std::nullopt;

    auto crossing = [&](std::size_t a, std::size_t b) {
        const double ta = sweep[a].transmission() - 0.5;
        const double tb = sweep[b].transmission() - 0.5;
        const double w = ta / (ta - tb);
        return sweep[a].omega_k + w * (sweep[b].omega_k - sweep[a].omega_k);
    };
    std::optional<double> left, right;
    for (std::size_t i = dip; i > 0; --i) {
        if (sweep[i - 1].transmission() >= 0.5) {
            left = crossing(i, i - 1);
            break;
        }
    }
    for (std::size_t i = dip; i + 1 < sweep.size(); ++i) {
        if (sweep[i + 1].transmission() >= 0.5) {
            right = crossing(i, i + 1);
            break;
        }
    }
    if (!left || !right) return std::nullopt;
    return 0.5 * std::abs(*right - *left);
}

SingleExcitationState gaussian_packet(int sites, int center, double sigma, double k0) {
    if (!(sigma > 0.0)) throw DomainError("gaussian_packet: sigma must be > 0");
    SingleExcitationState s(sites);
    const int half = (sites - 1) / 2;
    double norm = 0.0;
    for (int j = -half; j <= half; ++j) {
        const double x = j - center;
        const cplx a = std::exp(-x * x / (4.0 * sigma * sigma)) * std::polar(1.0, k0 * j);
        s.photon(j) = a;
        norm += std::norm(a);
    }
    s.amplitudes() /= std::sqrt(norm);
    return s;
}

WavepacketResult wavepacket_transmission(const ModelParams& p, double k0, const WavepacketOptions& o) {
    ModelParams q = p;
    q.sites = o.sites;
    q.validate();
    const int half = (q.sites - 1) / 2;
    if (o.center - 4.0 * o.sigma <= -half + o.edge_sites || o.center >= -o.cut) {
        throw DomainError("wavepacket: launch site too close to the boundary or the scatterer");
    }
    if (o.readout <= o.cut || o.readout >= half - o.edge_sites) {
        throw DomainError("wavepacket: readout site must lie between the cut and the right edge");
    }

    WavepacketResult res;
    res.analytic = transmission_amplitude(q, k0).transmission();
    const double v_g = 2.0 * q.xi * std::sin(k0);
    res.readout_time = (o.readout - o.center) / v_g;

    const SingleExcitationState start = gaussian_packet(q.sites, o.center, o.sigma, k0);
    const double dt = o.dt > 0.0 ? o.dt : recommended_step(q, res.readout_time, o.drift_target);
    const SingleExcitationState end = direct_propagate(q, start, res.readout_time, dt, &res.integrator);

    for (int j = -half; j <= half; ++j) {
        const double d = std::norm(end.photon(j));
        if (j > o.cut) res.transmitted += d;
        if (j < -o.cut) res.reflected += d;
        if (j < -half + o.edge_sites || j > half - o.edge_sites) res.edge_probability += d;
    }
    res.excited = excited_probability(end);
    if (res.edge_probability > o.edge_limit) {
        throw DomainError("wavepacket: packet reached the lattice boundary (edge probability " +
                          std::to_string(res.edge_probability) + "); lattice too short");
    }
    return res;
}

} // namespace zeno

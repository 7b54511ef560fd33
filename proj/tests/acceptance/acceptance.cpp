// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "zeno/bessel.hpp"
#include "zeno/bound_states.hpp"
#include "zeno/direct.hpp"
#include "zeno/dynamics.hpp"
#include "zeno/errors.hpp"
#include "zeno/harness/selfcheck.hpp"
#include "zeno/scattering.hpp"
#include "zeno/zeno_decay.hpp"

using namespace zeno;

namespace {

constexpr double pi = std::numbers::pi;

struct Verdict {
    bool pass{true};
    std::string detail;

    void require(bool ok, const std::string& what) {
        pass = pass && ok;
        if (!detail.empty()) detail += "; ";
        detail += what + (ok ? "" : " [violated]");
    }
};

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

// Fine-step direct integration, the reference for P_e(t_f).
double pe_direct(double ratio, double t) {
    const ModelParams p = reference_params(ratio);
    DynamicsOptions o;
    o.dt = 1e-4;
    const double grid[1] = {t};
    return pe_trace(p, grid, Method::direct, o).front().pe;
}

Verdict fig2a_reproduction() {
    Verdict v;
    const double on = pe_direct(2.4048, 20.0);
    v.require(on >= 0.95, "P_e(20; 2.4048) = " + fmt("%.6f", on) + " >= 0.95");
    for (double r : {1.0, 3.5}) {
        const double pe = pe_direct(r, 20.0);
        v.require(on - pe >= 0.2, "gap to ratio " + fmt("%.1f", r) + " = " + fmt("%.4f", on - pe) + " >= 0.2");
    }
    return v;
}

Verdict fig2b_reproduction() {
    Verdict v;
    std::vector<double> ratios;
    for (int i = 0; i <= 400; ++i) ratios.push_back(0.02 * i);
    const auto scan = zeno_scan(reference_params(), ratios, 20.0, Method::direct);
    const double zeros[2] = {2.4048, 5.5201};
    bool hit[2] = {false, false};
    std::string maxima;
    for (std::size_t i = 1; i + 1 < scan.size(); ++i) {
        if (scan[i].pe > scan[i - 1].pe && scan[i].pe > scan[i + 1].pe) {
            const double r = scan[i].ratio;
            maxima += (maxima.empty() ? "" : ",") + fmt("%.2f", r);
            bool near = false;
            for (int z = 0; z < 2; ++z) {
                if (std::abs(r - zeros[z]) <= 0.05) {
                    near = true;
                    hit[z] = true;
                }
            }
            v.require(near, "maximum at " + fmt("%.2f", r) + " within 0.05 of a J0 zero");
        }
    }
    v.require(hit[0] && hit[1], "maxima {" + maxima + "} cover both zeros");
    return v;
}

Verdict oracle_equivalence() {
    Verdict v;
    std::vector<double> grid;
    for (int i = 1; i <= 80; ++i) grid.push_back(0.25 * i);
    double worst = 0.0;
    double drift_f = 0.0;
    double drift_d = 0.0;
    for (double r : {0.5, 1.0, 2.4, 3.5}) {
        const ModelParams p = reference_params(r);
        const auto s0 = initial_excited(p);
        const auto f = trace_states(p, s0, grid, Method::floquet);
        const auto d = trace_states(p, s0, grid, Method::direct);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            worst = std::max(worst, (f[i].amplitudes() - d[i].amplitudes()).cwiseAbs().maxCoeff());
            drift_f = std::max(drift_f, std::abs(f[i].norm_squared() - 1.0));
            drift_d = std::max(drift_d, std::abs(d[i].norm_squared() - 1.0));
        }
    }
    v.require(worst <= 1e-4, "max amplitude difference " + fmt("%.3e", worst) + " <= 1e-4");
    v.require(drift_f <= 1e-8, "Floquet norm drift " + fmt("%.3e", drift_f) + " <= 1e-8");
    v.require(drift_d <= 1e-8, "direct norm drift " + fmt("%.3e", drift_d) + " <= 1e-8");
    return v;
}

Verdict scattering_unitarity() {
    Verdict v;
    std::vector<double> ks;
    for (int i = 0; i < 1000; ++i) ks.push_back(pi * (i + 0.5) / 1000.0);
    double worst = 0.0;
    for (double r : {0.0, 1.0, 3.5}) {
        for (const auto& s : spectrum(reference_params(r), ks)) {
            worst = std::max(worst, std::abs(s.transmission() + s.reflection() - 1.0));
        }
    }
    v.require(worst <= 1e-12, "max ||r|^2+|s|^2-1| = " + fmt("%.3e", worst) + " <= 1e-12");
    const ModelParams p = reference_params(0.0);
    const double dip = transmission_amplitude(p, *resonant_wavenumber(p)).transmission();
    v.require(dip <= 1e-12, "|s|^2 at omega_k = omega_a: " + fmt("%.3e", dip) + " <= 1e-12");
    double flat = 0.0;
    for (const auto& s : spectrum(reference_params(bessel_zero(0, 1)), ks)) flat = std::max(flat, std::abs(1.0 - s.transmission()));
    v.require(flat <= 1e-10, "max |1-|s|^2| at first J0 zero " + fmt("%.3e", flat) + " <= 1e-10");
    return v;
}

Verdict wavepacket_scattering() {
    Verdict v;
    WavepacketOptions o;
    o.sites = 401;
    o.sigma = 10.0;
    const auto off = wavepacket_transmission(reference_params(0.0), pi / 3, o);
    const double rel = std::abs(off.transmitted - off.analytic) / off.analytic;
    v.require(rel <= 0.02, "Omega=0, k0=pi/3: T = " + fmt("%.6f", off.transmitted) + " vs |s|^2 = " +
                               fmt("%.6f", off.analytic) + " (rel " + fmt("%.2e", rel) + " <= 2%)");
    const auto on = wavepacket_transmission(reference_params(2.4048), pi / 2, o);
    v.require(on.transmitted >= 0.98, "switch on at 2.4048, k0=pi/2: T = " + fmt("%.6f", on.transmitted) + " >= 0.98");
    return v;
}

Verdict bound_state_cross_validation() {
    Verdict v;
    const ModelParams p = reference_params(0.0);
    const auto bs = bound_state_solve(p, Branch::upper);
    const double closed = 0.5 * std::asinh(p.g * p.g / (2.0 * p.xi * p.xi));
    const double dk = std::abs(bs.kappa - closed);
    v.require(dk <= 1e-10, "|kappa - closed form| = " + fmt("%.3e", dk) + " <= 1e-10");
    const auto lat = lattice_bound_state(p, bs, 401);
    const double de = std::abs(lat.energy - bs.energy);
    v.require(de <= 1e-6, "L=401 |E_lattice - E_kappa| = " + fmt("%.3e", de) + " <= 1e-6");
    v.require(lat.overlap >= 0.9999, "L=401 profile overlap " + fmt("%.6f", lat.overlap) + " >= 0.9999");
    int wrong = 0;
    for (int k = 1; k <= 3; ++k) {
        const double z = bessel_zero(0, k);
        for (double r : {z - 1e-6, z, z + 1e-6}) {
            bool flagged = false;
            try {
                bound_state_solve(reference_params(r), Branch::upper);
            } catch (const DelocalizedError&) {
                flagged = true;
            }
            if (flagged != (r == z)) ++wrong;
        }
    }
    v.require(wrong == 0, "delocalization flagged exactly at the first three J0 zeros");
    return v;
}

Verdict suppression_law() {
    Verdict v;
    const double t = 1000.0;
    const double r0 = decay_rate(reference_params(0.0), t).R;
    double worst = 0.0;
    for (double x = 0.25; x <= 8.0; x += 0.25) {
        const double j0 = bessel_j(0, x);
        if (std::abs(j0) < 0.05) continue; // keep away from the zeros
        worst = std::max(worst, std::abs(decay_rate(reference_params(x), t).R / r0 - j0 * j0));
    }
    v.require(worst <= 1e-2, "max |R(x)/R(0) - J0^2(x)| at t=1000: " + fmt("%.3e", worst) + " <= 1e-2");
    const double rz = decay_rate(reference_params(bessel_zero(0, 1)), t).R / r0;
    v.require(rz <= 1e-4, "R(first zero)/R(0) = " + fmt("%.3e", rz) + " <= 1e-4");
    return v;
}

Verdict decay_law_consistency() {
    Verdict v;
    const ModelParams p = reference_params(1.0);
    std::vector<double> grid;
    for (int i = 0; i <= 72; ++i) grid.push_back(2.0 + 0.25 * i);
    const auto pred = survival_prediction(p, grid);
    DynamicsOptions o;
    o.dt = 1e-4;
    const auto sim = pe_trace(p, grid, Method::direct, o);
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) worst = std::max(worst, std::abs(pred[i].pe - sim[i].pe));
    v.require(worst <= 0.1, "max |exp(-R t) - P_e(t)| on [2, 20] = " + fmt("%.4f", worst) + " <= 0.1");
    return v;
}

Verdict invariant_suite() {
    Verdict v;
    const auto t0 = std::chrono::steady_clock::now();
    const auto results = harness::run_selfcheck();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    int failed = 0;
    for (const auto& r : results) {
        if (!r.pass) {
            ++failed;
            v.require(false, r.name + " = " + fmt("%.3e", r.value));
        }
    }
    v.require(failed == 0, std::to_string(results.size()) + " checks, " + std::to_string(failed) + " failed");
    v.require(secs < 60.0, "runtime " + fmt("%.1f", secs) + " s < 60 s");
    return v;
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        std::function<Verdict()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "P_e(20) switch contrast at the first J0 zero", fig2a_reproduction},
        {2, "P_e(t_f=20) maxima over the ratio scan sit at J0 zeros", fig2b_reproduction},
        {3, "Floquet vs direct propagation", oracle_equivalence},
        {4, "scattering unitarity, dip and transparency", scattering_unitarity},
        {5, "wavepacket transmission vs analytic", wavepacket_scattering},
        {6, "bound state vs closed form and finite lattice", bound_state_cross_validation},
        {7, "decay-rate suppression by J0^2", suppression_law},
        {8, "decay-law prediction vs full simulation", decay_law_consistency},
        {9, "selfcheck invariant suite", invariant_suite},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s criterion %d: %s (%.1f s) -- %s\n", v.pass ? "PASS" : "FAIL", c.id, c.title, secs,
                    v.detail.c_str());
        std::fflush(stdout);
        if (!v.pass) ++failures;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}

#include "zeno/dynamics.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <string>

#include "zeno/bessel.hpp"
#include "zeno/direct.hpp"
#include "zeno/errors.hpp"
#include "zeno/floquet.hpp"
#include "zeno/parallel.hpp"

namespace zeno {

Method parse_method(std::string_view name) {
    if (name == "floquet") return Method::floquet;
    if (name == "direct") return Method::direct;
    if (name == "effective") return Method::effective;
    throw DomainError("unknown propagation method '" + std::string(name) + "'");
}

std::string_view to_string(Method m) {
    switch (m) {
    case Method::floquet: return "floquet";
    case Method::direct: return "direct";
    case Method::effective: return "effective";
    }
    return "unknown";
}

namespace {

void check_grid(std::span<const double> t_grid) {
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        if (!std::isfinite(t_grid[i]) || t_grid[i] < 0.0) {
            throw DomainError("time grid entries must be finite and >= 0");
        }
        if (i > 0 && !(t_grid[i] > t_grid[i - 1])) {
            throw DomainError("time grid must be strictly increasing");
        }
    }
}

std::vector<SingleExcitationState> trace_floquet(const ModelParams& p, const SingleExcitationState& s0,
                                                 std::span<const double> grid, const DynamicsOptions& o) {
    int M = o.truncation;
    FloquetSpectrum spec;
    if (M <= 0) {
        M = choose_truncation(p, o.floquet_tolerance);
        spec = floquet_spectrum(p, M);
    } else {
        spec = floquet_spectrum(p, M);
        const double shift = quasi_energy_shift(spec, floquet_spectrum(p, M + 2), p);
        if (!(shift <= o.floquet_tolerance)) {
            throw ConvergenceError("Floquet truncation M=" + std::to_string(M) +
                                   " not converged (shift " + std::to_string(shift) + ")");
        }
    }
    const double nominal = o.slice > 0.0 ? o.slice : default_slice(p);

    std::map<double, std::unique_ptr<FloquetPropagator>> props;
    std::vector<SingleExcitationState> out;
    out.reserve(grid.size());
    SingleExcitationState cur = s0;
    double t = 0.0;
    for (double target : grid) {
        const PropagationPlan plan = make_plan(target - t, nominal);
        if (plan.steps > 0) {
            auto& prop = props[plan.slice];
            if (!prop) prop = std::make_unique<FloquetPropagator>(p, spec, plan.slice);
            cur = prop->propagate(cur, t, plan.steps);
        }
        t = target;
        out.push_back(cur);
    }
    return out;
}

std::vector<SingleExcitationState> trace_direct(const ModelParams& p, const SingleExcitationState& s0,
                                                std::span<const double> grid, const DynamicsOptions& o) {
    const double t_end = grid.empty() ? 0.0 : grid.back();
    const double dt = o.dt > 0.0 ? o.dt : recommended_step(p, t_end, o.drift_target);
    std::vector<SingleExcitationState> out;
    out.reserve(grid.size());
    SingleExcitationState cur = s0;
    double t = 0.0;
    for (double target : grid) {
        cur = direct_propagate(p, cur, target - t, dt, nullptr, t);
        t = target;
        out.push_back(cur);
    }
    const double drift = std::abs(cur.norm_squared() - s0.norm_squared());
    if (drift > kDirectDriftLimit) {
        throw ConvergenceError("direct trace: accumulated norm drift " + std::to_string(drift));
    }
    return out;
}

std::vector<SingleExcitationState> trace_effective(const ModelParams& p, const SingleExcitationState& s0,
                                                   std::span<const double> grid, const DynamicsOptions& o) {
    const EffectivePropagator prop(p, o.effective);
    std::vector<SingleExcitationState> out;
    out.reserve(grid.size());
    for (double t : grid) out.push_back(prop.evolve(s0, t));
    return out;
}

} // namespace

std::vector<SingleExcitationState> trace_states(const ModelParams& p, const SingleExcitationState& state0,
                                                std::span<const double> t_grid, Method method,
                                                const DynamicsOptions& opts) {
    p.validate();
    check_grid(t_grid);
    if (state0.amplitudes().size() != p.dimension()) {
        throw DomainError("initial state size does not match the model");
    }
    if (std::abs(state0.norm_squared() - 1.0) > 1e-10) {
        throw DomainError("initial state must be normalized");
    }
    switch (method) {
    case Method::floquet: return trace_floquet(p, state0, t_grid, opts);
    case Method::direct: return trace_direct(p, state0, t_grid, opts);
    case Method::effective: return trace_effective(p, state0, t_grid, opts);
    }
    throw DomainError("unknown propagation method");
}

std::vector<TracePoint> pe_trace(const ModelParams& p, std::span<const double> t_grid, Method method,
                                 const DynamicsOptions& opts) {
    const auto states = trace_states(p, initial_excited(p), t_grid, method, opts);
    std::vector<TracePoint> out(states.size());
    for (std::size_t i = 0; i < states.size(); ++i) out[i] = {t_grid[i], excited_probability(states[i])};
    return out;
}

std::vector<ZenoScanPoint> zeno_scan(const ModelParams& p, std::span<const double> ratio_grid, double t_f,
                                     Method method, const DynamicsOptions& opts) {
    p.validate();
    if (!(t_f > 0.0)) throw DomainError("zeno_scan: t_f must be > 0");
    if (t_f > p.revival_time()) {
        throw DomainError("zeno_scan: t_f = " + std::to_string(t_f) +
                          " exceeds the finite-lattice revival time " + std::to_string(p.revival_time()));
    }
    for (double r : ratio_grid) {
        if (!std::isfinite(r) || r < 0.0) throw DomainError("zeno_scan: ratios must be finite and >= 0");
    }
    const double tf[1] = {t_f};
    return parallel_map<ZenoScanPoint>(ratio_grid.size(), opts.workers, [&](std::size_t i) {
        const double r = ratio_grid[i];
        const ModelParams q = p.with_ratio(r);
        const auto pts = pe_trace(q, tf, method, opts);
        return ZenoScanPoint{r, pts.front().pe, bessel_j(0, r)};
    });
}

} // namespace zeno

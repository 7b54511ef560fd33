#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "zeno/effective_coupling.hpp"
#include "zeno/model.hpp"

namespace zeno {

enum class Method { floquet, direct, effective };

Method parse_method(std::string_view name);
std::string_view to_string(Method m);

struct DynamicsOptions {
    int truncation{0};        ///< Floquet M; 0 picks it with choose_truncation
    double slice{0.0};        ///< Floquet slice; 0 uses one period / 32
    double floquet_tolerance{1e-8};
    double dt{0.0};           ///< RK4 step; 0 uses recommended_step
    double drift_target{1e-8};
    EffectiveOptions effective{};
    unsigned workers{0};      ///< sweep threads; 0 = hardware concurrency
};

/**
 States at each time of a strictly increasing grid (t >= 0), evolved from
 state0 at t = 0 with the chosen propagator.
 */
std::vector<SingleExcitationState> trace_states(const ModelParams& p, const SingleExcitationState& state0,
                                                std::span<const double> t_grid, Method method,
                                                const DynamicsOptions& opts = {});

struct TracePoint {
    double t{0.0};
    double pe{0.0};
};

/// P_e(t) on the grid, starting from the excited TLS.
std::vector<TracePoint> pe_trace(const ModelParams& p, std::span<const double> t_grid, Method method,
                                 const DynamicsOptions& opts = {});

struct ZenoScanPoint {
    double ratio{0.0};
    double pe{0.0}; ///< P_e(t_f)
    double j0{0.0}; ///< J_0(ratio)
};

/**
 P_e(t_f) for Omega = ratio * nu over the ratio grid. t_f must not exceed
 the finite-lattice revival time L / (2 xi). Points are evaluated in
 parallel and returned in grid order.
 */
std::vector<ZenoScanPoint> zeno_scan(const ModelParams& p, std::span<const double> ratio_grid, double t_f,
                                     Method method, const DynamicsOptions& opts = {});

} // namespace zeno

#include "zeno/harness/runner.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>

#include <json.hpp>

#include "zeno/bessel.hpp"
#include "zeno/bound_states.hpp"
#include "zeno/dynamics.hpp"
#include "zeno/errors.hpp"
#include "zeno/harness/selfcheck.hpp"
#include "zeno/scattering.hpp"
#include "zeno/zeno_decay.hpp"

namespace zeno::harness {

namespace {

Table pe_trace_table(const RunConfig& c) {
    const Method m = c.method.value_or(Method::floquet);
    const auto grid = c.t_grid.expand();
    Table t{{"t", "pe"}, {"1/xi", "probability"}, {}, {{"method", std::string(to_string(m))}}};
    for (const auto& pt : pe_trace(c.model(), grid, m, c.dynamics())) t.add_row({pt.t, pt.pe});
    return t;
}

Table zeno_scan_table(const RunConfig& c) {
    const Method m = c.method.value_or(Method::direct);
    const auto grid = c.ratio_grid.expand();
    Table t{{"ratio", "pe_tf", "j0"}, {"Omega/nu", "probability", "1"}, {}, {}};
    t.notes["method"] = std::string(to_string(m));
    t.notes["t_f"] = format_double(c.t_f);
    for (const auto& pt : zeno_scan(c.model(), grid, c.t_f, m, c.dynamics())) t.add_row({pt.ratio, pt.pe, pt.j0});
    return t;
}

Table transmission_table(const RunConfig& c) {
    const auto grid = c.k_grid.expand();
    Table t{{"k", "omega_k", "v_g", "s_re", "s_im", "r_re", "r_im", "s2", "r2"},
            {"1/site", "xi", "xi*site", "1", "1", "1", "1", "1", "1"},
            {},
            {}};
    for (const auto& r : spectrum(c.model(), grid)) {
        t.add_row({r.k, r.omega_k, r.v_g, r.s.real(), r.s.imag(), r.r.real(), r.r.imag(), r.transmission(),
                   r.reflection()});
    }
    return t;
}

Table wavepacket_table(const RunConfig& c) {
    WavepacketOptions o;
    o.sites = c.packet_sites;
    o.center = c.packet_center;
    o.sigma = c.packet_sigma;
    o.cut = c.packet_cut;
    o.readout = c.packet_readout;
    o.dt = c.dt;
    o.drift_target = c.drift_target;
    const auto r = wavepacket_transmission(c.model(), c.packet_k0, o);
    Table t{{"k0", "transmitted", "reflected", "excited", "analytic", "readout_time", "edge_probability", "norm_drift"},
            {"1/site", "probability", "probability", "probability", "probability", "1/xi", "probability", "1"},
            {},
            {}};
    t.notes["dt"] = format_double(r.integrator.step);
    t.add_row({c.packet_k0, r.transmitted, r.reflected, r.excited, r.analytic, r.readout_time, r.edge_probability,
               r.integrator.norm_drift});
    return t;
}

Table bound_state_table(const RunConfig& c) {
    const ModelParams p = c.model();
    const auto bs = bound_state_solve(p, c.branch);
    const auto lat = lattice_bound_state(p, bs, c.lattice_sites);
    Table t{{"branch", "kappa", "energy", "width", "norm_const", "lattice_sites", "lattice_energy", "lattice_overlap",
             "lattice_excited_weight"},
            {"", "1/site", "xi", "sites", "1", "sites", "xi", "1", "probability"},
            {},
            {}};
    t.notes["energy_reference"] = "omega_a";
    t.add_row({std::string(to_string(bs.branch)), bs.kappa, bs.energy, bs.width(), bs.norm_const,
               static_cast<long long>(c.lattice_sites), lat.energy, lat.overlap, lat.excited_weight});
    return t;
}

Table bound_map_table(const RunConfig& c) {
    const auto grid = c.ratio_grid.expand();
    const auto rows = localization_map(c.model(), grid, c.j_min, c.j_max, c.branch, c.workers);
    Table t{{"ratio", "j", "density"}, {"Omega/nu", "site", c.normalize_columns ? "relative" : "probability"}, {}, {}};
    t.notes["normalize"] = c.normalize_columns ? "column" : "none";
    std::string deloc;
    for (const auto& row : rows) {
        double scale = 1.0;
        if (c.normalize_columns && !row.delocalized) {
            double mx = 0.0;
            for (double d : row.density) mx = std::max(mx, d);
            if (mx > 0.0) scale = 1.0 / mx;
        }
        if (row.delocalized) deloc += (deloc.empty() ? "" : ",") + format_double(row.ratio);
        for (int j = c.j_min; j <= c.j_max; ++j) {
            t.add_row({row.ratio, static_cast<long long>(j), row.density[static_cast<std::size_t>(j - c.j_min)] * scale});
        }
    }
    t.notes["delocalized_ratios"] = deloc;
    return t;
}

DecayRateOptions decay_options(const RunConfig& c, Table& t) {
    DecayRateOptions o;
    o.include_cross_terms = c.cross_terms;
    o.rate_constant = c.calibrate ? calibrated_rate_constant(c) : c.rate_constant;
    t.notes["rate_constant"] = format_double(o.rate_constant);
    t.notes["calibrated"] = c.calibrate ? "true" : "false";
    t.notes["cross_terms"] = c.cross_terms ? "true" : "false";
    return o;
}

Table decay_rate_table(const RunConfig& c) {
    Table t{{"t", "q", "rate"}, {"1/xi", "1/xi", "xi"}, {}, {}};
    const DecayRateOptions o = decay_options(c, t);
    t.notes["t0_row"] = "t = 0 reports the t -> 0 limit R = 0";
    const ModelParams p = c.model();
    for (double time : c.t_grid.expand()) {
        if (time == 0.0) {
            t.add_row({0.0, 0.0, 0.0});
            continue;
        }
        const auto prof = decay_rate(p, time, o);
        t.add_row({time, prof.Q, prof.R});
    }
    return t;
}

Table survival_table(const RunConfig& c) {
    Table t{{"t", "pe"}, {"1/xi", "probability"}, {}, {}};
    const DecayRateOptions o = decay_options(c, t);
    const auto grid = c.t_grid.expand();
    for (const auto& pt : survival_prediction(c.model(), grid, o)) t.add_row({pt.t, pt.pe});
    return t;
}

Table selfcheck_table(const RunConfig& c) {
    Table t{{"check", "value", "tolerance", "pass"}, {"", "", "", "bool"}, {}, {}};
    for (const auto& r : run_selfcheck(c.workers)) {
        t.add_row({r.name, r.value, r.tolerance, static_cast<long long>(r.pass ? 1 : 0)});
    }
    return t;
}

const std::map<std::string, std::function<Table(const RunConfig&)>>& registry() {
    static const std::map<std::string, std::function<Table(const RunConfig&)>> r = {
        {"pe-trace", pe_trace_table},       {"zeno-scan", zeno_scan_table},
        {"transmission", transmission_table}, {"wavepacket", wavepacket_table},
        {"bound-state", bound_state_table}, {"bound-map", bound_map_table},
        {"decay-rate", decay_rate_table},   {"survival", survival_table},
        {"selfcheck", selfcheck_table},
    };
    return r;
}

} // namespace

const std::vector<std::string>& subcommands() {
    static const std::vector<std::string> names = {"pe-trace",    "zeno-scan", "transmission", "wavepacket", "bound-state",
                                                   "bound-map",   "decay-rate", "survival",    "selfcheck"};
    return names;
}

double calibrated_rate_constant(const RunConfig& c) {
    const ModelParams p = c.model().with_ratio(0.0);
    std::vector<double> grid;
    for (double t : c.t_grid.expand()) {
        if (t > 0.0 && t <= p.revival_time()) grid.push_back(t);
    }
    if (grid.empty()) throw ConfigError("calibration needs positive t grid points below the revival time");
    std::vector<double> pe;
    for (const auto& pt : pe_trace(p, grid, Method::direct, c.dynamics())) pe.push_back(pt.pe);
    DecayRateOptions o;
    o.include_cross_terms = c.cross_terms;
    return calibrate_rate_constant(p, grid, pe, o);
}

Table run_table(const std::string& subcommand, const RunConfig& cfg) {
    const auto& r = registry();
    const auto it = r.find(subcommand);
    if (it == r.end()) throw ConfigError("unknown subcommand '" + subcommand + "'");
    cfg.validate();
    return it->second(cfg);
}

std::string error_record(const std::string& kind, const std::string& message, int code) {
    return nlohmann::json{{"error", kind}, {"message", message}, {"exit_code", code}}.dump();
}

int execute(const std::string& subcommand, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    auto fail = [&](const std::string& kind, const std::string& msg, int code) {
        err << error_record(kind, msg, code) << '\n';
        return code;
    };
    try {
        const Table table = run_table(subcommand, cfg);
        const std::string ext = cfg.format == OutputFormat::csv ? ".csv" : ".json";
        std::string path = cfg.output;
        if (path.empty()) {
            const char* dir = std::getenv("ZENO_OUTPUT_DIR");
            if (dir != nullptr && *dir != '\0') path = (std::filesystem::path(dir) / (subcommand + ext)).string();
        }
        auto emit = [&](std::ostream& os) {
            if (cfg.format == OutputFormat::csv) {
                write_csv(os, table);
            } else {
                write_json(os, table);
            }
        };
        if (path.empty() || path == "-") {
            emit(out);
        } else {
            const std::filesystem::path fp(path);
            if (fp.has_parent_path()) std::filesystem::create_directories(fp.parent_path());
            std::ofstream f(fp, std::ios::binary);
            if (!f) return fail("io", "cannot open output file '" + path + "'", kExitConfig);
            emit(f);
            std::ofstream meta(path + ".meta.json", std::ios::binary);
            meta << metadata_json(subcommand, table, config_to_json(cfg));
        }
        if (subcommand == "selfcheck") {
            for (const auto& row : table.rows) {
                if (std::get<long long>(row[3]) == 0) {
                    return fail("selfcheck", "invariant violated: " + std::get<std::string>(row[0]), kExitCheckFailed);
                }
            }
        }
        return kExitOk;
    } catch (const ConfigError& e) {
        return fail("config", e.what(), kExitConfig);
    } catch (const ConvergenceError& e) {
        return fail("convergence", e.what(), kExitConvergence);
    } catch (const InfeasibleError& e) {
        return fail("infeasible", e.what(), kExitInfeasible);
    } catch (const DelocalizedError& e) {
        return fail("delocalized", e.what(), kExitConfig);
    } catch (const RegimeError& e) {
        return fail("regime", e.what(), kExitConfig);
    } catch (const DomainError& e) {
        return fail("domain", e.what(), kExitConfig);
    } catch (const NoBoundStateError& e) {
        return fail("no_bound_state", e.what(), kExitConfig);
    } catch (const std::exception& e) {
        return fail("internal", e.what(), kExitCheckFailed);
    }
}

} // namespace zeno::harness

#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "zeno/dynamics.hpp"
#include "zeno/errors.hpp"
#include "zeno/harness/config.hpp"
#include "zeno/harness/runner.hpp"

using namespace zeno;
using namespace zeno::harness;

namespace {

struct Overrides {
    std::string config;
    std::optional<double> omega_c, omega_a, ratio, nu, xi, g;
    std::optional<int> sites;
    std::optional<std::string> t_grid, ratio_grid, k_grid, j_range;
    std::optional<std::string> method;
    std::optional<int> truncation;
    std::optional<double> slice, dt, drift_target, floquet_tolerance;
    std::optional<unsigned> workers;
    std::optional<double> t_f;
    std::optional<double> rate_constant;
    bool calibrate{false};
    bool cross_terms{false};
    std::optional<std::string> branch, normalize;
    std::optional<int> lattice_sites;
    std::optional<int> packet_sites, center, cut, readout;
    std::optional<double> sigma, k0;
    std::optional<std::string> output, format;
};

template <class T>
void apply(const std::optional<T>& v, T& dst) {
    if (v) dst = *v;
}

RunConfig resolve(const Overrides& o) {
    RunConfig c = o.config.empty() ? RunConfig{} : load_config(o.config);
    apply(o.omega_c, c.omega_c);
    apply(o.omega_a, c.omega_a);
    apply(o.ratio, c.ratio);
    apply(o.nu, c.nu);
    apply(o.xi, c.xi);
    apply(o.g, c.g);
    apply(o.sites, c.sites);
    if (o.t_grid) c.t_grid = GridSpec::parse(*o.t_grid);
    if (o.ratio_grid) c.ratio_grid = GridSpec::parse(*o.ratio_grid);
    if (o.k_grid) c.k_grid = GridSpec::parse(*o.k_grid);
    if (o.j_range) {
        const auto pos = o.j_range->find(':');
        if (pos == std::string::npos) throw ConfigError("--j-range must be min:max");
        try {
            c.j_min = std::stoi(o.j_range->substr(0, pos));
            c.j_max = std::stoi(o.j_range->substr(pos + 1));
        } catch (const std::exception&) {
            throw ConfigError("--j-range must be min:max with integers");
        }
    }
    try {
        if (o.method) c.method = parse_method(*o.method);
        if (o.branch) c.branch = parse_branch(*o.branch);
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
    apply(o.truncation, c.truncation);
    apply(o.slice, c.slice);
    apply(o.dt, c.dt);
    apply(o.drift_target, c.drift_target);
    apply(o.floquet_tolerance, c.floquet_tolerance);
    apply(o.workers, c.workers);
    apply(o.t_f, c.t_f);
    apply(o.rate_constant, c.rate_constant);
    if (o.calibrate) c.calibrate = true;
    if (o.cross_terms) c.cross_terms = true;
    if (o.normalize) {
        if (*o.normalize != "column" && *o.normalize != "none") throw ConfigError("--normalize must be column or none");
        c.normalize_columns = *o.normalize == "column";
    }
    apply(o.lattice_sites, c.lattice_sites);
    apply(o.packet_sites, c.packet_sites);
    apply(o.center, c.packet_center);
    apply(o.cut, c.packet_cut);
    apply(o.readout, c.packet_readout);
    apply(o.sigma, c.packet_sigma);
    apply(o.k0, c.packet_k0);
    apply(o.output, c.output);
    if (o.format) {
        if (*o.format == "csv") {
            c.format = OutputFormat::csv;
        } else if (*o.format == "json") {
            c.format = OutputFormat::json;
        } else {
            throw ConfigError("--format must be csv or json");
        }
    }
    return c;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum Zeno photon switch: coupled-resonator waveguide with a frequency-modulated two-level system"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    Overrides o;
    app.add_option("-c,--config", o.config, "JSON config file (schema_version 1)");
    app.add_option("--omega-c", o.omega_c, "cavity frequency");
    app.add_option("--omega-a", o.omega_a, "TLS frequency");
    app.add_option("--ratio", o.ratio, "modulation ratio Omega/nu");
    app.add_option("--nu", o.nu, "modulation frequency");
    app.add_option("--xi", o.xi, "hopping");
    app.add_option("--g", o.g, "TLS-cavity coupling");
    app.add_option("--sites", o.sites, "number of cavities (odd)");
    app.add_option("--t-grid", o.t_grid, "times, start:stop:step or a,b,c");
    app.add_option("--ratio-grid", o.ratio_grid, "ratios, start:stop:step or a,b,c");
    app.add_option("--k-grid", o.k_grid, "wave numbers, start:stop:step or a,b,c");
    app.add_option("--j-range", o.j_range, "cavity range min:max");
    app.add_option("--method", o.method, "floquet | direct | effective");
    app.add_option("--truncation", o.truncation, "Floquet sidebands M (0 = automatic)");
    app.add_option("--slice", o.slice, "Floquet time slice (0 = period/32)");
    app.add_option("--dt", o.dt, "RK4 step (0 = from drift target)");
    app.add_option("--drift-target", o.drift_target, "RK4 norm drift target");
    app.add_option("--floquet-tolerance", o.floquet_tolerance, "quasi-energy convergence tolerance");
    app.add_option("--workers", o.workers, "sweep threads (0 = hardware)");
    app.add_option("--tf", o.t_f, "final time of zeno-scan");
    app.add_option("--rate-constant", o.rate_constant, "decay-rate prefactor");
    app.add_flag("--calibrate", o.calibrate, "fit the rate constant to direct simulation at Omega = 0");
    app.add_flag("--cross-terms", o.cross_terms, "include sideband interference in R(t)");
    app.add_option("--branch", o.branch, "bound-state branch: upper | lower");
    app.add_option("--normalize", o.normalize, "bound-map normalization: column | none");
    app.add_option("--lattice-sites", o.lattice_sites, "lattice size for bound-state cross-check");
    app.add_option("--packet-sites", o.packet_sites, "lattice size of the wavepacket run");
    app.add_option("--center", o.center, "wavepacket launch site");
    app.add_option("--sigma", o.sigma, "wavepacket width (sites)");
    app.add_option("--k0", o.k0, "wavepacket carrier wave number");
    app.add_option("--cut", o.cut, "transmitted probability counted beyond this site");
    app.add_option("--readout", o.readout, "readout site of the free centroid");
    app.add_option("-o,--output", o.output, "output file ('-' = stdout; default $ZENO_OUTPUT_DIR/<subcommand>.<ext>)");
    app.add_option("--format", o.format, "csv | json");

    const std::map<std::string, std::string> about = {
        {"pe-trace", "excited-state population P_e(t)"},
        {"zeno-scan", "P_e at the final time versus modulation ratio"},
        {"transmission", "single-photon transmission and reflection versus k"},
        {"wavepacket", "Gaussian packet scattered off the effective TLS"},
        {"bound-state", "closed-form bound state with a lattice cross-check"},
        {"bound-map", "photon density of the bound state versus ratio and site"},
        {"decay-rate", "time-dependent decay rate R(t)"},
        {"survival", "P_e(t) predicted from R(t)"},
        {"selfcheck", "internal consistency checks"}};
    for (const auto& name : subcommands()) app.add_subcommand(name, about.at(name));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << error_record("config", e.what(), kExitConfig) << '\n';
        return kExitConfig;
    }

    const std::string sub = app.get_subcommands().front()->get_name();
    RunConfig cfg;
    try {
        cfg = resolve(o);
    } catch (const ConfigError& e) {
        std::cerr << error_record("config", e.what(), kExitConfig) << '\n';
        return kExitConfig;
    }
    return execute(sub, cfg, std::cout, std::cerr);
}

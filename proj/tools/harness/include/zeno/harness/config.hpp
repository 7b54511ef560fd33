#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zeno/bound_states.hpp"
#include "zeno/dynamics.hpp"
#include "zeno/model.hpp"

namespace zeno::harness {

inline constexpr int kSchemaVersion = 1;

/// Malformed or inconsistent configuration (exit status 2).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Either an explicit list or start:stop:step, expanded by index so that the
/// values do not depend on accumulated rounding.
struct GridSpec {
    std::vector<double> values;
    double start{0.0};
    double stop{0.0};
    double step{0.0};
    bool ranged{false};

    static GridSpec range(double start, double stop, double step);
    static GridSpec list(std::vector<double> values);
    /// Parses "start:stop:step" or a comma-separated list.
    static GridSpec parse(const std::string& text);

    std::vector<double> expand() const;
};

enum class OutputFormat { csv, json };

struct RunConfig {
    // Model, with the drive given as Omega / nu.
    double omega_c{0.0};
    double omega_a{0.0};
    double ratio{0.0};
    double nu{10.0};
    double xi{1.0};
    double g{0.25};
    int sites{41};

    GridSpec t_grid{GridSpec::range(0.0, 20.0, 0.1)};
    GridSpec ratio_grid{GridSpec::range(0.0, 8.0, 0.02)};
    GridSpec k_grid{GridSpec::range(0.01, 3.13, 0.01)};
    int j_min{-30};
    int j_max{30};

    std::optional<Method> method; ///< unset: subcommand default
    int truncation{0};
    double slice{0.0};
    double dt{0.0};
    double drift_target{1e-8};
    double floquet_tolerance{1e-8};
    unsigned workers{0};

    double t_f{20.0};

    double rate_constant{1.0};
    bool calibrate{false};
    bool cross_terms{false};

    Branch branch{Branch::upper};
    bool normalize_columns{true};
    int lattice_sites{401};

    int packet_sites{401};
    int packet_center{-100};
    double packet_sigma{10.0};
    double packet_k0{1.0471975511965976};
    int packet_cut{20};
    int packet_readout{60};

    std::string output; ///< empty: ZENO_OUTPUT_DIR/<subcommand>.<ext> or stdout; "-": stdout
    OutputFormat format{OutputFormat::csv};

    ModelParams model() const;
    DynamicsOptions dynamics() const;
    /// Throws ConfigError when an invariant is violated.
    void validate() const;
};

/// Reads a JSON config; unknown keys and a wrong schema_version are errors.
RunConfig load_config(const std::string& path);
RunConfig config_from_json_text(const std::string& text);

/// Canonical JSON echo of the resolved config (stable key order).
std::string config_to_json(const RunConfig& cfg);

} // namespace zeno::harness

#include "zeno/harness/config.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

#include "zeno/errors.hpp"

namespace zeno::harness {

using nlohmann::json;

GridSpec GridSpec::range(double start, double stop, double step) {
    GridSpec g;
    g.start = start;
    g.stop = stop;
    g.step = step;
    g.ranged = true;
    return g;
}

GridSpec GridSpec::list(std::vector<double> values) {
    GridSpec g;
    g.values = std::move(values);
    return g;
}

namespace {

double parse_number(const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw ConfigError("not a number: '" + s + "'");
    }
    if (used != s.size()) throw ConfigError("trailing characters in number '" + s + "'");
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

} // namespace

GridSpec GridSpec::parse(const std::string& text) {
    if (text.find(':') != std::string::npos) {
        const auto parts = split(text, ':');
        if (parts.size() != 3) throw ConfigError("grid range must be start:stop:step, got '" + text + "'");
        return range(parse_number(parts[0]), parse_number(parts[1]), parse_number(parts[2]));
    }
    std::vector<double> v;
    for (const auto& p : split(text, ',')) v.push_back(parse_number(p));
    return list(std::move(v));
}

std::vector<double> GridSpec::expand() const {
    if (!ranged) return values;
    if (!(step > 0.0) || !(stop >= start)) throw ConfigError("grid range needs step > 0 and stop >= start");
    const long count = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
    if (count > 10000000) throw ConfigError("grid has more than 1e7 points");
    std::vector<double> out(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = start + static_cast<double>(i) * step;
    return out;
}

ModelParams RunConfig::model() const {
    ModelParams p;
    p.omega_c = omega_c;
    p.omega_a = omega_a;
    p.nu = nu;
    p.amplitude = ratio * nu;
    p.xi = xi;
    p.g = g;
    p.sites = sites;
    return p;
}

DynamicsOptions RunConfig::dynamics() const {
    DynamicsOptions o;
    o.truncation = truncation;
    o.slice = slice;
    o.floquet_tolerance = floquet_tolerance;
    o.dt = dt;
    o.drift_target = drift_target;
    o.workers = workers;
    return o;
}

void RunConfig::validate() const {
    try {
        model().validate();
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
    auto check_grid = [](const GridSpec& g, const char* name) {
        const auto v = g.expand();
        if (v.empty()) throw ConfigError(std::string(name) + " grid is empty");
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (!std::isfinite(v[i])) throw ConfigError(std::string(name) + " grid has a non-finite entry");
            if (i > 0 && !(v[i] > v[i - 1])) throw ConfigError(std::string(name) + " grid must be increasing");
        }
    };
    check_grid(t_grid, "t");
    check_grid(ratio_grid, "ratio");
    check_grid(k_grid, "k");
    if (j_max < j_min) throw ConfigError("j range must have max >= min");
    if (truncation < 0 || slice < 0.0 || dt < 0.0) throw ConfigError("truncation, slice and dt must be >= 0");
    if (!(drift_target > 0.0) || !(floquet_tolerance > 0.0)) throw ConfigError("tolerances must be > 0");
    if (!(t_f > 0.0)) throw ConfigError("t_f must be > 0");
    if (!(rate_constant > 0.0)) throw ConfigError("rate_constant must be > 0");
    if (lattice_sites < 3 || lattice_sites % 2 == 0) throw ConfigError("lattice_sites must be odd and >= 3");
    if (packet_sites < 3 || packet_sites % 2 == 0) throw ConfigError("wavepacket sites must be odd and >= 3");
    if (!(packet_sigma > 0.0)) throw ConfigError("wavepacket sigma must be > 0");
}

namespace {

void allow_only(const json& obj, const char* section, std::initializer_list<const char*> keys) {
    if (!obj.is_object()) throw ConfigError(std::string("section '") + section + "' must be an object");
    for (const auto& item : obj.items()) {
        bool ok = false;
        for (const char* k : keys) ok = ok || item.key() == k;
        if (!ok) throw ConfigError("unknown key '" + item.key() + "' in section '" + section + "'");
    }
}

template <class T>
void read(const json& obj, const char* key, T& out) {
    if (!obj.contains(key)) return;
    try {
        out = obj.at(key).get<T>();
    } catch (const json::exception&) {
        throw ConfigError(std::string("key '") + key + "' has the wrong type");
    }
}

GridSpec read_grid(const json& v, const char* name) {
    if (v.is_string()) return GridSpec::parse(v.get<std::string>());
    if (v.is_array()) {
        std::vector<double> vals;
        for (const auto& x : v) {
            if (!x.is_number()) throw ConfigError(std::string(name) + " grid entries must be numbers");
            vals.push_back(x.get<double>());
        }
        return GridSpec::list(std::move(vals));
    }
    if (v.is_object()) {
        allow_only(v, name, {"start", "stop", "step"});
        if (!v.contains("start") || !v.contains("stop") || !v.contains("step")) {
            throw ConfigError(std::string(name) + " grid object needs start, stop and step");
        }
        double a = 0, b = 0, s = 0;
        read(v, "start", a);
        read(v, "stop", b);
        read(v, "step", s);
        return GridSpec::range(a, b, s);
    }
    throw ConfigError(std::string(name) + " grid must be a string, array or object");
}

json grid_to_json(const GridSpec& g) {
    if (g.ranged) return json{{"start", g.start}, {"stop", g.stop}, {"step", g.step}};
    return json(g.values);
}

} // namespace

RunConfig config_from_json_text(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    allow_only(root, "root",
               {"schema_version", "model", "grids", "numerics", "zeno", "decay", "bound", "wavepacket", "output"});
    if (!root.contains("schema_version")) throw ConfigError("config must declare schema_version");
    int version = 0;
    read(root, "schema_version", version);
    if (version != kSchemaVersion) {
        throw ConfigError("unsupported schema_version " + std::to_string(version) + " (expected " +
                          std::to_string(kSchemaVersion) + ")");
    }

    RunConfig c;
    if (root.contains("model")) {
        const json& m = root["model"];
        allow_only(m, "model", {"omega_c", "omega_a", "ratio", "nu", "xi", "g", "sites"});
        read(m, "omega_c", c.omega_c);
        read(m, "omega_a", c.omega_a);
        read(m, "ratio", c.ratio);
        read(m, "nu", c.nu);
        read(m, "xi", c.xi);
        read(m, "g", c.g);
        read(m, "sites", c.sites);
    }
    if (root.contains("grids")) {
        const json& gr = root["grids"];
        allow_only(gr, "grids", {"t", "ratio", "k", "j_min", "j_max"});
        if (gr.contains("t")) c.t_grid = read_grid(gr["t"], "t");
        if (gr.contains("ratio")) c.ratio_grid = read_grid(gr["ratio"], "ratio");
        if (gr.contains("k")) c.k_grid = read_grid(gr["k"], "k");
        read(gr, "j_min", c.j_min);
        read(gr, "j_max", c.j_max);
    }
    if (root.contains("numerics")) {
        const json& n = root["numerics"];
        allow_only(n, "numerics",
                   {"method", "truncation", "slice", "dt", "drift_target", "floquet_tolerance", "workers"});
        if (n.contains("method")) {
            std::string name;
            read(n, "method", name);
            try {
                c.method = parse_method(name);
            } catch (const DomainError& e) {
                throw ConfigError(e.what());
            }
        }
        read(n, "truncation", c.truncation);
        read(n, "slice", c.slice);
        read(n, "dt", c.dt);
        read(n, "drift_target", c.drift_target);
        read(n, "floquet_tolerance", c.floquet_tolerance);
        read(n, "workers", c.workers);
    }
    if (root.contains("zeno")) {
        allow_only(root["zeno"], "zeno", {"t_f"});
        read(root["zeno"], "t_f", c.t_f);
    }
    if (root.contains("decay")) {
        const json& d = root["decay"];
        allow_only(d, "decay", {"rate_constant", "calibrate", "cross_terms"});
        read(d, "rate_constant", c.rate_constant);
        read(d, "calibrate", c.calibrate);
        read(d, "cross_terms", c.cross_terms);
    }
    if (root.contains("bound")) {
        const json& b = root["bound"];
        allow_only(b, "bound", {"branch", "normalize", "lattice_sites"});
        if (b.contains("branch")) {
            std::string name;
            read(b, "branch", name);
            try {
                c.branch = parse_branch(name);
            } catch (const DomainError& e) {
                throw ConfigError(e.what());
            }
        }
        if (b.contains("normalize")) {
            std::string mode;
            read(b, "normalize", mode);
            if (mode == "column") {
                c.normalize_columns = true;
            } else if (mode == "none") {
                c.normalize_columns = false;
            } else {
                throw ConfigError("bound.normalize must be 'column' or 'none'");
            }
        }
        read(b, "lattice_sites", c.lattice_sites);
    }
    if (root.contains("wavepacket")) {
        const json& w = root["wavepacket"];
        allow_only(w, "wavepacket", {"sites", "center", "sigma", "k0", "cut", "readout"});
        read(w, "sites", c.packet_sites);
        read(w, "center", c.packet_center);
        read(w, "sigma", c.packet_sigma);
        read(w, "k0", c.packet_k0);
        read(w, "cut", c.packet_cut);
        read(w, "readout", c.packet_readout);
    }
    if (root.contains("output")) {
        const json& o = root["output"];
        allow_only(o, "output", {"path", "format"});
        read(o, "path", c.output);
        if (o.contains("format")) {
            std::string f;
            read(o, "format", f);
            if (f == "csv") {
                c.format = OutputFormat::csv;
            } else if (f == "json") {
                c.format = OutputFormat::json;
            } else {
                throw ConfigError("output.format must be 'csv' or 'json'");
            }
        }
    }
    return c;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return config_from_json_text(ss.str());
}

std::string config_to_json(const RunConfig& c) {
    json root;
    root["schema_version"] = kSchemaVersion;
    root["model"] = {{"omega_c", c.omega_c}, {"omega_a", c.omega_a}, {"ratio", c.ratio}, {"nu", c.nu},
                     {"xi", c.xi},           {"g", c.g},             {"sites", c.sites}};
    root["grids"] = {{"t", grid_to_json(c.t_grid)},
                     {"ratio", grid_to_json(c.ratio_grid)},
                     {"k", grid_to_json(c.k_grid)},
                     {"j_min", c.j_min},
                     {"j_max", c.j_max}};
    json num = {{"truncation", c.truncation},         {"slice", c.slice},
                {"dt", c.dt},                         {"drift_target", c.drift_target},
                {"floquet_tolerance", c.floquet_tolerance}};
    if (c.method) num["method"] = std::string(to_string(*c.method));
    root["numerics"] = num;
    root["zeno"] = {{"t_f", c.t_f}};
    root["decay"] = {{"rate_constant", c.rate_constant}, {"calibrate", c.calibrate}, {"cross_terms", c.cross_terms}};
    root["bound"] = {{"branch", std::string(to_string(c.branch))},
                     {"normalize", c.normalize_columns ? "column" : "none"},
                     {"lattice_sites", c.lattice_sites}};
    root["wavepacket"] = {{"sites", c.packet_sites}, {"center", c.packet_center}, {"sigma", c.packet_sigma},
                          {"k0", c.packet_k0},       {"cut", c.packet_cut},       {"readout", c.packet_readout}};
    root["output"] = {{"path", c.output}, {"format", c.format == OutputFormat::csv ? "csv" : "json"}};
    return root.dump(2);
}

} // namespace zeno::harness

#include "zenobath/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>

#include "zenobath/errors.hpp"

namespace zenobath {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_double(const std::string& v) {
    char* end = nullptr;
    const double x = std::strtod(v.c_str(), &end);
    if (end == v.c_str() || *end != '\0')
        throw ConfigError("expected a number, got '" + v + "'");
    return x;
}

std::size_t parse_size(const std::string& v) {
    char* end = nullptr;
    const unsigned long long x = std::strtoull(v.c_str(), &end, 10);
    if (end == v.c_str() || *end != '\0' || v.find('-') != std::string::npos)
        throw ConfigError("expected a non-negative integer, got '" + v + "'");
    return static_cast<std::size_t>(x);
}

std::vector<double> parse_list(const std::string& v) {
    std::vector<double> out;
    if (trim(v).empty()) return out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_double(trim(item)));
    return out;
}

std::string format_list(const std::vector<double>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ",";
        out += format_double(xs[i]);
    }
    return out;
}

struct Key {
    const char* name;
    std::function<void(RunConfig&, const std::string&)> set;
    std::function<std::string(const RunConfig&)> get;
};

template <typename T>
T parse_enum(const std::string& v, std::initializer_list<std::pair<const char*, T>> table,
             const char* what) {
    for (const auto& [name, value] : table)
        if (v == name) return value;
    std::string choices;
    for (const auto& [name, value] : table) {
        if (!choices.empty()) choices += "|";
        choices += name;
    }
    throw ConfigError(std::string("unknown ") + what + " '" + v + "' (expected " + choices + ")");
}

const std::vector<Key>& key_table() {
    static const std::vector<Key> keys = {
        {"task",
         [](RunConfig& c, const std::string& v) {
             c.task = parse_enum<Task>(v,
                                       {{"eta", Task::Eta},
                                        {"spectrum", Task::Spectrum},
                                        {"dynamics", Task::Dynamics},
                                        {"zeno", Task::Zeno},
                                        {"oracle", Task::Oracle},
                                        {"reproduce", Task::Reproduce}},
                                       "task");
         },
         [](const RunConfig& c) { return std::string(to_string(c.task)); }},
        {"preset", [](RunConfig& c, const std::string& v) { c.preset = v; },
         [](const RunConfig& c) { return c.preset; }},
        {"bath.kind",
         [](RunConfig& c, const std::string& v) {
             c.bath_kind = parse_enum<BathKind>(
                 v, {{"lorentzian", BathKind::Lorentzian}, {"ohmic", BathKind::OhmicDrude}},
                 "bath kind");
         },
         [](const RunConfig& c) {
             return std::string(c.bath_kind == BathKind::Lorentzian ? "lorentzian" : "ohmic");
         }},
        {"bath.alpha", [](RunConfig& c, const std::string& v) { c.bath_alpha = parse_double(v); },
         [](const RunConfig& c) { return format_double(c.bath_alpha); }},
        {"bath.lambda", [](RunConfig& c, const std::string& v) { c.bath_lambda = parse_double(v); },
         [](const RunConfig& c) { return format_double(c.bath_lambda); }},
        {"bath.omega_c",
         [](RunConfig& c, const std::string& v) { c.bath_omega_c = parse_double(v); },
         [](const RunConfig& c) { return format_double(c.bath_omega_c); }},
        {"numerics.eta_tol", [](RunConfig& c, const std::string& v) { c.eta_tol = parse_double(v); },
         [](const RunConfig& c) { return format_double(c.eta_tol); }},
        {"numerics.eta_max_iter",
         [](RunConfig& c, const std::string& v) { c.eta_max_iter = parse_size(v); },
         [](const RunConfig& c) { return std::to_string(c.eta_max_iter); }},
        {"numerics.eta_scan_points",
         [](RunConfig& c, const std::string& v) { c.eta_scan_points = parse_size(v); },
         [](const RunConfig& c) { return std::to_string(c.eta_scan_points); }},
        {"numerics.quad_rel_tol",
         [](RunConfig& c, const std::string& v) { c.quad_rel_tol = parse_double(v); },
         [](const RunConfig& c) { return format_double(c.quad_rel_tol); }},
        {"numerics.quad_abs_tol",
         [](RunConfig& c, const std::string& v) { c.quad_abs_tol = parse_double(v); },
         [](const RunConfig& c) { return format_double(c.quad_abs_tol); }},
        {"numerics.omega_max",
         [](RunConfig& c, const std::string& v) { c.omega_max = parse_double(v); },
         [](const RunConfig& c) { return format_double(c.omega_max); }},
        {"numerics.pv_delta_scale",
         [](RunConfig& c, const std::string& v) { c.pv_delta_scale = parse_double(v); },
         [](const RunConfig& c) { return format_double(c.pv_delta_scale); }},
        {"numerics.pv_tail_eps",
         [](RunConfig& c, const std::string& v) { c.pv_tail_eps = parse_double(v); },
         [](const RunConfig& c) { return format_double(c.pv_tail_eps); }},
        {"numerics.pole_scan_points",
         [](RunConfig& c, const std::string& v) { c.pole_scan_points = parse_size(v); },
         [](const RunConfig& c) { return std::to_string(c.pole_scan_points); }},
        {"numerics.pole_tol",
         [](RunConfig& c, const std::string& v) { c.pole_tol = parse_double(v); },
         [](const RunConfig& c) { return format_double(c.pole_tol); }},
        {"dynamics.t_min", [](RunConfig& c, const std::string& v) { c.t_min = parse_double(v); },
         [](const RunConfig& c) { return format_double(c.t_min); }},
        {"dynamics.t_max", [](RunConfig& c, const std::string& v) { c.t_max = parse_double(v); },
         [](const RunConfig& c) { return format_double(c.t_max); }},
        {"dynamics.t_step", [](RunConfig& c, const std::string& v) { c.t_step = parse_double(v); },
         [](const RunConfig& c) { return format_double(c.t_step); }},
        {"zeno.tau_min", [](RunConfig& c, const std::string& v) { c.tau_min = parse_double(v); },
         [](const RunConfig& c) { return format_double(c.tau_min); }},
        {"zeno.tau_max", [](RunConfig& c, const std::string& v) { c.tau_max = parse_double(v); },
         [](const RunConfig& c) { return format_double(c.tau_max); }},
        {"zeno.tau_points",
         [](RunConfig& c, const std::string& v) { c.tau_points = parse_size(v); },
         [](const RunConfig& c) { return std::to_string(c.tau_points); }},
        {"zeno.ratio_tol",
         [](RunConfig& c, const std::string& v) { c.ratio_tol = parse_double(v); },
         [](const RunConfig& c) { return format_double(c.ratio_tol); }},
        {"spectrum.omega_min",
         [](RunConfig& c, const std::string& v) { c.spectrum_omega_min = parse_double(v); },
         [](const RunConfig& c) { return format_double(c.spectrum_omega_min); }},
        {"spectrum.omega_max",
         [](RunConfig& c, const std::string& v) { c.spectrum_omega_max = parse_double(v); },
         [](const RunConfig& c) { return format_double(c.spectrum_omega_max); }},
        {"spectrum.points",
         [](RunConfig& c, const std::string& v) { c.spectrum_points = parse_size(v); },
         [](const RunConfig& c) { return std::to_string(c.spectrum_points); }},
        {"oracle.n_modes",
         [](RunConfig& c, const std::string& v) { c.oracle_modes = parse_size(v); },
         [](const RunConfig& c) { return std::to_string(c.oracle_modes); }},
        {"oracle.omega_max",
         [](RunConfig& c, const std::string& v) { c.oracle_omega_max = parse_double(v); },
         [](const RunConfig& c) { return format_double(c.oracle_omega_max); }},
        {"oracle.scheme",
         [](RunConfig& c, const std::string& v) {
             c.oracle_scheme = parse_enum<Scheme>(v,
                                                  {{"auto", Scheme::Auto},
                                                   {"linear", Scheme::Linear},
                                                   {"logarithmic", Scheme::Logarithmic}},
                                                  "oracle scheme");
         },
         [](const RunConfig& c) { return std::string(to_string(c.oracle_scheme)); }},
        {"oracle.mode",
         [](RunConfig& c, const std::string& v) {
             c.oracle_mode = parse_enum<OracleMode>(
                 v, {{"dynamics", OracleMode::Dynamics}, {"zeno", OracleMode::Zeno}},
                 "oracle mode");
         },
         [](const RunConfig& c) { return std::string(to_string(c.oracle_mode)); }},
        {"grid.alpha", [](RunConfig& c, const std::string& v) { c.grid.alpha = parse_list(v); },
         [](const RunConfig& c) { return format_list(c.grid.alpha); }},
        {"grid.lambda", [](RunConfig& c, const std::string& v) { c.grid.lambda = parse_list(v); },
         [](const RunConfig& c) { return format_list(c.grid.lambda); }},
        {"grid.omega_c", [](RunConfig& c, const std::string& v) { c.grid.omega_c = parse_list(v); },
         [](const RunConfig& c) { return format_list(c.grid.omega_c); }},
        {"grid.tau", [](RunConfig& c, const std::string& v) { c.grid.tau = parse_list(v); },
         [](const RunConfig& c) { return format_list(c.grid.tau); }},
        {"grid.t", [](RunConfig& c, const std::string& v) { c.grid.t = parse_list(v); },
         [](const RunConfig& c) { return format_list(c.grid.t); }},
        {"output.path", [](RunConfig& c, const std::string& v) { c.out_path = v; },
         [](const RunConfig& c) { return c.out_path; }},
        {"output.format",
         [](RunConfig& c, const std::string& v) {
             c.format = parse_enum<OutputFormat>(
                 v, {{"csv", OutputFormat::Csv}, {"json", OutputFormat::Json}}, "output format");
         },
         [](const RunConfig& c) { return std::string(to_string(c.format)); }},
        {"parallelism.jobs",
         [](RunConfig& c, const std::string& v) {
             c.jobs = static_cast<unsigned>(std::max<std::size_t>(1, parse_size(v)));
         },
         [](const RunConfig& c) { return std::to_string(c.jobs); }},
    };
    return keys;
}

const Key* find_key(const std::string& name) {
    for (const Key& k : key_table())
        if (name == k.name) return &k;
    return nullptr;
}

} // namespace

const char* to_string(Task t) {
    switch (t) {
        case Task::Eta: return "eta";
        case Task::Spectrum: return "spectrum";
        case Task::Dynamics: return "dynamics";
        case Task::Zeno: return "zeno";
        case Task::Oracle: return "oracle";
        default: return "reproduce";
    }
}

const char* to_string(OutputFormat f) { return f == OutputFormat::Csv ? "csv" : "json"; }

const char* to_string(OracleMode m) { return m == OracleMode::Dynamics ? "dynamics" : "zeno"; }

const char* to_string(Scheme s) {
    switch (s) {
        case Scheme::Linear: return "linear";
        case Scheme::Logarithmic: return "logarithmic";
        default: return "auto";
    }
}

BathSpec RunConfig::bath() const {
    return bath_kind == BathKind::Lorentzian
               ? BathSpec::lorentzian(bath_alpha, bath_lambda)
               : BathSpec::ohmic_drude(bath_alpha, bath_omega_c);
}

std::vector<double> RunConfig::time_grid() const {
    if (!grid.t.empty()) return grid.t;
    if (!(t_step > 0.0) || t_max < t_min)
        throw ConfigError("dynamics grid: need t_step > 0 and t_max >= t_min");
    std::vector<double> ts;
    const auto n = static_cast<std::size_t>(std::floor((t_max - t_min) / t_step + 1e-9));
    ts.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) ts.push_back(t_min + t_step * static_cast<double>(i));
    return ts;
}

std::vector<double> RunConfig::tau_grid() const {
    if (!grid.tau.empty()) return grid.tau;
    if (!(tau_min > 0.0) || tau_max <= tau_min || tau_points < 2)
        throw ConfigError("zeno grid: need 0 < tau_min < tau_max and tau_points >= 2");
    std::vector<double> taus(tau_points);
    const double lo = std::log(tau_min), hi = std::log(tau_max);
    for (std::size_t i = 0; i < tau_points; ++i)
        taus[i] = std::exp(lo + (hi - lo) * static_cast<double>(i) /
                                    static_cast<double>(tau_points - 1));
    return taus;
}

RunConfig parse_config(const std::string& text) {
    RunConfig config;
    std::stringstream ss(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) +
                              ": expected 'key = value', got '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const Key* k = find_key(key);
        if (!k)
            throw ConfigError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        try {
            k->set(config, value);
        } catch (const ConfigError& e) {
            throw ConfigError("line " + std::to_string(lineno) + ", key '" + key +
                              "': " + e.what());
        }
    }
    return config;
}

void apply_override(RunConfig& config, const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos)
        throw ConfigError("override must be key=value, got '" + assignment + "'");
    const std::string key = trim(assignment.substr(0, eq));
    const std::string value = trim(assignment.substr(eq + 1));
    const Key* k = find_key(key);
    if (!k) throw ConfigError("unknown key '" + key + "'");
    k->set(config, value);
}

std::string emit_config(const RunConfig& config) {
    std::string out;
    for (const Key& k : key_table()) {
        out += k.name;
        out += " = ";
        out += k.get(config);
        out += "\n";
    }
    return out;
}

} // namespace zenobath

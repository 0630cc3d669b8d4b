#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "zenobath/bath.hpp"
#include "zenobath/oracle.hpp"

namespace zenobath {

enum class Task { Eta, Spectrum, Dynamics, Zeno, Oracle, Reproduce };
enum class OutputFormat { Csv, Json };
enum class OracleMode { Dynamics, Zeno };

const char* to_string(Task t);
const char* to_string(OutputFormat f);
const char* to_string(OracleMode m);
const char* to_string(Scheme s);

// Optional sweep axes. alpha/lambda/omega_c are Cartesian grid axes over
// bath parameters; tau and t replace the task's sampling grid.
struct GridSpec {
    std::vector<double> alpha;
    std::vector<double> lambda;
    std::vector<double> omega_c;
    std::vector<double> tau;
    std::vector<double> t;

    bool operator==(const GridSpec&) const = default;
};

// Complete description of one run. Every field has a default; an empty
// config plus a preset name is a complete run.
struct RunConfig {
    Task task = Task::Eta;
    std::string preset;  // fig1 | fig2a | fig2b | fig3 | fig4, or empty

    BathKind bath_kind = BathKind::Lorentzian;
    double bath_alpha = 0.01;
    double bath_lambda = 0.09;
    double bath_omega_c = 10.0;

    double eta_tol = 1e-12;
    std::size_t eta_max_iter = 10000;
    std::size_t eta_scan_points = 1000;
    double quad_rel_tol = 1e-6;
    double quad_abs_tol = 1e-10;
    double omega_max = 100.0;
    double pv_delta_scale = 1e-3;
    double pv_tail_eps = 1e-10;
    std::size_t pole_scan_points = 1000;
    double pole_tol = 1e-10;

    double t_min = 0.0;
    double t_max = 50.0;
    double t_step = 0.05;

    double tau_min = 0.01;
    double tau_max = 20.0;
    std::size_t tau_points = 200;
    double ratio_tol = 1e-3;

    double spectrum_omega_min = 0.01;
    double spectrum_omega_max = 3.0;
    std::size_t spectrum_points = 300;

    std::size_t oracle_modes = 2000;
    double oracle_omega_max = 200.0;
    Scheme oracle_scheme = Scheme::Auto;
    OracleMode oracle_mode = OracleMode::Dynamics;

    GridSpec grid;

    std::string out_path;  // empty = stdout
    OutputFormat format = OutputFormat::Csv;
    unsigned jobs = 1;

    bool operator==(const RunConfig&) const = default;

    BathSpec bath() const;
    std::vector<double> time_grid() const;
    std::vector<double> tau_grid() const;
};

// Flat `section.key = value` documents with `#` comments. Unknown keys,
// syntax errors (with line numbers) and type mismatches all throw
// ConfigError.
RunConfig parse_config(const std::string& text);

// Single `key=value` override, same key space as the document format.
void apply_override(RunConfig& config, const std::string& assignment);

// Inverse of parse_config: parse_config(emit_config(c)) == c.
std::string emit_config(const RunConfig& config);

} // namespace zenobath

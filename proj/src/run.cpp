#include "zenobath/run.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>

#include "zenobath/damped_fit.hpp"
#include "zenobath/dynamics.hpp"
#include "zenobath/errors.hpp"
#include "zenobath/presets.hpp"
#include "zenobath/renorm.hpp"
#include "zenobath/self_energy.hpp"
#include "zenobath/thread_pool.hpp"
#include "zenobath/version.hpp"
#include "zenobath/zeno.hpp"

namespace zenobath {

namespace {

FixedPointOptions eta_options(const RunConfig& c) {
    FixedPointOptions o;
    o.tol = c.eta_tol;
    o.max_iterations = c.eta_max_iter;
    o.scan_points = c.eta_scan_points;
    return o;
}

DynamicsSettings dynamics_settings(const RunConfig& c, unsigned jobs) {
    DynamicsSettings s;
    s.omega_max = c.omega_max;
    s.rel_tol = c.quad_rel_tol;
    s.abs_tol = c.quad_abs_tol;
    s.pole_scan_points = c.pole_scan_points;
    s.pole_tol = c.pole_tol;
    s.jobs = jobs;
    return s;
}

ZenoSettings zeno_settings(const RunConfig& c, unsigned jobs) {
    ZenoSettings s;
    s.omega_max = c.omega_max;
    s.rel_tol = std::min(c.quad_rel_tol, 1e-8);
    s.abs_tol = std::min(c.quad_abs_tol, 1e-13);
    s.ratio_tol = c.ratio_tol;
    s.jobs = jobs;
    return s;
}

void run_eta(const RunConfig& c, ResultEnvelope& e) {
    const Renormalization ren = solve_eta(c.bath(), eta_options(c));
    e.scalars = {{"eta", format_number(ren.eta)},
                 {"residual", format_number(ren.residual)},
                 {"iterations", std::to_string(ren.iterations)},
                 {"method", ren.method},
                 {"unique", ren.unique ? "true" : "false"}};
}

void run_spectrum(const RunConfig& c, ResultEnvelope& e) {
    const BathSpec bath = c.bath();
    const Renormalization ren = solve_eta(bath, eta_options(c));
    if (!(c.spectrum_omega_min > 0.0) || c.spectrum_omega_max <= c.spectrum_omega_min ||
        c.spectrum_points < 2)
        throw ConfigError("spectrum grid: need 0 < omega_min < omega_max, points >= 2");
    e.scalars = {{"eta", format_number(ren.eta)}};
    e.table.columns = {"omega", "J", "R", "Gamma", "f"};
    for (std::size_t i = 0; i < c.spectrum_points; ++i) {
        const double w = c.spectrum_omega_min +
                         (c.spectrum_omega_max - c.spectrum_omega_min) *
                             static_cast<double>(i) / static_cast<double>(c.spectrum_points - 1);
        e.table.rows.push_back({format_number(w), format_number(spectral_density(bath, w)),
                                format_number(level_shift(bath, ren.eta, w)),
                                format_number(decay_width(bath, ren.eta, w)),
                                format_number(interaction_f(w, ren.eta))});
    }
}

void run_dynamics(const RunConfig& c, ResultEnvelope& e, unsigned jobs) {
    const DynamicsSeries series = sigma_x_series(c.bath(), c.time_grid(),
                                                 dynamics_settings(c, jobs));
    e.scalars = {{"eta", format_number(series.eta)},
                 {"omega0", format_number(series.omega0)},
                 {"gamma_pole", format_number(series.gamma_pole)},
                 {"shift", to_string(series.shift)}};
    e.table.columns = {"t", "sigma_x"};
    for (std::size_t i = 0; i < series.times.size(); ++i)
        e.table.rows.push_back(
            {format_number(series.times[i]), format_number(series.values[i])});
}

void run_zeno(const RunConfig& c, ResultEnvelope& e, unsigned jobs) {
    const ZenoCurve curve = zeno_scan(c.bath(), c.tau_grid(), zeno_settings(c, jobs));
    e.scalars = {{"eta", format_number(curve.eta)},
                 {"gamma0", format_number(curve.gamma0)}};
    e.table.columns = {"tau", "gamma", "gamma_rwa", "gamma0", "ratio", "ratio_rwa", "regime"};
    for (std::size_t i = 0; i < curve.taus.size(); ++i) {
        const double ratio_rwa = curve.gamma0 > 0.0 ? curve.gamma_rwa[i] / curve.gamma0 : 0.0;
        e.table.rows.push_back({format_number(curve.taus[i]), format_number(curve.gamma[i]),
                                format_number(curve.gamma_rwa[i]), format_number(curve.gamma0),
                                format_number(curve.ratio[i]), format_number(ratio_rwa),
                                to_string(curve.regime[i])});
    }
}

void run_oracle(const RunConfig& c, ResultEnvelope& e, unsigned jobs) {
    const BathSpec bath = c.bath();
    if (bath.zero_coupling())
        throw ConfigError("oracle: zero-coupling bath has no modes to discretize");
    const DiscreteBath disc = discretize(bath, c.oracle_modes, c.oracle_omega_max,
                                         c.oracle_scheme);
    const OracleSolver solver(disc);
    const Renormalization ren = solve_eta(bath, eta_options(c));
    const double t_rec = disc.recurrence_time();
    e.scalars = {{"eta", format_number(ren.eta)},
                 {"eta_oracle", format_number(solver.eta())},
                 {"n_modes", std::to_string(disc.size())},
                 {"recurrence_time", format_number(t_rec)}};

    if (c.oracle_mode == OracleMode::Dynamics) {
        const std::vector<double> times = c.time_grid();
        const DynamicsSeries series = sigma_x_series(bath, times, dynamics_settings(c, jobs));
        const std::vector<double> oracle = solver.sigma_x(times);
        double max_dev = 0.0;
        e.table.columns = {"t", "sigma_x", "sigma_x_oracle", "deviation"};
        for (std::size_t i = 0; i < times.size(); ++i) {
            const double dev = std::fabs(series.values[i] - oracle[i]);
            if (times[i] < t_rec) max_dev = std::max(max_dev, dev);
            e.table.rows.push_back({format_number(times[i]), format_number(series.values[i]),
                                    format_number(oracle[i]), format_number(dev)});
        }
        e.scalars.emplace_back("omega0", format_number(series.omega0));
        e.scalars.emplace_back("max_deviation_in_window", format_number(max_dev));
    } else {
        // Both survival routes run per point; keep the default grid small.
        std::vector<double> taus = c.grid.tau;
        if (taus.empty()) taus = default_tau_grid(16, 0.1, 5.0);
        const ZenoSettings zs = zeno_settings(c, 1);
        std::vector<std::array<double, 3>> rows(taus.size());
        parallel_for_indexed(taus.size(), jobs, [&](std::size_t i) {
            const double gt = gamma_tau(bath, ren.eta, taus[i], zs);
            const double go = solver.gamma(taus[i]);
            const double dev = gt != 0.0 ? std::fabs(go - gt) / std::fabs(gt)
                                         : std::fabs(go);
            rows[i] = {gt, go, dev};
        });
        double max_dev = 0.0;
        e.table.columns = {"tau", "gamma", "gamma_oracle", "deviation"};
        for (std::size_t i = 0; i < taus.size(); ++i) {
            max_dev = std::max(max_dev, rows[i][2]);
            e.table.rows.push_back({format_number(taus[i]), format_number(rows[i][0]),
                                    format_number(rows[i][1]), format_number(rows[i][2])});
        }
        e.scalars.emplace_back("max_relative_deviation", format_number(max_dev));
    }
}

ResultEnvelope run_case(const RunConfig& c, const std::string& label, unsigned jobs) {
    ResultEnvelope e;
    e.config = c;
    e.version = kVersion;
    e.label = label;
    e.warnings = validate(c.bath());
    const auto start = std::chrono::steady_clock::now();
    switch (c.task) {
        case Task::Eta: run_eta(c, e); break;
        case Task::Spectrum: run_spectrum(c, e); break;
        case Task::Dynamics: run_dynamics(c, e, jobs); break;
        case Task::Zeno: run_zeno(c, e, jobs); break;
        case Task::Oracle: run_oracle(c, e, jobs); break;
        default:
            throw ConfigError("reproduce requires a preset name");
    }
    e.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return e;
}

} // namespace

ResultEnvelope run_task(const RunConfig& config) {
    return run_case(config, to_string(config.task), config.jobs);
}

std::vector<ResultEnvelope> run(const RunConfig& config) {
    // Figure presets fix both baths and the task; grids do not apply.
    if (config.task == Task::Reproduce || !config.preset.empty()) {
        if (config.preset.empty())
            throw ConfigError("reproduce requires a preset name");
        const std::vector<PresetCase> cases = expand_preset(config.preset);
        std::vector<ResultEnvelope> out(cases.size());
        parallel_for_indexed(cases.size(), config.jobs, [&](std::size_t i) {
            RunConfig cell = config;
            cell.task = cases[i].task;
            cell.bath_kind = cases[i].kind;
            cell.bath_alpha = cases[i].alpha;
            if (cases[i].kind == BathKind::Lorentzian)
                cell.bath_lambda = cases[i].scale;
            else
                cell.bath_omega_c = cases[i].scale;
            out[i] = run_case(cell, cases[i].label, 1);
        });
        return out;
    }

    const bool has_grid =
        !config.grid.alpha.empty() || !config.grid.lambda.empty() || !config.grid.omega_c.empty();
    if (!has_grid) return {run_task(config)};

    std::vector<double> alphas = config.grid.alpha;
    if (alphas.empty()) alphas = {config.bath_alpha};
    std::vector<double> scales = config.bath_kind == BathKind::Lorentzian
                                     ? config.grid.lambda
                                     : config.grid.omega_c;
    if (scales.empty())
        scales = {config.bath_kind == BathKind::Lorentzian ? config.bath_lambda
                                                           : config.bath_omega_c};

    const char* scale_name = config.bath_kind == BathKind::Lorentzian ? "lambda" : "omega_c";
    struct Cell {
        double alpha, scale;
    };
    std::vector<Cell> cells;
    for (double a : alphas)
        for (double s : scales) cells.push_back({a, s});

    std::vector<ResultEnvelope> out(cells.size());
    parallel_for_indexed(cells.size(), config.jobs, [&](std::size_t i) {
        RunConfig cell = config;
        cell.bath_alpha = cells[i].alpha;
        if (config.bath_kind == BathKind::Lorentzian)
            cell.bath_lambda = cells[i].scale;
        else
            cell.bath_omega_c = cells[i].scale;
        char label[96];
        std::snprintf(label, sizeof label, "%s[alpha=%.17g,%s=%.17g]", to_string(config.task),
                      cells[i].alpha, scale_name, cells[i].scale);
        try {
            out[i] = run_case(cell, label, 1);
        } catch (const Error& err) {
            out[i].config = cell;
            out[i].version = kVersion;
            out[i].label = label;
            out[i].error = err.what();
        }
    });

    bool any_ok = false;
    for (const auto& e : out) any_ok = any_ok || e.error.empty();
    if (!any_ok) throw NumericalError("all grid cells failed; first: " + out.front().error);
    return out;
}

} // namespace zenobath

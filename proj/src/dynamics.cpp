#include "zenobath/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "zenobath/errors.hpp"
#include "zenobath/quadrature.hpp"
#include "zenobath/self_energy.hpp"
#include "zenobath/thread_pool.hpp"

namespace zenobath {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

ShiftClass classify_shift(double omega0, double tol) {
    if (!(omega0 > 0.0)) throw ConfigError("classify_shift: omega0 must be > 0");
    if (omega0 > 1.0 + tol) return ShiftClass::Blue;
    if (omega0 < 1.0 - tol) return ShiftClass::Red;
    return ShiftClass::None;
}

const char* to_string(ShiftClass s) {
    switch (s) {
        case ShiftClass::Blue: return "Blue";
        case ShiftClass::Red: return "Red";
        default: return "None";
    }
}

Pole find_pole(const BathSpec& bath, double eta, const DynamicsSettings& s) {
    auto p = [&](double w) { return w - eta - level_shift(bath, eta, w); };

    const std::size_t n = s.pole_scan_points;
    std::vector<std::pair<double, double>> brackets;
    double prev_w = s.omega_max / static_cast<double>(n);
    double prev_v = p(prev_w);
    for (std::size_t i = 2; i <= n; ++i) {
        const double w = s.omega_max * static_cast<double>(i) / static_cast<double>(n);
        const double v = p(w);
        if ((prev_v < 0.0) != (v < 0.0) || v == 0.0) brackets.emplace_back(prev_w, w);
        prev_w = w;
        prev_v = v;
    }
    if (brackets.empty())
        throw PoleNotFoundError("find_pole: no sign change of w - eta - R(w) on (0, " +
                                std::to_string(s.omega_max) + ")");

    std::vector<double> roots;
    for (auto [lo, hi] : brackets) {
        double flo = p(lo);
        while (hi - lo > s.pole_tol) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            const double fm = p(mid);
            if ((fm < 0.0) == (flo < 0.0)) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        roots.push_back(0.5 * (lo + hi));
    }
    const double omega0 = *std::min_element(roots.begin(), roots.end(), [eta](double x, double y) {
        return std::fabs(x - eta) < std::fabs(y - eta);
    });
    return {omega0, decay_width(bath, eta, omega0), roots.size() > 1};
}

double sigma_x_at(const BathSpec& bath, double eta, const Pole& pole, double t,
                  const DynamicsSettings& s) {
    auto weight = [&](double w) {
        const double G = decay_width(bath, eta, w);
        const double d = w - eta - level_shift(bath, eta, w);
        return G / (kPi * (d * d + G * G));
    };
    auto integrand = [&](double w) {
        if (w <= 0.0) return 0.0;  // J(0) = 0, integrand vanishes at the origin
        return weight(w) * std::cos(w * t);
    };

    const double W = std::max(20.0 * pole.gamma, 0.05);
    const double lo_edge = std::max(pole.omega0 - W, 0.0);
    const double hi_edge = std::min(pole.omega0 + W, s.omega_max);
    const double cap = t > 0.0 ? kPi / (4.0 * t) : std::numeric_limits<double>::infinity();

    QuadOptions opts;
    opts.rel_tol = s.rel_tol;
    opts.abs_tol = s.abs_tol;
    opts.max_width = cap;
    opts.breakpoints = {peak_frequency(bath), eta};

    double value = 0.0;
    try {
        if (lo_edge > 0.0) value += integrate(integrand, 0.0, lo_edge, opts).value;
        QuadOptions res = opts;
        // The resonance is a near-Lorentzian of half-width gamma_pole; aim
        // panels at it regardless of t.
        res.max_width = std::min(cap, std::max(pole.gamma, W / 64.0));
        res.breakpoints = {pole.omega0};
        value += integrate(integrand, lo_edge, hi_edge, res).value;
        if (hi_edge < s.omega_max)
            value += integrate(integrand, hi_edge, s.omega_max, opts).value;
    } catch (const NumericalError& e) {
        throw NumericalError("sigma_x(t=" + std::to_string(t) + "): " + e.what());
    }
    return value;
}

DynamicsSeries sigma_x_series(const BathSpec& bath, const std::vector<double>& times,
                              const DynamicsSettings& s) {
    for (double t : times)
        if (t < 0.0) throw ConfigError("sigma_x_series: times must be >= 0");

    DynamicsSeries out;
    out.times = times;
    out.values.resize(times.size());

    if (bath.zero_coupling()) {
        // No bath: the spectral weight is a unit mass at w = Delta = 1.
        out.eta = 1.0;
        out.omega0 = 1.0;
        out.gamma_pole = 0.0;
        out.shift = ShiftClass::None;
        for (std::size_t i = 0; i < times.size(); ++i) out.values[i] = std::cos(times[i]);
        return out;
    }

    const Renormalization ren = solve_eta(bath);
    out.eta = ren.eta;
    const Pole pole = find_pole(bath, ren.eta, s);
    out.omega0 = pole.omega0;
    out.gamma_pole = pole.gamma;
    out.shift = classify_shift(pole.omega0);

    parallel_for_indexed(times.size(), s.jobs, [&](std::size_t i) {
        out.values[i] = sigma_x_at(bath, ren.eta, pole, times[i], s);
    });
    return out;
}

} // namespace zenobath

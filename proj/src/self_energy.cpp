#include "zenobath/self_energy.hpp"

#include <algorithm>
#include <cmath>

#include "zenobath/errors.hpp"
#include "zenobath/quadrature.hpp"

namespace zenobath {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double decay_width(const BathSpec& bath, double eta, double omega) {
    const double d = omega + eta;
    return kPi * eta * eta * spectral_density(bath, omega) / (d * d);
}

double level_shift(const BathSpec& bath, double eta, double omega) {
    if (!(omega > 0.0))
        throw ConfigError("level_shift: omega must be > 0 (log divergence at 0), got " +
                          std::to_string(omega));
    if (bath.zero_coupling()) return 0.0;
    const double a = bath.family_coupling();
    const double l = bath.family_scale();
    const double l2 = l * l, e2 = eta * eta, w = omega;
    const double s = l2 + e2;
    const double t1 = w * std::log(w) / ((eta + w) * (eta + w) * (l2 + w * w));
    const double t2 = (kPi * l * (l2 + eta * (2.0 * w - eta)) -
                       2.0 * (l2 * (2.0 * eta - w) + e2 * w) * std::log(l)) /
                      (2.0 * s * s * (l2 + w * w));
    const double t3 = (-(eta + w) * s + (2.0 * e2 * eta + (e2 - l2) * w) * std::log(eta)) /
                      (s * s * (eta + w) * (eta + w));
    return 2.0 * a * e2 * (t1 + t2 + t3);
}

double pv_integral(const BathSpec& bath, double eta, double omega, const PvSettings& s) {
    if (!(omega > 0.0)) throw ConfigError("pv_integral: omega must be > 0");
    if (bath.zero_coupling()) return 0.0;

    auto g = [&](double wp) {
        const double d = wp + eta;
        return eta * eta * spectral_density(bath, wp) / (d * d);
    };

    const double delta = std::min(s.delta_scale * std::max(omega, 1.0), 0.5 * omega);
    // Tail envelope: g ~ 2 a_eff eta^2 / w'^3, so the truncated mass beyond
    // Omega_max is about 2 a_eff eta^2 / (3 Omega_max^3) after the 1/(w-w')
    // factor is bounded by ~1.
    const double a_eff = bath.family_coupling();
    const double omega_max =
        std::max({50.0, 2.0 * omega + 10.0, 10.0 * bath.family_scale(),
                  std::cbrt(2.0 * a_eff * eta * eta / (3.0 * s.tail_eps))});

    QuadOptions opts;
    opts.rel_tol = s.rel_tol;
    opts.abs_tol = s.abs_tol;

    double value = 0.0;
    if (omega - delta > 0.0) {
        QuadOptions left = opts;
        left.breakpoints = {bath.family_scale(), eta, 0.5 * omega};
        value += integrate([&](double wp) { return g(wp) / (omega - wp); }, 0.0,
                           omega - delta, left)
                     .value;
    }
    QuadOptions right = opts;
    right.breakpoints = {2.0 * omega, bath.family_scale(), eta, 10.0, omega_max / 10.0};
    value += integrate([&](double wp) { return g(wp) / (omega - wp); }, omega + delta,
                       omega_max, right)
                 .value;

    // Regularized core: the symmetric PV of the constant g(omega) vanishes,
    // leaving a smooth integrand with limit -g'(omega) at the pole.
    const double g0 = g(omega);
    auto core = [&](double wp) { return (g(wp) - g0) / (omega - wp); };
    value += integrate(core, omega - delta, omega, opts).value;
    value += integrate(core, omega, omega + delta, opts).value;
    return value;
}

} // namespace zenobath

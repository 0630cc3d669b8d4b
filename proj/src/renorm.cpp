#include "zenobath/renorm.hpp"

#include <cmath>

#include "zenobath/errors.hpp"
#include "zenobath/quadrature.hpp"

namespace zenobath {

double eta_exponent_closed(double a, double l, double eta) {
    const double l2 = l * l, e2 = eta * eta;
    const double s = l2 + e2;
    const double pi = 3.14159265358979323846;
    return a * (pi * l * eta - s + (l2 - e2) * std::log(l / eta)) / (s * s);
}

double eta_exponent_quadrature(const BathSpec& bath, double eta) {
    auto f = [&](double w) { return spectral_density(bath, w) / (2.0 * (w + eta) * (w + eta)); };
    const double l = bath.family_scale();
    const double cut = std::max({10.0, 10.0 * l, 10.0 * eta});
    QuadOptions opts;
    opts.rel_tol = 1e-12;
    opts.abs_tol = 1e-16;
    opts.breakpoints = {l, eta};
    const QuadResult head = integrate(f, 0.0, cut, opts);
    const QuadResult tail = integrate_tail(f, cut, opts);
    return head.value + tail.value;
}

double eta_map(const BathSpec& bath, double eta_trial) {
    if (!(eta_trial > 0.0) || eta_trial > 1.0)
        throw ConfigError("eta_map: eta_trial must be in (0, 1], got " +
                          std::to_string(eta_trial));
    if (bath.zero_coupling()) return 1.0;
    const double expo = bath.kind == BathKind::Lorentzian
                            ? eta_exponent_closed(bath.coupling, bath.scale, eta_trial)
                            : eta_exponent_quadrature(bath, eta_trial);
    return std::exp(-expo);
}

Renormalization solve_eta(const BathSpec& bath, double tol) {
    FixedPointOptions opts;
    opts.tol = tol;
    return solve_eta(bath, opts);
}

Renormalization solve_eta(const BathSpec& bath, const FixedPointOptions& opts) {
    if (!(opts.tol > 0.0)) throw ConfigError("solve_eta: tol must be > 0");
    auto G = [&bath](double x) { return eta_map(bath, x); };
    const UnitFixedPoint fp = solve_unit_fixed_point(G, opts);
    return {fp.value, fp.residual, fp.iterations, fp.method, fp.unique};
}

CouplingWeight coupling_weight(double omega, double eta) {
    const double xi = omega / (omega + eta);
    const double r = eta / (omega + eta);
    return {xi, r * r};
}

} // namespace zenobath

#include "zenobath/zeno.hpp"

#include <algorithm>
#include <cmath>

#include "zenobath/errors.hpp"
#include "zenobath/quadrature.hpp"
#include "zenobath/renorm.hpp"
#include "zenobath/thread_pool.hpp"

namespace zenobath {

namespace {
constexpr double kPi = 3.14159265358979323846;

double gamma_integral(const BathSpec& bath, double eta, double center, double tau, bool rwa,
                      const ZenoSettings& s) {
    if (!(tau > 0.0)) throw ConfigError("gamma: tau must be > 0");
    if (bath.zero_coupling()) return 0.0;

    auto f = [&](double w) {
        const double weight = rwa ? 1.0 : interaction_f(w, eta);
        return 2.0 * kPi * 0.25 * spectral_density(bath, w) * weight * kernel_F(w, center, tau);
    };

    const double period = 2.0 * kPi / tau;
    QuadOptions opts;
    opts.rel_tol = s.rel_tol;
    opts.abs_tol = s.abs_tol;
    // Resolve the F oscillation everywhere and pin the main-lobe zeros.
    opts.max_width = period / 3.0;
    opts.breakpoints = {peak_frequency(bath), center};
    for (int k = 1; k <= 10; ++k) {
        opts.breakpoints.push_back(center + period * k);
        opts.breakpoints.push_back(center - period * k);
    }
    return integrate(f, 0.0, s.omega_max, opts).value;
}

} // namespace

const char* to_string(Regime r) {
    switch (r) {
        case Regime::Zeno: return "Zeno";
        case Regime::AntiZeno: return "AntiZeno";
        default: return "Neutral";
    }
}

double kernel_F(double omega, double center, double tau) {
    if (!(tau > 0.0)) throw ConfigError("kernel_F: tau must be > 0");
    const double x = 0.5 * (center - omega) * tau;
    if (std::fabs(x) < 1e-4) {
        // sin^2(x)/x^2 = 1 - x^2/3 + 2 x^4/45 - ...
        const double x2 = x * x;
        return tau / (2.0 * kPi) * (1.0 - x2 / 3.0 + 2.0 * x2 * x2 / 45.0);
    }
    const double d = center - omega;
    const double sx = std::sin(x);
    return 2.0 * sx * sx / (kPi * d * d * tau);
}

double interaction_f(double omega, double eta) {
    if (omega < 0.0) throw ConfigError("interaction_f: omega must be >= 0");
    const double r = 2.0 * eta / (omega + eta);
    return r * r;
}

double gamma_tau(const BathSpec& bath, double eta, double tau, const ZenoSettings& s) {
    return gamma_integral(bath, eta, eta, tau, false, s);
}

double gamma_rwa_tau(const BathSpec& bath, double tau, const ZenoSettings& s) {
    return gamma_integral(bath, 1.0, 1.0, tau, true, s);
}

double gamma_0(const BathSpec& bath) {
    return 0.5 * kPi * spectral_density(bath, 1.0);
}

double survival_probability(const BathSpec& bath, double tau, std::size_t n,
                            const ZenoSettings& s) {
    if (!(tau > 0.0)) throw ConfigError("survival_probability: tau must be > 0");
    if (n == 0 || bath.zero_coupling()) return 1.0;
    const double eta = solve_eta(bath).eta;
    return std::exp(-gamma_tau(bath, eta, tau, s) * static_cast<double>(n) * tau);
}

ZenoCurve zeno_scan(const BathSpec& bath, const std::vector<double>& taus,
                    const ZenoSettings& s) {
    for (std::size_t i = 0; i < taus.size(); ++i) {
        if (!(taus[i] > 0.0)) throw ConfigError("zeno_scan: taus must be > 0");
        if (i > 0 && taus[i] <= taus[i - 1])
            throw ConfigError("zeno_scan: taus must be strictly increasing");
    }

    ZenoCurve curve;
    curve.taus = taus;
    curve.gamma.resize(taus.size());
    curve.gamma_rwa.resize(taus.size());
    curve.ratio.resize(taus.size());
    curve.regime.resize(taus.size());
    curve.gamma0 = gamma_0(bath);

    if (bath.zero_coupling()) {
        // Degenerate zero-coupling grid: everything is 0, labels Neutral.
        std::fill(curve.gamma.begin(), curve.gamma.end(), 0.0);
        std::fill(curve.gamma_rwa.begin(), curve.gamma_rwa.end(), 0.0);
        std::fill(curve.ratio.begin(), curve.ratio.end(), 0.0);
        std::fill(curve.regime.begin(), curve.regime.end(), Regime::Neutral);
        return curve;
    }

    curve.eta = solve_eta(bath).eta;
    parallel_for_indexed(taus.size(), s.jobs, [&](std::size_t i) {
        curve.gamma[i] = gamma_tau(bath, curve.eta, taus[i], s);
        curve.gamma_rwa[i] = gamma_rwa_tau(bath, taus[i], s);
        const double ratio = curve.gamma[i] / curve.gamma0;
        curve.ratio[i] = ratio;
        if (ratio > 1.0 + s.ratio_tol)
            curve.regime[i] = Regime::AntiZeno;
        else if (ratio < 1.0 - s.ratio_tol)
            curve.regime[i] = Regime::Zeno;
        else
            curve.regime[i] = Regime::Neutral;
    });
    return curve;
}

std::vector<double> default_tau_grid(std::size_t points, double tau_min, double tau_max) {
    std::vector<double> taus(points);
    const double lo = std::log(tau_min), hi = std::log(tau_max);
    for (std::size_t i = 0; i < points; ++i)
        taus[i] = std::exp(lo + (hi - lo) * static_cast<double>(i) /
                                    static_cast<double>(points - 1));
    return taus;
}

} // namespace zenobath

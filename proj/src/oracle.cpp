#include "zenobath/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>

#include <boost/numeric/odeint.hpp>

#include "zenobath/errors.hpp"

namespace zenobath {

namespace {
constexpr double kLogFloor = 1e-6;  // lowest sampled frequency, log scheme
}

double DiscreteBath::recurrence_time() const {
    double dmin = std::numeric_limits<double>::infinity();
    for (std::size_t j = 1; j < omegas.size(); ++j)
        dmin = std::min(dmin, omegas[j] - omegas[j - 1]);
    return 2.0 * 3.14159265358979323846 / dmin;
}

DiscreteBath discretize(const BathSpec& bath, std::size_t n, double omega_max, Scheme scheme) {
    if (n < 2) throw ConfigError("discretize: need n >= 2 modes");
    if (!(omega_max > 0.0)) throw ConfigError("discretize: omega_max must be > 0");
    if (scheme == Scheme::Auto)
        scheme = bath.kind == BathKind::Lorentzian ? Scheme::Logarithmic : Scheme::Linear;

    std::vector<double> edges(n + 1);
    if (scheme == Scheme::Linear) {
        for (std::size_t i = 0; i <= n; ++i)
            edges[i] = omega_max * static_cast<double>(i) / static_cast<double>(n);
    } else {
        edges[0] = 0.0;
        const double lo = std::log(kLogFloor), hi = std::log(omega_max);
        for (std::size_t i = 1; i <= n; ++i)
            edges[i] = std::exp(lo + (hi - lo) * static_cast<double>(i - 1) /
                                         static_cast<double>(n - 1));
    }

    DiscreteBath disc;
    disc.scheme = scheme;
    disc.omega_max = omega_max;
    disc.omegas.resize(n);
    disc.gs.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double mid = 0.5 * (edges[i] + edges[i + 1]);
        disc.omegas[i] = mid;
        disc.gs[i] = std::sqrt(spectral_density(bath, mid) * (edges[i + 1] - edges[i]));
    }
    return disc;
}

UnitFixedPoint oracle_eta(const DiscreteBath& disc, const FixedPointOptions& opts) {
    auto G = [&disc](double eta) {
        double expo = 0.0;
        for (std::size_t j = 0; j < disc.size(); ++j) {
            const double d = disc.omegas[j] + eta;
            expo += disc.gs[j] * disc.gs[j] / (2.0 * d * d);
        }
        return std::exp(-expo);
    };
    return solve_unit_fixed_point(G, opts);
}

OracleSolver::OracleSolver(DiscreteBath disc) : disc_(std::move(disc)) {
    for (std::size_t j = 1; j < disc_.size(); ++j)
        if (disc_.omegas[j] <= disc_.omegas[j - 1])
            throw ConfigError("OracleSolver: mode frequencies must be strictly increasing");
    eta_ = oracle_eta(disc_).value;
    const std::size_t n = disc_.size();
    couplings_.resize(n);
    diag_.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        couplings_[j] = eta_ * disc_.gs[j] / (disc_.omegas[j] + eta_);
        diag_[j] = disc_.omegas[j] - 0.5 * eta_;
    }
    solve_secular();
}

// Secular equation of the arrowhead matrix: the eigenvalues are the roots of
//   phi(E) = E - head - sum_j V_j^2/(E - d_j),
// one in each interval of the interlacing sequence. phi is strictly
// increasing between poles, so a safeguarded Newton in the pole-shifted
// coordinate converges without cancellation.
void OracleSolver::solve_secular() {
    const std::size_t n = diag_.size();
    const double head = 0.5 * eta_;
    double vnorm2 = 0.0;
    for (double v : couplings_) vnorm2 += v * v;
    const double spread = std::sqrt(vnorm2) + 1.0;

    evals_.resize(n + 1);
    x2_.resize(n + 1);
    std::vector<std::size_t> anchor(n + 1);  // index of the pole u is measured from
    std::vector<double> offset(n + 1);       // E = d[anchor] + offset

    // Root in (lo_bound, d_0], anchored at d_0 with negative offset; roots in
    // (d_j, d_{j+1}) anchored at d_j; root above d_{n-1} anchored at d_{n-1}.
    for (std::size_t r = 0; r <= n; ++r) {
        std::size_t j = r == 0 ? 0 : r - 1;
        double ulo, uhi;  // offset bracket, relative to d_j
        if (r == 0) {
            ulo = -(std::max(0.0, diag_[0] - std::min(diag_[0], head)) + spread);
            uhi = 0.0;
        } else if (r == n) {
            j = n - 1;
            ulo = 0.0;
            uhi = std::max(0.0, head - diag_[n - 1]) + spread;
        } else {
            ulo = 0.0;
            uhi = diag_[j + 1] - diag_[j];
        }

        auto phi = [&](double u, double& dphi) {
            const double E = diag_[j] + u;
            double s = 0.0, ds = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                const double denom = (diag_[j] - diag_[k]) + u;
                const double q = couplings_[k] * couplings_[k] / denom;
                s += q;
                ds += q / denom;
            }
            dphi = 1.0 + ds;  // d/du [u + d_j - head - sum V^2/(...)]
            return E - head - s;
        };

        // Bisection bracket with Newton acceleration. phi -> -inf at the
        // left pole and +inf at the right pole (interior intervals).
        double lo = ulo, hi = uhi;
        double u = 0.5 * (lo + hi);
        for (int it = 0; it < 200; ++it) {
            double dphi;
            const double f = phi(u, dphi);
            if (f < 0.0)
                lo = u;
            else
                hi = u;
            double unew = u - f / dphi;
            if (!(unew > lo) || !(unew < hi)) unew = 0.5 * (lo + hi);
            if (std::fabs(unew - u) <= 1e-16 * (std::fabs(u) + std::fabs(diag_[j])) ||
                unew == u) {
                u = unew;
                break;
            }
            u = unew;
        }
        anchor[r] = j;
        offset[r] = u;
        evals_[r] = diag_[j] + u;
    }

    // Weights from the accurate pole-shifted differences:
    // x^2 = 1 / (1 + sum_k V_k^2/(E - d_k)^2).
    for (std::size_t r = 0; r <= n; ++r) {
        const std::size_t j = anchor[r];
        double s = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const double denom = (diag_[j] - diag_[k]) + offset[r];
            const double q = couplings_[k] / denom;
            s += q * q;
        }
        x2_[r] = 1.0 / (1.0 + s);
    }
}

std::vector<double> OracleSolver::sigma_x(const std::vector<double>& times) const {
    std::vector<double> out(times.size());
    const double shift = 0.5 * eta_;
    for (std::size_t i = 0; i < times.size(); ++i) {
        double s = 0.0;
        for (std::size_t r = 0; r < evals_.size(); ++r)
            s += x2_[r] * std::cos((evals_[r] + shift) * times[i]);
        out[i] = s;
    }
    return out;
}

double OracleSolver::survival_eigen(double tau) const {
    std::complex<double> z = 0.0;
    for (std::size_t r = 0; r < evals_.size(); ++r)
        z += x2_[r] * std::exp(std::complex<double>(0.0, -evals_[r] * tau));
    return std::norm(z);
}

double OracleSolver::survival_ode(double tau) const {
    using state_type = std::vector<std::complex<double>>;
    namespace ode = boost::numeric::odeint;
    const std::size_t n = diag_.size();
    const std::complex<double> mi(0.0, -1.0);

    // Amplitude equations in the interaction picture:
    //   chi'  = -i sum_j V_j b_j exp(-i (omega_j - eta) t)
    //   b_j'  = -i V_j chi  exp(+i (omega_j - eta) t)
    auto rhs = [&](const state_type& y, state_type& dy, double t) {
        std::complex<double> acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double ph = (disc_.omegas[j] - eta_) * t;
            const std::complex<double> e(std::cos(ph), -std::sin(ph));
            acc += couplings_[j] * y[j + 1] * e;
            dy[j + 1] = mi * couplings_[j] * y[0] * std::conj(e);
        }
        dy[0] = mi * acc;
    };

    state_type y(n + 1, 0.0);
    y[0] = 1.0;
    auto stepper = ode::make_controlled(1e-11, 1e-11, ode::runge_kutta_dopri5<state_type>());
    ode::integrate_adaptive(stepper, rhs, y, 0.0, tau, std::min(1e-3, tau));
    return std::norm(y[0]);
}

double OracleSolver::survival(double tau) const {
    if (!(tau > 0.0)) throw ConfigError("survival: tau must be > 0");
    const double a = survival_eigen(tau);
    const double b = survival_ode(tau);
    if (std::fabs(a - b) > 1e-8)
        throw ConsistencyError("oracle survival: eigen-expansion and amplitude-equation "
                               "routes disagree by " + std::to_string(std::fabs(a - b)) +
                               " at tau=" + std::to_string(tau));
    return a;
}

double OracleSolver::gamma(double tau) const {
    if (!(tau > 0.0)) throw ConfigError("gamma: tau must be > 0");
    const double p = survival(tau);
    if (p <= 0.0)
        throw NumericalError("oracle gamma: survival vanished at tau=" + std::to_string(tau));
    return -std::log(p) / tau;
}

double OracleSolver::completeness() const {
    return std::accumulate(x2_.begin(), x2_.end(), 0.0);
}

double OracleSolver::trace_error() const {
    const double trace =
        0.5 * eta_ + std::accumulate(diag_.begin(), diag_.end(), 0.0);
    const double esum = std::accumulate(evals_.begin(), evals_.end(), 0.0);
    return std::fabs(esum - trace) / std::max(1.0, std::fabs(trace));
}

std::vector<double> oracle_sigma_x(const DiscreteBath& disc, const std::vector<double>& times) {
    return OracleSolver(disc).sigma_x(times);
}

double oracle_survival(const DiscreteBath& disc, double tau) {
    return OracleSolver(disc).survival(tau);
}

double oracle_gamma(const DiscreteBath& disc, double tau) {
    return OracleSolver(disc).gamma(tau);
}

} // namespace zenobath

#pragma once

#include <cstddef>
#include <vector>

#include "zenobath/bath.hpp"
#include "zenobath/fixed_point.hpp"

namespace zenobath {

enum class Scheme { Linear, Logarithmic, Auto };

// N sampled bath modes (omega_j, g_j) with sum g_j^2 over a window
// reproducing the J integral over that window.
struct DiscreteBath {
    std::vector<double> omegas;  // strictly increasing, > 0
    std::vector<double> gs;      // couplings g_j >= 0
    Scheme scheme = Scheme::Linear;
    double omega_max = 200.0;

    std::size_t size() const { return omegas.size(); }
    // Discrete-bath dynamics are trusted only below this horizon.
    double recurrence_time() const;
};

// Midpoint sampling: omega_j at panel midpoints, g_j^2 = J(omega_j) dw_j.
// Auto picks Logarithmic for Lorentzian (peak at small w), Linear for Ohmic.
DiscreteBath discretize(const BathSpec& bath, std::size_t n, double omega_max,
                        Scheme scheme = Scheme::Auto);

// Discrete fixed point eta = exp[-sum_j g_j^2 / (2 (omega_j + eta)^2)].
UnitFixedPoint oracle_eta(const DiscreteBath& disc, const FixedPointOptions& opts = {});

// Exact single-excitation treatment of the transformed Hamiltonian: the
// (N+1)x(N+1) arrowhead matrix with head eta/2, diagonal omega_j - eta/2 and
// rim couplings V_j = eta g_j/(omega_j + eta) is diagonalized through its
// secular equation (root per interlacing interval), which is both faster and
// more accurate than a dense solve.
class OracleSolver {
public:
    explicit OracleSolver(DiscreteBath disc);

    const DiscreteBath& bath() const { return disc_; }
    double eta() const { return eta_; }

    // <sigma_x(t)> = sum_E x(E)^2 cos((E + eta/2) t).
    std::vector<double> sigma_x(const std::vector<double>& times) const;

    // |chi(tau)|^2 via both routes; throws ConsistencyError if the
    // eigen-expansion and the integrated amplitude equations disagree
    // beyond 1e-8.
    double survival(double tau) const;
    double survival_eigen(double tau) const;
    double survival_ode(double tau) const;

    // Effective projective-measurement rate -ln|chi(tau)|^2 / tau.
    double gamma(double tau) const;

    // Diagnostics: completeness sum x^2 (== 1) and eigenvalue-sum vs trace.
    double completeness() const;
    double trace_error() const;
    const std::vector<double>& eigenvalues() const { return evals_; }
    const std::vector<double>& weights() const { return x2_; }

private:
    DiscreteBath disc_;
    double eta_;
    std::vector<double> couplings_;  // V_j
    std::vector<double> diag_;       // omega_j - eta/2
    std::vector<double> evals_;      // E, ascending
    std::vector<double> x2_;         // |<down,0|E>|^2
    void solve_secular();
};

// Convenience wrappers matching the solver methods (each builds a solver).
std::vector<double> oracle_sigma_x(const DiscreteBath& disc, const std::vector<double>& times);
double oracle_survival(const DiscreteBath& disc, double tau);
double oracle_gamma(const DiscreteBath& disc, double tau);

} // namespace zenobath

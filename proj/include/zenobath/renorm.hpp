#pragma once

#include "zenobath/bath.hpp"
#include "zenobath/fixed_point.hpp"

namespace zenobath {

// Self-consistent renormalization factor of the qubit splitting.
struct Renormalization {
    double eta = 1.0;            // in (0, 1]
    double residual = 0.0;       // |eta - G(eta)| at convergence
    std::size_t iterations = 0;
    std::string method;
    bool unique = true;
};

// One application of the self-consistency map,
//   G(eta) = exp[ -Integral_0^inf J(w) / (2 (w + eta)^2) dw ].
// Lorentzian baths use the closed form of the exponent; OhmicDrude is
// evaluated by quadrature. Always in (0, 1) for nonzero coupling.
double eta_map(const BathSpec& bath, double eta_trial);

// Quadrature route for the exponent integral, used as the independent oracle
// for the Lorentzian closed form.
double eta_exponent_quadrature(const BathSpec& bath, double eta_trial);

// Closed form of the exponent for the family J = 2 a w/(w^2+l^2):
//   Integral = a * [pi l eta - (l^2+eta^2) + (l^2-eta^2) ln(l/eta)] / (l^2+eta^2)^2
double eta_exponent_closed(double a, double l, double eta_trial);

// Solves eta = G(eta) with damped fixed-point iteration and bisection
// fallback; the sign-scan sets `unique`.
Renormalization solve_eta(const BathSpec& bath, double tol = 1e-12);
Renormalization solve_eta(const BathSpec& bath, const FixedPointOptions& opts);

// Transformed-coupling weights at frequency w:
//   xi = w/(w + eta),  weight = (eta xi / w)^2 = eta^2/(w + eta)^2,
// so the squared-coupling spectral density transforms as J -> J * weight.
struct CouplingWeight {
    double xi;
    double weight;
};
CouplingWeight coupling_weight(double omega, double eta);

} // namespace zenobath

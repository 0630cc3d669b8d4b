#pragma once

#include "zenobath/bath.hpp"

namespace zenobath {

// One sampled point of the qubit self-energy.
struct SelfEnergySample {
    double omega;
    double R;       // level shift
    double Gamma;   // decay half-width, >= 0
};

// Gamma(w) = pi eta^2 J(w) / (w + eta)^2.
double decay_width(const BathSpec& bath, double eta, double omega);

// Level shift R(w) = PV Integral_0^inf eta^2 J(w') / ((w - w')(w' + eta)^2) dw',
// evaluated in closed form (exact for both bath models through the shared
// Lorentzian family). Domain error at w <= 0 (log divergence at the origin).
double level_shift(const BathSpec& bath, double eta, double omega);

// Tunable regularization of the principal-value oracle.
struct PvSettings {
    double delta_scale = 1e-3;   // half-width of the subtracted core, x max(w,1)
    double tail_eps = 1e-10;     // truncation bound for the 1/w'^3 tail
    double rel_tol = 1e-10;
    double abs_tol = 1e-13;
};

// Independent Cauchy principal-value quadrature for R(w): symmetric-interval
// subtraction around the pole plus truncated tail. The oracle `level_shift`
// is certified against.
double pv_integral(const BathSpec& bath, double eta, double omega, const PvSettings& s = {});

} // namespace zenobath

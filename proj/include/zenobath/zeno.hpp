#pragma once

#include <cstddef>
#include <vector>

#include "zenobath/bath.hpp"

namespace zenobath {

enum class Regime { Zeno, AntiZeno, Neutral };
const char* to_string(Regime r);

// Measurement-modulated decay rates over a grid of projection intervals.
struct ZenoCurve {
    std::vector<double> taus;
    std::vector<double> gamma;      // gamma(tau)
    std::vector<double> gamma_rwa;  // gamma_RWA(tau)
    double gamma0 = 0.0;            // long-time RWA limit, (pi/2) J(Delta)
    std::vector<double> ratio;      // gamma(tau)/gamma0 (0 when gamma0 == 0)
    std::vector<Regime> regime;
    double eta = 1.0;
};

struct ZenoSettings {
    double omega_max = 100.0;
    double rel_tol = 1e-8;
    double abs_tol = 1e-13;
    double ratio_tol = 1e-3;  // Zeno/anti-Zeno classification band
    unsigned jobs = 1;
};

// Fejer-type projection kernel F(w, tau) = 2 sin^2((center-w) tau/2)
//                                          / (pi (center-w)^2 tau),
// with the removable singularity at w = center evaluated by its limit
// tau/(2 pi). Unit mass over the whole real line for any tau.
double kernel_F(double omega, double center, double tau);

// Counter-rotating interaction weight f(w) = (2 eta/(w + eta))^2.
double interaction_f(double omega, double eta);

// gamma(tau) = 2 pi Int_0^inf (J(w)/4) f(w) F(w, tau) dw, kernel centered at
// the renormalized splitting eta.
double gamma_tau(const BathSpec& bath, double eta, double tau, const ZenoSettings& s = {});

// RWA variant: kernel centered at Delta = 1, f == 1.
double gamma_rwa_tau(const BathSpec& bath, double tau, const ZenoSettings& s = {});

// Long-time RWA limit gamma_0 = 2 pi J(Delta)/4.
double gamma_0(const BathSpec& bath);

// rho_ee(n tau) = exp(-gamma(tau) n tau) for n ideal projective resets.
double survival_probability(const BathSpec& bath, double tau, std::size_t n,
                            const ZenoSettings& s = {});

// Full curve over a tau grid with per-point regime labels.
ZenoCurve zeno_scan(const BathSpec& bath, const std::vector<double>& taus,
                    const ZenoSettings& s = {});

// Default grid of Figs. 3-4 style scans: log-spaced points.
std::vector<double> default_tau_grid(std::size_t points = 200, double tau_min = 1e-2,
                                     double tau_max = 20.0);

} // namespace zenobath

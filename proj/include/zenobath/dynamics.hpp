#pragma once

#include <cstddef>
#include <vector>

#include "zenobath/bath.hpp"
#include "zenobath/renorm.hpp"

namespace zenobath {

enum class ShiftClass { Blue, Red, None };

// Sampled measurement-free coherence <sigma_x(t)> with pole diagnostics.
struct DynamicsSeries {
    std::vector<double> times;
    std::vector<double> values;
    double omega0 = 1.0;       // root of w - eta - R(w)
    double gamma_pole = 0.0;   // Gamma(omega0)
    ShiftClass shift = ShiftClass::None;
    double eta = 1.0;
};

struct Pole {
    double omega0;
    double gamma;
    bool multiple_roots = false;  // extra sign changes seen in the scan
};

struct DynamicsSettings {
    double omega_max = 100.0;     // integration cutoff, >= 100
    double rel_tol = 1e-6;        // adaptive tolerance in the resonance window
    double abs_tol = 1e-10;
    std::size_t pole_scan_points = 1000;
    double pole_tol = 1e-10;
    unsigned jobs = 1;            // worker threads across time points
};

// Root of p(w) = w - eta - R(w) on (0, omega_max): sign-scan then bisection.
// With several roots, returns the one nearest eta and sets multiple_roots.
Pole find_pole(const BathSpec& bath, double eta, const DynamicsSettings& s = {});

// Blue iff omega0 > 1 + tol, Red iff omega0 < 1 - tol (Delta = 1 units).
ShiftClass classify_shift(double omega0, double tol = 1e-6);
const char* to_string(ShiftClass s);

// <sigma_x(t)> = (1/pi) Int_0^inf Gamma(w) cos(wt) dw
//                 / [ (w - eta - R(w))^2 + Gamma(w)^2 ],
// with the domain split around the resonance at omega0 (window half-width
// W = max(20 Gamma(omega0), 0.05)) and panel widths capped at pi/(4t).
DynamicsSeries sigma_x_series(const BathSpec& bath, const std::vector<double>& times,
                              const DynamicsSettings& s = {});

// Single-point evaluation used by the series and by convergence tests.
double sigma_x_at(const BathSpec& bath, double eta, const Pole& pole, double t,
                  const DynamicsSettings& s = {});

} // namespace zenobath

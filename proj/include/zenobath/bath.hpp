#pragma once

#include <string>
#include <vector>

namespace zenobath {

// All energies are in units of the qubit splitting (Delta = 1), all times in
// units of 1/Delta.

enum class BathKind { Lorentzian, OhmicDrude };

// Spectral density model of the environment.
//
//   Lorentzian:  J(w) = 2 a w / (w^2 + lambda^2)       peak at w = lambda
//   OhmicDrude:  J(w) = 2 a w / ((w/omega_c)^2 + 1)    peak at w = omega_c
//
// Both are members of the family 2 a_eff w / (w^2 + l_eff^2); OhmicDrude maps
// onto it with a_eff = a * omega_c^2, l_eff = omega_c. Closed forms derived
// for the Lorentzian therefore apply to both models.
struct BathSpec {
    BathKind kind = BathKind::Lorentzian;
    double coupling = 0.01;   // alpha (Lorentzian) or alpha_oh (OhmicDrude)
    double scale = 0.09;      // lambda (Lorentzian) or omega_c (OhmicDrude)

    static BathSpec lorentzian(double alpha, double lambda);
    static BathSpec ohmic_drude(double alpha_oh, double omega_c);

    // coupling == 0 is the accepted degenerate zero-coupling limit.
    bool zero_coupling() const { return coupling == 0.0; }

    // Parameters of the shared analytic family (a_eff, l_eff).
    double family_coupling() const;
    double family_scale() const { return scale; }

    std::string describe() const;
};

// Throws ConfigError on invariant violations; returns human-readable warnings
// for allowed-but-suspect parameters (e.g. a Lorentzian peak above Delta).
std::vector<std::string> validate(const BathSpec& bath);

// J(omega). Domain error for omega < 0.
double spectral_density(const BathSpec& bath, double omega);

// Location of the maximum of J.
double peak_frequency(const BathSpec& bath);

} // namespace zenobath

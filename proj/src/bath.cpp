#include "zenobath/bath.hpp"

#include <cmath>

#include "zenobath/errors.hpp"

namespace zenobath {

BathSpec BathSpec::lorentzian(double alpha, double lambda) {
    BathSpec b{BathKind::Lorentzian, alpha, lambda};
    validate(b);
    return b;
}

BathSpec BathSpec::ohmic_drude(double alpha_oh, double omega_c) {
    BathSpec b{BathKind::OhmicDrude, alpha_oh, omega_c};
    validate(b);
    return b;
}

double BathSpec::family_coupling() const {
    return kind == BathKind::Lorentzian ? coupling : coupling * scale * scale;
}

std::string BathSpec::describe() const {
    char buf[96];
    if (kind == BathKind::Lorentzian)
        std::snprintf(buf, sizeof buf, "lorentzian(alpha=%g, lambda=%g)", coupling, scale);
    else
        std::snprintf(buf, sizeof buf, "ohmic(alpha=%g, omega_c=%g)", coupling, scale);
    return buf;
}

std::vector<std::string> validate(const BathSpec& bath) {
    const char* cname = bath.kind == BathKind::Lorentzian ? "alpha" : "alpha_oh";
    const char* sname = bath.kind == BathKind::Lorentzian ? "lambda" : "omega_c";
    if (!(bath.coupling >= 0.0) || !std::isfinite(bath.coupling))
        throw ConfigError(std::string(cname) + " must be >= 0, got " + std::to_string(bath.coupling));
    if (!(bath.scale > 0.0) || !std::isfinite(bath.scale))
        throw ConfigError(std::string(sname) + " must be > 0, got " + std::to_string(bath.scale));

    std::vector<std::string> warnings;
    if (bath.kind == BathKind::Lorentzian && bath.scale >= 1.0)
        warnings.push_back("lambda >= Delta: spectrum is no longer a low-frequency bath");
    return warnings;
}

double spectral_density(const BathSpec& bath, double omega) {
    if (omega < 0.0 || !std::isfinite(omega))
        throw ConfigError("spectral_density: omega must be >= 0, got " + std::to_string(omega));
    const double a = bath.family_coupling();
    const double l = bath.family_scale();
    return 2.0 * a * omega / (omega * omega + l * l);
}

double peak_frequency(const BathSpec& bath) {
    // 2 a w/(w^2+l^2) is maximized at w = l for both family members.
    return bath.scale;
}

} // namespace zenobath

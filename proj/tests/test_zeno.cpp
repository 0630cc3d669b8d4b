#include <doctest.h>

#include <cmath>

#include "zenobath/errors.hpp"
#include "zenobath/quadrature.hpp"
#include "zenobath/renorm.hpp"
#include "zenobath/zeno.hpp"

using namespace zenobath;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("projection kernel: peak value, limits, unit mass") {
    const double eta = 0.9833558;
    for (double tau : {0.1, 1.0, 7.0}) {
        CHECK(kernel_F(eta, eta, tau) == doctest::Approx(tau / (2.0 * kPi)).epsilon(1e-12));
        // F is bounded by its peak and positive.
        for (double w = 0.0; w < 5.0; w += 0.1) {
            CHECK(kernel_F(w, eta, tau) >= 0.0);
            CHECK(kernel_F(w, eta, tau) <= tau / (2.0 * kPi) * (1.0 + 1e-12));
        }
    }
    // tau -> 0 sends F to 0 away from the center.
    CHECK(kernel_F(2.0, 0.98, 1e-8) < 1e-8);

    // Fejer kernel mass: int F dw = 1 over the real line. Truncation at
    // center +- X leaves ~2/(pi tau X), which the bound accounts for.
    for (double tau : {2.0, 5.0}) {
        QuadOptions opts;
        opts.rel_tol = 1e-9;
        opts.abs_tol = 1e-12;
        opts.max_width = 2.0 * kPi / tau / 3.0;
        const double X = 400.0;
        const double mass =
            integrate([&](double w) { return kernel_F(w, 0.0, tau); }, -X, X, opts).value;
        CHECK(std::fabs(mass - 1.0) < 3.0 / (tau * X));
    }
}

TEST_CASE("interaction weight f") {
    const double eta = 0.9144380;
    CHECK(interaction_f(eta, eta) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(interaction_f(0.0, eta) == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(interaction_f(1e9, eta) < 1e-8);
    // Below resonance counter-rotating terms amplify, above they suppress.
    for (double w = 0.01; w < eta; w += 0.1) CHECK(interaction_f(w, eta) > 1.0);
    for (double w = eta + 0.01; w < 20.0; w += 0.5) CHECK(interaction_f(w, eta) < 1.0);
}

TEST_CASE("gamma_0 values") {
    CHECK(gamma_0(BathSpec::lorentzian(0.01, 0.09)) ==
          doctest::Approx(kPi / 2.0 * 0.02 / 1.0081).epsilon(1e-14));
    CHECK(gamma_0(BathSpec::ohmic_drude(0.01, 10.0)) ==
          doctest::Approx(kPi / 2.0 * 0.02 / 1.01).epsilon(1e-14));
    CHECK(gamma_0(BathSpec::lorentzian(0.0, 0.09)) == 0.0);
}

TEST_CASE("gamma(tau) limits: Zeno suppression and long-time plateaus") {
    const BathSpec lor = BathSpec::lorentzian(0.01, 0.09);
    const double eta = solve_eta(lor).eta;
    const double g0 = gamma_0(lor);

    CHECK(gamma_tau(lor, eta, 1e-3) < 1e-2 * g0);
    CHECK(gamma_rwa_tau(lor, 1e-3) < 1e-2 * g0);

    // tau -> inf: F concentrates at the kernel center.
    const double glim = kPi / 2.0 * spectral_density(lor, eta) * interaction_f(eta, eta);
    CHECK(std::fabs(gamma_tau(lor, eta, 200.0) / glim - 1.0) < 0.02);
    CHECK(std::fabs(gamma_rwa_tau(lor, 200.0) / g0 - 1.0) < 0.02);

    CHECK(gamma_tau(BathSpec::lorentzian(0.0, 0.09), 1.0, 1.0) == 0.0);
}

TEST_CASE("counter-rotating suppression at short tau for the Ohmic bath") {
    const BathSpec oh = BathSpec::ohmic_drude(0.01, 10.0);
    const double eta = solve_eta(oh).eta;
    for (double tau : {0.1, 0.3, 0.6, 0.9})
        CHECK(gamma_tau(oh, eta, tau) < gamma_rwa_tau(oh, tau));
}

TEST_CASE("zeno_scan shapes and labels") {
    const auto taus = default_tau_grid(40, 0.01, 20.0);

    const ZenoCurve lor = zeno_scan(BathSpec::lorentzian(0.01, 0.09), taus);
    double max_ratio = 0.0;
    for (std::size_t i = 0; i < taus.size(); ++i) {
        CHECK(lor.gamma[i] >= 0.0);
        CHECK(lor.gamma_rwa[i] >= 0.0);
        max_ratio = std::max(max_ratio, lor.ratio[i]);
    }
    CHECK(max_ratio > 1.0);  // anti-Zeno window exists
    bool has_anti = false;
    for (Regime r : lor.regime) has_anti = has_anti || r == Regime::AntiZeno;
    CHECK(has_anti);

    const ZenoCurve oh = zeno_scan(BathSpec::ohmic_drude(0.01, 10.0), taus);
    for (std::size_t i = 0; i < taus.size(); ++i) {
        CHECK(oh.ratio[i] < 1.0);
        CHECK(oh.regime[i] != Regime::AntiZeno);
    }
}

TEST_CASE("zero-coupling scan is all neutral") {
    const ZenoCurve c = zeno_scan(BathSpec::lorentzian(0.0, 0.09), {0.5, 1.0, 2.0});
    CHECK(c.gamma0 == 0.0);
    for (std::size_t i = 0; i < c.taus.size(); ++i) {
        CHECK(c.gamma[i] == 0.0);
        CHECK(c.regime[i] == Regime::Neutral);
    }
}

TEST_CASE("survival probability composes the rate") {
    const BathSpec lor = BathSpec::lorentzian(0.01, 0.09);
    const double eta = solve_eta(lor).eta;
    const double g1 = gamma_tau(lor, eta, 1.0);
    CHECK(survival_probability(lor, 1.0, 10) ==
          doctest::Approx(std::exp(-10.0 * g1)).epsilon(1e-10));
    CHECK(survival_probability(lor, 1.0, 0) == 1.0);
    CHECK(survival_probability(BathSpec::lorentzian(0.0, 0.09), 1.0, 50) == 1.0);
}

TEST_CASE("grid validation") {
    const BathSpec lor = BathSpec::lorentzian(0.01, 0.09);
    CHECK_THROWS_AS(zeno_scan(lor, {1.0, 0.5}), ConfigError);
    CHECK_THROWS_AS(zeno_scan(lor, {0.0, 0.5}), ConfigError);
    CHECK_THROWS_AS(gamma_tau(lor, 0.98, 0.0), ConfigError);
}

#include <doctest.h>

#include <cmath>

#include "zenobath/errors.hpp"
#include "zenobath/self_energy.hpp"

using namespace zenobath;

namespace {
// Paper parameter sets with their converged eta values.
const BathSpec kLorWeak = BathSpec::lorentzian(0.01, 0.09);
const BathSpec kOhWeak = BathSpec::ohmic_drude(0.01, 10.0);
const BathSpec kLorStrong = BathSpec::lorentzian(0.1, 0.3);
const BathSpec kOhStrong = BathSpec::ohmic_drude(0.1, 10.0);
const double kEtaLw = 0.9833558;
const double kEtaOw = 0.9844731;
const double kEtaLs = 0.9144380;
const double kEtaOs = 0.8446953;
} // namespace

TEST_CASE("decay width reproduces the reported values at the pole") {
    CHECK(decay_width(kLorWeak, kEtaLw, 1.0225) == doctest::Approx(0.014654).epsilon(0.02));
    CHECK(decay_width(kOhWeak, kEtaOw, 0.97720) == doctest::Approx(0.015318).epsilon(0.02));
    CHECK(decay_width(kLorStrong, kEtaLs, 1.0868) == doctest::Approx(0.11215).epsilon(0.02));
    CHECK(decay_width(kOhStrong, kEtaOs, 0.77221) == doctest::Approx(0.13163).epsilon(0.02));
}

TEST_CASE("decay width is nonnegative and vanishes at the origin") {
    for (const BathSpec& bath : {kLorWeak, kOhStrong}) {
        CHECK(decay_width(bath, 0.9, 0.0) == 0.0);
        for (double w = 0.0; w <= 30.0; w += 0.37)
            CHECK(decay_width(bath, 0.9, w) >= 0.0);
    }
}

TEST_CASE("closed-form level shift equals the PV oracle") {
    struct Case {
        const BathSpec* bath;
        double eta;
    };
    for (const Case& c : {Case{&kLorWeak, kEtaLw}, Case{&kOhWeak, kEtaOw},
                          Case{&kLorStrong, kEtaLs}, Case{&kOhStrong, kEtaOs}}) {
        for (double w = 0.1; w <= 5.0; w += 0.35) {
            const double closed = level_shift(*c.bath, c.eta, w);
            const double pv = pv_integral(*c.bath, c.eta, w);
            CHECK(std::fabs(closed - pv) < 1e-6);
        }
    }
}

TEST_CASE("pole-condition arithmetic on the reported frequencies") {
    // R(omega0) must equal omega0 - eta (paper values are 5-digit roundings).
    CHECK(std::fabs(level_shift(kLorWeak, kEtaLw, 1.0225) - (1.0225 - 0.98336)) < 1e-3);
    CHECK(std::fabs(level_shift(kOhWeak, kEtaOw, 0.97720) - (0.97720 - 0.98447)) < 1e-3);
    CHECK(std::fabs(pv_integral(kLorWeak, kEtaLw, 1.0225) - 0.03914) < 1e-3);
    CHECK(std::fabs(pv_integral(kOhStrong, kEtaOs, 0.77221) - (-0.07248)) < 2e-3);
}

TEST_CASE("level shift is linear in the coupling") {
    for (double w : {0.5, 1.3, 2.0}) {
        const double r1 = level_shift(BathSpec::lorentzian(0.01, 0.09), 0.98, w) / 0.01;
        const double r10 = level_shift(BathSpec::lorentzian(0.1, 0.09), 0.98, w) / 0.1;
        CHECK(std::fabs(r1 - r10) < 1e-6);
    }
}

TEST_CASE("zero coupling has zero self-energy") {
    const BathSpec none = BathSpec::lorentzian(0.0, 0.09);
    CHECK(level_shift(none, 1.0, 1.3) == 0.0);
    CHECK(pv_integral(none, 1.0, 1.3) == 0.0);
    CHECK(decay_width(none, 1.0, 1.3) == 0.0);
}

TEST_CASE("omega = 0 is a domain error for the shift") {
    CHECK_THROWS_AS(level_shift(kLorWeak, kEtaLw, 0.0), ConfigError);
    CHECK_THROWS_AS(pv_integral(kLorWeak, kEtaLw, -1.0), ConfigError);
}

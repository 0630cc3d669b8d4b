#include <doctest.h>

#include <cmath>

#include "zenobath/errors.hpp"
#include "zenobath/oracle.hpp"
#include "zenobath/quadrature.hpp"
#include "zenobath/renorm.hpp"
#include "zenobath/zeno.hpp"

using namespace zenobath;

TEST_CASE("two-panel midpoint construction") {
    const BathSpec lor = BathSpec::lorentzian(0.01, 0.09);
    const DiscreteBath d = discretize(lor, 2, 2.0, Scheme::Linear);
    REQUIRE(d.size() == 2);
    CHECK(d.omegas[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(d.omegas[1] == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(d.gs[0] * d.gs[0] == doctest::Approx(spectral_density(lor, 0.5)).epsilon(1e-14));
    CHECK(d.gs[1] * d.gs[1] == doctest::Approx(spectral_density(lor, 1.5)).epsilon(1e-14));
}

TEST_CASE("discrete weights reproduce the J integral") {
    for (const BathSpec& bath :
         {BathSpec::lorentzian(0.01, 0.09), BathSpec::ohmic_drude(0.1, 10.0)}) {
        const DiscreteBath d = discretize(bath, 2000, 200.0);
        double sum = 0.0;
        for (double g : d.gs) sum += g * g;
        QuadOptions opts;
        opts.rel_tol = 1e-12;
        opts.breakpoints = {bath.family_scale(), 1.0, 10.0};
        const double exact =
            integrate([&](double w) { return spectral_density(bath, w); }, 0.0, 200.0, opts)
                .value;
        CHECK(std::fabs(sum - exact) / exact < 1e-3);
    }

    // Window version of the same invariant on a smooth interior window.
    const BathSpec lor = BathSpec::lorentzian(0.01, 0.09);
    const DiscreteBath d = discretize(lor, 4000, 200.0, Scheme::Linear);
    double sum = 0.0;
    for (std::size_t j = 0; j < d.size(); ++j)
        if (d.omegas[j] >= 1.0 && d.omegas[j] <= 5.0) sum += d.gs[j] * d.gs[j];
    const double exact =
        integrate([&](double w) { return spectral_density(lor, w); }, 1.0, 5.0, {}).value;
    CHECK(std::fabs(sum - exact) / exact < 2e-3);
}

TEST_CASE("logarithmic scheme concentrates points near the peak") {
    const BathSpec lor = BathSpec::lorentzian(0.01, 0.09);
    const DiscreteBath lg = discretize(lor, 1000, 200.0, Scheme::Logarithmic);
    const DiscreteBath ln = discretize(lor, 1000, 200.0, Scheme::Linear);
    auto below_peak = [](const DiscreteBath& d) {
        std::size_t c = 0;
        for (double w : d.omegas) c += w <= 0.09;
        return c;
    };
    CHECK(below_peak(lg) > 10 * below_peak(ln));
    // Auto picks logarithmic for Lorentzian, linear for Ohmic.
    CHECK(discretize(lor, 100, 200.0).scheme == Scheme::Logarithmic);
    CHECK(discretize(BathSpec::ohmic_drude(0.01, 10.0), 100, 200.0).scheme == Scheme::Linear);
}

TEST_CASE("discrete eta converges to the continuum values") {
    const double lw = oracle_eta(discretize(BathSpec::lorentzian(0.01, 0.09), 4000, 200.0)).value;
    CHECK(std::fabs(lw - 0.98336) < 5e-4);
    const double os = oracle_eta(discretize(BathSpec::ohmic_drude(0.1, 10.0), 4000, 200.0)).value;
    CHECK(std::fabs(os - 0.84469) < 1e-3);

    // Monotone approach to the continuum fixed point with growing N.
    const double target = solve_eta(BathSpec::lorentzian(0.01, 0.09)).eta;
    double prev_gap = 1.0;
    for (std::size_t n : {500u, 1000u, 2000u, 4000u}) {
        const double e = oracle_eta(discretize(BathSpec::lorentzian(0.01, 0.09), n, 200.0)).value;
        const double gap = std::fabs(e - target);
        CHECK(gap <= prev_gap + 1e-12);
        prev_gap = gap;
    }

    CHECK(oracle_eta({{1.0, 2.0}, {0.0, 0.0}, Scheme::Linear, 2.0}).value == 1.0);
}

TEST_CASE("eigen-decomposition sanity: completeness and trace") {
    for (const BathSpec& bath :
         {BathSpec::lorentzian(0.01, 0.09), BathSpec::ohmic_drude(0.1, 10.0)}) {
        const OracleSolver solver(discretize(bath, 1000, 200.0));
        CHECK(std::fabs(solver.completeness() - 1.0) < 1e-9);
        CHECK(solver.trace_error() < 1e-9);
        CHECK(solver.sigma_x({0.0})[0] == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("zero couplings reduce to the isolated qubit") {
    DiscreteBath d;
    d.omegas = {0.5, 1.0, 1.5};
    d.gs = {0.0, 0.0, 0.0};
    d.omega_max = 2.0;
    const OracleSolver solver(d);
    CHECK(solver.eta() == 1.0);
    for (double t : {0.0, 1.0, 2.5})
        CHECK(solver.sigma_x({t})[0] == doctest::Approx(std::cos(t)).epsilon(1e-12));
    CHECK(solver.survival(1.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(solver.gamma(2.0) == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("convergence in N for the oracle dynamics") {
    const BathSpec lor = BathSpec::lorentzian(0.01, 0.09);
    std::vector<double> ts;
    for (double t = 0.0; t <= 50.0; t += 0.5) ts.push_back(t);
    const auto a = OracleSolver(discretize(lor, 1000, 200.0)).sigma_x(ts);
    const auto b = OracleSolver(discretize(lor, 2000, 200.0)).sigma_x(ts);
    double dev = 0.0;
    for (std::size_t i = 0; i < ts.size(); ++i) dev = std::max(dev, std::fabs(a[i] - b[i]));
    CHECK(dev < 1e-2);
}

TEST_CASE("survival: quadratic onset and two-route agreement") {
    const OracleSolver solver(discretize(BathSpec::lorentzian(0.01, 0.09), 400, 100.0));
    // survival() itself enforces eigen-vs-ODE agreement to 1e-8.
    const double p1 = solver.survival(0.02);
    const double p2 = solver.survival(0.01);
    CHECK(p1 < 1.0);
    // 1 - P(tau) = C tau^2 (1 + O(tau)) => ratio of departures is ~4.
    CHECK((1.0 - p1) / (1.0 - p2) == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("projective-reset rate tracks the kernel formula at weak coupling") {
    const BathSpec lor = BathSpec::lorentzian(0.01, 0.09);
    const OracleSolver solver(discretize(lor, 600, 100.0));
    const double eta = solve_eta(lor).eta;
    for (double tau : {0.5, 1.0, 3.0}) {
        const double go = solver.gamma(tau);
        const double gt = gamma_tau(lor, eta, tau);
        CHECK(std::fabs(go - gt) / gt < 0.05);
    }
}

TEST_CASE("input validation") {
    const BathSpec lor = BathSpec::lorentzian(0.01, 0.09);
    CHECK_THROWS_AS(discretize(lor, 1, 200.0), ConfigError);
    CHECK_THROWS_AS(discretize(lor, 100, -5.0), ConfigError);
    DiscreteBath bad;
    bad.omegas = {1.0, 0.5};
    bad.gs = {0.1, 0.1};
    CHECK_THROWS_AS(OracleSolver{bad}, ConfigError);
}

TEST_CASE("recurrence horizon") {
    const DiscreteBath lin = discretize(BathSpec::ohmic_drude(0.01, 10.0), 2000, 200.0);
    // Linear spacing 0.1 => horizon 2 pi / 0.1.
    CHECK(lin.recurrence_time() == doctest::Approx(62.83).epsilon(1e-3));
}

#include <doctest.h>

#include <cmath>

#include "zenobath/errors.hpp"
#include "zenobath/quadrature.hpp"

using namespace zenobath;

TEST_CASE("polynomials are integrated exactly") {
    auto r = integrate([](double x) { return x * x; }, 0.0, 1.0);
    CHECK(r.value == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    r = integrate([](double x) { return 3.0 * x * x * x * x * x; }, -1.0, 2.0);
    CHECK(r.value == doctest::Approx(31.5).epsilon(1e-13));
}

TEST_CASE("oscillatory integrand with width cap") {
    // int_0^10 cos(50 x) dx = sin(500)/50
    QuadOptions opts;
    opts.rel_tol = 1e-10;
    opts.abs_tol = 1e-13;
    opts.max_width = 3.14159 / 25.0;
    auto r = integrate([](double x) { return std::cos(50.0 * x); }, 0.0, 10.0, opts);
    CHECK(r.value == doctest::Approx(std::sin(500.0) / 50.0).epsilon(1e-9));
}

TEST_CASE("near-singular peak needs adaptivity") {
    // int_0^1 1/sqrt(x) dx = 2 (integrable endpoint singularity)
    QuadOptions opts;
    opts.rel_tol = 1e-9;
    opts.abs_tol = 1e-12;
    auto r = integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, opts);
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-8));

    // Narrow Lorentzian: int (g/pi)/((x-c)^2+g^2) over [0,1] with breakpoint at c
    const double g = 1e-5, c = 0.3;
    QuadOptions with_bp;
    with_bp.rel_tol = 1e-10;
    with_bp.breakpoints = {c};
    auto peak = integrate(
        [=](double x) { return (g / 3.14159265358979323846) / ((x - c) * (x - c) + g * g); },
        0.0, 1.0, with_bp);
    const double exact =
        (std::atan((1.0 - c) / g) + std::atan(c / g)) / 3.14159265358979323846;
    CHECK(peak.value == doctest::Approx(exact).epsilon(1e-9));
}

TEST_CASE("tail transform reproduces closed forms") {
    auto r = integrate_tail([](double w) { return 1.0 / (w * w); }, 2.0);
    CHECK(r.value == doctest::Approx(0.5).epsilon(1e-12));
    r = integrate_tail([](double w) { return 1.0 / (w * w * w); }, 1.0);
    CHECK(r.value == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("breakpoints outside the interval are ignored") {
    QuadOptions opts;
    opts.breakpoints = {-5.0, 0.5, 7.0};
    auto r = integrate([](double x) { return x; }, 0.0, 1.0, opts);
    CHECK(r.value == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("non-finite integrand raises") {
    CHECK_THROWS_AS(integrate([](double x) { return 1.0 / x; }, -1.0, 1.0, {}),
                    NumericalError);
}

TEST_CASE("empty interval integrates to zero") {
    auto r = integrate([](double) { return 42.0; }, 1.5, 1.5);
    CHECK(r.value == 0.0);
}

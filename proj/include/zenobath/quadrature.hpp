#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <vector>

namespace zenobath {

struct QuadOptions {
    double rel_tol = 1e-9;
    double abs_tol = 1e-14;
    std::size_t max_panels = 200000;
    // Hard cap on panel width; initial panels are pre-split to satisfy it.
    double max_width = std::numeric_limits<double>::infinity();
    // Mandatory initial panel boundaries; values outside (a,b) are ignored.
    std::vector<double> breakpoints;
};

struct QuadResult {
    double value = 0.0;
    double error = 0.0;       // estimated absolute error
    std::size_t panels = 0;   // final panel count
};

using Integrand = std::function<double(double)>;

// Adaptive Gauss-Kronrod (G7,K15) over [a, b]. Throws NumericalError naming
// the worst panel if the tolerance cannot be met within the panel budget.
QuadResult integrate(const Integrand& f, double a, double b, const QuadOptions& opts = {});

// Tail integral over [a, inf), a > 0, via the substitution w = 1/u. Intended
// for integrands decaying at least as fast as 1/w^2.
QuadResult integrate_tail(const Integrand& f, double a, const QuadOptions& opts = {});

} // namespace zenobath

#pragma once

#include <cstddef>
#include <functional>
#include <string>

namespace zenobath {

// Result of solving x = G(x) on (0, 1].
struct UnitFixedPoint {
    double value = 1.0;
    double residual = 0.0;       // |x - G(x)| at the returned point
    std::size_t iterations = 0;
    std::string method;          // "fixed-point", "bisection", or "exact"
    bool unique = true;          // single sign change of x - G(x) in the scan
};

struct FixedPointOptions {
    double tol = 1e-12;
    std::size_t max_iterations = 10000;
    double damping = 0.5;            // x <- x + damping*(G(x) - x)
    double bracket_floor = 1e-6;     // lower edge of the bisection bracket
    std::size_t scan_points = 1000;  // sign-scan resolution for uniqueness
};

// Solves x = G(x) for a map with 0 < G(x) < 1 on (0, 1]. Damped fixed-point
// iteration from x0 = 1; falls back to bisection of h(x) = x - G(x) when the
// iteration oscillates or stalls. Throws MethodValidityError when the
// sign-scan finds multiple roots, NumericalError when nothing converges.
UnitFixedPoint solve_unit_fixed_point(const std::function<double(double)>& G,
                                      const FixedPointOptions& opts = {});

} // namespace zenobath

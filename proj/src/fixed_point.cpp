#include "zenobath/fixed_point.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "zenobath/errors.hpp"

namespace zenobath {
namespace {

std::size_t count_sign_changes(const std::function<double(double)>& h, double lo, double hi,
                               std::size_t points) {
    std::size_t changes = 0;
    double prev = h(lo);
    for (std::size_t i = 1; i < points; ++i) {
        const double x = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
        const double cur = h(x);
        if ((prev < 0.0 && cur >= 0.0) || (prev >= 0.0 && cur < 0.0)) ++changes;
        prev = cur;
    }
    return changes;
}

} // namespace

UnitFixedPoint solve_unit_fixed_point(const std::function<double(double)>& G,
                                      const FixedPointOptions& opts) {
    UnitFixedPoint out;
    auto h = [&G](double x) { return x - G(x); };

    // Degenerate map: G(1) == 1 means zero coupling, the exact answer is 1.
    if (G(1.0) == 1.0) {
        out.value = 1.0;
        out.residual = 0.0;
        out.iterations = 0;
        out.method = "exact";
        return out;
    }

    out.unique = count_sign_changes(h, opts.bracket_floor, 1.0, opts.scan_points) <= 1;
    if (!out.unique)
        throw MethodValidityError(
            "self-consistency equation has multiple roots in (0,1]; the unitary "
            "transformation is not valid for these parameters");

    double x = 1.0;
    double best = std::fabs(h(x));
    bool diverged = false;
    for (std::size_t i = 0; i < opts.max_iterations; ++i) {
        const double g = G(x);
        const double res = std::fabs(x - g);
        if (res <= opts.tol) {
            out.value = x;
            out.residual = res;
            out.iterations = i;
            out.method = "fixed-point";
            return out;
        }
        if (!(g > 0.0) || !(g < 1.0) || !std::isfinite(g)) {
            diverged = true;
            break;
        }
        // Oscillation/stall guard: residual should contract.
        if (i > 20 && res > 4.0 * best) {
            diverged = true;
            break;
        }
        best = std::min(best, res);
        x += opts.damping * (g - x);
        if (x <= 0.0 || x > 1.0) {
            diverged = true;
            break;
        }
        out.iterations = i + 1;
    }

    if (!diverged && std::fabs(h(x)) <= opts.tol) {
        out.value = x;
        out.residual = std::fabs(h(x));
        out.method = "fixed-point";
        return out;
    }

    // Bisection fallback on h over (bracket_floor, 1].
    double lo = opts.bracket_floor, hi = 1.0;
    double hlo = h(lo), hhi = h(hi);
    if (hlo == 0.0) {
        out.value = lo;
    } else if (hhi == 0.0) {
        out.value = hi;
    } else {
        if ((hlo < 0.0) == (hhi < 0.0))
            throw NumericalError("eta solver: no sign change of x - G(x) on (" +
                                 std::to_string(lo) + ", 1]");
        std::size_t it = 0;
        while (it < opts.max_iterations) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            const double hm = h(mid);
            if ((hm < 0.0) == (hlo < 0.0)) {
                lo = mid;
                hlo = hm;
            } else {
                hi = mid;
            }
            ++it;
            if (std::fabs(hm) <= opts.tol && hi - lo <= opts.tol) break;
        }
        out.value = 0.5 * (lo + hi);
        out.iterations += it;
    }
    out.residual = std::fabs(h(out.value));
    out.method = "bisection";
    if (out.residual > std::max(opts.tol, 1e3 * std::numeric_limits<double>::epsilon()))
        throw NumericalError("eta solver: bisection stalled with residual " +
                             std::to_string(out.residual));
    return out;
}

} // namespace zenobath

#include "zenobath/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <queue>

#include "zenobath/errors.hpp"

namespace zenobath {
namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK dqk15).
// Nodes are symmetric about the panel midpoint; xk[i] are the positive ones.
constexpr double kXk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
constexpr double kWk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct Panel {
    double a, b;
    double value;
    double error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

Panel evaluate_panel(const Integrand& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - h * kXk[i]);
        fv[14 - i] = f(c + h * kXk[i]);
    }
    fv[7] = f(c);
    double kron = 0.0, gauss = 0.0;
    for (int i = 0; i < 7; ++i) kron += kWk[i] * (fv[i] + fv[14 - i]);
    kron += kWk[7] * fv[7];
    for (int i = 0; i < 3; ++i) gauss += kWg[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
    gauss += kWg[3] * fv[7];
    kron *= h;
    gauss *= h;
    // QUADPACK-style sharpened error estimate.
    double resabs = 0.0;
    for (int i = 0; i < 7; ++i) resabs += kWk[i] * (std::fabs(fv[i]) + std::fabs(fv[14 - i]));
    resabs += kWk[7] * std::fabs(fv[7]);
    resabs *= h;
    double err = std::fabs(kron - gauss);
    if (resabs > 0.0 && err > 0.0)
        err = resabs * std::min(1.0, std::pow(200.0 * err / resabs, 1.5));
    if (!std::isfinite(kron) || !std::isfinite(err))
        throw NumericalError("quadrature: non-finite integrand on panel [" +
                             std::to_string(a) + ", " + std::to_string(b) + "]");
    return {a, b, kron, err};
}

double compensated_sum(std::vector<Panel>& panels, double (*get)(const Panel&)) {
    std::sort(panels.begin(), panels.end(),
              [](const Panel& x, const Panel& y) { return x.a < y.a; });
    double s = 0.0, comp = 0.0;
    for (const Panel& p : panels) {
        const double v = get(p);
        const double t = s + v;
        comp += std::fabs(s) >= std::fabs(v) ? (s - t) + v : (v - t) + s;
        s = t;
    }
    return s + comp;
}

} // namespace

QuadResult integrate(const Integrand& f, double a, double b, const QuadOptions& opts) {
    if (!(b > a)) {
        if (b == a) return {0.0, 0.0, 0};
        throw NumericalError("quadrature: invalid interval");
    }

    std::vector<double> edges{a, b};
    for (double x : opts.breakpoints)
        if (x > a && x < b) edges.push_back(x);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    std::priority_queue<Panel> queue;
    std::vector<Panel> frozen;  // panels at floating-point resolution
    double total = 0.0, total_err = 0.0;
    std::size_t count = 0;
    auto push = [&](double lo, double hi) {
        Panel p = evaluate_panel(f, lo, hi);
        total += p.value;
        total_err += p.error;
        queue.push(p);
        ++count;
    };

    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        const double lo = edges[i], hi = edges[i + 1];
        std::size_t n = 1;
        if (opts.max_width < hi - lo)
            n = static_cast<std::size_t>(std::ceil((hi - lo) / opts.max_width));
        if (count + n > opts.max_panels)
            throw NumericalError("quadrature: width cap requires more than " +
                                 std::to_string(opts.max_panels) + " initial panels");
        for (std::size_t k = 0; k < n; ++k)
            push(lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n),
                 lo + (hi - lo) * static_cast<double>(k + 1) / static_cast<double>(n));
    }

    auto tolerance = [&] { return std::max(opts.abs_tol, opts.rel_tol * std::fabs(total)); };
    while (total_err > tolerance() && count < opts.max_panels && !queue.empty()) {
        Panel worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            frozen.push_back(worst);
            continue;
        }
        total -= worst.value;
        total_err -= worst.error;
        push(worst.a, mid);
        push(mid, worst.b);
    }

    if (total_err > tolerance()) {
        const Panel worst = queue.empty() ? frozen.front() : queue.top();
        char msg[160];
        std::snprintf(msg, sizeof msg,
                      "quadrature: tolerance not reached (err=%.3e, tol=%.3e), worst panel "
                      "[%.6g, %.6g]",
                      total_err, tolerance(), worst.a, worst.b);
        throw NumericalError(msg);
    }

    std::vector<Panel> finals = std::move(frozen);
    finals.reserve(finals.size() + queue.size());
    while (!queue.empty()) {
        finals.push_back(queue.top());
        queue.pop();
    }
    const double value = compensated_sum(finals, [](const Panel& p) { return p.value; });
    return {value, total_err, count};
}

QuadResult integrate_tail(const Integrand& f, double a, const QuadOptions& opts) {
    if (!(a > 0.0))
        throw NumericalError("integrate_tail: lower limit must be > 0");
    // w = 1/u maps [a, inf) to (0, 1/a]; GK nodes never touch u = 0.
    auto g = [&f](double u) { return f(1.0 / u) / (u * u); };
    QuadOptions inner = opts;
    inner.breakpoints.clear();
    inner.max_width = std::numeric_limits<double>::infinity();
    return integrate(g, 0.0, 1.0 / a, inner);
}

} // namespace zenobath

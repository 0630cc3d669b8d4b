#include "zenobath/damped_fit.hpp"

#include <algorithm>
#include <cmath>

#include "zenobath/errors.hpp"

namespace zenobath {
namespace {

struct Profiled {
    double a, b, cost;  // cost = sum of squared residuals
};

// Solve the linear amplitudes for fixed (freq, rate).
Profiled profile(const std::vector<double>& t, const std::vector<double>& y, double freq,
                 double rate) {
    double cc = 0, cs = 0, ss = 0, cy = 0, sy = 0, yy = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        const double e = std::exp(-rate * t[i]);
        const double c = e * std::cos(freq * t[i]);
        const double s = e * std::sin(freq * t[i]);
        cc += c * c;
        cs += c * s;
        ss += s * s;
        cy += c * y[i];
        sy += s * y[i];
        yy += y[i] * y[i];
    }
    const double det = cc * ss - cs * cs;
    if (std::fabs(det) < 1e-300) return {0.0, 0.0, yy};
    const double a = (ss * cy - cs * sy) / det;
    const double b = (cc * sy - cs * cy) / det;
    double cost = yy - a * cy - b * sy;
    return {a, b, std::max(cost, 0.0)};
}

} // namespace

DampedCosineFit fit_damped_cosine(const std::vector<double>& times,
                                  const std::vector<double>& values) {
    const std::size_t n = times.size();
    if (n != values.size() || n < 8)
        throw ConfigError("fit_damped_cosine: need >= 8 samples with matching lengths");
    const double span = times.back() - times.front();
    if (!(span > 0.0)) throw ConfigError("fit_damped_cosine: times must be increasing");

    // Frequency seed from zero crossings, decay seed from a small grid.
    std::size_t crossings = 0;
    for (std::size_t i = 1; i < n; ++i)
        if ((values[i - 1] < 0.0) != (values[i] < 0.0)) ++crossings;
    const double freq_seed =
        crossings > 0 ? 3.14159265358979323846 * static_cast<double>(crossings) / span : 1.0;

    double best_freq = freq_seed, best_rate = 0.0;
    double best_cost = profile(times, values, best_freq, best_rate).cost;
    for (int fi = -20; fi <= 20; ++fi) {
        const double f = freq_seed * (1.0 + 0.01 * fi);
        for (int ri = 0; ri <= 30; ++ri) {
            const double r = 5.0 * static_cast<double>(ri) / (30.0 * span) * 4.0;
            const double c = profile(times, values, f, r).cost;
            if (c < best_cost) {
                best_cost = c;
                best_freq = f;
                best_rate = r;
            }
        }
    }

    // Gauss-Newton on (freq, rate) with the amplitudes re-profiled each step.
    double freq = best_freq, rate = best_rate;
    Profiled p = profile(times, values, freq, rate);
    for (int iter = 0; iter < 200; ++iter) {
        double j11 = 0, j12 = 0, j22 = 0, g1 = 0, g2 = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const double e = std::exp(-rate * times[i]);
            const double c = std::cos(freq * times[i]);
            const double s = std::sin(freq * times[i]);
            const double model = e * (p.a * c + p.b * s);
            const double r = values[i] - model;
            const double dfreq = e * times[i] * (p.a * s - p.b * c);  // d(resid)/d(freq)
            const double drate = e * times[i] * (p.a * c + p.b * s);  // d(resid)/d(rate)
            j11 += dfreq * dfreq;
            j12 += dfreq * drate;
            j22 += drate * drate;
            g1 += dfreq * r;
            g2 += drate * r;
        }
        const double det = j11 * j22 - j12 * j12;
        if (!(std::fabs(det) > 1e-300)) break;
        double dfreq = -(j22 * g1 - j12 * g2) / det;
        double drate = -(j11 * g2 - j12 * g1) / det;
        double step = 1.0;
        Profiled trial = p;
        double tf = freq, tr = rate;
        for (int ls = 0; ls < 40; ++ls) {
            tf = freq + step * dfreq;
            tr = rate + step * drate;
            trial = profile(times, values, tf, tr);
            if (trial.cost <= p.cost) break;
            step *= 0.5;
        }
        if (trial.cost > p.cost)
            break;  // no descent direction left
        const bool done = p.cost - trial.cost <= 1e-15 * (1.0 + p.cost) &&
                          std::fabs(step * dfreq) <= 1e-12 * (1.0 + std::fabs(freq));
        freq = tf;
        rate = tr;
        p = trial;
        if (done) break;
    }

    if (!std::isfinite(freq) || !std::isfinite(rate) || !std::isfinite(p.cost))
        throw NumericalError("fit_damped_cosine: fit diverged");

    if (freq < 0.0) {  // cos is even in freq; report the positive branch
        freq = -freq;
        p.b = -p.b;
    }
    const double amplitude = std::hypot(p.a, p.b);
    const double phase = amplitude > 0.0 ? std::atan2(-p.b, p.a) : 0.0;
    return {freq, rate, amplitude, phase, std::sqrt(p.cost / static_cast<double>(n))};
}

} // namespace zenobath

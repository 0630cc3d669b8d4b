#pragma once

#include <vector>

namespace zenobath {

// Least-squares fit of A exp(-rate t) cos(freq t + phase).
struct DampedCosineFit {
    double freq;
    double rate;
    double amplitude;
    double phase;
    double residual_norm;  // rms of the residual
};

// The linear amplitudes are profiled out (the model is linear in
// A cos(phase), A sin(phase)), leaving a 2-parameter search over
// (freq, rate): coarse grid then Gauss-Newton polish.
DampedCosineFit fit_damped_cosine(const std::vector<double>& times,
                                  const std::vector<double>& values);

} // namespace zenobath

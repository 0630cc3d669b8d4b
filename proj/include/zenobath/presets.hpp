#pragma once

#include <string>
#include <vector>

#include "zenobath/config.hpp"

namespace zenobath {

// One concrete case of a figure preset: which bath, which task, under which
// output label.
struct PresetCase {
    std::string label;
    BathKind kind;
    double alpha;
    double scale;  // lambda or omega_c
    Task task;
};

// The paper's eight parameter sets, grouped per figure. Unknown names throw
// ConfigError.
std::vector<PresetCase> expand_preset(const std::string& name);

std::vector<std::string> preset_names();

} // namespace zenobath

#include "zenobath/presets.hpp"

#include "zenobath/errors.hpp"

namespace zenobath {

namespace {

// Weak pair: Lorentzian(0.01, 0.09) / Ohmic(0.01, 10).
// Strong pair: Lorentzian(0.1, 0.3) / Ohmic(0.1, 10).
std::vector<PresetCase> pair_cases(const std::string& stem, bool strong, Task task) {
    const double a = strong ? 0.1 : 0.01;
    const double lam = strong ? 0.3 : 0.09;
    return {
        {stem + "_lorentzian", BathKind::Lorentzian, a, lam, task},
        {stem + "_ohmic", BathKind::OhmicDrude, a, 10.0, task},
    };
}

} // namespace

std::vector<PresetCase> expand_preset(const std::string& name) {
    if (name == "fig1") {
        auto cases = pair_cases("fig1a", false, Task::Spectrum);
        auto strong = pair_cases("fig1b", true, Task::Spectrum);
        cases.insert(cases.end(), strong.begin(), strong.end());
        return cases;
    }
    if (name == "fig2a") return pair_cases("fig2a", false, Task::Dynamics);
    if (name == "fig2b") return pair_cases("fig2b", true, Task::Dynamics);
    if (name == "fig3") return pair_cases("fig3", false, Task::Zeno);
    if (name == "fig4") return pair_cases("fig4", true, Task::Zeno);
    throw ConfigError("unknown preset '" + name + "' (expected fig1|fig2a|fig2b|fig3|fig4)");
}

std::vector<std::string> preset_names() { return {"fig1", "fig2a", "fig2b", "fig3", "fig4"}; }

} // namespace zenobath

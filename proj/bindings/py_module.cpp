#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zenobath/bath.hpp"
#include "zenobath/config.hpp"
#include "zenobath/damped_fit.hpp"
#include "zenobath/dynamics.hpp"
#include "zenobath/errors.hpp"
#include "zenobath/oracle.hpp"
#include "zenobath/renorm.hpp"
#include "zenobath/self_energy.hpp"
#include "zenobath/version.hpp"
#include "zenobath/zeno.hpp"

namespace py = pybind11;
using namespace zenobath;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Qubit decoherence dynamics and quantum Zeno decay rates for "
              "low-frequency (Lorentzian) and high-frequency (Ohmic-Drude) baths.";
    m.attr("__version__") = kVersion;

    py::register_exception<ConfigError>(m, "ZbConfigError", PyExc_ValueError);
    py::register_exception<MethodValidityError>(m, "MethodValidityError", PyExc_RuntimeError);
    py::register_exception<NumericalError>(m, "ZbNumericalError", PyExc_RuntimeError);

    py::enum_<BathKind>(m, "BathKind")
        .value("Lorentzian", BathKind::Lorentzian)
        .value("OhmicDrude", BathKind::OhmicDrude);

    py::class_<BathSpec>(m, "BathSpec")
        .def_static("lorentzian", &BathSpec::lorentzian, py::arg("alpha"), py::arg("lambda_"))
        .def_static("ohmic_drude", &BathSpec::ohmic_drude, py::arg("alpha_oh"),
                    py::arg("omega_c"))
        .def_readonly("kind", &BathSpec::kind)
        .def_readonly("coupling", &BathSpec::coupling)
        .def_readonly("scale", &BathSpec::scale)
        .def("__repr__", &BathSpec::describe);

    m.def("spectral_density", &spectral_density, py::arg("bath"), py::arg("omega"));
    m.def("peak_frequency", &peak_frequency, py::arg("bath"));

    py::class_<Renormalization>(m, "Renormalization")
        .def_readonly("eta", &Renormalization::eta)
        .def_readonly("residual", &Renormalization::residual)
        .def_readonly("iterations", &Renormalization::iterations)
        .def_readonly("method", &Renormalization::method)
        .def_readonly("unique", &Renormalization::unique);

    m.def("eta_map", &eta_map, py::arg("bath"), py::arg("eta_trial"));
    m.def("solve_eta", py::overload_cast<const BathSpec&, double>(&solve_eta),
          py::arg("bath"), py::arg("tol") = 1e-12);
    m.def(
        "coupling_weight",
        [](double omega, double eta) {
            const CouplingWeight w = coupling_weight(omega, eta);
            return py::make_tuple(w.xi, w.weight);
        },
        py::arg("omega"), py::arg("eta"), "Returns (xi, weight).");

    m.def("decay_width", &decay_width, py::arg("bath"), py::arg("eta"), py::arg("omega"));
    m.def("level_shift", &level_shift, py::arg("bath"), py::arg("eta"), py::arg("omega"));
    m.def(
        "pv_integral",
        [](const BathSpec& b, double eta, double omega) { return pv_integral(b, eta, omega); },
        py::arg("bath"), py::arg("eta"), py::arg("omega"));

    py::enum_<ShiftClass>(m, "ShiftClass")
        .value("Blue", ShiftClass::Blue)
        .value("Red", ShiftClass::Red)
        .value("NoShift", ShiftClass::None);

    py::class_<DynamicsSeries>(m, "DynamicsSeries")
        .def_readonly("times", &DynamicsSeries::times)
        .def_readonly("values", &DynamicsSeries::values)
        .def_readonly("omega0", &DynamicsSeries::omega0)
        .def_readonly("gamma_pole", &DynamicsSeries::gamma_pole)
        .def_readonly("shift", &DynamicsSeries::shift)
        .def_readonly("eta", &DynamicsSeries::eta);

    m.def(
        "find_pole",
        [](const BathSpec& b, double eta) {
            const Pole p = find_pole(b, eta);
            return py::make_tuple(p.omega0, p.gamma);
        },
        py::arg("bath"), py::arg("eta"), "Returns (omega0, gamma_pole).");
    m.def("classify_shift", &classify_shift, py::arg("omega0"), py::arg("tol") = 1e-6);
    m.def(
        "sigma_x_series",
        [](const BathSpec& b, const std::vector<double>& times, unsigned jobs) {
            DynamicsSettings s;
            s.jobs = jobs;
            return sigma_x_series(b, times, s);
        },
        py::arg("bath"), py::arg("times"), py::arg("jobs") = 1);

    py::class_<DampedCosineFit>(m, "DampedCosineFit")
        .def_readonly("freq", &DampedCosineFit::freq)
        .def_readonly("rate", &DampedCosineFit::rate)
        .def_readonly("amplitude", &DampedCosineFit::amplitude)
        .def_readonly("phase", &DampedCosineFit::phase)
        .def_readonly("residual_norm", &DampedCosineFit::residual_norm);
    m.def("fit_damped_cosine", &fit_damped_cosine, py::arg("times"), py::arg("values"));

    py::enum_<Regime>(m, "Regime")
        .value("Zeno", Regime::Zeno)
        .value("AntiZeno", Regime::AntiZeno)
        .value("Neutral", Regime::Neutral);

    py::class_<ZenoCurve>(m, "ZenoCurve")
        .def_readonly("taus", &ZenoCurve::taus)
        .def_readonly("gamma", &ZenoCurve::gamma)
        .def_readonly("gamma_rwa", &ZenoCurve::gamma_rwa)
        .def_readonly("gamma0", &ZenoCurve::gamma0)
        .def_readonly("ratio", &ZenoCurve::ratio)
        .def_readonly("regime", &ZenoCurve::regime)
        .def_readonly("eta", &ZenoCurve::eta);

    m.def("kernel_F", &kernel_F, py::arg("omega"), py::arg("eta"), py::arg("tau"));
    m.def("interaction_f", &interaction_f, py::arg("omega"), py::arg("eta"));
    m.def(
        "gamma_tau",
        [](const BathSpec& b, double tau) {
            return gamma_tau(b, solve_eta(b).eta, tau);
        },
        py::arg("bath"), py::arg("tau"));
    m.def(
        "gamma_rwa_tau", [](const BathSpec& b, double tau) { return gamma_rwa_tau(b, tau); },
        py::arg("bath"), py::arg("tau"));
    m.def("gamma_0", &gamma_0, py::arg("bath"));
    m.def(
        "survival_probability",
        [](const BathSpec& b, double tau, std::size_t n) {
            return survival_probability(b, tau, n);
        },
        py::arg("bath"), py::arg("tau"), py::arg("n"));
    m.def(
        "zeno_scan",
        [](const BathSpec& b, const std::vector<double>& taus, unsigned jobs) {
            ZenoSettings s;
            s.jobs = jobs;
            return zeno_scan(b, taus, s);
        },
        py::arg("bath"), py::arg("taus"), py::arg("jobs") = 1);
    m.def("default_tau_grid", &default_tau_grid, py::arg("points") = 200,
          py::arg("tau_min") = 1e-2, py::arg("tau_max") = 20.0);

    py::enum_<Scheme>(m, "Scheme")
        .value("Linear", Scheme::Linear)
        .value("Logarithmic", Scheme::Logarithmic)
        .value("Auto", Scheme::Auto);

    py::class_<DiscreteBath>(m, "DiscreteBath")
        .def_readonly("omegas", &DiscreteBath::omegas)
        .def_readonly("gs", &DiscreteBath::gs)
        .def_readonly("omega_max", &DiscreteBath::omega_max)
        .def("recurrence_time", &DiscreteBath::recurrence_time)
        .def("__len__", &DiscreteBath::size);

    m.def("discretize", &discretize, py::arg("bath"), py::arg("n"), py::arg("omega_max"),
          py::arg("scheme") = Scheme::Auto);
    m.def(
        "oracle_eta", [](const DiscreteBath& d) { return oracle_eta(d).value; },
        py::arg("disc"));

    py::class_<OracleSolver>(m, "OracleSolver")
        .def(py::init<DiscreteBath>(), py::arg("disc"))
        .def_property_readonly("eta", &OracleSolver::eta)
        .def("sigma_x", &OracleSolver::sigma_x, py::arg("times"))
        .def("survival", &OracleSolver::survival, py::arg("tau"))
        .def("gamma", &OracleSolver::gamma, py::arg("tau"))
        .def("completeness", &OracleSolver::completeness)
        .def_property_readonly("eigenvalues", &OracleSolver::eigenvalues)
        .def_property_readonly("weights", &OracleSolver::weights);

    m.def("oracle_sigma_x", &oracle_sigma_x, py::arg("disc"), py::arg("times"));
    m.def("oracle_survival", &oracle_survival, py::arg("disc"), py::arg("tau"));
    m.def("oracle_gamma", &oracle_gamma, py::arg("disc"), py::arg("tau"));
}

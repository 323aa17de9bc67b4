#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <span>
#include <sstream>

#include "spinholo/errors.hpp"
#include "spinholo/gate_metrics.hpp"
#include "spinholo/holonomy_gate.hpp"
#include "spinholo/noise_lab.hpp"
#include "spinholo/propagation.hpp"
#include "spinholo/reports.hpp"
#include "spinholo/spin_system.hpp"

namespace py = pybind11;
using namespace spinholo;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Holonomic two-spin entangling gates driven through an ancilla spin.";

  auto error = py::register_exception<Error>(m, "Error");
  auto numerical = py::register_exception<NumericalError>(m, "NumericalError", error.ptr());
  auto input = py::register_exception<InputError>(m, "InputError", error.ptr());
  py::register_exception<NonHermitianInput>(m, "NonHermitianInput", numerical.ptr());
  py::register_exception<NonUnitaryInput>(m, "NonUnitaryInput", numerical.ptr());
  py::register_exception<NonUnitaryTarget>(m, "NonUnitaryTarget", numerical.ptr());
  py::register_exception<ZeroCoupling>(m, "ZeroCoupling", numerical.ptr());
  py::register_exception<OutOfRange>(m, "OutOfRange", numerical.ptr());
  py::register_exception<NonCanonicalInput>(m, "NonCanonicalInput", numerical.ptr());
  py::register_exception<NonCyclicPulse>(m, "NonCyclicPulse", numerical.ptr());
  py::register_exception<DimensionOverflow>(m, "DimensionOverflow", numerical.ptr());
  py::register_exception<ConfigError>(m, "ConfigError", input.ptr());
  py::register_exception<ParseError>(m, "ParseError", input.ptr());

  m.def("kron", &kron);
  m.def("expm_hermitian", &expm_hermitian, py::arg("h"), py::arg("scale"));
  m.def("unitarity_defect", &unitarity_defect);

  py::class_<ExchangeCouplings>(m, "ExchangeCouplings")
      .def(py::init<double, double, double, double>(), py::arg("j1"), py::arg("j2"),
           py::arg("d1") = 0.0, py::arg("d2") = 0.0)
      .def_readwrite("j1", &ExchangeCouplings::j1)
      .def_readwrite("j2", &ExchangeCouplings::j2)
      .def_readwrite("d1", &ExchangeCouplings::d1)
      .def_readwrite("d2", &ExchangeCouplings::d2)
      .def("omega", &ExchangeCouplings::omega)
      .def("__repr__", [](const ExchangeCouplings& c) {
        return "ExchangeCouplings(j1=" + std::to_string(c.j1) + ", j2=" + std::to_string(c.j2) +
               ", d1=" + std::to_string(c.d1) + ", d2=" + std::to_string(c.d2) + ")";
      });

  py::class_<PolarCouplings>(m, "PolarCouplings")
      .def(py::init<>())
      .def_readwrite("omega", &PolarCouplings::omega)
      .def_readwrite("theta", &PolarCouplings::theta)
      .def_readwrite("phi1", &PolarCouplings::phi1)
      .def_readwrite("phi2", &PolarCouplings::phi2);
  m.def("couplings_to_polar", &couplings_to_polar);
  m.def("polar_to_couplings", &polar_to_couplings);

  py::class_<HamiltonianSet>(m, "HamiltonianSet")
      .def_readonly("h_xy", &HamiltonianSet::h_xy)
      .def_readonly("h_dm", &HamiltonianSet::h_dm)
      .def_readonly("h_eff", &HamiltonianSet::h_eff)
      .def_readonly("w", &HamiltonianSet::w)
      .def_readonly("v0", &HamiltonianSet::v0)
      .def_readonly("v1", &HamiltonianSet::v1)
      .def_readonly("t_diag", &HamiltonianSet::t_diag)
      .def_readonly("polar", &HamiltonianSet::polar);
  m.def("build_hamiltonians", &build_hamiltonians);
  m.def("ancilla_zero_projector", &ancilla_zero_projector);

  py::enum_<PulseShape>(m, "PulseShape")
      .value("square", PulseShape::square)
      .value("gaussian", PulseShape::gaussian)
      .value("tabulated", PulseShape::tabulated);
  py::class_<PulsePlan>(m, "PulsePlan")
      .def(py::init<>())
      .def_readwrite("shape", &PulsePlan::shape)
      .def_readwrite("amplitude", &PulsePlan::amplitude)
      .def_readwrite("duration", &PulsePlan::duration)
      .def_readwrite("winding", &PulsePlan::winding)
      .def_readwrite("width", &PulsePlan::width)
      .def("envelope", &PulsePlan::envelope)
      .def("area", [](const PulsePlan& p, double t) { return pulse_area(p, t); })
      .def("total_area", [](const PulsePlan& p) { return total_area(p); });
  m.def("solve_cyclic", &solve_cyclic, py::arg("omega"), py::arg("amplitude") = 1.0,
        py::arg("winding") = 0);
  m.def("gaussian_with_area", &gaussian_with_area, py::arg("area"), py::arg("duration"),
        py::arg("width") = 0.125);
  m.def("propagator_closed_form", &propagator_closed_form, py::arg("hamiltonians"), py::arg("area"));
  m.def(
      "propagator_time_ordered",
      [](const CMatrix& generator, const PulsePlan& pulse, int steps) {
        const DrivenTerm term{generator, [&pulse](double t) { return pulse.envelope(t); }};
        return propagator_time_ordered(std::span(&term, 1), pulse.duration, steps);
      },
      py::arg("generator"), py::arg("pulse"), py::arg("steps") = kDefaultSteps);

  py::class_<RegisterGate>(m, "RegisterGate")
      .def_readonly("matrix", &RegisterGate::matrix)
      .def_readonly("leakage", &RegisterGate::leakage);
  m.def("make_register_gate", &make_register_gate);
  m.def("extract_register_gate", &extract_register_gate);
  m.def("analytic_entangler", &analytic_entangler, py::arg("theta"), py::arg("phi1") = 0.0,
        py::arg("phi2") = 0.0);

  py::class_<MakhlinInvariants>(m, "MakhlinInvariants")
      .def_readonly("g1", &MakhlinInvariants::g1)
      .def_readonly("g2", &MakhlinInvariants::g2);
  py::class_<WeylPoint>(m, "WeylPoint")
      .def(py::init<double, double, double>(), py::arg("c1"), py::arg("c2"), py::arg("c3"))
      .def_readwrite("c1", &WeylPoint::c1)
      .def_readwrite("c2", &WeylPoint::c2)
      .def_readwrite("c3", &WeylPoint::c3)
      .def("as_tuple", [](const WeylPoint& w) { return py::make_tuple(w.c1, w.c2, w.c3); });
  py::enum_<EntanglerClass>(m, "EntanglerClass")
      .value("local", EntanglerClass::local)
      .value("entangling", EntanglerClass::entangling)
      .value("perfect", EntanglerClass::perfect)
      .value("special_perfect", EntanglerClass::special_perfect);
  py::class_<GateMetrics>(m, "GateMetrics")
      .def_readonly("g1", &GateMetrics::g1)
      .def_readonly("g2", &GateMetrics::g2)
      .def_readonly("weyl", &GateMetrics::weyl)
      .def_readonly("ep", &GateMetrics::ep)
      .def_readonly("entangler_class", &GateMetrics::entangler_class);
  m.def("makhlin_invariants", &makhlin_invariants);
  m.def("weyl_coordinates", &weyl_coordinates);
  m.def("canonicalize_weyl", &canonicalize_weyl);
  m.def("classify_entangler", &classify_entangler);
  m.def("entangling_power", &entangling_power);
  m.def("analyze_gate", &analyze_gate);

  py::class_<HyperfineBath>(m, "HyperfineBath")
      .def(py::init<>())
      .def_readwrite("nuclei_per_electron", &HyperfineBath::nuclei_per_electron)
      .def_readwrite("total_coupling", &HyperfineBath::total_coupling)
      .def_readwrite("op_time", &HyperfineBath::op_time)
      .def_readwrite("dimension_cap", &HyperfineBath::dimension_cap)
      .def("lambda_", &HyperfineBath::lambda)
      .def("with_lambda", &HyperfineBath::with_lambda)
      .def("total_dimension", &HyperfineBath::total_dimension);
  py::class_<SweepTable>(m, "SweepTable")
      .def_readonly("kind", &SweepTable::kind)
      .def_readonly("axis_names", &SweepTable::axis_names)
      .def_readonly("axes", &SweepTable::axes)
      .def_readonly("fidelity", &SweepTable::fidelity)
      .def_readonly("parameters", &SweepTable::parameters);

  m.def("process_fidelity",
        py::overload_cast<const RegisterGate&, const RegisterGate&>(&process_fidelity));
  m.def(
      "dm_fidelity",
      [](double j1, double j2, double d1_ratio, double d2_ratio, const PulsePlan& pulse) {
        return dm_fidelity(j1, j2, {d1_ratio, d2_ratio}, pulse);
      },
      py::arg("j1"), py::arg("j2"), py::arg("d1_ratio"), py::arg("d2_ratio"), py::arg("pulse"));
  m.def("dm_sweep", &dm_sweep);
  m.def(
      "amplitude_noise_fidelity",
      [](const ExchangeCouplings& c, double r1, double r2, const PulsePlan& pulse, int steps) {
        return amplitude_noise_fidelity(c, {r1, r2}, pulse, steps);
      },
      py::arg("couplings"), py::arg("ratio1"), py::arg("ratio2"), py::arg("pulse"),
      py::arg("steps") = kDefaultSteps);
  m.def("dephasing_fidelity", &dephasing_fidelity, py::arg("bath"), py::arg("couplings"),
        py::arg("steps") = kDefaultSteps);
  m.def("dephasing_sweep", &dephasing_sweep, py::arg("bath"), py::arg("lambdas"),
        py::arg("couplings"), py::arg("steps") = kDefaultSteps);

  m.def("parse_matrix", &reports::parse_matrix);
  m.def(
      "run_cli",
      [](std::vector<std::string> args) {
        args.insert(args.begin(), "spinholo");
        std::vector<const char*> argv;
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        const int code = reports::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}

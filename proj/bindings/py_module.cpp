#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "optdes/run.hpp"

namespace py = pybind11;
using namespace optdes;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Approximate D-/A-optimal continuous experimental designs";

  py::register_exception<Error>(m, "OptdesError");

  py::enum_<Criterion>(m, "Criterion")
      .value("D", Criterion::D)
      .value("A", Criterion::A);

  py::class_<ModelSpec>(m, "ModelSpec")
      .def_property_readonly("dimension", &ModelSpec::dimension)
      .def_property_readonly("p", &ModelSpec::p)
      .def_property_readonly("terms", [](const ModelSpec& s) {
        std::vector<std::vector<int>> out;
        for (const auto& t : s.terms()) out.push_back(t.exponents);
        return out;
      });

  m.def("full_quadratic_basis", &full_quadratic_basis, py::arg("d"));
  m.def("linear_basis_no_intercept", &linear_basis_no_intercept, py::arg("d"));
  m.def("eval_regressor", &eval_regressor, py::arg("model"), py::arg("w"));

  py::class_<QuadratureGrid>(m, "QuadratureGrid")
      .def_readonly("dimension", &QuadratureGrid::dimension)
      .def_readonly("nodes", &QuadratureGrid::nodes)
      .def_readonly("measures", &QuadratureGrid::measures)
      .def_readonly("total_measure", &QuadratureGrid::total_measure)
      .def_property_readonly("size", &QuadratureGrid::size);

  m.def("grid_box", &grid_box, py::arg("intervals"), py::arg("n_per_dim"),
        py::arg("node_cap") = kDefaultNodeCap);
  m.def("grid_box_closed", &grid_box_closed, py::arg("intervals"),
        py::arg("n_per_dim"), py::arg("node_cap") = kDefaultNodeCap);
  m.def(
      "grid_disc",
      [](std::pair<double, double> center, double radius, int n_r, int n_theta,
         long cap) {
        return grid_disc(Eigen::Vector2d(center.first, center.second), radius,
                         n_r, n_theta, cap);
      },
      py::arg("center"), py::arg("radius"), py::arg("n_r"), py::arg("n_theta"),
      py::arg("node_cap") = kDefaultNodeCap);

  py::class_<DesignDensity>(m, "DesignDensity")
      .def_readonly("values", &DesignDensity::values)
      .def("mass", &DesignDensity::mass);

  m.def("uniform_density", &uniform_density);
  m.def("info_matrix_values",
        [](const DesignDensity& f, const QuadratureGrid& g,
           const ModelSpec& mo) { return info_matrix(f, g, mo).m(); });
  m.def("d_sensitivity",
        py::overload_cast<const DesignDensity&, const QuadratureGrid&,
                          const ModelSpec&>(&d_sensitivity));
  m.def("a_sensitivity",
        py::overload_cast<const DesignDensity&, const QuadratureGrid&,
                          const ModelSpec&>(&a_sensitivity));
  m.def("criterion_value",
        py::overload_cast<Criterion, const DesignDensity&,
                          const QuadratureGrid&, const ModelSpec&>(
            &criterion_value));
  m.def("d_step", &d_step);
  m.def("a_step", &a_step);

  py::class_<SolveOptions>(m, "SolveOptions")
      .def(py::init<>())
      .def_readwrite("criterion", &SolveOptions::criterion)
      .def_readwrite("max_iters", &SolveOptions::max_iters)
      .def_readwrite("l1_tol", &SolveOptions::l1_tol)
      .def_readwrite("cert_tol", &SolveOptions::cert_tol)
      .def_readwrite("record_history", &SolveOptions::record_history);

  py::class_<IterationRecord>(m, "IterationRecord")
      .def_readonly("iter", &IterationRecord::iter)
      .def_readonly("criterion_value", &IterationRecord::criterion_value)
      .def_readonly("l1_step", &IterationRecord::l1_step)
      .def_readonly("kl_step", &IterationRecord::kl_step)
      .def_readonly("cert_gap", &IterationRecord::cert_gap);

  py::enum_<TerminationReason>(m, "TerminationReason")
      .value("CertTol", TerminationReason::CertTol)
      .value("L1Tol", TerminationReason::L1Tol)
      .value("MaxIters", TerminationReason::MaxIters)
      .value("MonotonicityViolation",
             TerminationReason::MonotonicityViolation);

  py::class_<SupportPoint>(m, "SupportPoint")
      .def_readonly("location", &SupportPoint::location)
      .def_readonly("weight", &SupportPoint::weight)
      .def_readonly("n_cells", &SupportPoint::n_cells)
      .def_readonly("peak_density", &SupportPoint::peak_density);

  py::class_<SolveReport>(m, "SolveReport")
      .def_readonly("final_density", &SolveReport::final_density)
      .def_readonly("history", &SolveReport::history)
      .def_readonly("converged", &SolveReport::converged)
      .def_readonly("termination_reason", &SolveReport::termination_reason)
      .def_readonly("support", &SolveReport::support)
      .def_readonly("iterations", &SolveReport::iterations)
      .def_readonly("final_value", &SolveReport::final_value)
      .def_readonly("final_cert_gap", &SolveReport::final_cert_gap)
      .def_readonly("a_monotonicity_violations",
                    &SolveReport::a_monotonicity_violations);

  py::enum_<VdmStepRule>(m, "VdmStepRule")
      .value("Harmonic", VdmStepRule::Harmonic)
      .value("LineSearch", VdmStepRule::LineSearch);

  m.def("solve", &solve, py::arg("model"), py::arg("grid"), py::arg("options"));
  m.def("solve_vdm_d", &solve_vdm_d, py::arg("model"), py::arg("grid"),
        py::arg("options"), py::arg("rule") = VdmStepRule::LineSearch);

  py::class_<Certificate>(m, "Certificate")
      .def_readonly("criterion", &Certificate::criterion)
      .def_readonly("gap", &Certificate::gap)
      .def_readonly("argmax_node", &Certificate::argmax_node)
      .def_readonly("bound", &Certificate::bound)
      .def_readonly("sensitivity_max", &Certificate::sensitivity_max);

  m.def("certify", &certify);
  m.def("extract_support", &extract_support, py::arg("f"), py::arg("grid"),
        py::arg("mass_floor") = 1e-4);
  m.def("ring_uniformity", &ring_uniformity);

  py::class_<PinskerCheck>(m, "PinskerCheck")
      .def_readonly("l1", &PinskerCheck::l1)
      .def_readonly("kl", &PinskerCheck::kl)
      .def_readonly("holds", &PinskerCheck::holds);
  m.def("pinsker_check", &pinsker_check);
}

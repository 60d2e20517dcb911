#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "normsplit/duality.hpp"
#include "normsplit/perturb.hpp"
#include "normsplit/scenarios.hpp"
#include "normsplit/splitting.hpp"

namespace py = pybind11;
using namespace normsplit;

namespace {

py::dict oracle_dict(const OracleResult& r) {
  py::dict d;
  d["v"] = r.v;
  d["v_reverse"] = r.v_reverse;
  d["normal_solution"] = r.normal_solution;
  d["solution_exists"] = r.solution_exists;
  d["provenance"] = r.provenance;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Normal solutions of monotone inclusions via the Douglas-Rachford operator";

  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", PyExc_ValueError);
  py::register_exception<PreconditionViolation>(m, "PreconditionViolation", PyExc_ValueError);
  py::register_exception<SingularSystem>(m, "SingularSystem", PyExc_ArithmeticError);
  py::register_exception<InconsistentSystem>(m, "InconsistentSystem", PyExc_ArithmeticError);
  py::register_exception<CertificateFailure>(m, "CertificateFailure", PyExc_RuntimeError);

  py::class_<ProjectableSet>(m, "ProjectableSet")
      .def_static("box", &ProjectableSet::box, py::arg("lo"), py::arg("hi"))
      .def_static("ball", &ProjectableSet::ball, py::arg("center"), py::arg("radius"))
      .def_static("affine_subspace", &ProjectableSet::affine_subspace, py::arg("anchor"),
                  py::arg("basis"))
      .def_static("halfspace", &ProjectableSet::halfspace, py::arg("normal"), py::arg("offset"))
      .def_static("epigraph_exp", &ProjectableSet::epigraph_exp, py::arg("beta"))
      .def_property_readonly("dim", &ProjectableSet::dim)
      .def("project", [](const ProjectableSet& s, const Vector& x) { return project(s, x); });

  py::class_<OperatorSpec>(m, "Operator")
      .def_static("normal_cone", &OperatorSpec::normal_cone)
      .def_static("affine_monotone", &OperatorSpec::affine_monotone, py::arg("M"), py::arg("a"))
      .def_static("constant_valued", &OperatorSpec::constant_valued)
      .def_static("zero", &OperatorSpec::zero)
      .def_static("inverse", &OperatorSpec::inverse)
      .def_static("flip_both", &OperatorSpec::flip_both)
      .def_static("inner_shift", &OperatorSpec::inner_shift)
      .def_static("outer_shift", &OperatorSpec::outer_shift)
      .def_property_readonly("dim", &OperatorSpec::dim)
      .def("resolvent", [](const OperatorSpec& op, const Vector& x) { return resolvent(op, x); })
      .def("reflected_resolvent",
           [](const OperatorSpec& op, const Vector& x) { return reflected_resolvent(op, x); })
      .def("contains", &membership, py::arg("x"), py::arg("xstar"), py::arg("tol") = kTolCert)
      .def("__repr__", &describe);

  m.def("calculus_identity_pair", &calculus_identity_pair, py::arg("index"), py::arg("op"),
        py::arg("w"));

  py::class_<OperatorPair>(m, "OperatorPair")
      .def(py::init<OperatorSpec, OperatorSpec>())
      .def(py::init<OperatorSpec, OperatorSpec, Eigen::Index>())
      .def_property_readonly("A", &OperatorPair::a)
      .def_property_readonly("B", &OperatorPair::b)
      .def_property_readonly("dim", &OperatorPair::dim)
      .def("swapped", &OperatorPair::swapped);

  py::class_<SolverOptions>(m, "SolverOptions")
      .def(py::init<>())
      .def_readwrite("max_iter", &SolverOptions::max_iter)
      .def_readwrite("tol_v", &SolverOptions::tol_v)
      .def_readwrite("tol_fix", &SolverOptions::tol_fix)
      .def_readwrite("window", &SolverOptions::window)
      .def_readwrite("r_max", &SolverOptions::r_max)
      .def_readwrite("tol_cert", &SolverOptions::tol_cert)
      .def_readwrite("x0", &SolverOptions::x0);

  py::class_<DisplacementEstimate>(m, "DisplacementEstimate")
      .def_readonly("v", &DisplacementEstimate::v)
      .def_readonly("v_cesaro", &DisplacementEstimate::v_cesaro)
      .def_readonly("v_residual", &DisplacementEstimate::v_residual)
      .def_readonly("iterations", &DisplacementEstimate::iterations)
      .def_readonly("window_converged", &DisplacementEstimate::window_converged);

  py::class_<SolveReport>(m, "SolveReport")
      .def_property_readonly("status", [](const SolveReport& r) { return to_string(r.status); })
      .def_readonly("w", &SolveReport::w)
      .def_readonly("v_estimate", &SolveReport::v_estimate)
      .def_readonly("v_cesaro", &SolveReport::v_cesaro)
      .def_readonly("v_residual", &SolveReport::v_residual)
      .def_readonly("normal_solution", &SolveReport::normal_solution)
      .def_readonly("governing_point", &SolveReport::governing_point)
      .def_readonly("dual_solution", &SolveReport::dual_solution)
      .def_property_readonly("certified",
                             [](const SolveReport& r) { return r.certificates.passed(); })
      .def_readonly("fixed_point_residual", &SolveReport::fixed_point_residual)
      .def_readonly("iterations_used", &SolveReport::iterations_used);

  m.def("dr_apply", &dr_apply, py::arg("pair"), py::arg("x"));
  m.def("dr_map_shifted", &dr_map_shifted, py::arg("pair"), py::arg("w"), py::arg("x"));
  m.def("estimate_v", &estimate_v, py::arg("pair"), py::arg("x0"),
        py::arg("opts") = SolverOptions{});
  m.def("solve_perturbed", &solve_perturbed, py::arg("pair"), py::arg("w"),
        py::arg("opts") = SolverOptions{});
  m.def("solve_normal", &solve_normal, py::arg("pair"), py::arg("opts") = SolverOptions{});
  m.def("range_witness", &range_witness, py::arg("pair"), py::arg("z"),
        py::arg("tol") = kTolCert);

  py::class_<PrimalDualPair>(m, "PrimalDualPair")
      .def(py::init<Vector, Vector, Vector>(), py::arg("z"), py::arg("k"), py::arg("w"))
      .def_readonly("z", &PrimalDualPair::z)
      .def_readonly("k", &PrimalDualPair::k)
      .def_readonly("w", &PrimalDualPair::w);
  m.def("dual_pair", &dual_pair);
  m.def("psi", &psi);
  m.def("psi_inv", &psi_inv, py::arg("pair"), py::arg("x"), py::arg("w"),
        py::arg("tol_fix") = SolverOptions{}.tol_fix, py::arg("tol_cert") = kTolCert);

  py::class_<Scenario>(m, "Scenario")
      .def_readonly("name", &Scenario::name)
      .def_readonly("description", &Scenario::description)
      .def_readonly("pair", &Scenario::pair)
      .def_readonly("tolerance", &Scenario::tolerance)
      .def("oracle", [](const Scenario& s) { return oracle_dict(s.oracle()); })
      .def("solution_error", [](const Scenario& s, const Vector& z) { return s.solution_error(z); });
  m.def("scenario_names", &scenario_names);
  m.def("make_scenario", &make_scenario);
  m.def("affine_qp_oracle", &affine_qp_oracle, py::arg("L"), py::arg("a"), py::arg("M"),
        py::arg("b"));
}

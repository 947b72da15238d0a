// Python bindings for the core operations.  Vectors cross the boundary as
// 1-d complex numpy arrays, sequences as lists of them.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "framekz/cholesky.hpp"
#include "framekz/hilbert.hpp"
#include "framekz/kaczmarz.hpp"
#include "framekz/synthesis.hpp"
#include "framekz/triangular.hpp"
#include "framekz/types.hpp"

namespace py = pybind11;
using namespace framekz;

namespace {

Tolerances make_tolerances(double eps_unit, double eps_herm, double eps_rank,
                           double eps_eig, double eps_id) {
  Tolerances tol{eps_unit, eps_herm, eps_rank, eps_eig, eps_id};
  tol.require_valid();
  return tol;
}

}  // namespace

PYBIND11_MODULE(_framekz, m) {
  m.doc() =
      "Kaczmarz auxiliary sequences, normalized Bessel / tight-frame "
      "synthesis, and pivoted semidefinite Cholesky factorization.";

  py::register_exception<ValidationError>(m, "ValidationError");

  py::class_<Tolerances>(m, "Tolerances")
      .def(py::init(&make_tolerances), py::arg("eps_unit") = 1e-10,
           py::arg("eps_herm") = 1e-10, py::arg("eps_rank") = 1e-9,
           py::arg("eps_eig") = 1e-9, py::arg("eps_id") = 1e-8)
      .def_readwrite("eps_unit", &Tolerances::eps_unit)
      .def_readwrite("eps_herm", &Tolerances::eps_herm)
      .def_readwrite("eps_rank", &Tolerances::eps_rank)
      .def_readwrite("eps_eig", &Tolerances::eps_eig)
      .def_readwrite("eps_id", &Tolerances::eps_id)
      .def("__repr__", [](const Tolerances& t) {
        std::ostringstream os;
        os << "Tolerances(eps_unit=" << t.eps_unit << ", eps_herm=" << t.eps_herm
           << ", eps_rank=" << t.eps_rank << ", eps_eig=" << t.eps_eig
           << ", eps_id=" << t.eps_id << ")";
        return os.str();
      });

  py::class_<Violation>(m, "Violation")
      .def_readonly("name", &Violation::name)
      .def_readonly("margin", &Violation::margin)
      .def("__repr__", [](const Violation& v) {
        std::ostringstream os;
        os << "Violation(" << v.name << " = " << v.margin << ")";
        return os.str();
      });

  py::enum_<SynthesisMethod>(m, "SynthesisMethod")
      .value("triangular", SynthesisMethod::triangular)
      .value("admissible", SynthesisMethod::admissible);

  py::enum_<SequenceKind>(m, "SequenceKind")
      .value("units", SequenceKind::units)
      .value("bessel", SequenceKind::bessel);

  py::class_<KaczmarzTrace>(m, "KaczmarzTrace")
      .def_readonly("iterates", &KaczmarzTrace::iterates)
      .def_readonly("residual_norms", &KaczmarzTrace::residual_norms)
      .def_readonly("coefficients", &KaczmarzTrace::coefficients)
      .def_readonly("defect", &KaczmarzTrace::defect);

  py::class_<TriangularPair>(m, "TriangularPair")
      .def_readonly("m", &TriangularPair::m)
      .def_readonly("u", &TriangularPair::u)
      .def("size", &TriangularPair::size);

  py::class_<BesselValidation>(m, "BesselValidation")
      .def_readonly("ok", &BesselValidation::ok)
      .def_readonly("vectors", &BesselValidation::vectors)
      .def_readonly("g0_norm_error", &BesselValidation::g0_norm_error)
      .def_readonly("g0_orth_error", &BesselValidation::g0_orth_error)
      .def_readonly("contraction_excess", &BesselValidation::contraction_excess)
      .def_readonly("violations", &BesselValidation::violations);

  py::class_<KernelEvent>(m, "KernelEvent")
      .def_readonly("step", &KernelEvent::step)
      .def_readonly("kernel_dim", &KernelEvent::kernel_dim)
      .def_readonly("containment_residual", &KernelEvent::containment_residual)
      .def_readonly("y_norm", &KernelEvent::y_norm)
      // trailing underscore: `lambda` is a python keyword
      .def_readonly("lambda_", &KernelEvent::lambda);

  py::class_<SynthesisResult>(m, "SynthesisResult")
      .def_readonly("units", &SynthesisResult::units)
      .def_readonly("method", &SynthesisResult::method)
      .def_readonly("max_unit_norm_error", &SynthesisResult::max_unit_norm_error)
      .def_readonly("max_recurrence_error", &SynthesisResult::max_recurrence_error)
      .def_readonly("unique", &SynthesisResult::unique)
      .def_readonly("kernel_events", &SynthesisResult::kernel_events);

  py::class_<StabilityReport>(m, "StabilityReport")
      .def_readonly("stable_through", &StabilityReport::stable_through)
      .def_readonly("max_tested", &StabilityReport::max_tested)
      .def_readonly("consecutive_overlaps", &StabilityReport::consecutive_overlaps)
      .def("stable", &StabilityReport::stable);

  py::class_<PivotSequence>(m, "PivotSequence")
      .def_readonly("indices", &PivotSequence::indices)
      .def_readonly("deltas", &PivotSequence::deltas)
      .def("rank", &PivotSequence::rank);

  py::class_<CholeskyFactor>(m, "CholeskyFactor")
      .def_readonly("v", &CholeskyFactor::v)
      .def_readonly("rank", &CholeskyFactor::rank)
      .def_readonly("pivots", &CholeskyFactor::pivots);

  // Hilbert-space basics.
  m.def("inner", &inner, py::arg("u"), py::arg("v"),
        "Inner product, conjugate-linear in the second slot.");
  m.def("gram", &gram, py::arg("vs"));
  m.def("operator_norm", &operator_norm, py::arg("m"));
  m.def("is_contraction", &is_contraction, py::arg("m"),
        py::arg("tol") = Tolerances{});
  m.def("is_projection", &is_projection, py::arg("m"),
        py::arg("tol") = Tolerances{});
  m.def("invert_unit_lower", &invert_unit_lower, py::arg("l"));
  m.def("max_abs", &max_abs, py::arg("m"));

  // Kaczmarz iteration and the auxiliary sequence.
  m.def("check_unit_sequence", &check_unit_sequence, py::arg("es"),
        py::arg("tol") = Tolerances{});
  m.def("auxiliary_sequence", &auxiliary_sequence, py::arg("es"),
        py::arg("tol") = Tolerances{},
        "g_0 = e_0, g_n = e_n - sum_{i<n} <e_n, e_i> g_i.");
  m.def("run_kaczmarz", &run_kaczmarz, py::arg("x"), py::arg("es"),
        py::arg("tol") = Tolerances{});
  m.def("partial_sum_matrix", &partial_sum_matrix, py::arg("es"), py::arg("gs"),
        py::arg("n"));
  m.def("projection_product", &projection_product, py::arg("es"), py::arg("n"));
  m.def("energy_identity_residual", &energy_identity_residual, py::arg("x"),
        py::arg("trace"));
  m.def("defect", &defect, py::arg("x"), py::arg("gs"),
        "||x||^2 - sum_n |<x, g_n>|^2.");

  // Triangular characterization.
  m.def("strict_lower_gram", &strict_lower_gram, py::arg("es"),
        py::arg("tol") = Tolerances{});
  m.def("triangular_pair", &triangular_pair, py::arg("es"),
        py::arg("tol") = Tolerances{});
  m.def("coefficients_c", &coefficients_c, py::arg("pair"), py::arg("es"));
  m.def("gram_via_u", &gram_via_u, py::arg("pair"));
  m.def("identity13_residual", &identity13_residual, py::arg("pair"));
  m.def("trace_dimension", &trace_dimension, py::arg("pair"));
  m.def("equivalence_margin", &equivalence_margin, py::arg("es"), py::arg("es2"),
        py::arg("tol") = Tolerances{});
  m.def("equivalence_check", &equivalence_check, py::arg("es"), py::arg("es2"),
        py::arg("tol") = Tolerances{});

  // Bessel validation, tight frames, synthesis.
  m.def("spans_space", &spans_space, py::arg("vs"), py::arg("tol") = Tolerances{});
  m.def("validate_bessel", &validate_bessel, py::arg("gs"),
        py::arg("tol") = Tolerances{});
  m.def("require_bessel", &require_bessel, py::arg("gs"),
        py::arg("tol") = Tolerances{});
  m.def("is_tight_frame", &is_tight_frame, py::arg("gs"),
        py::arg("tol") = Tolerances{});
  m.def("synthesize_triangular", &synthesize_triangular, py::arg("gs"),
        py::arg("tol") = Tolerances{});
  m.def("synthesize_admissible", &synthesize_admissible, py::arg("gs"),
        py::arg("tol") = Tolerances{});
  m.def("stability_report", &stability_report, py::arg("vs"), py::arg("kind"),
        py::arg("tol") = Tolerances{});
  m.def("proposition2_check", &proposition2_check, py::arg("es"),
        py::arg("tol") = Tolerances{});

  // Pivoted semidefinite Cholesky.
  m.def("pivot_sequence", &pivot_sequence, py::arg("b"),
        py::arg("tol") = Tolerances{});
  m.def("b_inner", &b_inner, py::arg("b"), py::arg("u"), py::arg("v"));
  m.def("lambda_coefficients", &lambda_coefficients, py::arg("b"), py::arg("piv"),
        py::arg("n"));
  m.def("eta_basis", &eta_basis, py::arg("b"), py::arg("piv"));
  m.def("cholesky_psd", &cholesky_psd, py::arg("b"), py::arg("tol") = Tolerances{});
}

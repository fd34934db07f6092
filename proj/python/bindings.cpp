#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "halfshift/bounds.hpp"
#include "halfshift/concentration.hpp"
#include "halfshift/dpss.hpp"
#include "halfshift/errors.hpp"
#include "halfshift/fracshift.hpp"

namespace py = pybind11;
using namespace halfshift;

namespace {

using ComplexArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

// Samples on [-N/2, N/2], given as an array of odd length N + 1.
Sequence to_sequence(const ComplexArray& values) {
  if (values.ndim() != 1) {
    throw ParameterError("sequence must be a 1-D array");
  }
  const auto size = static_cast<int>(values.shape(0));
  std::vector<Complex> data(values.data(), values.data() + size);
  return Sequence(size - 1, std::move(data));
}

ComplexArray to_array(std::span<const Complex> values) {
  ComplexArray out(static_cast<py::ssize_t>(values.size()));
  std::copy(values.begin(), values.end(), out.mutable_data());
  return out;
}

}  // namespace

PYBIND11_MODULE(_halfshift, m) {
  m.doc() = "Half-sample fractional shifts, DPSS tail-energy bounds and concentration.";

  py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);
  py::register_exception<HorizonExceededError>(m, "HorizonExceededError", PyExc_RuntimeError);

  py::class_<DpssSet>(m, "DpssSet")
      .def_property_readonly("length", &DpssSet::length)
      .def_property_readonly("half_bandwidth",
                             [](const DpssSet& s) { return s.params().half_bandwidth; })
      .def_property_readonly("eigenvalues", &DpssSet::eigenvalues)
      .def_property_readonly("complements", &DpssSet::complements)
      .def_property_readonly("vectors", &DpssSet::vectors,
                             "Column l holds s_l; row i is n = i - (M-1)/2.")
      .def("value", &DpssSet::value, py::arg("l"), py::arg("n"));

  py::class_<OrthoBasis>(m, "OrthoBasis")
      .def_readonly("order", &OrthoBasis::order)
      .def_readonly("members", &OrthoBasis::members)
      .def_readonly("source", &OrthoBasis::source);

  m.def("compute_dpss",
        [](int length, double half_bandwidth, int max_length) {
          return compute_dpss({length, half_bandwidth}, {max_length});
        },
        py::arg("length"), py::arg("half_bandwidth"), py::arg("max_length") = 8193);
  m.def("even_subsample_basis", [](int order) { return even_subsample_basis(order); },
        py::arg("order"));
  m.def("flip_pairing_report",
        [](const DpssSet& set) {
          const FlipPairingResiduals r = flip_pairing_report(set);
          return py::make_tuple(r.flip, r.pairing);
        },
        py::arg("set"));

  m.def("upsample2",
        [](const ComplexArray& r) { return to_array(upsample2(to_sequence(r)).values()); },
        py::arg("r"));
  m.def("apply_shift",
        [](const ComplexArray& r, double w, double tau, std::int64_t first, std::int64_t last) {
          const auto out = apply_shift(to_sequence(r), {w, tau}, first, last);
          return to_array(out);
        },
        py::arg("r"), py::arg("half_bandwidth"), py::arg("tau"), py::arg("first"),
        py::arg("last"));
  m.def("total_energy",
        [](const ComplexArray& r, double w, double tau) {
          return total_energy(to_sequence(r), {w, tau});
        },
        py::arg("r"), py::arg("half_bandwidth"), py::arg("tau") = 0.0);
  m.def("tail_energy_exact",
        [](const ComplexArray& r, double w, double tau, int left, int right) {
          return tail_energy_exact(to_sequence(r), {w, tau}, {left, right}).value;
        },
        py::arg("r"), py::arg("half_bandwidth"), py::arg("tau"), py::arg("left"),
        py::arg("right"));
  m.def("tail_energy_truncated",
        [](const ComplexArray& r, double w, double tau, int left, int right, double tol) {
          const TruncatedTail t = tail_energy_truncated(to_sequence(r), {w, tau}, {left, right}, tol);
          return py::make_tuple(t.value, t.horizon);
        },
        py::arg("r"), py::arg("half_bandwidth"), py::arg("tau"), py::arg("left"),
        py::arg("right"), py::arg("tol") = 1e-10);

  py::class_<BoundReport>(m, "BoundReport")
      .def_readonly("bound_value", &BoundReport::bound_value)
      .def_readonly("exact_value", &BoundReport::exact_value)
      .def_readonly("slack", &BoundReport::slack)
      .def_readonly("components", &BoundReport::components)
      .def_readonly("matches", &BoundReport::matches)
      .def_property_readonly("coefficients",
                             [](const BoundReport& b) { return to_array(b.coeffs.values); });

  m.def("theorem1_bound",
        [](const ComplexArray& r, double w) { return theorem1_bound(to_sequence(r), w); },
        py::arg("r"), py::arg("half_bandwidth"));
  m.def("theorem1_equality",
        [](const ComplexArray& r) { return theorem1_equality(to_sequence(r)); }, py::arg("r"));
  m.def("lemma2_bound",
        [](const ComplexArray& r, double w, int left, int right, bool literal) {
          const Lemma2Result res = lemma2_bound(to_sequence(r), w, {left, right}, {literal});
          return py::dict(py::arg("rhs") = res.rhs, py::arg("a_term") = res.a_term,
                          py::arg("lhs") = res.lhs);
        },
        py::arg("r"), py::arg("half_bandwidth"), py::arg("left"), py::arg("right"),
        py::arg("literal_a_term") = false);

  py::class_<ConcentrationReport>(m, "ConcentrationReport")
      .def_readonly("concentration", &ConcentrationReport::concentration)
      .def_readonly("direct_value", &ConcentrationReport::direct_value)
      .def_readonly("formula_value", &ConcentrationReport::formula_value)
      .def_readonly("corrected_value", &ConcentrationReport::corrected_value)
      .def_readonly("window_energy", &ConcentrationReport::window_energy)
      .def_readonly("tail_energy", &ConcentrationReport::tail_energy)
      .def_readonly("total_energy", &ConcentrationReport::total_energy)
      .def_readonly("coefficient_sum", &ConcentrationReport::coefficient_sum)
      .def_readonly("formula_in_regime", &ConcentrationReport::formula_in_regime)
      .def_readonly("normalized", &ConcentrationReport::normalized)
      .def_property_readonly("coefficients",
                             [](const ConcentrationReport& c) { return to_array(c.coeffs.values); });

  m.def("concentration",
        [](const ComplexArray& r) { return concentration(to_sequence(r)); }, py::arg("r"));
  m.def("optimal_sequence",
        [](int order) {
          const OptimalSequence opt = optimal_sequence(order);
          return py::make_tuple(to_array(opt.sequence.values()), opt.report,
                                opt.displayed_optimum_value);
        },
        py::arg("order"));
  m.def("ranked_basis",
        [](int order) {
          RankedBasis ranked = ranked_basis(order);
          return py::make_tuple(std::move(ranked.basis), ranked.concentrations);
        },
        py::arg("order"));
  m.def("matrix_form_check",
        [](const ComplexArray& r) {
          const MatrixFormCheck res = matrix_form_check(to_sequence(r));
          return py::make_tuple(res.numerator_quad, res.denominator_quad);
        },
        py::arg("r"));
}

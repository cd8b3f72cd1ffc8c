#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lpqmf/analysis.hpp"
#include "lpqmf/cascade.hpp"
#include "lpqmf/design.hpp"
#include "lpqmf/errors.hpp"
#include "lpqmf/io.hpp"
#include "lpqmf/roots.hpp"
#include "lpqmf/synthesis.hpp"

namespace py = pybind11;
using namespace lpqmf;

PYBIND11_MODULE(_core, m) {
  m.doc() = "linear-phase IIR quadrature mirror filter design";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<PoleError>(m, "PoleError", PyExc_ArithmeticError);
  py::register_exception<SymmetryError>(m, "SymmetryError", PyExc_ValueError);
  py::register_exception<RealizabilityError>(m, "RealizabilityError", PyExc_ValueError);

  py::class_<RealPoly>(m, "RealPoly")
      .def(py::init<std::vector<double>>())
      .def_property_readonly("coeffs", &RealPoly::coeffs)
      .def_property_readonly("degree", &RealPoly::degree)
      .def("__call__", [](const RealPoly& p, Complex z) { return p.eval(z); });

  py::class_<RationalFilter>(m, "RationalFilter")
      .def(py::init([](std::vector<double> num, std::vector<double> den) {
             return RationalFilter(RealPoly(std::move(num)), RealPoly(std::move(den)));
           }),
           py::arg("num"), py::arg("den"))
      .def_property_readonly("num", [](const RationalFilter& h) { return h.num().coeffs(); })
      .def_property_readonly("den", [](const RationalFilter& h) { return h.den().coeffs(); })
      .def_property_readonly("order", &RationalFilter::order)
      .def("__call__", [](const RationalFilter& h, Complex z) { return h.eval(z); })
      .def("response", &RationalFilter::response);

  py::class_<PreimageSpec>(m, "PreimageSpec")
      .def(py::init([](int m_, int sign, std::vector<Complex> lambdas) {
             return PreimageSpec{m_, sign, std::move(lambdas)};
           }),
           py::arg("m"), py::arg("sign_at_i") = 1, py::arg("lambdas") = std::vector<Complex>{})
      .def_readonly("m", &PreimageSpec::m)
      .def_readonly("sign_at_i", &PreimageSpec::sign_at_i)
      .def_readonly("lambdas", &PreimageSpec::lambdas);

  py::class_<FirCascade>(m, "FirCascade")
      .def_readonly("shift_n", &FirCascade::shift_n)
      .def_readonly("epsilon", &FirCascade::epsilon)
      .def_readonly("achieved", &FirCascade::achieved)
      .def_property_readonly("prefactor", [](const FirCascade& f) { return f.prefactor.coeffs(); })
      .def_property_readonly("factors",
                             [](const FirCascade& f) {
                               std::vector<std::pair<int, std::vector<double>>> out;
                               for (const auto& x : f.factors) out.emplace_back(x.level, x.f.coeffs());
                               return out;
                             })
      .def_property_readonly("top_level", &FirCascade::top_level)
      .def_property_readonly("delay", &FirCascade::delay);

  py::class_<SampledGrid>(m, "SampledGrid")
      .def_readonly("x0", &SampledGrid::x0)
      .def_readonly("dx", &SampledGrid::dx)
      .def_readonly("values", &SampledGrid::values);

  py::class_<FilterReport>(m, "FilterReport")
      .def_readonly("qmf_residual", &FilterReport::qmf_residual)
      .def_readonly("sym_residual", &FilterReport::sym_residual)
      .def_readonly("wavelet_moments", &FilterReport::wavelet_moments)
      .def_readonly("scaling_moments", &FilterReport::scaling_moments)
      .def_property_readonly("cohen_pass", [](const FilterReport& r) { return r.cohen.pass; })
      .def_property_readonly("cohen_witness", [](const FilterReport& r) { return r.cohen.witness; })
      .def_readonly("min_response", &FilterReport::min_response)
      .def_readonly("poles_imaginary", &FilterReport::poles_imaginary)
      .def_readonly("stopband_zeros", &FilterReport::stopband_zeros)
      .def("passes", &FilterReport::passes);

  m.def(
      "maxflat",
      [](int n, int delta) { return maxflat(MaxflatId{n, delta}); },
      py::arg("n"), py::arg("delta") = 0);
  m.def(
      "maxflat_response",
      [](int n, int delta, double xi) { return maxflat_response(MaxflatId{n, delta}, xi); },
      py::arg("n"), py::arg("delta"), py::arg("xi"));
  m.def("design", &build_from_preimages, py::arg("spec"));
  m.def("stopband", &design_stopband, py::arg("m"), py::arg("sign_at_i"), py::arg("thetas"),
        py::arg("extra") = std::vector<Complex>{});
  m.def("highpass", &highpass);
  m.def("transition_slope", &transition_slope);
  m.def("extract_spec", &extract_preimage_spec);

  m.def("qmf_residual", &qmf_residual, py::arg("h"), py::arg("grid") = 4096);
  m.def("check_sym", &check_sym);
  m.def("vanishing_moments", &vanishing_moments);
  m.def("positivity_check", &positivity_check, py::arg("h"), py::arg("grid") = 4096);
  m.def("analyze", &analyze, py::arg("h"), py::arg("grid") = 4096, py::arg("max_cycle") = 16);

  m.def("fir_approximate", &fir_approximate, py::arg("h"), py::arg("epsilon"));
  m.def("flatten", [](const FirCascade& f) {
    LaurentPoly flat = flatten(f);
    return std::make_pair(flat.low(), flat.coeffs());
  });
  m.def("qmf_defect", &qmf_defect, py::arg("f"), py::arg("grid") = 8192);
  m.def(
      "filterbank_roundtrip",
      [](const FirCascade& f, std::vector<double> samples) {
        return filterbank_roundtrip(f, Signal{std::move(samples)});
      },
      py::arg("f"), py::arg("samples"));

  m.def("freq_response", &freq_response, py::arg("h"), py::arg("points"));
  m.def("scaling_samples", &scaling_samples, py::arg("f"), py::arg("levels") = 8);
  m.def("wavelet_samples", &wavelet_samples, py::arg("f"), py::arg("levels") = 8);
  m.def("moment_sum", &moment_sum, py::arg("grid"), py::arg("k"));

  m.def("filter_to_json", [](const RationalFilter& h, const PreimageSpec& spec, const std::string& prov) {
    return to_json(make_filter_document(h, spec, prov));
  });
  m.def("filter_from_json",
        [](const std::string& text) { return filter_from_document(filter_document_from_json(text)); });
}

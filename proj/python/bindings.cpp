// Copyright 2026 The disentangle Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <vector>

#include "disentangle/cloning.hpp"
#include "disentangle/errors.hpp"
#include "disentangle/linalg.hpp"
#include "disentangle/schemes.hpp"
#include "disentangle/separability.hpp"
#include "disentangle/states.hpp"
#include "disentangle/sweep.hpp"

namespace py = pybind11;
using namespace disentangle;

namespace {

using ComplexArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

ComplexMatrix from_numpy(const ComplexArray& array) {
  if (array.ndim() != 2 || array.shape(0) != array.shape(1))
    throw DimensionError("expected a square 2-D array");
  const auto n = static_cast<std::size_t>(array.shape(0));
  std::vector<Complex> entries(array.data(), array.data() + n * n);
  return ComplexMatrix(n, std::move(entries));
}

py::array_t<Complex> to_numpy(const ComplexMatrix& m) {
  const auto n = static_cast<py::ssize_t>(m.dim());
  py::array_t<Complex> out({n, n});
  std::copy(m.entries().begin(), m.entries().end(), out.mutable_data());
  return out;
}

SubsystemDims dims_from(const std::vector<std::size_t>& dims) { return SubsystemDims(dims); }

py::dict report_to_dict(const SchemeReport& r) {
  py::dict states, verdicts, recovered;
  for (const auto& s : r.output_states) states[py::str(s.name)] = to_numpy(s.value);
  for (const auto& v : r.verdicts) verdicts[py::str(v.name)] = v.value;
  for (const auto& e : r.recovered_eta)
    recovered[py::str(e.name)] = e.value ? py::object(py::float_(*e.value)) : py::object(py::none());
  py::dict d;
  d["scheme"] = std::string(to_string(r.scheme));
  d["input_alpha2"] = r.input_alpha2;
  d["eta"] = r.eta;
  d["output_states"] = states;
  d["verdicts"] = verdicts;
  d["recovered_eta"] = recovered;
  d["nonlocal_outputs"] = r.nonlocal_outputs;
  d["copy_symmetry_deviation"] = r.copy_symmetry_deviation;
  d["disentangled"] = r.disentangled;
  return d;
}

py::dict threshold_to_dict(const SchemeThreshold& t) {
  py::dict d;
  d["scheme"] = std::string(to_string(t.scheme));
  d["eta_all_alpha"] = t.eta_all_alpha;
  d["fidelity_all_alpha"] = t.fidelity_all_alpha;
  d["eta_for_alpha2"] = t.eta_for_alpha2;
  d["fidelity_for_alpha2"] = t.fidelity_for_alpha2;
  return d;
}

SweepConfig make_config(const std::string& scheme, const std::string& grid) {
  SweepConfig config;
  config.scheme = parse_scheme(scheme);
  config.set_grid(grid);
  return config;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Disentanglement of two-qubit pure states by local isotropic cloning";

  // linalg
  m.def("tensor_product", [](const ComplexArray& a, const ComplexArray& b) {
    return to_numpy(tensor_product(from_numpy(a), from_numpy(b)));
  });
  m.def("partial_trace", [](const ComplexArray& rho, const std::vector<std::size_t>& dims, std::size_t index) {
    return to_numpy(partial_trace(from_numpy(rho), dims_from(dims), index));
  }, py::arg("rho"), py::arg("dims"), py::arg("traced_index"));
  m.def("partial_transpose", [](const ComplexArray& rho, const std::vector<std::size_t>& dims, std::size_t index) {
    return to_numpy(partial_transpose(from_numpy(rho), dims_from(dims), index));
  }, py::arg("rho"), py::arg("dims"), py::arg("transposed_index"));
  m.def("hermitian_eigenvalues", [](const ComplexArray& a, double tol) {
    return hermitian_eigenvalues(from_numpy(a), tol);
  }, py::arg("m"), py::arg("tol") = kDefaultTol);

  // states
  m.def("density_matrix", [](double alpha2) {
    return to_numpy(density_matrix(PureBipartiteState::from_alpha2(alpha2)));
  }, py::arg("alpha2"));
  m.def("reduced_pair", [](const ComplexArray& rho) {
    auto pair = reduced_pair(from_numpy(rho));
    return py::make_tuple(to_numpy(pair.rho_1), to_numpy(pair.rho_2));
  });
  py::class_<IsotropyFit>(m, "IsotropyFit")
      .def_readonly("eta", &IsotropyFit::eta)
      .def_readonly("residual", &IsotropyFit::residual)
      .def_readonly("isotropic", &IsotropyFit::isotropic)
      .def("__repr__", [](const IsotropyFit& f) {
        return "IsotropyFit(eta=" + format_number(f.eta) + ", residual=" + format_number(f.residual) +
               ", isotropic=" + (f.isotropic ? "True" : "False") + ")";
      });
  m.def("isotropy_fit", [](const ComplexArray& ad, const ComplexArray& bd) {
    return isotropy_fit(from_numpy(ad), from_numpy(bd));
  }, py::arg("rho_ad"), py::arg("rho_bd"));

  // cloning
  py::class_<ClonerSpec>(m, "ClonerSpec")
      .def(py::init(&ClonerSpec::from_eta), py::arg("eta"))
      .def_property_readonly("eta", &ClonerSpec::eta)
      .def_property_readonly("a", &ClonerSpec::a)
      .def_property_readonly("b", &ClonerSpec::b)
      .def_property_readonly("s", &ClonerSpec::s);
  m.def("fidelity_from_eta", &fidelity_from_eta, py::arg("eta"));
  m.def("optimal_cloning_fidelity", &optimal_cloning_fidelity, py::arg("copies"));
  m.def("optimal_cloning_fidelity_exact", [](std::int64_t copies) {
    const Fraction f = optimal_cloning_fidelity_exact(copies);
    return py::make_tuple(f.numerator, f.denominator);
  }, py::arg("copies"));
  m.def("build_dilation", [](double eta) {
    const DilationIsometry v = build_dilation(ClonerSpec::from_eta(eta));
    py::array_t<Complex> out({static_cast<py::ssize_t>(kDilationDim), py::ssize_t{2}});
    auto view = out.mutable_unchecked<2>();
    for (std::size_t o = 0; o < kDilationDim; ++o)
      for (std::size_t i = 0; i < 2; ++i) view(o, i) = v(o, i);
    return out;
  }, py::arg("eta"));
  m.def("clone_qubit_via_dilation",
        [](const ComplexArray& rho, const std::vector<std::size_t>& dims, std::size_t target, double eta) {
          return to_numpy(clone_qubit_via_dilation(from_numpy(rho), dims_from(dims), target,
                                                   ClonerSpec::from_eta(eta)));
        }, py::arg("rho"), py::arg("dims"), py::arg("target_index"), py::arg("eta"));
  m.def("split_output_closed_form", [](double a2, double eta) { return to_numpy(split_output_closed_form(a2, eta)); },
        py::arg("alpha2"), py::arg("eta"));
  m.def("broadcast_local_closed_form",
        [](double a2, double eta) { return to_numpy(broadcast_local_closed_form(a2, eta)); },
        py::arg("alpha2"), py::arg("eta"));
  m.def("broadcast_nonlocal_closed_form",
        [](double a2, double eta) { return to_numpy(broadcast_nonlocal_closed_form(a2, eta)); },
        py::arg("alpha2"), py::arg("eta"));

  // separability
  py::class_<SeparabilityVerdict>(m, "SeparabilityVerdict")
      .def_readonly("min_pt_eigenvalue", &SeparabilityVerdict::min_pt_eigenvalue)
      .def_readonly("negativity", &SeparabilityVerdict::negativity)
      .def_readonly("separable", &SeparabilityVerdict::separable)
      .def("__repr__", [](const SeparabilityVerdict& v) {
        return "SeparabilityVerdict(min_pt_eigenvalue=" + format_number(v.min_pt_eigenvalue) +
               ", negativity=" + format_number(v.negativity) + ", separable=" + (v.separable ? "True" : "False") +
               ")";
      });
  m.def("ppt_test", [](const ComplexArray& rho) { return ppt_test(from_numpy(rho)); }, py::arg("rho"));
  py::class_<Alpha2Window>(m, "Alpha2Window")
      .def_readonly("lower", &Alpha2Window::lower)
      .def_readonly("upper", &Alpha2Window::upper)
      .def_readonly("empty", &Alpha2Window::empty)
      .def("contains_interior", &Alpha2Window::contains_interior)
      .def("__repr__", [](const Alpha2Window& w) {
        if (w.empty) return std::string("Alpha2Window(empty)");
        return "Alpha2Window(lower=" + format_number(w.lower) + ", upper=" + format_number(w.upper) + ")";
      });
  m.def("split_inseparability_predicate", &split_inseparability_predicate, py::arg("alpha2"), py::arg("eta"));
  m.def("broadcast_nonlocal_window", &broadcast_nonlocal_window, py::arg("eta"));
  m.def("broadcast_local_separable_window", &broadcast_local_separable_window, py::arg("eta"));

  // schemes
  m.def("disentangle_by_single_cloning",
        [](double a2, double eta) { return report_to_dict(disentangle_by_single_cloning(a2, eta)); },
        py::arg("alpha2"), py::arg("eta"));
  m.def("disentangle_by_double_cloning",
        [](double a2, double eta) { return report_to_dict(disentangle_by_double_cloning(a2, eta)); },
        py::arg("alpha2"), py::arg("eta"));
  m.def("compare_schemes", [](double a2) {
    const SchemeComparison c = compare_schemes(a2);
    py::list ordering;
    for (const auto& o : c.fidelity_ordering) ordering.append(py::make_tuple(o.name, o.value));
    py::dict d;
    d["alpha2"] = c.alpha2;
    d["single_clone"] = threshold_to_dict(c.single_clone);
    d["double_clone"] = threshold_to_dict(c.double_clone);
    d["one_to_three_fidelity"] = c.one_to_three_fidelity;
    d["fidelity_ordering"] = ordering;
    return d;
  }, py::arg("alpha2"));

  // sweep / threshold
  m.def("find_threshold", [](const std::string& scheme, double lower, double upper) {
    const ThresholdResult t = find_threshold(parse_scheme(scheme), lower, upper);
    py::dict d;
    d["scheme"] = std::string(to_string(t.scheme));
    d["quantity"] = t.quantity;
    d["value"] = t.value;
    d["bracket"] = py::make_tuple(t.bracket.first, t.bracket.second);
    d["iterations"] = t.iterations;
    d["fidelity"] = t.fidelity;
    return d;
  }, py::arg("scheme"), py::arg("lower") = 1e-3, py::arg("upper") = kOptimalEta);
  m.def("sweep", [](const std::string& scheme, const std::string& grid, const std::string& format) {
    const SweepConfig config = make_config(scheme, grid);
    return format_sweep(run_sweep(config), parse_output_format(format));
  }, py::arg("scheme"), py::arg("grid"), py::arg("format") = "csv");
}

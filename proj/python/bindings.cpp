// Copyright 2026 The kuniform Authors
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

#include <pybind11/pybind11.h>
#include <pybind11/complex.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "kuf/catalog.hpp"
#include "kuf/cli.hpp"
#include "kuf/error.hpp"
#include "kuf/masking.hpp"
#include "kuf/states.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_core, m) {
  m.doc() = "k-uniform states, orthogonal arrays and quantum maskers";

  static py::exception<kuf::Error> error(m, "KufError");
  py::register_exception<kuf::DomainError>(m, "DomainError", error.ptr());
  py::register_exception<kuf::ParseError>(m, "ParseError", error.ptr());
  py::register_exception<kuf::CapExceeded>(m, "CapExceeded", error.ptr());

  py::class_<kuf::PureState>(m, "PureState")
      .def_property_readonly("parties", &kuf::PureState::parties)
      .def_property_readonly("local_dim", &kuf::PureState::local_dim)
      .def_property_readonly("is_exact", &kuf::PureState::is_exact)
      .def_property_readonly("term_count", &kuf::PureState::term_count)
      .def_property_readonly("provenance", &kuf::PureState::provenance)
      .def("amplitude", &kuf::PureState::amplitude, py::arg("index"))
      .def("__str__", &kuf::format_state);

  py::class_<kuf::UniformityReport>(m, "UniformityReport")
      .def_readonly("k", &kuf::UniformityReport::k)
      .def_readonly("exact", &kuf::UniformityReport::exact)
      .def_readonly("possible", &kuf::UniformityReport::possible)
      .def_readonly("subsets_checked", &kuf::UniformityReport::subsets_checked)
      .def_readonly("worst_deviation", &kuf::UniformityReport::worst_deviation)
      .def_readonly("passed", &kuf::UniformityReport::pass);

  py::class_<kuf::ExistenceVerdict>(m, "ExistenceVerdict")
      .def_property_readonly("status",
                             [](const kuf::ExistenceVerdict& v) {
                               return std::string(kuf::status_name(v.status));
                             })
      .def_property_readonly("exists", &kuf::ExistenceVerdict::exists)
      .def_property_readonly("provenance", &kuf::ExistenceVerdict::provenance);

  m.def("parse_state", [](const std::string& text) { return kuf::parse_state(text); },
        py::arg("text"));
  m.def("ghz", &kuf::ghz, py::arg("d"), py::arg("n"));
  m.def("verify_k_uniform", &kuf::verify_k_uniform, py::arg("state"),
        py::arg("k"), py::call_guard<py::gil_scoped_release>());
  m.def("exists_k_uniform", &kuf::exists_k_uniform, py::arg("k"), py::arg("d"),
        py::arg("n"));
  m.def("construct_k_uniform", &kuf::construct_k_uniform, py::arg("k"),
        py::arg("d"), py::arg("n"), py::call_guard<py::gil_scoped_release>());
  m.def("table_text", [](int k) {
    return kuf::format_table_text(kuf::published_table(k));
  }, py::arg("k"));
  m.def("strong_masking_feasible", [](int n, unsigned d) {
    const kuf::Feasibility f = kuf::strong_masking_feasible(n, d);
    return py::make_tuple(f.feasible, f.settled, f.reason);
  }, py::arg("n"), py::arg("d"));
  m.def("verify_bundled_masker", [](const std::string& name, int k) {
    return kuf::verify_masker(kuf::bundled_masker(name), k).pass;
  }, py::arg("name"), py::arg("k"));
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = kuf::cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
}

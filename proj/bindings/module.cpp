// Copyright 2026 The reldeleg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "reldeleg/amplify.hpp"
#include "reldeleg/driver.hpp"
#include "reldeleg/errors.hpp"
#include "reldeleg/exact.hpp"
#include "reldeleg/hamiltonian.hpp"
#include "reldeleg/records.hpp"
#include "reldeleg/relativistic.hpp"
#include "reldeleg/spectral.hpp"

namespace py = pybind11;
using namespace reldeleg;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Native core of reldeleg";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ShapeError>(m, "ShapeError", PyExc_ValueError);
  py::register_exception<CapacityError>(m, "CapacityError", PyExc_MemoryError);

  py::class_<PauliString>(m, "PauliString")
      .def(py::init(&parse_pauli), py::arg("text"))
      .def_property_readonly("word", &PauliString::word)
      .def_property_readonly("coefficient", &PauliString::coefficient)
      .def("is_xz", &PauliString::is_xz)
      .def("weight", &PauliString::weight)
      .def("dense", [](const PauliString& p) { return dense_matrix(p); })
      .def("__len__", &PauliString::size)
      .def("__str__", &PauliString::str)
      .def("__repr__", [](const PauliString& p) { return "PauliString('" + p.str() + "')"; });

  m.def("commutation_sign", &commutation_sign);
  m.def("multiply", &multiply, "Returns (k, P*Q without the phase i^k).");

  py::class_<XZHamiltonian>(m, "XZHamiltonian")
      .def_static("parse", &XZHamiltonian::parse, py::arg("text"))
      .def_static("load", &XZHamiltonian::load, py::arg("path"))
      .def("serialize", &XZHamiltonian::serialize)
      .def_property_readonly("num_qubits", &XZHamiltonian::num_qubits)
      .def_property_readonly("num_terms", &XZHamiltonian::num_terms)
      .def_property_readonly("locality", &XZHamiltonian::locality)
      .def("dense", [](const XZHamiltonian& h) { return h.dense(); })
      .def("__eq__", &XZHamiltonian::operator==);

  m.def("ground_energy", [](const XZHamiltonian& h) { return ground_energy(h); });
  m.def("operator_norm", [](const XZHamiltonian& h) { return operator_norm(h); });
  m.def("omega_h", [](const XZHamiltonian& h, double p) { return exact::omega_h(h, p); },
        py::arg("h"), py::arg("p"));
  m.def("amplification_power", &amplification_power, py::arg("alpha"), py::arg("beta"));
  m.def("classical_magic_square_value", [] {
    const auto v = exact::classical_magic_square_value().value;
    return py::make_tuple(v.numerator, v.denominator);
  });
  m.def("causally_reachable",
        [](std::pair<double, double> a, std::pair<double, double> b) {
          return rel::causally_reachable({a.first, a.second}, {b.first, b.second});
        },
        py::arg("emit"), py::arg("receive"));
  m.def("otp", [](const py::bytes& key, const py::bytes& message) {
    const std::string k = key;
    const std::string msg = message;
    const auto out = rel::otp(std::vector<std::uint8_t>(k.begin(), k.end()),
                              std::vector<std::uint8_t>(msg.begin(), msg.end()));
    return py::bytes(std::string(out.begin(), out.end()));
  });

  m.def(
      "run_json",
      [](const std::string& descriptor) {
        driver::Result r;
        {
          py::gil_scoped_release release;
          r = driver::run_guarded(nlohmann::json::parse(descriptor));
        }
        return py::make_tuple(records::dump(r.record), r.status);
      },
      py::arg("descriptor"), "Runs a descriptor; returns (record text, exit status).");
}

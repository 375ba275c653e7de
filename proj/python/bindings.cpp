// Copyright 2026 The tempdist Authors
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
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tempdist/closedform.hpp"
#include "tempdist/combinatorics.hpp"
#include "tempdist/errors.hpp"
#include "tempdist/metrics.hpp"
#include "tempdist/modes.hpp"
#include "tempdist/noon.hpp"

namespace py = pybind11;

namespace tempdist {
namespace {

std::pair<std::string, std::string> as_pair(const Rational& q) {
  return {boost::multiprecision::numerator(q).str(), boost::multiprecision::denominator(q).str()};
}

ScanTarget to_target(const std::optional<std::size_t>& group) {
  if (group) return *group;
  return AllH{};
}

ProductState state_of(const std::vector<TemporalMode>& h, const std::vector<TemporalMode>& v) {
  std::vector<LabeledMode> photons;
  for (const auto& m : h) photons.push_back({m, Polarization::H});
  for (const auto& m : v) photons.push_back({m, Polarization::V});
  return ProductState(std::move(photons));
}

}  // namespace
}  // namespace tempdist

PYBIND11_MODULE(_core, m) {
  using namespace tempdist;
  m.doc() = "Temporal distinguishability of multi-photon states";

  static py::exception<ParseError> parse_error(m, "ParseError", PyExc_ValueError);
  static py::exception<SizeLimitError> size_error(m, "SizeLimitError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      parse_error(e.what());
    } catch (const SizeLimitError& e) {
      size_error(e.what());
    } catch (const IoError& e) {
      PyErr_SetString(PyExc_OSError, e.what());
    }
  });

  py::class_<TemporalMode>(m, "TemporalMode")
      .def(py::init<double, double, int, double>(), py::arg("sigma"), py::arg("delay") = 0.0,
           py::arg("family") = 0, py::arg("carrier_offset") = 0.0)
      .def_property_readonly("sigma", &TemporalMode::sigma)
      .def_property_readonly("delay", &TemporalMode::delay)
      .def_property_readonly("family", &TemporalMode::family)
      .def_property_readonly("carrier_offset", &TemporalMode::carrier_offset)
      .def("delayed_by", &TemporalMode::delayed_by, py::arg("dt"))
      .def("spectral_amplitude", &TemporalMode::spectral_amplitude, py::arg("omega"))
      .def(py::self == py::self)
      .def("__repr__", [](const TemporalMode& t) {
        return "TemporalMode(sigma=" + std::to_string(t.sigma()) +
               ", delay=" + std::to_string(t.delay()) + ", family=" + std::to_string(t.family()) +
               ", carrier_offset=" + std::to_string(t.carrier_offset()) + ")";
      });

  m.def("overlap", &overlap, py::arg("a"), py::arg("b"));
  m.def(
      "gram",
      [](const std::vector<TemporalMode>& modes) {
        const OverlapMatrix g = gram(modes);
        std::vector<std::vector<Complex>> rows(g.dim(), std::vector<Complex>(g.dim()));
        for (std::size_t i = 0; i < g.dim(); ++i)
          for (std::size_t j = 0; j < g.dim(); ++j) rows[i][j] = g(i, j);
        return rows;
      },
      py::arg("modes"));
  m.def(
      "permanent",
      [](const std::vector<std::vector<Complex>>& rows, bool naive) {
        const auto matrix = SquareComplexMatrix::from_rows(rows);
        return naive ? permanent_naive(matrix) : permanent_ryser(matrix);
      },
      py::arg("rows"), py::arg("naive") = false);

  m.def(
      "hom_visibility",
      [](const TemporalMode& a, const TemporalMode& b, double delay) {
        return hom_visibility({a, b, delay});
      },
      py::arg("a"), py::arg("b"), py::arg("delay") = 0.0);
  m.def(
      "pair_ratio_ea",
      [](const TemporalMode& a, const TemporalMode& b, double separation) {
        return pair_ratio_EA({a, b, 0.0}, separation);
      },
      py::arg("a"), py::arg("b"), py::arg("separation"));
  m.def(
      "pdc_rates",
      [](const TemporalMode& a, const TemporalMode& b, double eta, bool degenerate,
         double separation) {
        const PdcRates r = pdc_rates({a, b, 0.0}, eta, degenerate, separation);
        py::dict out;
        out["p2"] = r.p2;
        out["p4"] = r.p4;
        out["bunching_factor"] = r.bunching_factor;
        return out;
      },
      py::arg("a"), py::arg("b"), py::arg("eta"), py::arg("degenerate"),
      py::arg("separation") = 0.0);
  m.def(
      "normalization",
      [](const std::vector<TemporalMode>& modes) {
        return normalization(ProductState::single_polarization(modes));
      },
      py::arg("modes"));
  m.def(
      "normalization_grouped",
      [](const std::vector<TemporalMode>& h, const std::vector<TemporalMode>& v) {
        return normalization_grouped(state_of(h, v));
      },
      py::arg("h_modes"), py::arg("v_modes"));
  m.def(
      "coincidence_total",
      [](const std::vector<TemporalMode>& modes, bool normalized) {
        return coincidence_total(ProductState::single_polarization(modes),
                                 normalized ? Normalized::kYes : Normalized::kNo);
      },
      py::arg("modes"), py::arg("normalized") = false);

  m.def(
      "coincidence",
      [](const std::vector<TemporalMode>& h, const std::vector<TemporalMode>& v) {
        return coincidence(PhotonConfig(h, v));
      },
      py::arg("h_modes"), py::arg("v_modes"));
  m.def(
      "scan",
      [](const std::vector<TemporalMode>& h, const std::vector<TemporalMode>& v,
         const std::vector<double>& grid, std::optional<std::size_t> group, unsigned threads) {
        ScanResult r;
        {
          py::gil_scoped_release release;
          r = scan(PhotonConfig(h, v), to_target(group), grid, threads);
        }
        py::list dips;
        for (const Dip& d : r.visibilities) dips.append(py::make_tuple(d.location, d.visibility));
        py::dict out;
        out["delays"] = r.delays;
        out["raw"] = r.raw;
        out["normalized"] = r.normalized();
        out["baseline"] = r.baseline;
        out["dips"] = dips;
        return out;
      },
      py::arg("h_modes"), py::arg("v_modes"), py::arg("grid"), py::arg("group") = py::none(),
      py::arg("threads") = 1);

  py::class_<Scenario>(m, "Scenario")
      .def(py::init([](const std::vector<std::pair<int, int>>& groups, int stray_v) {
             std::vector<Group> g;
             for (auto [h, v] : groups) g.push_back({h, v});
             return Scenario(std::move(g), stray_v);
           }),
           py::arg("groups"), py::arg("stray_v") = 0)
      .def_property_readonly("groups",
                             [](const Scenario& s) {
                               std::vector<std::pair<int, int>> out;
                               for (const Group& g : s.groups()) out.emplace_back(g.h, g.v);
                               return out;
                             })
      .def_property_readonly("stray_v", &Scenario::stray_v)
      .def_property_readonly("k", &Scenario::k)
      .def_property_readonly("n", &Scenario::n)
      .def(py::self == py::self)
      .def("__hash__", [](const Scenario& s) { return py::hash(py::str(render(s))); })
      .def("__str__", [](const Scenario& s) { return render(s); })
      .def("__repr__", [](const Scenario& s) { return "Scenario('" + render(s) + "')"; });

  m.def("parse_scenario", &parse_scenario_string, py::arg("text"));
  m.def("enumerate_scenarios", &enumerate_scenarios, py::arg("k"), py::arg("n"));
  m.def(
      "_visibility_formula",
      [](const Scenario& s, bool literal) {
        return as_pair(visibility_formula(
            s, literal ? FormulaConvention::kLiteral : FormulaConvention::kStandard));
      },
      py::arg("scenario"), py::arg("literal") = false);
  m.def(
      "_exact_bruteforce_visibility",
      [](const Scenario& s) { return as_pair(exact_bruteforce_visibility(s)); },
      py::arg("scenario"));
  m.def("bruteforce_visibility", &bruteforce_visibility, py::arg("scenario"));
  m.def(
      "_golden_table",
      [](int k, int n) {
        std::vector<std::pair<std::string, std::pair<std::string, std::string>>> out;
        for (const auto& e : golden_table(k, n)) out.emplace_back(e.label, as_pair(e.value));
        return out;
      },
      py::arg("k"), py::arg("n"));
}

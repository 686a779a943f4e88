// Copyright 2026 The steerlab Authors
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

#include "steerlab/json_io.h"

#include <stdexcept>

namespace steerlab {

Json matrix_entries(const CMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out.push_back({m(i, j).real(), m(i, j).imag()});
  }
  return out;
}

CMatrix matrix_from_entries(const Json& entries, int side) {
  if (!entries.is_array() || entries.size() != static_cast<std::size_t>(side) * side) {
    throw std::invalid_argument("matrix entries: expected " + std::to_string(side * side) + " [re, im] pairs");
  }
  CMatrix m(side, side);
  for (int i = 0; i < side; ++i) {
    for (int j = 0; j < side; ++j) {
      const Json& e = entries[static_cast<std::size_t>(i) * side + j];
      if (!e.is_array() || e.size() != 2) throw std::invalid_argument("matrix entries: each entry must be [re, im]");
      m(i, j) = Complex(e[0].get<double>(), e[1].get<double>());
    }
  }
  return m;
}

Json to_json(const DensityOperator& rho) { return Json{{"dims", rho.dims()}, {"entries", matrix_entries(rho.matrix())}}; }

DensityOperator density_from_json(const Json& doc) {
  const auto dims = doc.at("dims").get<std::vector<int>>();
  int side = 1;
  for (int d : dims) side *= d;
  return DensityOperator(matrix_from_entries(doc.at("entries"), side), dims);
}

Json to_json(const Povm& povm) {
  Json effects = Json::array();
  for (const auto& e : povm.effects()) effects.push_back({{"label", e.label}, {"entries", matrix_entries(e.op)}});
  return Json{{"dim", povm.dim()}, {"effects", effects}};
}

Povm povm_from_json(const Json& doc) {
  const int dim = doc.at("dim").get<int>();
  std::vector<Effect> effects;
  std::size_t index = 0;
  for (const auto& e : doc.at("effects")) {
    const std::string label = e.contains("label") ? e.at("label").get<std::string>() : std::to_string(index);
    effects.push_back({label, matrix_from_entries(e.at("entries"), dim)});
    ++index;
  }
  return Povm(std::move(effects));
}

Json to_json(const Assemblage& sigma) {
  Json entries = Json::array();
  std::vector<int> outcomes;
  for (int x = 0; x < sigma.settings(); ++x) {
    outcomes.push_back(sigma.outcomes(x));
    for (int a = 0; a < sigma.outcomes(x); ++a) {
      entries.push_back({{"a", a}, {"x", x}, {"matrix", matrix_entries(sigma(a, x))}});
    }
  }
  return Json{{"dim", sigma.dim()}, {"settings", sigma.settings()}, {"outcomes_per_setting", outcomes}, {"entries", entries}};
}

Assemblage assemblage_from_json(const Json& doc) {
  const int dim = doc.at("dim").get<int>();
  const int settings = doc.at("settings").get<int>();
  if (settings < 1) throw std::invalid_argument("assemblage: settings must be positive");
  std::vector<std::vector<CMatrix>> members(settings);
  for (const auto& e : doc.at("entries")) {
    const int a = e.at("a").get<int>();
    const int x = e.at("x").get<int>();
    if (x < 0 || x >= settings || a < 0) throw std::invalid_argument("assemblage: entry index out of range");
    if (members[x].size() <= static_cast<std::size_t>(a)) members[x].resize(a + 1, CMatrix::Zero(dim, dim));
    members[x][a] = matrix_from_entries(e.at("matrix"), dim);
  }
  return Assemblage(dim, std::move(members));
}

Json to_json(const ThresholdReport& report) {
  return Json{{"d", report.d},
              {"p_all_meas", report.p_all_meas},
              {"p_two_mubs", report.p_two_mubs},
              {"eta_bound_at_p_all_meas", report.eta_bound_at(report.p_all_meas)},
              {"eta_bound_at_p_two_mubs", report.eta_bound_at(report.p_two_mubs)}};
}

Json mc_report(int d, double t, std::size_t n, const McEffect& effect) {
  Json stderr_entries = Json::array();
  for (Eigen::Index i = 0; i < effect.stderr_re.rows(); ++i) {
    for (Eigen::Index j = 0; j < effect.stderr_re.cols(); ++j) {
      stderr_entries.push_back({effect.stderr_re(i, j), effect.stderr_im(i, j)});
    }
  }
  return Json{{"d", d},
              {"t", t},
              {"n", n},
              {"estimate", matrix_entries(effect.estimate)},
              {"stderr", stderr_entries},
              {"analytic", matrix_entries(effect.analytic)},
              {"max_sigma_deviation", effect.max_sigma_deviation}};
}

Json to_json(const JmCertificate& cert, std::uint64_t seed, bool emit_conditionals) {
  Json doc{{"d", cert.parent.d},
           {"n_atoms", cert.parent.size()},
           {"seed", seed},
           {"tol", cert.tol},
           {"residual", cert.residual},
           {"lp_objective", cert.lp_objective},
           {"status", to_string(cert.status)}};
  if (emit_conditionals) doc["conditionals"] = cert.conditionals;
  return doc;
}

}  // namespace steerlab

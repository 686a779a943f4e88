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

#ifndef STEERLAB_JSON_IO_H
#define STEERLAB_JSON_IO_H

#include <cstdint>

#include "json.hpp"
#include "steerlab/analysis.h"
#include "steerlab/assemblage.h"
#include "steerlab/covariant.h"
#include "steerlab/jm.h"
#include "steerlab/quantum.h"

namespace steerlab {

using Json = nlohmann::json;

/// Row-major list of [re, im] pairs.
Json matrix_entries(const CMatrix& m);
/// Inverse of matrix_entries for a side x side matrix.
CMatrix matrix_from_entries(const Json& entries, int side);

/// {dims, entries}
Json to_json(const DensityOperator& rho);
DensityOperator density_from_json(const Json& doc);

/// {dim, effects: [{label, entries}]}
Json to_json(const Povm& povm);
Povm povm_from_json(const Json& doc);

/// {dim, settings, outcomes_per_setting, entries: [{a, x, matrix}]}
Json to_json(const Assemblage& sigma);
Assemblage assemblage_from_json(const Json& doc);

/// {d, p_all_meas, p_two_mubs, eta_bound_at_p_all_meas, eta_bound_at_p_two_mubs}
Json to_json(const ThresholdReport& report);

/// {d, t, n, estimate, stderr, analytic, max_sigma_deviation}; stderr holds
/// entrywise [re, im] standard errors.
Json mc_report(int d, double t, std::size_t n, const McEffect& effect);

/// {d, n_atoms, seed, tol, residual, status, ...}; conditionals[x][lambda][a]
/// only when requested.
Json to_json(const JmCertificate& cert, std::uint64_t seed, bool emit_conditionals);

}  // namespace steerlab

#endif  // STEERLAB_JSON_IO_H

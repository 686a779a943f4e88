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

#ifndef STEERLAB_ASSEMBLAGE_H
#define STEERLAB_ASSEMBLAGE_H

#include <vector>

#include "steerlab/linalg.h"
#include "steerlab/quantum.h"
#include "steerlab/random.h"

namespace steerlab {

/// Conditional states sigma_{a|x} on the trusted side, stored setting-major.
class Assemblage {
 public:
  /// members[x][a]. Validates positivity of every member, nonsignaling
  /// (sum_a sigma_{a|x} independent of x within kHermitianTol in Frobenius
  /// norm) and unit trace of the common marginal.
  Assemblage(int dim, std::vector<std::vector<CMatrix>> members);

  int dim() const { return dim_; }
  int settings() const { return static_cast<int>(members_.size()); }
  int outcomes(int x) const { return static_cast<int>(members_[x].size()); }
  const CMatrix& operator()(int a, int x) const { return members_[x][a]; }
  const std::vector<std::vector<CMatrix>>& members() const { return members_; }

  /// sum_a sigma_{a|x}
  CMatrix marginal(int x) const;

 private:
  int dim_;
  std::vector<std::vector<CMatrix>> members_;
};

/// sigma_{a|x} = tr_measured[(M_{a|x} on the measured side) rho] for a
/// bipartite rho. measured_side is 0 (first factor) or 1.
Assemblage steer(const DensityOperator& rho, const std::vector<Povm>& measurements, int measured_side);

/// Entrywise loss channel; the output lives on dim+1 levels. Rejects eta <= 0.
Assemblage apply_loss_to_assemblage(const Assemblage& sigma, double eta);

/// Inverse of apply_loss_to_assemblage: (1/eta) times the signal block of
/// every member. Rejects eta <= 0, coherences with the vacuum level above
/// 1e-8, and negative signal-block traces.
Assemblage filter_loss(const Assemblage& lossy, double eta);

/// One hidden state of an LHS model with its response table
/// response[x][a] = p(a|x, lambda).
struct HiddenState {
  double weight;
  CMatrix state;
  std::vector<std::vector<double>> response;
};

/// Largest Frobenius deviation between sigma_{a|x} and
/// sum_lambda p(lambda) p(a|x,lambda) sigma_lambda. Throws
/// std::invalid_argument for a malformed model; a wrong but well-formed
/// model just yields a large residual.
double lhs_model_check_explicit(const Assemblage& sigma, const std::vector<HiddenState>& model);

/// Steering a random bipartite state of local dims (dim, partner) with random
/// POVMs measured on the partner side.
Assemblage random_assemblage(int dim, int settings, int outcomes, Rng& rng, int partner_dim = -1);

}  // namespace steerlab

#endif  // STEERLAB_ASSEMBLAGE_H

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

#include "steerlab/assemblage.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace steerlab {

Assemblage::Assemblage(int dim, std::vector<std::vector<CMatrix>> members) : dim_(dim), members_(std::move(members)) {
  if (dim_ < 1) throw std::invalid_argument("Assemblage: dimension must be positive");
  if (members_.empty()) throw std::invalid_argument("Assemblage: no settings");
  for (std::size_t x = 0; x < members_.size(); ++x) {
    if (members_[x].empty()) throw std::invalid_argument("Assemblage: setting without outcomes");
    for (const auto& m : members_[x]) {
      if (m.rows() != dim_ || m.cols() != dim_) throw std::invalid_argument("Assemblage: member has wrong shape");
      if (!is_psd(m)) throw std::invalid_argument("Assemblage: member is not positive semidefinite");
    }
  }
  const CMatrix reference = marginal(0);
  if (std::abs(reference.trace() - Complex(1.0)) > kHermitianTol) {
    throw std::invalid_argument("Assemblage: marginal state does not have unit trace");
  }
  for (int x = 1; x < settings(); ++x) {
    if (frobenius_distance(marginal(x), reference) > kHermitianTol) {
      throw std::invalid_argument("Assemblage: signalling between settings 0 and " + std::to_string(x));
    }
  }
}

CMatrix Assemblage::marginal(int x) const {
  CMatrix sum = CMatrix::Zero(dim_, dim_);
  for (const auto& m : members_.at(x)) sum += m;
  return sum;
}

Assemblage steer(const DensityOperator& rho, const std::vector<Povm>& measurements, int measured_side) {
  if (rho.dims().size() != 2) throw std::invalid_argument("steer: state must be bipartite");
  if (measured_side != 0 && measured_side != 1) throw std::invalid_argument("steer: measured_side must be 0 or 1");
  if (measurements.empty()) throw std::invalid_argument("steer: no measurements");
  const std::array<int, 2> dims{rho.dims()[0], rho.dims()[1]};
  const int measured_dim = dims[measured_side];
  const int trusted_dim = dims[1 - measured_side];

  std::vector<std::vector<CMatrix>> members;
  for (const auto& povm : measurements) {
    if (povm.dim() != measured_dim) throw std::invalid_argument("steer: measurement dimension does not match subsystem");
    std::vector<CMatrix> row;
    for (const auto& e : povm.effects()) {
      const CMatrix lifted = measured_side == 0 ? tensor(e.op, identity(trusted_dim)) : tensor(identity(trusted_dim), e.op);
      const CMatrix conditional = partial_trace(lifted * rho.matrix(), dims, 1 - measured_side);
      row.push_back(0.5 * (conditional + conditional.adjoint()));
    }
    members.push_back(std::move(row));
  }
  return Assemblage(trusted_dim, std::move(members));
}

Assemblage apply_loss_to_assemblage(const Assemblage& sigma, double eta) {
  if (!(eta > 0.0 && eta <= 1.0)) throw std::invalid_argument("apply_loss_to_assemblage: eta must lie in (0, 1]");
  const Channel loss = Channel::loss(eta, sigma.dim());
  std::vector<std::vector<CMatrix>> members;
  for (const auto& row : sigma.members()) {
    std::vector<CMatrix> mapped;
    for (const auto& m : row) mapped.push_back(loss.apply(m));
    members.push_back(std::move(mapped));
  }
  return Assemblage(sigma.dim() + 1, std::move(members));
}

Assemblage filter_loss(const Assemblage& lossy, double eta) {
  if (!(eta > 0.0 && eta <= 1.0)) throw std::invalid_argument("filter_loss: eta must lie in (0, 1]");
  const int d = lossy.dim() - 1;
  if (d < 1) throw std::invalid_argument("filter_loss: assemblage has no signal levels");
  std::vector<std::vector<CMatrix>> members;
  for (const auto& row : lossy.members()) {
    std::vector<CMatrix> filtered;
    for (const auto& m : row) {
      const double coherence = m.col(d).head(d).cwiseAbs().maxCoeff();
      if (coherence > 1e-8) {
        throw std::invalid_argument("filter_loss: member has coherence with the vacuum level");
      }
      const CMatrix block = leading_block(m, d);
      if (block.trace().real() < -kHermitianTol) throw std::invalid_argument("filter_loss: negative signal-block trace");
      filtered.push_back(block / eta);
    }
    members.push_back(std::move(filtered));
  }
  return Assemblage(d, std::move(members));
}

double lhs_model_check_explicit(const Assemblage& sigma, const std::vector<HiddenState>& model) {
  if (model.empty()) throw std::invalid_argument("lhs model: no hidden states");
  double total = 0.0;
  for (const auto& h : model) {
    if (!(h.weight >= 0.0)) throw std::invalid_argument("lhs model: negative weight");
    total += h.weight;
    if (h.state.rows() != sigma.dim() || h.state.cols() != sigma.dim()) {
      throw std::invalid_argument("lhs model: hidden state has wrong dimension");
    }
    if (!is_psd(h.state) || std::abs(h.state.trace() - Complex(1.0)) > kHermitianTol) {
      throw std::invalid_argument("lhs model: hidden state is not a density operator");
    }
    if (static_cast<int>(h.response.size()) != sigma.settings()) {
      throw std::invalid_argument("lhs model: response table has wrong number of settings");
    }
    for (int x = 0; x < sigma.settings(); ++x) {
      if (static_cast<int>(h.response[x].size()) != sigma.outcomes(x)) {
        throw std::invalid_argument("lhs model: response table has wrong number of outcomes");
      }
      double norm = 0.0;
      for (double p : h.response[x]) {
        if (p < 0.0) throw std::invalid_argument("lhs model: negative response probability");
        norm += p;
      }
      if (std::abs(norm - 1.0) > 1e-10) throw std::invalid_argument("lhs model: response not normalized");
    }
  }
  if (std::abs(total - 1.0) > 1e-10) throw std::invalid_argument("lhs model: weights do not sum to 1");

  double worst = 0.0;
  for (int x = 0; x < sigma.settings(); ++x) {
    for (int a = 0; a < sigma.outcomes(x); ++a) {
      CMatrix model_member = CMatrix::Zero(sigma.dim(), sigma.dim());
      for (const auto& h : model) model_member += h.weight * h.response[x][a] * h.state;
      worst = std::max(worst, frobenius_distance(model_member, sigma(a, x)));
    }
  }
  return worst;
}

Assemblage random_assemblage(int dim, int settings, int outcomes, Rng& rng, int partner_dim) {
  if (partner_dim < 0) partner_dim = dim;
  const DensityOperator rho(random_density(partner_dim * dim, rng), {partner_dim, dim});
  std::vector<Povm> povms;
  for (int x = 0; x < settings; ++x) povms.push_back(random_povm(partner_dim, outcomes, rng));
  return steer(rho, povms, 0);
}

}  // namespace steerlab

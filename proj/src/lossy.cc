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

#include "steerlab/lossy.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace steerlab {
namespace {

// eta p M + eta (1-p) tr(M) I/d
CMatrix noisy_effect(const CMatrix& m, const NoiseParams& params) {
  const int d = params.d;
  return params.eta * params.p * m +
         params.eta * (1.0 - params.p) * m.trace().real() / static_cast<double>(d) * identity(d);
}

}  // namespace

NoiseParams NoiseParams::make(int d, double eta, double p) {
  if (d < 1) throw std::invalid_argument("NoiseParams: d must be positive");
  if (!(eta >= 0.0 && eta <= 1.0)) throw std::invalid_argument("NoiseParams: eta must lie in [0, 1]");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("NoiseParams: p must lie in [0, 1]");
  return NoiseParams{d, eta, p};
}

Povm noisify_povm(const Povm& m, const NoiseParams& params) {
  if (m.has_label(kNoClick)) throw std::invalid_argument("noisify_povm: input already has a no-click outcome");
  if (m.dim() != params.d) throw std::invalid_argument("noisify_povm: POVM dimension does not match d");
  std::vector<Effect> effects;
  for (const auto& e : m.effects()) effects.push_back({e.label, noisy_effect(e.op, params)});
  effects.push_back({std::string(kNoClick), (1.0 - params.eta) * identity(params.d)});
  return Povm(std::move(effects));
}

LossyDecomposition reduce_through_loss_dual(const Povm& m_prime, const NoiseParams& params) {
  const int d = params.d;
  if (m_prime.dim() != d + 1) throw std::invalid_argument("reduce_through_loss_dual: POVM must act on d+1 levels");
  const Channel lossy_noise = Channel::compose({Channel::white_noise(params.p, d), Channel::loss(params.eta, d)});

  std::vector<Effect> reduced;
  std::vector<Effect> reconstructed;
  std::vector<double> q;
  for (const auto& e : m_prime.effects()) {
    const CMatrix block = leading_block(e.op, d);
    reduced.push_back({e.label, 0.5 * (block + block.adjoint())});
    q.push_back(std::max(0.0, e.op(d, d).real()));
    reconstructed.push_back({e.label, lossy_noise.dual(e.op)});
  }

  const CMatrix no_click = (1.0 - params.eta) * identity(d);
  double residual = 0.0;
  for (std::size_t a = 0; a < reduced.size(); ++a) {
    const CMatrix predicted = noisy_effect(reduced[a].op, params) + q[a] * no_click;
    residual = std::max(residual, frobenius_distance(reconstructed[a].op, predicted));
  }
  return LossyDecomposition{Povm(std::move(reduced)), std::move(q), Povm(std::move(reconstructed)), residual};
}

Povm embed_with_vacuum(const Povm& m) {
  if (m.has_label(kNoClick)) throw std::invalid_argument("embed_with_vacuum: input already has a no-click outcome");
  const int d = m.dim();
  std::vector<Effect> effects;
  for (const auto& e : m.effects()) effects.push_back({e.label, pad_to(e.op, d + 1)});
  CMatrix vacuum = CMatrix::Zero(d + 1, d + 1);
  vacuum(d, d) = 1.0;
  effects.push_back({std::string(kNoClick), vacuum});
  return Povm(std::move(effects));
}

Povm coarse_grain(const Povm& m, const std::vector<int>& target_of, std::vector<std::string> labels) {
  if (target_of.size() != m.size()) throw std::invalid_argument("coarse_grain: map size differs from outcome count");
  const int groups = target_of.empty() ? 0 : *std::max_element(target_of.begin(), target_of.end()) + 1;
  if (*std::min_element(target_of.begin(), target_of.end()) < 0) throw std::invalid_argument("coarse_grain: negative target");
  if (!labels.empty() && static_cast<int>(labels.size()) != groups) {
    throw std::invalid_argument("coarse_grain: label count differs from group count");
  }
  std::vector<CMatrix> ops(groups, CMatrix::Zero(m.dim(), m.dim()));
  for (std::size_t a = 0; a < m.size(); ++a) ops[target_of[a]] += m[a].op;
  std::vector<Effect> effects;
  for (int g = 0; g < groups; ++g) effects.push_back({labels.empty() ? std::to_string(g) : labels[g], ops[g]});
  return Povm(std::move(effects));
}

}  // namespace steerlab

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

#ifndef STEERLAB_LOSSY_H
#define STEERLAB_LOSSY_H

#include <vector>

#include "steerlab/quantum.h"

namespace steerlab {

/// Dimension d, transmission eta and visibility p.
struct NoiseParams {
  int d;
  double eta;
  double p;

  /// Throws std::invalid_argument unless d >= 1 and eta, p lie in [0, 1].
  static NoiseParams make(int d, double eta, double p);
};

/// The m+1 effects eta p M_a + eta (1-p) tr(M_a) I/d followed by the
/// no-click effect (1-eta) I. Fails if m already has a no-click label or
/// its dimension differs from params.d.
Povm noisify_povm(const Povm& m, const NoiseParams& params);

struct LossyDecomposition {
  Povm reduced_povm;                // signal blocks of M'_a, same labels
  std::vector<double> vacuum_dist;  // q(a) = <ø|M'_a|ø>
  Povm reconstructed;               // dual of (loss after white noise) applied to M'_a
  double decomposition_residual;    // max_a |reconstructed_a - (Mbar_a + q(a) Mbar_ø)|_F
};

/// Pulls a POVM on d+1 levels back through the lossy noisy channel and
/// splits it into a noisified signal POVM plus a vacuum distribution.
LossyDecomposition reduce_through_loss_dual(const Povm& m_prime, const NoiseParams& params);

/// Pads every effect with an empty vacuum row/column and appends |ø><ø|.
Povm embed_with_vacuum(const Povm& m);

/// Merges outcomes: target_of[a] is the output index for input outcome a.
/// Output labels are "0".."k-1" unless `labels` is given.
Povm coarse_grain(const Povm& m, const std::vector<int>& target_of, std::vector<std::string> labels = {});

}  // namespace steerlab

#endif  // STEERLAB_LOSSY_H

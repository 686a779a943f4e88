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

#ifndef STEERLAB_RANDOM_H
#define STEERLAB_RANDOM_H

#include <cstdint>
#include <random>

#include "steerlab/linalg.h"
#include "steerlab/quantum.h"

namespace steerlab {

using Rng = std::mt19937_64;

/// Independent stream for worker `stream` of a run seeded with `seed`.
Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

/// d x k complex matrix of i.i.d. standard complex normals.
CMatrix ginibre(int rows, int cols, Rng& rng);

/// Haar unit vector (normalized complex Gaussian).
CVector random_unit_vector(int d, Rng& rng);

/// Haar unitary from the QR decomposition of a Ginibre matrix.
CMatrix random_unitary(int d, Rng& rng);

CMatrix random_hermitian(int d, Rng& rng);

/// Full-rank (for rank == d) density matrix G G^dagger / tr.
CMatrix random_density(int d, Rng& rng, int rank = -1);

/// Generic POVM: Gram matrices A_i^dagger A_i normalized by S^{-1/2} (.) S^{-1/2}.
Povm random_povm(int d, int outcomes, Rng& rng);

/// d x k matrix V with V V^dagger = I; its columns give a rank-one POVM.
CMatrix random_frame(int d, int k, Rng& rng);

}  // namespace steerlab

#endif  // STEERLAB_RANDOM_H

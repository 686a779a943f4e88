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

#include "steerlab/random.h"

#include <stdexcept>

namespace steerlab {

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

CMatrix ginibre(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  CMatrix g(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

CVector random_unit_vector(int d, Rng& rng) {
  CVector v = ginibre(d, 1, rng).col(0);
  return v / v.norm();
}

CMatrix random_unitary(int d, Rng& rng) {
  const CMatrix g = ginibre(d, d, rng);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < d; ++k) {
    const Complex diag = r(k, k);
    if (std::abs(diag) > 0) q.col(k) *= diag / std::abs(diag);
  }
  return q;
}

CMatrix random_hermitian(int d, Rng& rng) {
  const CMatrix g = ginibre(d, d, rng);
  return 0.5 * (g + g.adjoint());
}

CMatrix random_density(int d, Rng& rng, int rank) {
  if (rank < 0) rank = d;
  const CMatrix g = ginibre(d, rank, rng);
  CMatrix rho = g * g.adjoint();
  rho /= rho.trace();
  return 0.5 * (rho + rho.adjoint());
}

Povm random_povm(int d, int outcomes, Rng& rng) {
  if (outcomes < 1) throw std::invalid_argument("random_povm: need at least one outcome");
  std::vector<CMatrix> grams;
  CMatrix sum = CMatrix::Zero(d, d);
  for (int a = 0; a < outcomes; ++a) {
    const CMatrix g = ginibre(d, d, rng);
    grams.push_back(g.adjoint() * g);
    sum += grams.back();
  }
  const CMatrix norm = inverse_sqrt_psd(sum);
  std::vector<CMatrix> ops;
  for (const auto& g : grams) {
    const CMatrix e = norm * g * norm;
    ops.push_back(0.5 * (e + e.adjoint()));
  }
  return Povm::from_operators(ops);
}

CMatrix random_frame(int d, int k, Rng& rng) {
  if (k < d) throw std::invalid_argument("random_frame: need at least d columns");
  // Rows of a Haar unitary on C^k restricted to d rows are orthonormal.
  return random_unitary(k, rng).topRows(d);
}

}  // namespace steerlab

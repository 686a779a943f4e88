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

#ifndef STEERLAB_LINALG_H
#define STEERLAB_LINALG_H

#include <array>
#include <complex>

#include <Eigen/Dense>

namespace steerlab {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

/// Absolute tolerance on the largest entry of m - m^dagger. Every PSD and
/// validity check in the library inherits it.
inline constexpr double kHermitianTol = 1e-10;

CMatrix identity(int dim);

/// |v><v|
CMatrix projector(const CVector& v);

/// Kronecker product; a's index is the slow one.
CMatrix tensor(const CMatrix& a, const CMatrix& b);
CVector tensor(const CVector& a, const CVector& b);

/// Reduced operator of a bipartite operator on dims[0] x dims[1].
/// `keep` is 0 to keep the first factor, 1 to keep the second.
/// Throws std::invalid_argument on a shape mismatch.
CMatrix partial_trace(const CMatrix& m, std::array<int, 2> dims, int keep);

/// Largest |m_ij - conj(m_ji)|. Throws if m is not square.
double hermitian_deviation(const CMatrix& m);
bool is_hermitian(const CMatrix& m, double tol = kHermitianTol);

/// Hermitian within tol and smallest eigenvalue >= -tol.
bool is_psd(const CMatrix& m, double tol = kHermitianTol);

double min_eigenvalue(const CMatrix& m);

double frobenius_distance(const CMatrix& a, const CMatrix& b);

struct HermitianEigen {
  RVector values;   // descending
  CMatrix vectors;  // column k pairs with values[k]
};

/// Eigendecomposition of a Hermitian matrix. Eigenvalues come out in
/// descending order; each eigenvector is phase-fixed so that its first
/// component of magnitude above 1e-12 is real and positive. Throws
/// std::invalid_argument when m is not Hermitian within kHermitianTol.
HermitianEigen eig_hermitian(const CMatrix& m);

/// m^{-1/2} for a positive definite m. Throws std::domain_error when the
/// smallest eigenvalue is below `floor`.
CMatrix inverse_sqrt_psd(const CMatrix& m, double floor = 1e-12);

/// Leading square block, used for the signal subspace of a lossy system.
CMatrix leading_block(const CMatrix& m, int size);

/// Embeds m into the leading block of a zero side x side matrix.
CMatrix pad_to(const CMatrix& m, int side);

}  // namespace steerlab

#endif  // STEERLAB_LINALG_H

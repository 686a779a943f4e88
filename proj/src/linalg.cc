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

#include "steerlab/linalg.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace steerlab {

CMatrix identity(int dim) { return CMatrix::Identity(dim, dim); }

CMatrix projector(const CVector& v) { return v * v.adjoint(); }

CMatrix tensor(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

CVector tensor(const CVector& a, const CVector& b) {
  CVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

CMatrix partial_trace(const CMatrix& m, std::array<int, 2> dims, int keep) {
  const int da = dims[0];
  const int db = dims[1];
  if (da < 1 || db < 1) throw std::invalid_argument("partial_trace: subsystem dimensions must be positive");
  if (m.rows() != m.cols() || m.rows() != static_cast<Eigen::Index>(da) * db) {
    throw std::invalid_argument("partial_trace: matrix side " + std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()) + " does not match dims " + std::to_string(da) +
                                "x" + std::to_string(db));
  }
  if (keep == 0) {
    CMatrix out = CMatrix::Zero(da, da);
    for (int i = 0; i < da; ++i) {
      for (int j = 0; j < da; ++j) {
        out(i, j) = m.block(i * db, j * db, db, db).trace();
      }
    }
    return out;
  }
  if (keep == 1) {
    CMatrix out = CMatrix::Zero(db, db);
    for (int i = 0; i < da; ++i) out += m.block(i * db, i * db, db, db);
    return out;
  }
  throw std::invalid_argument("partial_trace: keep must be 0 or 1");
}

double hermitian_deviation(const CMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("hermitian_deviation: matrix is not square");
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const CMatrix& m, double tol) {
  return m.rows() == m.cols() && hermitian_deviation(m) <= tol;
}

double min_eigenvalue(const CMatrix& m) {
  const CMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

bool is_psd(const CMatrix& m, double tol) {
  if (!is_hermitian(m, tol)) return false;
  return min_eigenvalue(m) >= -tol;
}

double frobenius_distance(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("frobenius_distance: shape mismatch");
  }
  return (a - b).norm();
}

HermitianEigen eig_hermitian(const CMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("eig_hermitian: matrix is not square");
  const double dev = hermitian_deviation(m);
  if (dev > kHermitianTol) {
    throw std::invalid_argument("eig_hermitian: matrix is not Hermitian (deviation " + std::to_string(dev) + ")");
  }
  const CMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eig_hermitian: eigensolver failed");

  // Eigen returns ascending order.
  const Eigen::Index n = h.rows();
  HermitianEigen out{RVector(n), CMatrix(n, n)};
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values(k) = solver.eigenvalues()(n - 1 - k);
    CVector v = solver.eigenvectors().col(n - 1 - k);
    for (Eigen::Index i = 0; i < n; ++i) {
      if (std::abs(v(i)) > 1e-12) {
        v *= std::conj(v(i)) / std::abs(v(i));
        v(i) = std::abs(v(i));
        break;
      }
    }
    out.vectors.col(k) = v;
  }
  return out;
}

CMatrix inverse_sqrt_psd(const CMatrix& m, double floor) {
  const HermitianEigen eig = eig_hermitian(m);
  if (eig.values.minCoeff() < floor) {
    throw std::domain_error("inverse_sqrt_psd: matrix is singular or not positive definite");
  }
  const RVector scale = eig.values.cwiseSqrt().cwiseInverse();
  return eig.vectors * scale.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
}

CMatrix leading_block(const CMatrix& m, int size) {
  if (size > m.rows() || size > m.cols()) throw std::invalid_argument("leading_block: block larger than matrix");
  return m.topLeftCorner(size, size);
}

CMatrix pad_to(const CMatrix& m, int side) {
  if (side < m.rows() || side < m.cols()) throw std::invalid_argument("pad_to: target smaller than matrix");
  CMatrix out = CMatrix::Zero(side, side);
  out.topLeftCorner(m.rows(), m.cols()) = m;
  return out;
}

}  // namespace steerlab

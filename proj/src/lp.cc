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

#include "steerlab/lp.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace steerlab {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;
using SparseMatrix = Eigen::SparseMatrix<double>;

class NormalEquations {
 public:
  explicit NormalEquations(const StructuredLp& lp) : lp_(lp) {}

  VectorXd apply(const VectorXd& x) const {
    VectorXd out(rows());
    for (std::size_t g = 0; g < lp_.groups.size(); ++g) {
      double sum = 0.0;
      for (int j : lp_.groups[g]) sum += x(j);
      out(g) = sum;
    }
    out.tail(lp_.linking.rows()) = lp_.linking * x;
    return out;
  }

  VectorXd apply_transpose(const VectorXd& y) const {
    VectorXd out = lp_.linking.transpose() * y.tail(lp_.linking.rows());
    for (std::size_t g = 0; g < lp_.groups.size(); ++g) {
      for (int j : lp_.groups[g]) out(j) += y(g);
    }
    return out;
  }

  // Factorizes A diag(scale) A^T through its Schur complement on the linking
  // block.
  void factorize(const VectorXd& scale) {
    const int ng = static_cast<int>(lp_.groups.size());
    const Eigen::Index nl = lp_.linking.rows();
    group_diag_.resize(ng);
    cross_.setZero(ng, nl);
    for (int g = 0; g < ng; ++g) {
      double diag = 0.0;
      for (int j : lp_.groups[g]) {
        diag += scale(j);
        for (SparseMatrix::InnerIterator it(lp_.linking, j); it; ++it) cross_(g, it.row()) += scale(j) * it.value();
      }
      if (!(diag > 0.0)) throw SolverError("interior point: degenerate group scaling");
      group_diag_(g) = diag;
    }
    MatrixXd schur = MatrixXd::Zero(nl, nl);
    for (Eigen::Index j = 0; j < lp_.linking.outerSize(); ++j) {
      for (SparseMatrix::InnerIterator it(lp_.linking, j); it; ++it) {
        const double v = scale(j) * it.value();
        for (SparseMatrix::InnerIterator jt(lp_.linking, j); jt; ++jt) schur(it.row(), jt.row()) += v * jt.value();
      }
    }
    schur.noalias() -= cross_.transpose() * group_diag_.cwiseInverse().asDiagonal() * cross_;
    // Tiny ridge keeps the factorization alive when iterates approach a
    // degenerate face.
    const double ridge = nl == 0 ? 0.0 : 1e-14 * std::max(1.0, schur.diagonal().cwiseAbs().maxCoeff());
    schur.diagonal().array() += ridge;
    schur_.compute(schur);
    if (schur_.info() != Eigen::Success) throw SolverError("interior point: Schur complement factorization failed");
  }

  VectorXd solve(const VectorXd& rhs) const {
    const int ng = static_cast<int>(lp_.groups.size());
    const VectorXd rg = rhs.head(ng);
    const VectorXd rl = rhs.tail(lp_.linking.rows());
    const VectorXd scaled_rg = rg.cwiseQuotient(group_diag_);
    const VectorXd vl = schur_.solve(rl - cross_.transpose() * scaled_rg);
    VectorXd out(rows());
    out.head(ng) = (rg - cross_ * vl).cwiseQuotient(group_diag_);
    out.tail(lp_.linking.rows()) = vl;
    return out;
  }

  Eigen::Index rows() const { return static_cast<Eigen::Index>(lp_.groups.size()) + lp_.linking.rows(); }

 private:
  const StructuredLp& lp_;
  VectorXd group_diag_;
  MatrixXd cross_;
  Eigen::LDLT<MatrixXd> schur_;
};

double max_step(const VectorXd& v, const VectorXd& dv) {
  double step = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (dv(i) < 0.0) step = std::min(step, -v(i) / dv(i));
  }
  return step;
}

void validate(const StructuredLp& lp) {
  const int n = lp.num_vars();
  if (n == 0) throw std::invalid_argument("lp: no variables");
  if (lp.linking.cols() != n) throw std::invalid_argument("lp: linking matrix has wrong column count");
  if (lp.linking_rhs.size() != lp.linking.rows()) throw std::invalid_argument("lp: linking rhs has wrong size");
  if (lp.group_rhs.size() != static_cast<Eigen::Index>(lp.groups.size())) {
    throw std::invalid_argument("lp: group rhs has wrong size");
  }
  std::vector<char> seen(n, 0);
  for (const auto& g : lp.groups) {
    if (g.empty()) throw std::invalid_argument("lp: empty group");
    for (int j : g) {
      if (j < 0 || j >= n || seen[j]) throw std::invalid_argument("lp: groups must be disjoint and in range");
      seen[j] = 1;
    }
  }
}

}  // namespace

LpSolution solve_interior_point(const StructuredLp& lp, const IpmOptions& options) {
  validate(lp);
  const int n = lp.num_vars();
  const int ng = static_cast<int>(lp.groups.size());
  NormalEquations normal(lp);

  VectorXd b(normal.rows());
  b.head(ng) = lp.group_rhs;
  b.tail(lp.linking.rows()) = lp.linking_rhs;
  const VectorXd& c = lp.cost;

  // Mehrotra's starting point.
  normal.factorize(VectorXd::Ones(n));
  VectorXd x = normal.apply_transpose(normal.solve(b));
  VectorXd y = normal.solve(normal.apply(c));
  VectorXd z = c - normal.apply_transpose(y);
  x.array() += std::max(0.0, -1.5 * x.minCoeff());
  z.array() += std::max(0.0, -1.5 * z.minCoeff());
  {
    const double xz = x.dot(z);
    const double shift_x = 0.5 * xz / std::max(z.sum(), 1e-300);
    const double shift_z = 0.5 * xz / std::max(x.sum(), 1e-300);
    x.array() += shift_x;
    z.array() += shift_z;
    // All-zero cost with an exact start leaves z at zero.
    if (x.minCoeff() <= 0.0) x.array() += 1.0;
    if (z.minCoeff() <= 0.0) z.array() += 1.0;
  }

  const double b_norm = 1.0 + b.cwiseAbs().maxCoeff();
  const double c_norm = 1.0 + c.cwiseAbs().maxCoeff();

  for (int iter = 0; iter <= options.max_iterations; ++iter) {
    const VectorXd rp = b - normal.apply(x);
    const VectorXd rd = c - normal.apply_transpose(y) - z;
    const double primal_obj = c.dot(x);
    const double dual_obj = b.dot(y);
    const double p_inf = rp.cwiseAbs().maxCoeff() / b_norm;
    const double d_inf = rd.cwiseAbs().maxCoeff() / c_norm;
    const double gap = std::abs(primal_obj - dual_obj) / (1.0 + std::abs(primal_obj));
    if (p_inf < options.tolerance && d_inf < options.tolerance && gap < options.tolerance) {
      return LpSolution{x, y.head(ng), y.tail(lp.linking.rows()), primal_obj, iter, p_inf, d_inf, gap};
    }
    if (iter == options.max_iterations) break;
    if (!x.allFinite() || !z.allFinite() || !y.allFinite()) throw SolverError("interior point: iterates diverged");

    const double mu = x.dot(z) / n;
    const VectorXd scale = x.cwiseQuotient(z);
    normal.factorize(scale);

    auto direction = [&](const VectorXd& rc, VectorXd& dx, VectorXd& dy, VectorXd& dz) {
      const VectorXd rc_over_z = rc.cwiseQuotient(z);
      dy = normal.solve(rp + normal.apply(scale.cwiseProduct(rd) - rc_over_z));
      dz = rd - normal.apply_transpose(dy);
      dx = rc_over_z - scale.cwiseProduct(dz);
    };

    VectorXd dx_aff, dy_aff, dz_aff;
    const VectorXd rc_aff = -x.cwiseProduct(z);
    direction(rc_aff, dx_aff, dy_aff, dz_aff);
    const double ap_aff = std::min(1.0, max_step(x, dx_aff));
    const double ad_aff = std::min(1.0, max_step(z, dz_aff));
    const double mu_aff = (x + ap_aff * dx_aff).dot(z + ad_aff * dz_aff) / n;
    const double sigma = std::pow(mu_aff / mu, 3);

    VectorXd dx, dy, dz;
    const VectorXd rc = rc_aff - dx_aff.cwiseProduct(dz_aff) + VectorXd::Constant(n, sigma * mu);
    direction(rc, dx, dy, dz);
    const double ap = std::min(1.0, 0.995 * max_step(x, dx));
    const double ad = std::min(1.0, 0.995 * max_step(z, dz));
    x += ap * dx;
    y += ad * dy;
    z += ad * dz;
  }
  throw SolverError("interior point: no convergence within " + std::to_string(options.max_iterations) + " iterations");
}

}  // namespace steerlab

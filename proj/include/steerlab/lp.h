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

#ifndef STEERLAB_LP_H
#define STEERLAB_LP_H

#include <stdexcept>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

namespace steerlab {

/// Raised when the interior-point iteration fails to converge.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Standard-form LP
///
///   minimize    cost^T x
///   subject to  sum_{j in groups[g]} x_j = group_rhs[g]   for every g
///               linking x = linking_rhs
///               x >= 0
///
/// The groups must be disjoint. Each group row is a unit-coefficient
/// convexity constraint, so the normal equations reduce to a dense system
/// of the size of the linking block. The linking block is sparse; the cost
/// of one iteration scales with the sum over columns of nnz(column)^2.
struct StructuredLp {
  std::vector<std::vector<int>> groups;
  Eigen::VectorXd group_rhs;
  Eigen::SparseMatrix<double> linking;  // column-major
  Eigen::VectorXd linking_rhs;
  Eigen::VectorXd cost;

  int num_vars() const { return static_cast<int>(cost.size()); }
};

struct IpmOptions {
  double tolerance = 1e-10;
  int max_iterations = 200;
};

struct LpSolution {
  Eigen::VectorXd x;
  Eigen::VectorXd y_groups;
  Eigen::VectorXd y_linking;
  double objective;
  int iterations;
  double primal_infeasibility;
  double dual_infeasibility;
  double gap;
};

/// Mehrotra predictor-corrector interior-point method. Throws SolverError
/// when the iteration limit is reached or the normal equations break down.
LpSolution solve_interior_point(const StructuredLp& lp, const IpmOptions& options = {});

}  // namespace steerlab

#endif  // STEERLAB_LP_H

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

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "gtest/gtest.h"

using namespace steerlab;

namespace {

struct DenseLp {
  Eigen::MatrixXd a;
  Eigen::VectorXd b;
  Eigen::VectorXd c;
};

DenseLp densify(const StructuredLp& lp) {
  const int n = lp.num_vars();
  const int groups = static_cast<int>(lp.groups.size());
  const int rows = groups + static_cast<int>(lp.linking.rows());
  DenseLp out{Eigen::MatrixXd::Zero(rows, n), Eigen::VectorXd(rows), lp.cost};
  for (int g = 0; g < groups; ++g) {
    for (int j : lp.groups[g]) out.a(g, j) = 1.0;
    out.b(g) = lp.group_rhs(g);
  }
  out.a.bottomRows(lp.linking.rows()) = Eigen::MatrixXd(lp.linking);
  out.b.tail(lp.linking.rows()) = lp.linking_rhs;
  return out;
}

// Minimum over all basic feasible solutions.
double vertex_enumeration(const DenseLp& lp) {
  const int m = static_cast<int>(lp.a.rows());
  const int n = static_cast<int>(lp.a.cols());
  double best = std::numeric_limits<double>::infinity();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != m) continue;
    std::vector<int> cols;
    for (int j = 0; j < n; ++j) {
      if (mask & (1u << j)) cols.push_back(j);
    }
    Eigen::MatrixXd basis(m, m);
    for (int k = 0; k < m; ++k) basis.col(k) = lp.a.col(cols[k]);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(basis);
    if (lu.rank() < m) continue;
    const Eigen::VectorXd xb = lu.solve(lp.b);
    if (xb.minCoeff() < -1e-12) continue;
    double cost = 0.0;
    for (int k = 0; k < m; ++k) cost += lp.c(cols[k]) * xb(k);
    best = std::min(best, cost);
  }
  return best;
}

StructuredLp random_lp(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.1, 1.0);
  std::normal_distribution<double> g;
  StructuredLp lp;
  lp.groups = {{0, 1, 2}, {3, 4}};
  lp.group_rhs = Eigen::Vector2d(1.0, 2.0);
  const int n = 7;
  Eigen::VectorXd interior(n);
  interior << 0.2, 0.3, 0.5, 1.2, 0.8, u(rng), u(rng);
  Eigen::MatrixXd link(2, n);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < n; ++j) link(i, j) = g(rng);
  }
  // Free columns are pinned by the linking rows, which keeps the LP bounded.
  link(0, 5) = 1.0 + u(rng);
  link(1, 5) = 0.0;
  link(0, 6) = 0.0;
  link(1, 6) = 1.0 + u(rng);
  lp.linking = link.sparseView();
  lp.linking_rhs = link * interior;
  lp.cost = Eigen::VectorXd(n);
  for (int j = 0; j < n; ++j) lp.cost(j) = g(rng);
  return lp;
}

}  // namespace

TEST(InteriorPoint, MatchesVertexEnumeration) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    const StructuredLp lp = random_lp(rng);
    const LpSolution sol = solve_interior_point(lp);
    const double oracle = vertex_enumeration(densify(lp));
    ASSERT_NEAR(sol.objective, oracle, 1e-7 * (1.0 + std::abs(oracle))) << trial;
    ASSERT_GE(sol.x.minCoeff(), 0.0);
    const DenseLp dense = densify(lp);
    ASSERT_LT((dense.a * sol.x - dense.b).cwiseAbs().maxCoeff(), 1e-8);
    ASSERT_LT(sol.gap, 1e-7);
  }
}

TEST(InteriorPoint, SimplexMinimumPicksCheapestVertex) {
  StructuredLp lp;
  lp.groups = {{0, 1, 2}};
  lp.group_rhs = Eigen::VectorXd::Ones(1);
  lp.linking.resize(0, 3);
  lp.linking_rhs.resize(0);
  lp.cost = Eigen::Vector3d(3.0, -1.0, 2.0);
  const LpSolution sol = solve_interior_point(lp);
  EXPECT_NEAR(sol.objective, -1.0, 1e-9);
  EXPECT_NEAR(sol.x(1), 1.0, 1e-8);
}

TEST(InteriorPoint, RejectsMalformedProblems) {
  StructuredLp lp;
  lp.groups = {{0, 1}, {1}};
  lp.group_rhs = Eigen::Vector2d(1.0, 1.0);
  lp.linking.resize(0, 2);
  lp.linking_rhs.resize(0);
  lp.cost = Eigen::Vector2d(1.0, 1.0);
  EXPECT_THROW(solve_interior_point(lp), std::invalid_argument);
  lp.groups = {{0}, {}};
  EXPECT_THROW(solve_interior_point(lp), std::invalid_argument);
  lp.groups = {{0}, {1}};
  lp.linking.resize(1, 3);
  EXPECT_THROW(solve_interior_point(lp), std::invalid_argument);
}

TEST(InteriorPoint, IterationLimitIsSolverError) {
  std::mt19937_64 rng(62);
  const StructuredLp lp = random_lp(rng);
  EXPECT_THROW(solve_interior_point(lp, IpmOptions{1e-10, 1}), SolverError);
}

TEST(InteriorPoint, InfeasibleProblemIsSolverError) {
  StructuredLp lp;
  lp.groups = {{0, 1}};
  lp.group_rhs = Eigen::VectorXd::Ones(1);
  Eigen::MatrixXd link(1, 2);
  link << 1.0, 1.0;
  lp.linking = link.sparseView();
  lp.linking_rhs = Eigen::VectorXd::Constant(1, 5.0);
  lp.cost = Eigen::Vector2d(1.0, 0.0);
  EXPECT_THROW(solve_interior_point(lp), SolverError);
}

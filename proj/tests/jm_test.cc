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

#include "steerlab/jm.h"

#include <cmath>
#include <stdexcept>

#include "gtest/gtest.h"
#include "steerlab/covariant.h"
#include "steerlab/lossy.h"
#include "test_util.h"

using namespace steerlab;
using namespace steerlab::testing;

namespace {

std::vector<Povm> noisy_zx(double eta, double p) {
  const auto [z, x] = mub_pair(2);
  const NoiseParams params = NoiseParams::make(2, eta, p);
  return {noisify_povm(z, params), noisify_povm(x, params)};
}

std::vector<CVector> tetrahedron() {
  const double c = 1.0 / std::sqrt(3.0);
  const double s = std::sqrt(2.0 / 3.0);
  std::vector<CVector> out;
  CVector up(2);
  up << 1.0, 0.0;
  out.push_back(up);
  for (int k = 0; k < 3; ++k) {
    CVector v(2);
    v << c, s * std::polar(1.0, 2.0 * std::numbers::pi * k / 3.0);
    out.push_back(v);
  }
  return out;
}

void expect_normalized(const JmCertificate& cert) {
  for (const auto& table : cert.conditionals) {
    for (const auto& row : table) {
      double sum = 0.0;
      for (double v : row) {
        ASSERT_GE(v, 0.0);
        sum += v;
      }
      ASSERT_NEAR(sum, 1.0, 1e-12);
    }
  }
}

}  // namespace

TEST(Parent, CorrectedEffectsResolveIdentity) {
  for (int d = 2; d <= 5; ++d) {
    const DiscreteParent parent = discretize_parent(d, d * d + 3, 17);
    CMatrix sum = CMatrix::Zero(d, d);
    for (const auto& e : parent.effects) {
      ASSERT_TRUE(is_psd(e));
      sum += e;
    }
    EXPECT_LT(frobenius_distance(sum, identity(d)), 1e-12);
    EXPECT_EQ(parent.size(), static_cast<std::size_t>(d * d + 3));
  }
}

TEST(Parent, RawSumConvergesToIdentity) {
  const DiscreteParent parent = discretize_parent(2, 1000000, 2026);
  EXPECT_LT(parent.raw_deviation, 5e-3);
  EXPECT_LT(frobenius_distance(parent.correction, identity(2)), 5e-3);
}

TEST(Parent, TetrahedralStatesNeedNoCorrection) {
  const DiscreteParent parent = parent_from_states(tetrahedron());
  EXPECT_LT(parent.raw_deviation, 1e-15);
  EXPECT_LT(max_abs(parent.correction - identity(2)), 1e-14);
  for (std::size_t l = 0; l < 4; ++l) {
    EXPECT_LT(max_abs(parent.effects[l] - 0.5 * projector(tetrahedron()[l])), 1e-14);
  }
}

TEST(Parent, RejectsBadInput) {
  EXPECT_THROW(discretize_parent(3, 8, 1), std::invalid_argument);
  EXPECT_THROW(discretize_parent(0, 8, 1), std::invalid_argument);
  std::vector<CVector> same(5, CVector::Unit(2, 0));
  EXPECT_THROW(parent_from_states(same), std::domain_error);
  EXPECT_THROW(parent_from_states(tetrahedron(), {0.5, 0.5}), std::invalid_argument);
  EXPECT_THROW(parent_from_states(tetrahedron(), {0.5, 0.5, 0.5, -0.5}), std::invalid_argument);
}

TEST(Certify, SinglePovmIsFeasible) {
  Rng rng = make_rng(71);
  for (int d = 2; d <= 3; ++d) {
    const Povm m = random_povm(d, 3, rng);
    const JmCertificate cert = lp_feasibility({m}, discretize_parent(d, 500, 3), 1e-6);
    EXPECT_EQ(cert.status, JmStatus::kFeasible);
    EXPECT_LE(cert.residual, 1e-6);
    EXPECT_NEAR(verify_certificate(cert, {m}), cert.residual, 1e-12);
    expect_normalized(cert);
  }
  // An expressible target keeps the supplied parent.
  const DiscreteParent parent = discretize_parent(2, 500, 3);
  const JmCertificate noisy = lp_feasibility({noisy_zx(0.5, 0.5)[0]}, parent, 1e-6);
  EXPECT_EQ(noisy.status, JmStatus::kFeasible);
  EXPECT_EQ(noisy.parent.size(), parent.size());
}

TEST(Certify, NoisyMubsAreFeasible) {
  const JmCertificate cert = lp_feasibility(noisy_zx(0.6, 0.4), discretize_parent(2, 2000, 5), 1e-6);
  EXPECT_EQ(cert.status, JmStatus::kFeasible);
  EXPECT_LE(cert.residual, 1e-6);
  expect_normalized(cert);
  EXPECT_NEAR(verify_certificate(cert, noisy_zx(0.6, 0.4)), cert.residual, 1e-12);
}

TEST(Certify, FeasibleAcrossVisibilities) {
  const DiscreteParent parent = discretize_parent(2, 1000, 6);
  for (int k = 1; k <= 9; ++k) {
    const double p = k / 10.0;
    const JmCertificate cert = lp_feasibility(noisy_zx(1.0 - p, p), parent, 1e-4);
    EXPECT_EQ(cert.status, JmStatus::kFeasible) << p;
    EXPECT_LE(cert.residual, 1e-4) << p;
  }
}

TEST(Certify, NoiselessMubsAreNot) {
  const auto [z, x] = mub_pair(2);
  const JmCertificate cert = lp_feasibility({z, x}, discretize_parent(2, 2000, 5), 1e-4);
  EXPECT_EQ(cert.status, JmStatus::kInfeasibleAtTolerance);
  EXPECT_GT(cert.residual, 0.1);
  EXPECT_EQ(to_string(cert.status), "infeasible-at-tolerance");
}

TEST(Certify, ObjectiveGrowsWithVisibility) {
  // Lossless targets: compatibility degrades as the visibility rises.
  const DiscreteParent parent = discretize_parent(2, 1000, 8);
  double previous = -1.0;
  for (double p : {0.6, 0.75, 0.9, 1.0}) {
    const JmCertificate cert = lp_feasibility(noisy_zx(1.0, p), parent, 1e-6);
    EXPECT_GE(cert.lp_objective, previous - 1e-9) << p;
    previous = cert.lp_objective;
  }
  EXPECT_GT(previous, 0.1);
}

TEST(Certify, TamperedConditionalsRaiseResidual) {
  const auto targets = noisy_zx(0.5, 0.5);
  JmCertificate cert = lp_feasibility(targets, discretize_parent(2, 500, 9), 1e-6);
  ASSERT_EQ(cert.status, JmStatus::kFeasible);
  for (auto& row : cert.conditionals[0]) row[0] = 0.0;
  EXPECT_GT(verify_certificate(cert, targets), 1e-2);
}

TEST(Certify, CovariantModelIsReproduced) {
  // At the bound the response-function model solves the LP up to
  // discretization error; the optimizer must do at least as well.
  const int d = 3;
  const double p = 0.5;
  const NoiseParams params = NoiseParams::make(d, std::pow(1.0 - p, d - 1), p);
  const auto [a, b] = mub_pair(d);
  const std::vector<Povm> targets = {noisify_povm(a, params), noisify_povm(b, params)};
  const DiscreteParent parent = discretize_parent(d, 3000, 10);
  const JmCertificate cert = lp_feasibility(targets, parent, 1e-6);

  JmCertificate model_cert = cert;
  model_cert.conditionals.clear();
  for (const auto* m : {&a, &b}) {
    const ResponseFunctionModel model = build_jm_model(*m, params);
    std::vector<std::vector<double>> table;
    for (const auto& z : parent.states) table.push_back(model.respond(z));
    model_cert.conditionals.push_back(table);
  }
  const double model_residual = verify_certificate(model_cert, targets);
  EXPECT_LE(cert.residual, model_residual + 1e-9);
  EXPECT_EQ(cert.status, JmStatus::kFeasible);
}

TEST(Certify, RejectsMismatchedInput) {
  const DiscreteParent parent = discretize_parent(2, 100, 1);
  EXPECT_THROW(lp_feasibility({}, parent), std::invalid_argument);
  EXPECT_THROW(lp_feasibility({mub_pair(3).first}, parent), std::invalid_argument);
  EXPECT_THROW(lp_feasibility(noisy_zx(0.5, 0.5), parent, -1.0), std::invalid_argument);
  JmCertificate cert = lp_feasibility(noisy_zx(0.5, 0.5), parent);
  EXPECT_THROW(verify_certificate(cert, {noisy_zx(0.5, 0.5)[0]}), std::invalid_argument);
  cert.conditionals[0].pop_back();
  EXPECT_THROW(verify_certificate(cert, noisy_zx(0.5, 0.5)), std::invalid_argument);
}

TEST(PovmDeviation, Basic) {
  const auto [z, x] = mub_pair(2);
  EXPECT_EQ(povm_deviation(z, z), 0.0);
  EXPECT_NEAR(povm_deviation(z, x), 1.0, 1e-14);
  EXPECT_THROW(povm_deviation(z, mub_pair(3).first), std::invalid_argument);
}

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

#ifndef STEERLAB_JM_H
#define STEERLAB_JM_H

#include <cstdint>
#include <string>
#include <vector>

#include "steerlab/lp.h"
#include "steerlab/quantum.h"

namespace steerlab {

/// Finite parent POVM: atoms w_l d |z_l><z_l| conjugated by S^{-1/2}, where
/// S is their raw sum, so the effects resolve the identity exactly.
struct DiscreteParent {
  int d;
  std::vector<double> weights;
  std::vector<CVector> states;
  std::vector<CMatrix> effects;
  CMatrix correction;    // S^{-1/2}
  double raw_deviation;  // |S - I|_F before correction

  std::size_t size() const { return effects.size(); }
};

/// n_atoms Haar states with uniform weights. Requires n_atoms >= d^2;
/// throws std::domain_error if the raw sum is singular.
DiscreteParent discretize_parent(int d, int n_atoms, std::uint64_t seed);

/// Parent from explicit states; weights default to uniform.
DiscreteParent parent_from_states(const std::vector<CVector>& states, std::vector<double> weights = {});

enum class JmStatus { kFeasible, kInfeasibleAtTolerance };

std::string to_string(JmStatus status);

/// Post-processing of a discrete parent into a set of target POVMs.
/// A feasible status only says that this parent reproduces the targets to
/// `tol`; an infeasible one is not evidence of incompatibility.
struct JmCertificate {
  DiscreteParent parent;
  // conditionals[x][lambda][a] = p(a|x, lambda)
  std::vector<std::vector<std::vector<double>>> conditionals;
  double residual;      // max_{a,x} |sum_l p(a|x,l) E_l - M_{a|x}|_F
  double lp_objective;  // optimal entrywise bound from the solver
  double tol;
  JmStatus status;
  int iterations;
};

/// Minimizes the largest entrywise deviation (real and imaginary parts)
/// between the post-processed parent and every target effect. Settings are
/// independent given the parent, so each one is solved as its own LP.
/// A single target the parent cannot express is certified instead against
/// its own rank-one refinement, which is recorded as the certificate parent.
/// Throws SolverError if the solver fails.
JmCertificate lp_feasibility(const std::vector<Povm>& targets, const DiscreteParent& parent, double tol = 1e-6);

/// Recomputes the residual of a certificate from its parent and
/// conditionals alone.
double verify_certificate(const JmCertificate& cert, const std::vector<Povm>& targets);

/// Largest Frobenius distance between corresponding effects.
double povm_deviation(const Povm& a, const Povm& b);

}  // namespace steerlab

#endif  // STEERLAB_JM_H

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

#ifndef STEERLAB_COVARIANT_H
#define STEERLAB_COVARIANT_H

#include <cstdint>
#include <string>
#include <vector>

#include "steerlab/lossy.h"
#include "steerlab/quantum.h"
#include "steerlab/random.h"

namespace steerlab {

enum class HaarMethod {
  // Normalized vector of 2d standard normals.
  kGaussianNormalize,
  // Nested-angle coordinates: sin^2 of each polar angle is drawn from its
  // power-law marginal by inversion, phases are uniform, z_0 is real.
  kAngleParametrization,
};

/// Unitarily invariant pure states on C^d.
class HaarSampler {
 public:
  explicit HaarSampler(int d, HaarMethod method = HaarMethod::kGaussianNormalize, std::uint64_t seed = 0);

  int d() const { return d_; }
  HaarMethod method() const { return method_; }
  std::uint64_t seed() const { return seed_; }

  /// n i.i.d. states from stream 0 of the seed.
  std::vector<PureState> sample(std::size_t n) const;

  /// One unit vector drawn from the given generator.
  CVector draw(Rng& rng) const;

 private:
  int d_;
  HaarMethod method_;
  std::uint64_t seed_;
};

/// Integrals of the threshold response |<phi|z>|^2 >= t against the
/// covariant density d|z><z|:
///   abar(d,t) = (1-t)^{d-1}((d-1)t + 1)   (weight along phi)
///   tbar(d,t) = d(1-t)^{d-1}              (total weight)
///   bbar(d,t) = tbar - abar               (weight orthogonal to phi)
double abar(int d, double t);
double tbar(int d, double t);
double bbar(int d, double t);

struct McEstimate {
  double value;
  double stderr;
};

struct IntegralEstimates {
  McEstimate abar;
  McEstimate tbar;
};

/// Monte Carlo estimates of abar and tbar with phi = |0>, split over
/// worker_count() independent streams derived from the seed.
IntegralEstimates mc_integrals(int d, double t, std::size_t n, std::uint64_t seed,
                               HaarMethod method = HaarMethod::kGaussianNormalize);

/// Sample mean of |z><z| (should approach I/d).
CMatrix mc_first_moment(int d, std::size_t n, std::uint64_t seed, HaarMethod method = HaarMethod::kGaussianNormalize);

/// abar |phi><phi| + bbar (I - |phi><phi|)/(d-1)
CMatrix analytic_effect(int d, double t, const CVector& phi);

struct McEffect {
  CMatrix estimate;
  Eigen::MatrixXd stderr_re;
  Eigen::MatrixXd stderr_im;
  CMatrix analytic;
  // Largest entrywise |estimate - analytic| in units of the standard error.
  double max_sigma_deviation;
};

/// Monte Carlo estimate of the integral of p(z) d|z><z| with the
/// deterministic threshold response on phi.
McEffect mc_effect(int d, double t, const PureState& phi, std::size_t n, std::uint64_t seed);

/// One element alpha |phi><phi| of a rank-one POVM.
struct RankOneElement {
  std::string label;
  double alpha;
  CVector phi;
};

/// Rank-one elements alpha_a = |v_a|^2, phi_a = v_a/|v_a| from the columns
/// of a frame V with V V^dagger = I.
std::vector<RankOneElement> rank_one_from_frame(const CMatrix& frame);

/// Effects (alpha_a/d)(abar |phi_a><phi_a| + bbar (I - |phi_a><phi_a|)/(d-1))
/// produced by the covariant parent, with N_ø = I - sum_a N_a. The targets
/// must resolve the identity within kHermitianTol.
Povm simulate_rank1_povm(const std::vector<RankOneElement>& targets, double t);

/// Noise parameters simulated at threshold t: eta = (1-t)^{d-1}, p = t.
NoiseParams eta_p_from_t(int d, double t);

/// Response-function model for one POVM built on the covariant parent.
struct ResponseFunctionModel {
  int d;
  double t;
  NoiseParams target_params;
  std::vector<RankOneElement> targets;  // rank-one refinement
  std::vector<int> outcome_of;          // refinement index -> input outcome
  std::vector<std::string> labels;      // input outcome labels (ø is appended)
  // Probability of forwarding the simulated outcome; otherwise ø is reported.
  double keep_probability;

  /// alpha_a / d over the refinement.
  std::vector<double> sampling_dist() const;

  /// p(a|z) over the input outcomes followed by ø.
  std::vector<double> respond(const CVector& z) const;

  /// Closed-form POVM the model produces on the covariant parent.
  Povm simulated_povm() const;
};

/// Builds the model reproducing noisify_povm(m, params) at t = p. Requires
/// d >= 2 and eta <= (1-p)^{d-1}; the model is refused otherwise.
ResponseFunctionModel build_jm_model(const Povm& m, const NoiseParams& params);

}  // namespace steerlab

#endif  // STEERLAB_COVARIANT_H

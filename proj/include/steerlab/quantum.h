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

#ifndef STEERLAB_QUANTUM_H
#define STEERLAB_QUANTUM_H

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "steerlab/linalg.h"

namespace steerlab {

/// Label reserved for the no-click outcome. The vacuum level of a lossy
/// system is always the last basis index.
inline constexpr std::string_view kNoClick = "ø";

/// Positive, unit-trace operator with its subsystem dimensions.
class DensityOperator {
 public:
  /// Validates Hermiticity, positivity and unit trace at kHermitianTol.
  DensityOperator(CMatrix mat, std::vector<int> dims);

  const CMatrix& matrix() const { return mat_; }
  const std::vector<int>& dims() const { return dims_; }
  int dim() const { return static_cast<int>(mat_.rows()); }

 private:
  CMatrix mat_;
  std::vector<int> dims_;
};

class PureState {
 public:
  /// Requires unit norm within 1e-12.
  PureState(CVector vec, std::vector<int> dims);

  const CVector& vector() const { return vec_; }
  const std::vector<int>& dims() const { return dims_; }
  int dim() const { return static_cast<int>(vec_.size()); }
  DensityOperator density() const;

 private:
  CVector vec_;
  std::vector<int> dims_;
};

struct Effect {
  std::string label;
  CMatrix op;
};

/// Positive effects summing to the identity.
class Povm {
 public:
  /// Checks each effect is PSD at kHermitianTol and the sum is the identity
  /// within kHermitianTol in Frobenius norm. Labels must be unique.
  explicit Povm(std::vector<Effect> effects);

  /// Labels "0", "1", ... for the given operators.
  static Povm from_operators(const std::vector<CMatrix>& ops);

  const std::vector<Effect>& effects() const { return effects_; }
  const Effect& operator[](std::size_t i) const { return effects_[i]; }
  std::size_t size() const { return effects_.size(); }
  int dim() const { return static_cast<int>(effects_.front().op.rows()); }
  bool has_label(std::string_view label) const;

 private:
  std::vector<Effect> effects_;
};

/// Frobenius distance between sum(ops) and the identity.
double identity_deviation(const std::vector<CMatrix>& ops);

/// Completely positive trace-preserving map. Compositions keep their factors
/// and apply them in sequence, so both pictures use the closed forms of the
/// white-noise and loss stages.
class Channel {
 public:
  struct WhiteNoise {
    double p;
    int d;
  };
  struct Loss {
    double eta;
    int d;
  };
  struct Kraus {
    std::vector<CMatrix> ops;
  };
  struct Composition {
    std::vector<Channel> stages;  // stages[0] acts first
  };

  /// rho -> p rho + (1-p) tr(rho) I/d
  static Channel white_noise(double p, int d);
  /// rho -> eta rho + (1-eta) tr(rho) |ø><ø| on d -> d+1 levels
  static Channel loss(double eta, int d);
  /// Requires sum K^dagger K = I within kHermitianTol.
  static Channel kraus(std::vector<CMatrix> ops);
  static Channel compose(std::vector<Channel> stages);

  int in_dim() const { return in_dim_; }
  int out_dim() const { return out_dim_; }

  /// Image of an arbitrary in_dim x in_dim operator (the map is linear, so
  /// this is also used blockwise on larger systems).
  CMatrix apply(const CMatrix& x) const;

  /// Heisenberg picture: the adjoint map on out_dim x out_dim operators.
  CMatrix dual(const CMatrix& effect) const;

  /// An explicit Kraus representation; compositions return all products.
  std::vector<CMatrix> kraus_operators() const;

  /// sum_ij |i><j| (x) C(|i><j|)
  CMatrix choi() const;

  const auto& kind() const { return kind_; }

 private:
  using Kind = std::variant<WhiteNoise, Loss, Kraus, Composition>;
  Channel(Kind kind, int in_dim, int out_dim);

  Kind kind_;
  int in_dim_;
  int out_dim_;
};

/// (1/sqrt d) sum_k |k,k>
PureState phi_plus(int d);

/// Applies c to one factor of a multipartite state; the output dims have
/// that factor replaced by c.out_dim().
DensityOperator apply_channel(const Channel& c, const DensityOperator& rho, int on_subsystem);

/// Checks the effect shape against the channel before mapping.
CMatrix dual_apply(const Channel& c, const CMatrix& effect);

/// eta p Phi+ + eta (1-p) I/d^2 + (1-eta) I/d (x) |ø><ø| on d x (d+1).
/// Alice is the first factor; Bob's signal occupies levels 0..d-1.
DensityOperator one_way_state(int d, double eta, double p);

struct SchmidtDecomposition {
  int rank;
  RVector coefficients;  // descending, all of them
};

/// Rank counts singular values of the coefficient matrix above tol.
SchmidtDecomposition schmidt_rank(const PureState& psi, double tol = 1e-12);

bool is_prime(int n);

/// Computational and Fourier bases for prime d.
std::pair<Povm, Povm> mub_pair(int d);

}  // namespace steerlab

#endif  // STEERLAB_QUANTUM_H

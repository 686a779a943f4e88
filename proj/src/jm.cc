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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "steerlab/covariant.h"
#include "steerlab/parallel.h"

namespace steerlab {
namespace {

// Real coordinates of a Hermitian d x d matrix: Re of the upper triangle
// including the diagonal, then Im of the strict upper triangle.
int coordinate_count(int d) { return d * d; }

void hermitian_coordinates(const CMatrix& m, double* out) {
  const int d = static_cast<int>(m.rows());
  int k = 0;
  for (int i = 0; i < d; ++i) {
    for (int j = i; j < d; ++j) out[k++] = m(i, j).real();
  }
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) out[k++] = m(i, j).imag();
  }
}

struct SettingSolution {
  std::vector<std::vector<double>> conditionals;  // [lambda][a]
  double objective;
  int iterations;
};

SettingSolution solve_setting(const Povm& target, const DiscreteParent& parent, const Eigen::MatrixXd& atom_coords) {
  const int n = static_cast<int>(parent.size());
  const int m = static_cast<int>(target.size());
  const int r = coordinate_count(parent.d);
  const int k_rows = m * r;
  const int num_p = n * m;
  const int s_index = num_p;
  const int nvars = num_p + 1 + 2 * k_rows;

  StructuredLp lp;
  lp.cost = Eigen::VectorXd::Zero(nvars);
  lp.cost(s_index) = 1.0;
  lp.groups.resize(n);
  for (int l = 0; l < n; ++l) {
    lp.groups[l].resize(m);
    std::iota(lp.groups[l].begin(), lp.groups[l].end(), l * m);
  }
  lp.group_rhs = Eigen::VectorXd::Ones(n);

  // Rows 2(a r + k) and 2(a r + k) + 1 bound the coordinate k of outcome a
  // from above and below by s.
  std::vector<Eigen::Triplet<double>> entries;
  entries.reserve(static_cast<std::size_t>(2) * r * num_p + 6 * static_cast<std::size_t>(k_rows));
  lp.linking_rhs.resize(2 * k_rows);
  std::vector<double> target_coords(r);
  for (int a = 0; a < m; ++a) {
    hermitian_coordinates(target[a].op, target_coords.data());
    for (int k = 0; k < r; ++k) {
      const int row = 2 * (a * r + k);
      for (int l = 0; l < n; ++l) {
        const double v = atom_coords(k, l);
        if (v == 0.0) continue;
        entries.emplace_back(row, l * m + a, v);
        entries.emplace_back(row + 1, l * m + a, v);
      }
      entries.emplace_back(row, s_index, -1.0);
      entries.emplace_back(row + 1, s_index, 1.0);
      entries.emplace_back(row, s_index + 1 + (a * r + k), 1.0);
      entries.emplace_back(row + 1, s_index + 1 + k_rows + (a * r + k), -1.0);
      lp.linking_rhs(row) = target_coords[k];
      lp.linking_rhs(row + 1) = target_coords[k];
    }
  }
  lp.linking.resize(2 * k_rows, nvars);
  lp.linking.setFromTriplets(entries.begin(), entries.end());

  const LpSolution sol = solve_interior_point(lp);
  SettingSolution out;
  out.objective = sol.objective;
  out.iterations = sol.iterations;
  out.conditionals.assign(n, std::vector<double>(m, 0.0));
  for (int l = 0; l < n; ++l) {
    double total = 0.0;
    for (int a = 0; a < m; ++a) {
      const double v = std::max(0.0, sol.x(l * m + a));
      out.conditionals[l][a] = v;
      total += v;
    }
    for (int a = 0; a < m; ++a) out.conditionals[l][a] = total > 0.0 ? out.conditionals[l][a] / total : 1.0 / m;
  }
  return out;
}

}  // namespace

DiscreteParent parent_from_states(const std::vector<CVector>& states, std::vector<double> weights) {
  if (states.empty()) throw std::invalid_argument("parent_from_states: no states");
  const int d = static_cast<int>(states.front().size());
  if (weights.empty()) weights.assign(states.size(), 1.0 / static_cast<double>(states.size()));
  if (weights.size() != states.size()) throw std::invalid_argument("parent_from_states: weight count mismatch");

  DiscreteParent parent;
  parent.d = d;
  parent.weights = std::move(weights);
  CMatrix raw_sum = CMatrix::Zero(d, d);
  std::vector<CMatrix> raw;
  for (std::size_t l = 0; l < states.size(); ++l) {
    if (states[l].size() != d) throw std::invalid_argument("parent_from_states: states differ in dimension");
    if (parent.weights[l] < 0.0) throw std::invalid_argument("parent_from_states: negative weight");
    const CVector z = states[l] / states[l].norm();
    parent.states.push_back(z);
    raw.push_back(parent.weights[l] * d * projector(z));
    raw_sum += raw.back();
  }
  parent.raw_deviation = frobenius_distance(raw_sum, identity(d));
  parent.correction = inverse_sqrt_psd(0.5 * (raw_sum + raw_sum.adjoint()), 1e-10);
  for (const auto& e : raw) {
    const CMatrix corrected = parent.correction * e * parent.correction;
    parent.effects.push_back(0.5 * (corrected + corrected.adjoint()));
  }
  return parent;
}

DiscreteParent discretize_parent(int d, int n_atoms, std::uint64_t seed) {
  if (d < 1) throw std::invalid_argument("discretize_parent: d must be positive");
  if (n_atoms < d * d) {
    throw std::invalid_argument("discretize_parent: need at least d^2 = " + std::to_string(d * d) + " atoms");
  }
  const std::vector<PureState> sampled = HaarSampler(d, HaarMethod::kGaussianNormalize, seed).sample(n_atoms);
  std::vector<CVector> states;
  states.reserve(sampled.size());
  for (const auto& s : sampled) states.push_back(s.vector());
  try {
    return parent_from_states(states);
  } catch (const std::domain_error&) {
    throw std::domain_error("discretize_parent: sampled atoms do not span C^d; retry with more atoms");
  }
}

std::string to_string(JmStatus status) {
  return status == JmStatus::kFeasible ? "feasible" : "infeasible-at-tolerance";
}

namespace {

// A lone POVM is its own parent: its rank-one refinement read out
// deterministically.
JmCertificate self_certificate(const Povm& m) {
  const int d = m.dim();
  std::vector<CVector> states;
  std::vector<double> weights;
  std::vector<int> owner;
  for (std::size_t a = 0; a < m.size(); ++a) {
    const HermitianEigen eig = eig_hermitian(m[a].op);
    for (Eigen::Index k = 0; k < eig.values.size(); ++k) {
      if (eig.values(k) <= 1e-14) continue;
      states.push_back(eig.vectors.col(k));
      weights.push_back(eig.values(k) / d);
      owner.push_back(static_cast<int>(a));
    }
  }
  JmCertificate cert;
  cert.parent = parent_from_states(states, weights);
  std::vector<std::vector<double>> table(states.size(), std::vector<double>(m.size(), 0.0));
  for (std::size_t l = 0; l < states.size(); ++l) table[l][owner[l]] = 1.0;
  cert.conditionals.push_back(std::move(table));
  return cert;
}

}  // namespace

JmCertificate lp_feasibility(const std::vector<Povm>& targets, const DiscreteParent& parent, double tol) {
  if (targets.empty()) throw std::invalid_argument("lp_feasibility: no targets");
  if (parent.effects.empty()) throw std::invalid_argument("lp_feasibility: empty parent");
  for (const auto& t : targets) {
    if (t.dim() != parent.d) throw std::invalid_argument("lp_feasibility: target dimension does not match parent");
  }
  if (!(tol >= 0.0)) throw std::invalid_argument("lp_feasibility: tolerance must be nonnegative");

  const int n = static_cast<int>(parent.size());
  Eigen::MatrixXd atom_coords(coordinate_count(parent.d), n);
  for (int l = 0; l < n; ++l) hermitian_coordinates(parent.effects[l], atom_coords.col(l).data());

  const int settings = static_cast<int>(targets.size());
  std::vector<SettingSolution> solutions(settings);
  const int workers = std::min(settings, worker_count());
  run_workers(workers, [&](int w) {
    for (int x = w; x < settings; x += workers) solutions[x] = solve_setting(targets[x], parent, atom_coords);
  });

  JmCertificate cert;
  cert.parent = parent;
  cert.tol = tol;
  cert.lp_objective = 0.0;
  cert.iterations = 0;
  for (auto& s : solutions) {
    cert.lp_objective = std::max(cert.lp_objective, s.objective);
    cert.iterations = std::max(cert.iterations, s.iterations);
    cert.conditionals.push_back(std::move(s.conditionals));
  }
  cert.residual = verify_certificate(cert, targets);
  cert.status = cert.residual <= tol ? JmStatus::kFeasible : JmStatus::kInfeasibleAtTolerance;
  if (settings == 1 && cert.status != JmStatus::kFeasible) {
    JmCertificate own = self_certificate(targets.front());
    own.tol = tol;
    own.lp_objective = cert.lp_objective;
    own.iterations = cert.iterations;
    own.residual = verify_certificate(own, targets);
    own.status = own.residual <= tol ? JmStatus::kFeasible : JmStatus::kInfeasibleAtTolerance;
    return own;
  }
  return cert;
}

double verify_certificate(const JmCertificate& cert, const std::vector<Povm>& targets) {
  if (cert.conditionals.size() != targets.size()) throw std::invalid_argument("verify_certificate: setting count mismatch");
  const int d = cert.parent.d;
  double worst = 0.0;
  for (std::size_t x = 0; x < targets.size(); ++x) {
    const auto& table = cert.conditionals[x];
    if (table.size() != cert.parent.size()) throw std::invalid_argument("verify_certificate: atom count mismatch");
    for (std::size_t a = 0; a < targets[x].size(); ++a) {
      CMatrix rebuilt = CMatrix::Zero(d, d);
      for (std::size_t l = 0; l < table.size(); ++l) {
        if (table[l].size() != targets[x].size()) throw std::invalid_argument("verify_certificate: outcome count mismatch");
        rebuilt += table[l][a] * cert.parent.effects[l];
      }
      worst = std::max(worst, frobenius_distance(rebuilt, targets[x][a].op));
    }
  }
  return worst;
}

double povm_deviation(const Povm& a, const Povm& b) {
  if (a.size() != b.size() || a.dim() != b.dim()) throw std::invalid_argument("povm_deviation: shape mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, frobenius_distance(a[i].op, b[i].op));
  return worst;
}

}  // namespace steerlab

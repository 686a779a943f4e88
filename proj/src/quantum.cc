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

#include "steerlab/quantum.h"

#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <stdexcept>

namespace steerlab {
namespace {

int product(const std::vector<int>& dims) {
  return std::accumulate(dims.begin(), dims.end(), 1, std::multiplies<>());
}

void check_dims(const std::vector<int>& dims, Eigen::Index side, const char* what) {
  if (dims.empty()) throw std::invalid_argument(std::string(what) + ": empty subsystem dimension list");
  for (int d : dims) {
    if (d < 1) throw std::invalid_argument(std::string(what) + ": subsystem dimensions must be positive");
  }
  if (product(dims) != side) {
    throw std::invalid_argument(std::string(what) + ": product of subsystem dimensions does not match size");
  }
}

void check_unit_interval(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw std::invalid_argument(std::string(name) + " must lie in [0, 1], got " + std::to_string(v));
  }
}

// Generalized Pauli X^j Z^k on C^d.
CMatrix weyl(int d, int j, int k) {
  CMatrix out = CMatrix::Zero(d, d);
  for (int m = 0; m < d; ++m) {
    const double angle = 2.0 * std::numbers::pi * k * m / d;
    out((m + j) % d, m) = std::polar(1.0, angle);
  }
  return out;
}

}  // namespace

DensityOperator::DensityOperator(CMatrix mat, std::vector<int> dims) : mat_(std::move(mat)), dims_(std::move(dims)) {
  if (mat_.rows() < 1 || mat_.rows() != mat_.cols()) {
    throw std::invalid_argument("DensityOperator: matrix must be square and nonempty");
  }
  check_dims(dims_, mat_.rows(), "DensityOperator");
  if (!is_hermitian(mat_)) throw std::invalid_argument("DensityOperator: matrix is not Hermitian");
  if (min_eigenvalue(mat_) < -kHermitianTol) throw std::invalid_argument("DensityOperator: matrix is not positive");
  if (std::abs(mat_.trace() - Complex(1.0)) > kHermitianTol) {
    throw std::invalid_argument("DensityOperator: trace is not 1");
  }
}

PureState::PureState(CVector vec, std::vector<int> dims) : vec_(std::move(vec)), dims_(std::move(dims)) {
  if (vec_.size() < 1) throw std::invalid_argument("PureState: empty vector");
  check_dims(dims_, vec_.size(), "PureState");
  if (std::abs(vec_.norm() - 1.0) > 1e-12) throw std::invalid_argument("PureState: vector is not normalized");
}

DensityOperator PureState::density() const { return DensityOperator(projector(vec_), dims_); }

double identity_deviation(const std::vector<CMatrix>& ops) {
  CMatrix sum = CMatrix::Zero(ops.front().rows(), ops.front().cols());
  for (const auto& op : ops) sum += op;
  return frobenius_distance(sum, identity(static_cast<int>(sum.rows())));
}

Povm::Povm(std::vector<Effect> effects) : effects_(std::move(effects)) {
  if (effects_.empty()) throw std::invalid_argument("Povm: no effects");
  const Eigen::Index dim = effects_.front().op.rows();
  std::set<std::string> labels;
  std::vector<CMatrix> ops;
  for (const auto& e : effects_) {
    if (e.op.rows() != dim || e.op.cols() != dim || dim < 1) {
      throw std::invalid_argument("Povm: effects must be square with a common dimension");
    }
    if (!labels.insert(e.label).second) throw std::invalid_argument("Povm: duplicate label '" + e.label + "'");
    if (!is_psd(e.op)) throw std::invalid_argument("Povm: effect '" + e.label + "' is not positive semidefinite");
    ops.push_back(e.op);
  }
  if (identity_deviation(ops) > kHermitianTol) throw std::invalid_argument("Povm: effects do not sum to the identity");
}

Povm Povm::from_operators(const std::vector<CMatrix>& ops) {
  std::vector<Effect> effects;
  for (std::size_t i = 0; i < ops.size(); ++i) effects.push_back({std::to_string(i), ops[i]});
  return Povm(std::move(effects));
}

bool Povm::has_label(std::string_view label) const {
  for (const auto& e : effects_) {
    if (e.label == label) return true;
  }
  return false;
}

Channel::Channel(Kind kind, int in_dim, int out_dim) : kind_(std::move(kind)), in_dim_(in_dim), out_dim_(out_dim) {}

Channel Channel::white_noise(double p, int d) {
  check_unit_interval(p, "white noise visibility p");
  if (d < 1) throw std::invalid_argument("white noise: dimension must be positive");
  return Channel(WhiteNoise{p, d}, d, d);
}

Channel Channel::loss(double eta, int d) {
  check_unit_interval(eta, "transmission eta");
  if (d < 1) throw std::invalid_argument("loss: dimension must be positive");
  return Channel(Loss{eta, d}, d, d + 1);
}

Channel Channel::kraus(std::vector<CMatrix> ops) {
  if (ops.empty()) throw std::invalid_argument("kraus: no operators");
  const Eigen::Index rows = ops.front().rows();
  const Eigen::Index cols = ops.front().cols();
  CMatrix closure = CMatrix::Zero(cols, cols);
  for (const auto& k : ops) {
    if (k.rows() != rows || k.cols() != cols) throw std::invalid_argument("kraus: operators differ in shape");
    closure += k.adjoint() * k;
  }
  if ((closure - identity(static_cast<int>(cols))).cwiseAbs().maxCoeff() > kHermitianTol) {
    throw std::invalid_argument("kraus: operators are not trace preserving");
  }
  return Channel(Kraus{std::move(ops)}, static_cast<int>(cols), static_cast<int>(rows));
}

Channel Channel::compose(std::vector<Channel> stages) {
  if (stages.empty()) throw std::invalid_argument("compose: no stages");
  for (std::size_t i = 1; i < stages.size(); ++i) {
    if (stages[i - 1].out_dim() != stages[i].in_dim()) {
      throw std::invalid_argument("compose: stage dimensions do not chain");
    }
  }
  const int in = stages.front().in_dim();
  const int out = stages.back().out_dim();
  return Channel(Composition{std::move(stages)}, in, out);
}

CMatrix Channel::apply(const CMatrix& x) const {
  if (x.rows() != in_dim_ || x.cols() != in_dim_) throw std::invalid_argument("Channel::apply: dimension mismatch");
  struct Visitor {
    const CMatrix& x;
    CMatrix operator()(const WhiteNoise& w) const {
      return w.p * x + (1.0 - w.p) * x.trace() / static_cast<double>(w.d) * identity(w.d);
    }
    CMatrix operator()(const Loss& l) const {
      CMatrix out = pad_to(l.eta * x, l.d + 1);
      out(l.d, l.d) += (1.0 - l.eta) * x.trace();
      return out;
    }
    CMatrix operator()(const Kraus& k) const {
      CMatrix out = CMatrix::Zero(k.ops.front().rows(), k.ops.front().rows());
      for (const auto& op : k.ops) out += op * x * op.adjoint();
      return out;
    }
    CMatrix operator()(const Composition& c) const {
      CMatrix cur = x;
      for (const auto& stage : c.stages) cur = stage.apply(cur);
      return cur;
    }
  };
  return std::visit(Visitor{x}, kind_);
}

CMatrix Channel::dual(const CMatrix& effect) const {
  if (effect.rows() != out_dim_ || effect.cols() != out_dim_) {
    throw std::invalid_argument("Channel::dual: dimension mismatch");
  }
  struct Visitor {
    const CMatrix& e;
    CMatrix operator()(const WhiteNoise& w) const {
      return w.p * e + (1.0 - w.p) * e.trace() / static_cast<double>(w.d) * identity(w.d);
    }
    CMatrix operator()(const Loss& l) const {
      return l.eta * leading_block(e, l.d) + (1.0 - l.eta) * e(l.d, l.d) * identity(l.d);
    }
    CMatrix operator()(const Kraus& k) const {
      CMatrix out = CMatrix::Zero(k.ops.front().cols(), k.ops.front().cols());
      for (const auto& op : k.ops) out += op.adjoint() * e * op;
      return out;
    }
    CMatrix operator()(const Composition& c) const {
      CMatrix cur = e;
      for (auto it = c.stages.rbegin(); it != c.stages.rend(); ++it) cur = it->dual(cur);
      return cur;
    }
  };
  return std::visit(Visitor{effect}, kind_);
}

std::vector<CMatrix> Channel::kraus_operators() const {
  struct Visitor {
    std::vector<CMatrix> operator()(const WhiteNoise& w) const {
      const int d = w.d;
      const double d2 = static_cast<double>(d) * d;
      std::vector<CMatrix> ops;
      for (int j = 0; j < d; ++j) {
        for (int k = 0; k < d; ++k) {
          const double weight = (j == 0 && k == 0) ? w.p + (1.0 - w.p) / d2 : (1.0 - w.p) / d2;
          ops.push_back(std::sqrt(weight) * weyl(d, j, k));
        }
      }
      return ops;
    }
    std::vector<CMatrix> operator()(const Loss& l) const {
      std::vector<CMatrix> ops;
      CMatrix keep = CMatrix::Zero(l.d + 1, l.d);
      keep.topRows(l.d) = std::sqrt(l.eta) * identity(l.d);
      ops.push_back(keep);
      for (int k = 0; k < l.d; ++k) {
        CMatrix drop = CMatrix::Zero(l.d + 1, l.d);
        drop(l.d, k) = std::sqrt(1.0 - l.eta);
        ops.push_back(drop);
      }
      return ops;
    }
    std::vector<CMatrix> operator()(const Kraus& k) const { return k.ops; }
    std::vector<CMatrix> operator()(const Composition& c) const {
      std::vector<CMatrix> acc = c.stages.front().kraus_operators();
      for (std::size_t s = 1; s < c.stages.size(); ++s) {
        std::vector<CMatrix> next;
        for (const auto& outer : c.stages[s].kraus_operators()) {
          for (const auto& inner : acc) next.push_back(outer * inner);
        }
        acc = std::move(next);
      }
      return acc;
    }
  };
  return std::visit(Visitor{}, kind_);
}

CMatrix Channel::choi() const {
  CMatrix out = CMatrix::Zero(in_dim_ * out_dim_, in_dim_ * out_dim_);
  for (int i = 0; i < in_dim_; ++i) {
    for (int j = 0; j < in_dim_; ++j) {
      CMatrix unit = CMatrix::Zero(in_dim_, in_dim_);
      unit(i, j) = 1.0;
      out.block(i * out_dim_, j * out_dim_, out_dim_, out_dim_) = apply(unit);
    }
  }
  return out;
}

PureState phi_plus(int d) {
  if (d < 2) throw std::invalid_argument("phi_plus: d must be at least 2");
  CVector v = CVector::Zero(static_cast<Eigen::Index>(d) * d);
  for (int k = 0; k < d; ++k) v(k * d + k) = 1.0 / std::sqrt(static_cast<double>(d));
  return PureState(std::move(v), {d, d});
}

DensityOperator apply_channel(const Channel& c, const DensityOperator& rho, int on_subsystem) {
  const auto& dims = rho.dims();
  if (on_subsystem < 0 || on_subsystem >= static_cast<int>(dims.size())) {
    throw std::invalid_argument("apply_channel: subsystem index out of range");
  }
  const int s = dims[on_subsystem];
  if (s != c.in_dim()) throw std::invalid_argument("apply_channel: subsystem dimension does not match channel input");
  const int so = c.out_dim();
  int left = 1;
  int right = 1;
  for (int i = 0; i < on_subsystem; ++i) left *= dims[i];
  for (std::size_t i = on_subsystem + 1; i < dims.size(); ++i) right *= dims[i];

  const CMatrix& x = rho.matrix();
  CMatrix out = CMatrix::Zero(left * so * right, left * so * right);
  CMatrix block(s, s);
  for (int l1 = 0; l1 < left; ++l1) {
    for (int r1 = 0; r1 < right; ++r1) {
      for (int l2 = 0; l2 < left; ++l2) {
        for (int r2 = 0; r2 < right; ++r2) {
          for (int i = 0; i < s; ++i) {
            for (int j = 0; j < s; ++j) block(i, j) = x((l1 * s + i) * right + r1, (l2 * s + j) * right + r2);
          }
          const CMatrix mapped = c.apply(block);
          for (int i = 0; i < so; ++i) {
            for (int j = 0; j < so; ++j) out((l1 * so + i) * right + r1, (l2 * so + j) * right + r2) = mapped(i, j);
          }
        }
      }
    }
  }
  std::vector<int> new_dims = dims;
  new_dims[on_subsystem] = so;
  return DensityOperator(std::move(out), std::move(new_dims));
}

CMatrix dual_apply(const Channel& c, const CMatrix& effect) { return c.dual(effect); }

DensityOperator one_way_state(int d, double eta, double p) {
  if (d < 2) throw std::invalid_argument("one_way_state: d must be at least 2");
  check_unit_interval(eta, "transmission eta");
  check_unit_interval(p, "visibility p");
  const int db = d + 1;
  CMatrix out = CMatrix::Zero(d * db, d * db);
  // Phi+ restricted to the signal block.
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) out(i * db + i, j * db + j) += eta * p / d;
  }
  for (int i = 0; i < d; ++i) {
    for (int k = 0; k < d; ++k) out(i * db + k, i * db + k) += eta * (1.0 - p) / (static_cast<double>(d) * d);
    out(i * db + d, i * db + d) += (1.0 - eta) / d;
  }
  return DensityOperator(std::move(out), {d, db});
}

SchmidtDecomposition schmidt_rank(const PureState& psi, double tol) {
  if (psi.dims().size() != 2) throw std::invalid_argument("schmidt_rank: state must be bipartite");
  const int da = psi.dims()[0];
  const int db = psi.dims()[1];
  CMatrix coeff(da, db);
  for (int i = 0; i < da; ++i) {
    for (int j = 0; j < db; ++j) coeff(i, j) = psi.vector()(i * db + j);
  }
  Eigen::JacobiSVD<CMatrix> svd(coeff);
  SchmidtDecomposition out{0, svd.singularValues()};
  for (Eigen::Index k = 0; k < out.coefficients.size(); ++k) {
    if (out.coefficients(k) > tol) ++out.rank;
  }
  return out;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int k = 2; k * k <= n; ++k) {
    if (n % k == 0) return false;
  }
  return true;
}

std::pair<Povm, Povm> mub_pair(int d) {
  if (!is_prime(d)) throw std::invalid_argument("mub_pair: d must be prime, got " + std::to_string(d));
  std::vector<CMatrix> comp;
  std::vector<CMatrix> fourier;
  for (int j = 0; j < d; ++j) {
    comp.push_back(projector(CVector::Unit(d, j)));
    CVector f(d);
    for (int k = 0; k < d; ++k) f(k) = std::polar(1.0 / std::sqrt(static_cast<double>(d)), 2.0 * std::numbers::pi * j * k / d);
    fourier.push_back(projector(f));
  }
  return {Povm::from_operators(comp), Povm::from_operators(fourier)};
}

}  // namespace steerlab

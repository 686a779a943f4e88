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

#include "steerlab/covariant.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "steerlab/parallel.h"

namespace steerlab {
namespace {

void check_threshold(int d, double t) {
  if (d < 2) throw std::invalid_argument("d must be at least 2, got " + std::to_string(d));
  if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("t must lie in [0, 1]");
}

// The response never fires at t = 1; the event has measure zero.
bool fires(double overlap, double t) { return t < 1.0 && overlap >= t; }

struct Moments {
  double sum = 0.0;
  double sum_sq = 0.0;

  void add(double v) {
    sum += v;
    sum_sq += v * v;
  }
};

McEstimate finish(const Moments& m, std::size_t n) {
  const double mean = m.sum / static_cast<double>(n);
  if (n < 2) return {mean, std::numeric_limits<double>::infinity()};
  const double var = std::max(0.0, (m.sum_sq - m.sum * mean) / static_cast<double>(n - 1));
  return {mean, std::sqrt(var / static_cast<double>(n))};
}

}  // namespace

HaarSampler::HaarSampler(int d, HaarMethod method, std::uint64_t seed) : d_(d), method_(method), seed_(seed) {
  if (d_ < 1) throw std::invalid_argument("HaarSampler: d must be positive");
}

std::vector<PureState> HaarSampler::sample(std::size_t n) const {
  if (n < 1) throw std::invalid_argument("HaarSampler: need at least one sample");
  Rng rng = make_rng(seed_);
  std::vector<PureState> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(draw(rng), std::vector<int>{d_});
  return out;
}

CVector HaarSampler::draw(Rng& rng) const {
  if (d_ == 1) return CVector::Ones(1);
  if (method_ == HaarMethod::kGaussianNormalize) return random_unit_vector(d_, rng);

  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  CVector z(d_);
  double remaining = 1.0;  // product of sin^2 of the angles so far
  for (int i = 1; i < d_; ++i) {
    // sin^2(theta_i) has density proportional to x^{d-i-1} on [0, 1].
    const double x = std::pow(uniform(rng), 1.0 / (d_ - i));
    const double amplitude = std::sqrt(remaining * (1.0 - x));
    z(i - 1) = i == 1 ? Complex(amplitude) : std::polar(amplitude, 2.0 * std::numbers::pi * uniform(rng));
    remaining *= x;
  }
  z(d_ - 1) = std::polar(std::sqrt(remaining), 2.0 * std::numbers::pi * uniform(rng));
  return z / z.norm();
}

double abar(int d, double t) {
  check_threshold(d, t);
  return std::pow(1.0 - t, d - 1) * ((d - 1) * t + 1.0);
}

double tbar(int d, double t) {
  check_threshold(d, t);
  return d * std::pow(1.0 - t, d - 1);
}

double bbar(int d, double t) { return tbar(d, t) - abar(d, t); }

IntegralEstimates mc_integrals(int d, double t, std::size_t n, std::uint64_t seed, HaarMethod method) {
  check_threshold(d, t);
  if (n < 1) throw std::invalid_argument("mc_integrals: need at least one sample");
  const HaarSampler sampler(d, method, seed);
  const int workers = static_cast<int>(std::min<std::size_t>(worker_count(), n));
  std::vector<Moments> a_parts(workers);
  std::vector<Moments> t_parts(workers);
  run_workers(workers, [&](int w) {
    Rng rng = make_rng(seed, w);
    const std::size_t count = share(n, workers, w);
    for (std::size_t i = 0; i < count; ++i) {
      const double overlap = std::norm(sampler.draw(rng)(0));
      const double hit = fires(overlap, t) ? 1.0 : 0.0;
      a_parts[w].add(d * hit * overlap);
      t_parts[w].add(d * hit);
    }
  });
  Moments a_total;
  Moments t_total;
  for (int w = 0; w < workers; ++w) {
    a_total.sum += a_parts[w].sum;
    a_total.sum_sq += a_parts[w].sum_sq;
    t_total.sum += t_parts[w].sum;
    t_total.sum_sq += t_parts[w].sum_sq;
  }
  return {finish(a_total, n), finish(t_total, n)};
}

CMatrix mc_first_moment(int d, std::size_t n, std::uint64_t seed, HaarMethod method) {
  if (n < 1) throw std::invalid_argument("mc_first_moment: need at least one sample");
  const HaarSampler sampler(d, method, seed);
  const int workers = static_cast<int>(std::min<std::size_t>(worker_count(), n));
  std::vector<CMatrix> parts(workers, CMatrix::Zero(d, d));
  run_workers(workers, [&](int w) {
    Rng rng = make_rng(seed, w);
    const std::size_t count = share(n, workers, w);
    for (std::size_t i = 0; i < count; ++i) {
      const CVector z = sampler.draw(rng);
      parts[w].noalias() += z * z.adjoint();
    }
  });
  CMatrix total = CMatrix::Zero(d, d);
  for (const auto& p : parts) total += p;
  return total / static_cast<double>(n);
}

CMatrix analytic_effect(int d, double t, const CVector& phi) {
  check_threshold(d, t);
  const CMatrix proj = projector(phi);
  return abar(d, t) * proj + bbar(d, t) / (d - 1) * (identity(d) - proj);
}

McEffect mc_effect(int d, double t, const PureState& phi, std::size_t n, std::uint64_t seed) {
  check_threshold(d, t);
  if (phi.dim() != d) throw std::invalid_argument("mc_effect: target state has wrong dimension");
  if (n < 2) throw std::invalid_argument("mc_effect: need at least two samples");
  const HaarSampler sampler(d, HaarMethod::kGaussianNormalize, seed);
  const int workers = static_cast<int>(std::min<std::size_t>(worker_count(), n));
  struct Part {
    Eigen::MatrixXd sum_re, sum_im, sq_re, sq_im;
  };
  std::vector<Part> parts(workers, Part{Eigen::MatrixXd::Zero(d, d), Eigen::MatrixXd::Zero(d, d),
                                        Eigen::MatrixXd::Zero(d, d), Eigen::MatrixXd::Zero(d, d)});
  const CVector& target = phi.vector();
  run_workers(workers, [&](int w) {
    Rng rng = make_rng(seed, w);
    Part& part = parts[w];
    const std::size_t count = share(n, workers, w);
    for (std::size_t i = 0; i < count; ++i) {
      const CVector z = sampler.draw(rng);
      if (!fires(std::norm(target.dot(z)), t)) continue;
      const CMatrix sample = static_cast<double>(d) * (z * z.adjoint());
      const Eigen::MatrixXd re = sample.real();
      const Eigen::MatrixXd im = sample.imag();
      part.sum_re += re;
      part.sum_im += im;
      part.sq_re += re.cwiseAbs2();
      part.sq_im += im.cwiseAbs2();
    }
  });
  Part total{Eigen::MatrixXd::Zero(d, d), Eigen::MatrixXd::Zero(d, d), Eigen::MatrixXd::Zero(d, d),
             Eigen::MatrixXd::Zero(d, d)};
  for (const auto& p : parts) {
    total.sum_re += p.sum_re;
    total.sum_im += p.sum_im;
    total.sq_re += p.sq_re;
    total.sq_im += p.sq_im;
  }
  const double count = static_cast<double>(n);
  auto stderr_of = [count](const Eigen::MatrixXd& sum, const Eigen::MatrixXd& sq) {
    const Eigen::MatrixXd mean = sum / count;
    const Eigen::MatrixXd var = ((sq - sum.cwiseProduct(mean)) / (count - 1.0)).cwiseMax(0.0);
    return Eigen::MatrixXd((var / count).cwiseSqrt());
  };

  McEffect out;
  out.estimate = (total.sum_re.cast<Complex>() + Complex(0.0, 1.0) * total.sum_im.cast<Complex>()) / count;
  out.stderr_re = stderr_of(total.sum_re, total.sq_re);
  out.stderr_im = stderr_of(total.sum_im, total.sq_im);
  out.analytic = analytic_effect(d, t, target);
  out.max_sigma_deviation = 0.0;
  auto sigma = [](double diff, double se) {
    if (se > 0.0) return diff / se;
    return diff > 1e-12 ? std::numeric_limits<double>::infinity() : 0.0;
  };
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const Complex diff = out.estimate(i, j) - out.analytic(i, j);
      out.max_sigma_deviation = std::max(out.max_sigma_deviation, sigma(std::abs(diff.real()), out.stderr_re(i, j)));
      out.max_sigma_deviation = std::max(out.max_sigma_deviation, sigma(std::abs(diff.imag()), out.stderr_im(i, j)));
    }
  }
  return out;
}

std::vector<RankOneElement> rank_one_from_frame(const CMatrix& frame) {
  std::vector<RankOneElement> out;
  for (Eigen::Index k = 0; k < frame.cols(); ++k) {
    const double norm = frame.col(k).norm();
    if (norm == 0.0) continue;
    out.push_back({std::to_string(k), norm * norm, frame.col(k) / norm});
  }
  return out;
}

Povm simulate_rank1_povm(const std::vector<RankOneElement>& targets, double t) {
  if (targets.empty()) throw std::invalid_argument("simulate_rank1_povm: no targets");
  const int d = static_cast<int>(targets.front().phi.size());
  check_threshold(d, t);
  CMatrix resolution = CMatrix::Zero(d, d);
  for (const auto& e : targets) {
    if (e.phi.size() != d) throw std::invalid_argument("simulate_rank1_povm: targets differ in dimension");
    if (e.alpha < 0.0) throw std::invalid_argument("simulate_rank1_povm: negative weight");
    if (std::abs(e.phi.norm() - 1.0) > kHermitianTol) throw std::invalid_argument("simulate_rank1_povm: target not normalized");
    resolution += e.alpha * projector(e.phi);
  }
  if ((resolution - identity(d)).cwiseAbs().maxCoeff() > kHermitianTol) {
    throw std::invalid_argument("simulate_rank1_povm: targets do not resolve the identity");
  }

  const double along = abar(d, t);
  const double across = bbar(d, t) / (d - 1);
  std::vector<Effect> effects;
  CMatrix rest = identity(d);
  for (const auto& e : targets) {
    const CMatrix proj = projector(e.phi);
    const CMatrix n = e.alpha / d * (along * proj + across * (identity(d) - proj));
    rest -= n;
    effects.push_back({e.label, n});
  }
  effects.push_back({std::string(kNoClick), 0.5 * (rest + rest.adjoint())});
  return Povm(std::move(effects));
}

NoiseParams eta_p_from_t(int d, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("eta_p_from_t: t must lie in [0, 1]");
  return NoiseParams::make(d, std::pow(1.0 - t, d - 1), t);
}

std::vector<double> ResponseFunctionModel::sampling_dist() const {
  std::vector<double> out;
  for (const auto& e : targets) out.push_back(e.alpha / d);
  return out;
}

std::vector<double> ResponseFunctionModel::respond(const CVector& z) const {
  std::vector<double> out(labels.size() + 1, 0.0);
  double clicked = 0.0;
  for (std::size_t j = 0; j < targets.size(); ++j) {
    if (!fires(std::norm(targets[j].phi.dot(z)), t)) continue;
    const double prob = keep_probability * targets[j].alpha / d;
    out[outcome_of[j]] += prob;
    clicked += prob;
  }
  out.back() = std::max(0.0, 1.0 - clicked);
  return out;
}

Povm ResponseFunctionModel::simulated_povm() const {
  const Povm fine = simulate_rank1_povm(targets, t);
  std::vector<CMatrix> ops(labels.size(), CMatrix::Zero(d, d));
  for (std::size_t j = 0; j < targets.size(); ++j) ops[outcome_of[j]] += keep_probability * fine[j].op;
  std::vector<Effect> effects;
  CMatrix rest = identity(d);
  for (std::size_t a = 0; a < labels.size(); ++a) {
    rest -= ops[a];
    effects.push_back({labels[a], ops[a]});
  }
  effects.push_back({std::string(kNoClick), 0.5 * (rest + rest.adjoint())});
  return Povm(std::move(effects));
}

ResponseFunctionModel build_jm_model(const Povm& m, const NoiseParams& params) {
  const int d = m.dim();
  if (d < 2) throw std::invalid_argument("build_jm_model: d must be at least 2");
  if (params.d != d) throw std::invalid_argument("build_jm_model: POVM dimension does not match d");
  if (m.has_label(kNoClick)) throw std::invalid_argument("build_jm_model: input already has a no-click outcome");
  const double bound = std::pow(1.0 - params.p, d - 1);
  if (params.eta > bound * (1.0 + 1e-12) + 1e-15) {
    throw std::invalid_argument("build_jm_model: eta = " + std::to_string(params.eta) + " exceeds (1-p)^(d-1) = " +
                                std::to_string(bound) + "; the covariant model does not apply");
  }

  ResponseFunctionModel model;
  model.d = d;
  model.t = params.p;
  model.target_params = params;
  model.keep_probability = bound > 0.0 ? std::min(1.0, params.eta / bound) : 0.0;
  double total = 0.0;
  for (std::size_t a = 0; a < m.size(); ++a) {
    model.labels.push_back(m[a].label);
    const HermitianEigen eig = eig_hermitian(m[a].op);
    for (Eigen::Index k = 0; k < eig.values.size(); ++k) {
      if (eig.values(k) <= 1e-12) continue;
      model.targets.push_back({m[a].label + "/" + std::to_string(k), eig.values(k), eig.vectors.col(k)});
      model.outcome_of.push_back(static_cast<int>(a));
      total += eig.values(k);
    }
  }
  for (auto& e : model.targets) e.alpha *= d / total;
  return model;
}

}  // namespace steerlab

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

#include "steerlab/analysis.h"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "steerlab/parallel.h"

namespace steerlab {
namespace {

void check_d(int d) {
  if (d < 2) throw std::invalid_argument("d must be at least 2, got " + std::to_string(d));
}

void check_unit(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
}

}  // namespace

double p_threshold_all(int d) {
  check_d(d);
  const double dd = d;
  return (dd * std::sqrt(dd / (dd + 1.0)) - 1.0) / (dd - 1.0);
}

double p_threshold_two_mubs(int d) {
  check_d(d);
  const double dd = d;
  const double root = std::sqrt(dd - 1.0);
  return ((dd + std::sqrt(dd) - 1.0) * root - 1.0) / ((dd - 1.0) * (root + 1.0));
}

double eta_unsteerable_bound(int d, double p) {
  check_d(d);
  check_unit(p, "p");
  return std::pow(1.0 - p, d - 1);
}

ThresholdReport thresholds(int d) { return ThresholdReport{d, p_threshold_all(d), p_threshold_two_mubs(d)}; }

std::string to_string(RegionLabel label) {
  switch (label) {
    case RegionLabel::kUnlimitedOneWay:
      return "UNLIMITED_ONE_WAY";
    case RegionLabel::kDSteerableOnly:
      return "D_STEERABLE_ONLY";
    case RegionLabel::kUnsteerableBToAOnly:
      return "UNSTEERABLE_B_TO_A_ONLY";
    case RegionLabel::kUndetermined:
      return "UNDETERMINED";
  }
  return "UNDETERMINED";
}

RegionLabel classify(int d, double eta, double p) {
  check_unit(eta, "eta");
  const bool steerable = p > p_threshold_all(d) && eta > 0.0;
  const bool unsteerable = eta <= eta_unsteerable_bound(d, p);
  if (steerable && unsteerable) return RegionLabel::kUnlimitedOneWay;
  if (steerable) return RegionLabel::kDSteerableOnly;
  if (unsteerable) return RegionLabel::kUnsteerableBToAOnly;
  return RegionLabel::kUndetermined;
}

std::vector<PhaseCell> phase_diagram(int d, int grid_n) {
  check_d(d);
  if (grid_n < 2) throw std::invalid_argument("phase_diagram: grid must be at least 2");
  const std::size_t side = static_cast<std::size_t>(grid_n) + 1;
  std::vector<PhaseCell> cells(side * side);
  const int workers = static_cast<int>(std::min<std::size_t>(worker_count(), side));
  run_workers(workers, [&](int w) {
    for (std::size_t i = w; i < side; i += workers) {
      const double eta = static_cast<double>(i) / grid_n;
      for (std::size_t j = 0; j < side; ++j) {
        const double p = static_cast<double>(j) / grid_n;
        cells[i * side + j] = PhaseCell{eta, p, classify(d, eta, p)};
      }
    }
  });
  return cells;
}

void write_phase_csv(std::ostream& out, const std::vector<PhaseCell>& cells) {
  out << "eta,p,label\n";
  char buf[64];
  for (const auto& c : cells) {
    std::snprintf(buf, sizeof(buf), "%.17g,", c.eta);
    out << buf;
    std::snprintf(buf, sizeof(buf), "%.17g,", c.p);
    out << buf << to_string(c.label) << '\n';
  }
}

}  // namespace steerlab

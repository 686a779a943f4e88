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

#ifndef STEERLAB_ANALYSIS_H
#define STEERLAB_ANALYSIS_H

#include <iosfwd>
#include <string>
#include <vector>

namespace steerlab {

/// Visibility above which the one-way state is d-steerable from Alice to Bob
/// with all measurements: (d sqrt(d/(d+1)) - 1)/(d - 1).
double p_threshold_all(int d);

/// Visibility from which a pair of MUBs certifies d-steerability:
/// ((d + sqrt d - 1) sqrt(d-1) - 1)/((d-1)(sqrt(d-1) + 1)).
double p_threshold_two_mubs(int d);

/// (1-p)^{d-1}: the one-way state is unsteerable from Bob to Alice when
/// eta is at or below this.
double eta_unsteerable_bound(int d, double p);

struct ThresholdReport {
  int d;
  double p_all_meas;
  double p_two_mubs;

  double eta_bound_at(double p) const { return eta_unsteerable_bound(d, p); }
};

ThresholdReport thresholds(int d);

enum class RegionLabel {
  kUnlimitedOneWay,
  kDSteerableOnly,
  kUnsteerableBToAOnly,
  kUndetermined,
};

std::string to_string(RegionLabel label);

/// Both criteria are sufficient only. d-steerability needs p strictly above
/// p_threshold_all(d) and eta > 0; B-to-A unsteerability needs
/// eta <= (1-p)^{d-1}. Points meeting neither are kUndetermined.
RegionLabel classify(int d, double eta, double p);

struct PhaseCell {
  double eta;
  double p;
  RegionLabel label;
};

/// (grid_n+1)^2 cells over the uniform grid of [0,1]^2, row-major in eta
/// then p.
std::vector<PhaseCell> phase_diagram(int d, int grid_n);

/// CSV with header eta,p,label and 17 significant digits.
void write_phase_csv(std::ostream& out, const std::vector<PhaseCell>& cells);

}  // namespace steerlab

#endif  // STEERLAB_ANALYSIS_H

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
#include <random>
#include <sstream>
#include <stdexcept>

#include "gtest/gtest.h"

using namespace steerlab;

namespace {

// Reference values computed with 40-digit arithmetic.
struct Reference {
  int d;
  double all;
  double two;
};

constexpr Reference kReference[] = {
    {2, 0.632993161855452065464856, 0.7071067811865475244008444},
    {3, 0.7990381056766579701455848, 0.8859855926176456712262712},
    {4, 0.8592362546665545047515593, 0.9346158590977893731392203},
    {5, 0.8910886614690960697020204, 0.9560113295832982827348623},
};

long double all_long(int d) {
  const long double dd = d;
  return (dd * sqrtl(dd / (dd + 1.0L)) - 1.0L) / (dd - 1.0L);
}

long double two_long(int d) {
  const long double dd = d;
  return ((dd + sqrtl(dd) - 1.0L) * sqrtl(dd - 1.0L) - 1.0L) / ((dd - 1.0L) * (sqrtl(dd - 1.0L) + 1.0L));
}

}  // namespace

TEST(Thresholds, MatchHighPrecisionReference) {
  for (const auto& r : kReference) {
    EXPECT_NEAR(p_threshold_all(r.d), r.all, 1e-15) << r.d;
    EXPECT_NEAR(p_threshold_two_mubs(r.d), r.two, 1e-15) << r.d;
  }
}

TEST(Thresholds, MatchLongDoubleSweep) {
  for (int d = 2; d <= 50; ++d) {
    ASSERT_NEAR(p_threshold_all(d), static_cast<double>(all_long(d)), 1e-14) << d;
    ASSERT_NEAR(p_threshold_two_mubs(d), static_cast<double>(two_long(d)), 1e-14) << d;
  }
}

TEST(Thresholds, OrderedAndBelowOne) {
  for (int d = 2; d <= 200; ++d) {
    ASSERT_LT(p_threshold_all(d), p_threshold_two_mubs(d));
    ASSERT_LT(p_threshold_two_mubs(d), 1.0);
    ASSERT_GT(p_threshold_all(d), 0.0);
    if (d > 2) ASSERT_GT(p_threshold_all(d), p_threshold_all(d - 1));
  }
}

TEST(Thresholds, Report) {
  const ThresholdReport r = thresholds(3);
  EXPECT_EQ(r.d, 3);
  EXPECT_DOUBLE_EQ(r.p_all_meas, p_threshold_all(3));
  EXPECT_DOUBLE_EQ(r.p_two_mubs, p_threshold_two_mubs(3));
  EXPECT_DOUBLE_EQ(r.eta_bound_at(0.5), 0.25);
  EXPECT_THROW(thresholds(1), std::invalid_argument);
  EXPECT_THROW(eta_unsteerable_bound(2, 1.5), std::invalid_argument);
}

TEST(Classify, Examples) {
  // d = 2: p_all ~ 0.633 and the bound is 1 - p.
  EXPECT_EQ(classify(2, 0.3, 0.65), RegionLabel::kUnlimitedOneWay);
  EXPECT_EQ(classify(2, 0.9, 0.9), RegionLabel::kDSteerableOnly);
  EXPECT_EQ(classify(2, 0.2, 0.5), RegionLabel::kUnsteerableBToAOnly);
  EXPECT_EQ(classify(2, 0.9, 0.5), RegionLabel::kUndetermined);
  EXPECT_EQ(classify(2, 0.0, 0.9), RegionLabel::kUnsteerableBToAOnly);
  EXPECT_EQ(to_string(RegionLabel::kUnlimitedOneWay), "UNLIMITED_ONE_WAY");
  EXPECT_EQ(to_string(RegionLabel::kDSteerableOnly), "D_STEERABLE_ONLY");
  EXPECT_EQ(to_string(RegionLabel::kUnsteerableBToAOnly), "UNSTEERABLE_B_TO_A_ONLY");
  EXPECT_EQ(to_string(RegionLabel::kUndetermined), "UNDETERMINED");
}

TEST(Classify, QutritExamples) {
  EXPECT_EQ(classify(3, eta_unsteerable_bound(3, 0.9), 0.9), RegionLabel::kUnlimitedOneWay);
  EXPECT_EQ(classify(3, 0.0099, 0.9), RegionLabel::kUnlimitedOneWay);
  EXPECT_EQ(classify(3, 0.5, 0.9), RegionLabel::kDSteerableOnly);
  EXPECT_EQ(classify(3, 0.3, 0.2), RegionLabel::kUnsteerableBToAOnly);
  EXPECT_DOUBLE_EQ(eta_unsteerable_bound(2, 0.0), 1.0);
}

TEST(Classify, Boundaries) {
  const double p_all = p_threshold_all(3);
  // Steerability is strict in p, unsteerability inclusive in eta.
  EXPECT_EQ(classify(3, 0.01, p_all), RegionLabel::kUnsteerableBToAOnly);
  const double p = std::nextafter(p_all, 1.0);
  const double bound = eta_unsteerable_bound(3, p);
  EXPECT_EQ(classify(3, bound, p), RegionLabel::kUnlimitedOneWay);
  EXPECT_EQ(classify(3, std::nextafter(bound, 1.0), p), RegionLabel::kDSteerableOnly);
  EXPECT_THROW(classify(3, -0.1, 0.5), std::invalid_argument);
  EXPECT_THROW(classify(1, 0.1, 0.5), std::invalid_argument);
}

TEST(Classify, RandomConsistency) {
  std::mt19937_64 rng(81);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 10000; ++i) {
    const int d = 2 + static_cast<int>(rng() % 15);
    const double eta = u(rng), p = u(rng);
    const bool steer = p > p_threshold_all(d) && eta > 0.0;
    const bool unsteer = eta <= std::pow(1.0 - p, d - 1);
    const RegionLabel expected = steer && unsteer ? RegionLabel::kUnlimitedOneWay
                                 : steer          ? RegionLabel::kDSteerableOnly
                                 : unsteer        ? RegionLabel::kUnsteerableBToAOnly
                                                  : RegionLabel::kUndetermined;
    ASSERT_EQ(classify(d, eta, p), expected);
  }
}

TEST(PhaseDiagram, LayoutAndLabels) {
  const auto cells = phase_diagram(3, 4);
  ASSERT_EQ(cells.size(), 25u);
  for (int i = 0; i <= 4; ++i) {
    for (int j = 0; j <= 4; ++j) {
      const PhaseCell& c = cells[i * 5 + j];
      EXPECT_DOUBLE_EQ(c.eta, i / 4.0);
      EXPECT_DOUBLE_EQ(c.p, j / 4.0);
      EXPECT_EQ(c.label, classify(3, c.eta, c.p));
    }
  }
  EXPECT_THROW(phase_diagram(3, 1), std::invalid_argument);
}

TEST(PhaseDiagram, UnlimitedCellsSatisfyBothConditions) {
  for (int d = 2; d <= 16; ++d) {
    for (const auto& c : phase_diagram(d, 400)) {
      if (c.label != RegionLabel::kUnlimitedOneWay) continue;
      ASSERT_GT(c.p, p_threshold_all(d));
      ASSERT_GT(c.eta, 0.0);
      ASSERT_LE(c.eta, std::pow(1.0 - c.p, d - 1));
    }
  }
}

int unlimited_count(int d, int grid) {
  int count = 0;
  for (const auto& c : phase_diagram(d, grid)) count += c.label == RegionLabel::kUnlimitedOneWay;
  return count;
}

TEST(PhaseDiagram, UniformGridResolvesSmallDimensions) {
  for (int d = 2; d <= 4; ++d) EXPECT_GT(unlimited_count(d, 400), 0) << d;
  EXPECT_GT(unlimited_count(2, 200), 0);
}

TEST(PhaseDiagram, UnlimitedFractionShrinksWithDimension) {
  int previous = unlimited_count(2, 400);
  for (int d = 3; d <= 8; ++d) {
    const int count = unlimited_count(d, 400);
    EXPECT_LE(count, previous) << d;
    if (previous > 0) EXPECT_LT(count, previous) << d;
    previous = count;
  }
}

TEST(PhaseDiagram, NoUnlimitedCellsWithoutTransmission) {
  for (const auto& c : phase_diagram(2, 50)) {
    if (c.eta == 0.0) EXPECT_NE(c.label, RegionLabel::kUnlimitedOneWay);
  }
}

TEST(Classify, WitnessPointExistsInEveryDimension) {
  // Between the threshold and 1 the region has width (1-p)^(d-1) in eta,
  // far below a uniform grid step once d >= 5.
  for (int d = 2; d <= 16; ++d) {
    const double p = 0.5 * (p_threshold_all(d) + 1.0);
    const double eta = eta_unsteerable_bound(d, p);
    ASSERT_GT(eta, 0.0);
    EXPECT_EQ(classify(d, eta, p), RegionLabel::kUnlimitedOneWay) << d;
  }
}

TEST(PhaseDiagram, CsvFormat) {
  std::ostringstream out;
  write_phase_csv(out, phase_diagram(2, 2));
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "eta,p,label");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    std::istringstream fields(line);
    std::string eta, p, label;
    std::getline(fields, eta, ',');
    std::getline(fields, p, ',');
    std::getline(fields, label);
    EXPECT_NO_THROW(std::stod(eta));
    EXPECT_FALSE(label.empty());
  }
  EXPECT_EQ(rows, 9);
  EXPECT_NE(out.str().find("0.5,0.5,UNSTEERABLE_B_TO_A_ONLY"), std::string::npos);
}

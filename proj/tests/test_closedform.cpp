// Copyright 2026 The phasecx Authors
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
//
#include <cmath>

#include <gtest/gtest.h>

#include "phasecx/closedform.hpp"
#include "phasecx/errors.hpp"
#include "phasecx/special.hpp"

namespace phasecx {
namespace {

TEST(GaussianClosed, SpecialPoints) {
  const ClosedComplexity vac = gaussian_closed(0.0, 0.0);
  EXPECT_DOUBLE_EQ(vac.entropy, 1.0);
  EXPECT_DOUBLE_EQ(vac.fisher, 1.0);
  EXPECT_DOUBLE_EQ(vac.complexity, 1.0);
  for (double n : {0.5, 3.0, 20.0}) {
    const ClosedComplexity th = gaussian_closed(n, 0.0);
    EXPECT_NEAR(th.entropy, 1.0 + std::log(n + 1.0), 1e-14);
    EXPECT_NEAR(th.fisher, 1.0 / (n + 1.0), 1e-15);
    EXPECT_NEAR(th.complexity, 1.0, 1e-14);
  }
  for (double r : {0.3, 1.0, 2.5}) {
    EXPECT_NEAR(gaussian_closed(0.0, r).complexity, std::cosh(r), 1e-12);
  }
}

TEST(GaussianClosed, LargeThermalLimit) {
  for (double r : {0.5, 1.0}) {
    EXPECT_NEAR(gaussian_closed(1e7, r).complexity, std::cosh(2 * r), 1e-6);
  }
  // Fig. 1 style value at moderate n stays below the limit.
  EXPECT_LT(gaussian_closed(10.0, 1.0).complexity, std::cosh(2.0));
}

TEST(GaussianClosed, Monotonicity) {
  for (double n : {0.0, 0.5, 3.0}) {
    double prev = 0.0;
    for (int i = 0; i <= 40; ++i) {
      const double c = gaussian_closed(n, 0.1 * i).complexity;
      if (i > 0) EXPECT_GT(c, prev);
      prev = c;
    }
  }
  for (double r : {0.2, 1.0}) {
    double prev = 0.0;
    for (int i = 0; i <= 40; ++i) {
      const double c = gaussian_closed(0.25 * i, r).complexity;
      if (i > 0) EXPECT_GT(c, prev);
      prev = c;
    }
  }
}

TEST(GaussianMoments, Consistency) {
  const GaussianMoments m = gaussian_moments(0.7, 0.9);
  const GaussianMoments s = s_gaussian_moments(0.7, 0.9, -1.0);
  EXPECT_NEAR(m.delta, s.delta, 1e-14);
  EXPECT_NEAR(m.a, s.a, 1e-14);
  EXPECT_NEAR(m.b, s.b, 1e-14);
  // Normalization of the Gaussian exponent: A^2 - 4B^2 = 4 Delta.
  EXPECT_NEAR(m.a * m.a - 4 * m.b * m.b, 4 * m.delta, 1e-12);
  EXPECT_NEAR(s_gaussian_moments(0.7, 0.9, 0.2).a * s_gaussian_moments(0.7, 0.9, 0.2).a -
                  4 * m.b * m.b,
              4 * s_gaussian_moments(0.7, 0.9, 0.2).delta, 1e-12);
}

TEST(SGaussianClosed, ReducesAndStaysClassical) {
  for (double n : {0.0, 0.4, 2.0}) {
    for (double r : {0.0, 0.5, 1.5}) {
      const ClosedComplexity a = gaussian_closed(n, r);
      const ClosedComplexity b = s_gaussian_closed(n, r, -1.0);
      EXPECT_DOUBLE_EQ(a.entropy, b.entropy);
      EXPECT_DOUBLE_EQ(a.fisher, b.fisher);
      EXPECT_DOUBLE_EQ(a.complexity, b.complexity);
    }
  }
  const double n = 1.5;
  for (double s : {-10.0, -1.0, 0.0, 2.0, 3.9}) {
    EXPECT_NEAR(s_gaussian_closed(n, 0.0, s).complexity, 1.0, 1e-13) << s;
  }
  try {
    s_gaussian_closed(n, 0.0, 2 * n + 1);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOrderingNotAdmissible);
  }
}

TEST(SGaussianClosed, DivergesAtTheOrderingLimit) {
  const double r = 0.6;
  const double limit = gaussian_ordering_limit(0.0, r);
  EXPECT_NEAR(limit, std::exp(-2 * r), 1e-15);
  EXPECT_NEAR(limit, 1.0 - 2.0 * gaussian_depth_unfloored(0.0, r), 1e-15);
  double prev = 0.0;
  for (double gap : {1e-1, 1e-2, 1e-4, 1e-6}) {
    const double c = s_gaussian_closed(0.0, r, limit - gap).complexity;
    EXPECT_GT(c, prev);
    prev = c;
  }
  EXPECT_GT(prev, 100.0);
}

TEST(FockClosed, KnownValues) {
  EXPECT_DOUBLE_EQ(fock_closed(0).entropy, 1.0);
  EXPECT_DOUBLE_EQ(fock_closed(0).complexity, 1.0);
  EXPECT_NEAR(fock_closed(1).complexity, std::exp(special::kEulerGamma), 1e-14);
  EXPECT_NEAR(fock_closed(1).entropy, 1.0 + special::kEulerGamma, 1e-14);
  EXPECT_NEAR(fock_closed(2).complexity, 2.0 * std::exp(2 * special::kEulerGamma - 1.0), 1e-13);
  double prev = 0.0;
  for (int k = 0; k <= 30; ++k) {
    const FockClosed f = fock_closed(k);
    EXPECT_NEAR(f.complexity, std::exp(f.entropy - 1.0), 1e-12 * f.complexity);
    EXPECT_GT(f.complexity, prev);
    prev = f.complexity;
  }
}

TEST(EnergyConstraint, AnalyticExtremes) {
  const EnergyExtremes zero = optimal_gaussian_at_energy(0.0);
  EXPECT_DOUBLE_EQ(zero.c_max, 1.0);
  EXPECT_DOUBLE_EQ(zero.most_complex.r, 0.0);
  const EnergyExtremes three = optimal_gaussian_at_energy(3.0);
  EXPECT_NEAR(three.c_max, 2.0, 1e-15);
  EXPECT_NEAR(three.most_complex.r, std::log(std::sqrt(3.0) + 2.0), 1e-14);
  EXPECT_NEAR(gaussian_energy(three.most_complex.nbar, three.most_complex.r, 0.0), 3.0, 1e-13);
  EXPECT_NEAR(gaussian_closed(0.0, three.most_complex.r).complexity, three.c_max, 1e-13);
  EXPECT_DOUBLE_EQ(three.c_min, 1.0);
}

TEST(EnergyConstraint, GridSearchFindsSqueezedVacuum) {
  for (double e : {0.5, 1.0, 3.0}) {
    const ConstrainedSearch s = search_gaussian_at_energy(e);
    EXPECT_NEAR(s.max.complexity, std::sqrt(e + 1.0), 1e-4);
    EXPECT_NEAR(s.max.nbar, 0.0, 1e-3);
    EXPECT_NEAR(s.max.xi_mod, 0.0, 1e-3);
    EXPECT_NEAR(s.max.r, std::log(std::sqrt(e) + std::sqrt(e + 1.0)), 1e-3);
    EXPECT_NEAR(gaussian_energy(s.max.nbar, s.max.r, s.max.xi_mod), e, 1e-10);
    EXPECT_NEAR(s.min_unsqueezed.complexity, 1.0, 1e-12);
    EXPECT_DOUBLE_EQ(s.min_unsqueezed.r, 0.0);
    EXPECT_GT(s.evaluations, 0);
  }
}

}  // namespace
}  // namespace phasecx

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
#include <numbers>

#include <gtest/gtest.h>

#include "phasecx/closedform.hpp"
#include "phasecx/errors.hpp"
#include "phasecx/functionals.hpp"
#include "phasecx/special.hpp"

namespace phasecx {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(Wehrl, Examples) {
  EXPECT_NEAR(wehrl_entropy(validate(Coherent{{1.0, 1.0}})).value, 1.0, 1e-9);
  EXPECT_NEAR(wehrl_entropy(validate(Fock{1})).value, 1.0 + special::kEulerGamma, 1e-8);
  for (int k : {2, 6}) {
    EXPECT_NEAR(wehrl_entropy(validate(Fock{k})).value, fock_closed(k).entropy, 1e-8);
  }
}

TEST(Fisher, Examples) {
  for (double n : {0.5, 4.0}) {
    EXPECT_NEAR(fisher_information(validate(Thermal{n})).value, 1.0 / (n + 1), 1e-9);
  }
  EXPECT_NEAR(fisher_information(validate(Cat{{1.0, 0.0}, kPi})).value, 1.0, 1e-7);
  EXPECT_NEAR(fisher_information(validate(PhotonAddedCoherent{{0.3, 0.3}})).value, 1.0, 1e-7);
}

TEST(Complexity, RoutesAndTags) {
  const CheckedState g = validate(Gaussian{0.5, 0.7, 1.0, {0.3, 0.1}});
  const ComplexityReport closed = complexity(g);
  EXPECT_EQ(closed.method, Method::kClosedForm);
  EXPECT_EQ(closed.err_entropy, 0.0);
  const ComplexityReport quad = complexity(g, {}, Route::kQuadrature);
  EXPECT_EQ(quad.method, Method::kQuadrature);
  EXPECT_NEAR(quad.complexity, closed.complexity, 1e-7 * closed.complexity);
  EXPECT_GT(quad.err_entropy, 0.0);
  // Non-Gaussian families always integrate.
  EXPECT_EQ(complexity(validate(Fock{2})).method, Method::kQuadrature);
  EXPECT_EQ(to_string(Method::kClosedForm), "closed_form");
}

TEST(Complexity, ReportIsSelfConsistent) {
  const ComplexityReport r = complexity(validate(Cat{{1.3, 0.0}, 0.5}));
  EXPECT_DOUBLE_EQ(r.complexity, std::exp(r.entropy - 1.0) * r.fisher);
  EXPECT_EQ(r.s, kHusimiOrder);
}

TEST(Complexity, SqueezedVacuumIsCoshR) {
  for (double r : {0.4, 1.3}) {
    const ComplexityReport q =
        complexity(validate(Gaussian{0.0, r, 0.5, {1.0, -1.0}}), {}, Route::kQuadrature);
    EXPECT_NEAR(q.complexity, std::cosh(r), 1e-7);
  }
}

TEST(Complexity, PhotonAddedThermalIndependentOfTemperature) {
  for (int k : {1, 2}) {
    for (double n : {0.2, 5.0}) {
      EXPECT_NEAR(complexity(validate(PhotonAddedThermal{k, n})).complexity,
                  fock_closed(k).complexity, 1e-7);
    }
  }
}

TEST(SComplexity, ClassicalStatesStayAtOne) {
  for (double s : {-5.0, -1.0, 0.0, 0.6}) {
    for (Route route : {Route::kAutomatic, Route::kQuadrature}) {
      EXPECT_NEAR(s_complexity(validate(Coherent{{0.5, 0.5}}), s, {}, route).complexity, 1.0, 1e-7);
      EXPECT_NEAR(s_complexity(validate(Thermal{2.0}), s, {}, route).complexity, 1.0, 1e-7);
    }
  }
}

TEST(SComplexity, GaussianQuadratureMatchesClosedForm) {
  const double n = 0.5, r = 0.6;
  for (double s : {-4.0, -1.0, 0.0, 0.3}) {
    const CheckedState st = validate(Gaussian{n, r, 0.8, {0.5, 0.0}});
    const ComplexityReport q = s_complexity(st, s, {}, Route::kQuadrature);
    const ClosedComplexity c = s_gaussian_closed(n, r, s);
    EXPECT_NEAR(q.entropy, c.entropy, 1e-7 * c.entropy) << s;
    EXPECT_NEAR(q.fisher, c.fisher, 1e-7 * c.fisher) << s;
    EXPECT_NEAR(q.complexity, c.complexity, 1e-7 * c.complexity) << s;
  }
}

TEST(SComplexity, FockDecreasesTowardOne) {
  for (int k : {1, 3}) {
    double prev = 1e9;
    for (double s : {-1.0, -2.0, -5.0, -20.0, -200.0}) {
      const double c = s_complexity(validate(Fock{k}), s).complexity;
      EXPECT_LT(c, prev);
      EXPECT_GT(c, 1.0);
      prev = c;
    }
    EXPECT_LT(prev - 1.0, 1e-3);
  }
}

TEST(SComplexity, ConvolutionPathMatchesLaguerre) {
  const CheckedState st = validate(Fock{2});
  for (double s : {-1.5, -3.0}) {
    const ComplexityReport a = s_complexity(PhaseSpaceDistribution(st, s), {});
    const ComplexityReport b =
        s_complexity(PhaseSpaceDistribution::smoothed_husimi(st, s), {});
    EXPECT_NEAR(a.complexity, b.complexity, 1e-7);
  }
}

TEST(SComplexity, PhaseAveragedRescaledAmplitude) {
  // C_s depends on |beta| and s only through |beta| / sqrt(1 - s).
  const double ratio = 0.8;
  const double ref =
      s_complexity(validate(PhaseAveragedCoherent{ratio * std::sqrt(2.0)}), -1.0).complexity;
  for (double s : {-0.5, 0.0, 0.5}) {
    const double b = ratio * std::sqrt(1.0 - s);
    EXPECT_NEAR(s_complexity(validate(PhaseAveragedCoherent{b}), s).complexity, ref, 1e-8);
  }
}

TEST(SComplexity, RefusesNonAdmissibleOrders) {
  for (Route route : {Route::kAutomatic, Route::kQuadrature}) {
    try {
      s_complexity(validate(Gaussian{0.0, 1.0, 0.0, {}}), 0.5, {}, route);
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kOrderingNotAdmissible);
    }
  }
  try {
    s_complexity(validate(Cat{{1.0, 0.0}, 0.0}), -2.0);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOrderingNotAdmissible);
  }
}

TEST(EvaluateFunctionals, MassIsOneAndConfigIsChecked) {
  const DistributionFunctionals f =
      evaluate_functionals(PhaseSpaceDistribution(validate(CoherentMixture{{1.0, 0.5}})), {});
  EXPECT_NEAR(f.mass.value, 1.0, 1e-10);
  QuadratureConfig bad;
  bad.radius_margin = -1.0;
  EXPECT_THROW(evaluate_functionals(PhaseSpaceDistribution(validate(Fock{1})), bad), Error);
}

}  // namespace
}  // namespace phasecx

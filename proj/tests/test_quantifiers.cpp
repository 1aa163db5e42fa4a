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
#include "phasecx/quantifiers.hpp"

namespace phasecx {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(Mandel, Examples) {
  EXPECT_NEAR(mandel_q(validate(Coherent{{1.0, 0.5}})), 0.0, 1e-14);
  for (int k : {1, 2, 7}) EXPECT_DOUBLE_EQ(mandel_q(validate(Fock{k})), -1.0);
  for (double n : {0.3, 2.0}) EXPECT_NEAR(mandel_q(validate(Thermal{n})), n, 1e-13);
  try {
    mandel_q(validate(Fock{0}));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kZeroMeanPhoton);
  }
  EXPECT_THROW(mandel_q(validate(Gaussian{})), Error);
}

TEST(Mandel, NumberBasisMatchesClosedFormForDisplacedThermal) {
  for (double n : {0.2, 1.0}) {
    for (const Complex xi : {Complex{0.5, 0.0}, Complex{1.0, -1.5}}) {
      const CheckedState st = validate(Gaussian{n, 0.0, 0.0, xi});
      EXPECT_NEAR(mandel_q(to_fock_matrix(st).rho), mandel_q(st), 1e-6);
    }
  }
}

TEST(Mandel, SqueezedVacuumIsSuperPoissonian) {
  // Q = 2 sinh^2 r + 1 for the squeezed vacuum.
  const double r = 0.7;
  EXPECT_NEAR(mandel_q(validate(Gaussian{0.0, r, 1.0, {}})),
              2 * std::sinh(r) * std::sinh(r) + 1.0, 1e-12);
}

TEST(Mandel, LowerBoundHoldsForNonGaussianFamilies) {
  for (const StateSpec& spec :
       {StateSpec{PhotonAddedCoherent{{0.7, 0.0}}}, StateSpec{Cat{{1.0, 0.0}, kPi}},
        StateSpec{PhotonAddedThermal{1, 0.5}}, StateSpec{PhaseAveragedCoherent{1.0}}}) {
    EXPECT_GE(mandel_q(validate(spec)), -1.0 - 1e-12) << family_name(spec);
  }
  // Phase averaging keeps Poisson statistics.
  EXPECT_NEAR(mandel_q(validate(PhaseAveragedCoherent{1.3})), 0.0, 1e-9);
}

TEST(NonclassicalDepth, Examples) {
  const NonclassicalDepth th = nonclassical_depth(validate(Thermal{1.7}));
  EXPECT_EQ(th.tau, 0.0);
  EXPECT_DOUBLE_EQ(th.tau_unfloored, -1.7);
  const double r = 0.9;
  const NonclassicalDepth sq = nonclassical_depth(validate(Gaussian{0.0, r, 0.0, {}}));
  EXPECT_NEAR(sq.tau, std::tanh(r) / (1 + std::tanh(r)), 1e-15);
  EXPECT_NEAR(sq.tau_unfloored, sq.tau, 1e-15);
  EXPECT_LT(sq.tau, 0.5);
  const NonclassicalDepth f = nonclassical_depth(validate(Fock{3}));
  EXPECT_EQ(f.tau, 1.0);
  EXPECT_EQ(f.tau_unfloored, 1.0);
  EXPECT_EQ(nonclassical_depth(validate(Coherent{{1.0, 0.0}})).tau, 0.0);
  try {
    nonclassical_depth(validate(Cat{{1.0, 0.0}, 0.0}));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnsupported);
  }
}

TEST(NonclassicalDepth, DecreasesWithTemperatureWhileComplexityGrows) {
  const double r = 0.8;
  double prev_tau = 1.0, prev_c = 0.0;
  for (double n : {0.0, 0.2, 0.5, 1.0, 3.0}) {
    const double tau = nonclassical_depth(validate(Gaussian{n, r, 0.0, {}})).tau_unfloored;
    const double c = gaussian_closed(n, r).complexity;
    EXPECT_LT(tau, prev_tau);
    EXPECT_GT(c, prev_c);
    prev_tau = tau;
    prev_c = c;
  }
}

TEST(SkewInfo, Examples) {
  for (int k : {0, 1, 4}) EXPECT_DOUBLE_EQ(skew_info_nonclassicality(validate(Fock{k})), k + 0.5);
  const double n = 1.0;
  const double expected = 0.5 + n - std::sqrt(n * (n + 1));
  EXPECT_NEAR(skew_info_nonclassicality(validate(Thermal{n})), expected, 1e-15);
  const TruncatedState t = to_fock_matrix(validate(Thermal{n}), 60);
  EXPECT_NEAR(skew_info_nonclassicality(t.rho), expected, 1e-6);
}

TEST(SkewInfo, NumberBasisReproducesFockAndCoherent) {
  const TruncatedState f = to_fock_matrix(validate(Fock{3}), 8);
  EXPECT_NEAR(skew_info_nonclassicality(f.rho), 3.5, 1e-12);
  const TruncatedState c = to_fock_matrix(validate(Coherent{{1.2, 0.4}}));
  EXPECT_NEAR(skew_info_nonclassicality(c.rho), 0.5, 1e-8);
  EXPECT_GE(skew_info_nonclassicality(validate(CoherentMixture{{1.0, 0.0}})), 0.0);
}

TEST(WignerNegativity, Examples) {
  EXPECT_EQ(wigner_negativity(validate(Gaussian{0.3, 1.0, 0.5, {1.0, 0.0}})).value, 0.0);
  EXPECT_EQ(wigner_negativity(validate(Fock{0})).value, 0.0);
  const QuadResult w1 = wigner_negativity(validate(Fock{1}));
  EXPECT_NEAR(w1.value, 4.0 * std::exp(-0.5) - 2.0, 1e-9);
  EXPECT_GE(w1.error, 0.0);
  double prev = 0.0;
  for (int k = 1; k <= 6; ++k) {
    const double d = wigner_negativity(validate(Fock{k})).value;
    EXPECT_GT(d, prev);
    prev = d;
  }
  try {
    wigner_negativity(validate(Cat{{1.0, 0.0}, 0.0}));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnsupported);
  }
}

TEST(NonGaussianity, FockEntries) {
  EXPECT_EQ(nongaussianity_fock(0).delta_a, 0.0);
  EXPECT_EQ(nongaussianity_fock(0).delta_b, 0.0);
  EXPECT_NEAR(nongaussianity_fock(1).delta_a, 5.0 / 12.0, 1e-15);
  EXPECT_NEAR(nongaussianity_fock(1).delta_b, 2.0 * std::log(2.0), 1e-15);
  EXPECT_NEAR(nongaussianity_fock(2).delta_a, 0.5 * (1.0 + 0.2) - 4.0 / 27.0, 1e-15);
  EXPECT_THROW(nongaussianity_fock(-1), Error);
}

TEST(QuantifierRow, Contents) {
  const QuantifierRow vac = quantifier_row(validate(Gaussian{}));
  EXPECT_FALSE(vac.mandel_q.has_value());
  EXPECT_EQ(*vac.delta_a, 0.0);
  EXPECT_EQ(*vac.wigner_negativity, 0.0);
  const QuantifierRow f = quantifier_row(validate(Fock{2}));
  EXPECT_DOUBLE_EQ(*f.mandel_q, -1.0);
  EXPECT_DOUBLE_EQ(*f.nonclassical_depth, 1.0);
  EXPECT_DOUBLE_EQ(f.skew_info, 2.5);
  EXPECT_GT(*f.wigner_negativity, 0.0);
  const QuantifierRow c = quantifier_row(validate(Cat{{1.0, 0.0}, kPi}));
  EXPECT_TRUE(c.mandel_q.has_value());
  EXPECT_FALSE(c.nonclassical_depth.has_value());
  EXPECT_FALSE(c.wigner_negativity.has_value());
  EXPECT_FALSE(c.delta_a.has_value());
}

}  // namespace
}  // namespace phasecx

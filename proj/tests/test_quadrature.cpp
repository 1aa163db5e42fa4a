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
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "phasecx/errors.hpp"
#include "phasecx/phasespace.hpp"
#include "phasecx/quadrature.hpp"
#include "phasecx/states.hpp"

namespace phasecx {
namespace {

TEST(QuadratureConfig, RejectsOutOfRange) {
  QuadratureConfig cfg;
  EXPECT_NO_THROW(cfg.check());
  for (auto mutate : {+[](QuadratureConfig& c) { c.radius_margin = 0.0; },
                      +[](QuadratureConfig& c) { c.target_rel_tol = 1.0; },
                      +[](QuadratureConfig& c) { c.target_rel_tol = 0.0; },
                      +[](QuadratureConfig& c) { c.floor_eps = 0.0; },
                      +[](QuadratureConfig& c) { c.max_subdivisions = 0; }}) {
    QuadratureConfig bad;
    mutate(bad);
    try {
      bad.check();
      ADD_FAILURE() << "accepted an invalid config";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kBadParameter);
    }
  }
}

TEST(IntegratePlane, CoherentHusimiNormalization) {
  const CheckedState st = validate(Coherent{{0.7, -1.3}});
  const QuadResult r = integrate_plane([&](PhasePoint a) { return husimi_q(st, a); },
                                       {0.7, -1.3}, 1.0, {});
  EXPECT_NEAR(r.value, 1.0, 1e-10);
}

TEST(IntegratePlane, Fock4Normalization) {
  const PhaseSpaceDistribution q(validate(Fock{4}));
  const QuadResult r =
      integrate_plane([&](PhasePoint a) { return q.value(a); }, {}, q.scale(), {});
  EXPECT_NEAR(r.value, 1.0, 1e-9);
}

TEST(IntegratePlane, ThermalEntropy) {
  const PhaseSpaceDistribution q(validate(Thermal{1.0}));
  const QuadResult r = integrate_plane(
      [&](PhasePoint a) {
        const double v = q.value(a);
        return v > 0.0 ? -v * std::log(v) : 0.0;
      },
      {}, q.scale(), {});
  EXPECT_NEAR(r.value, 1.0 + std::log(2.0), 1e-8);
}

TEST(IntegratePlane, MomentsOfAnisotropicGaussian) {
  // int x^2 y^2 exp(-x^2/a - y^2/b) dx dy / pi = a^{3/2} b^{3/2} / 4.
  const double a = 3.0, b = 0.4;
  const QuadResult r = integrate_plane(
      [&](PhasePoint p) { return p.x * p.x * p.y * p.y * std::exp(-p.x * p.x / a - p.y * p.y / b); },
      {}, std::sqrt(a), {});
  EXPECT_NEAR(r.value, std::pow(a * b, 1.5) / 4.0, 1e-9);
}

TEST(IntegratePlane, ErrorEstimateIsConservative) {
  // Random anisotropic, off-center Gaussians: exact integral sqrt(a b).
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> width(0.2, 3.0), shift(-2.0, 2.0);
  int covered = 0;
  const int trials = 200;
  QuadratureConfig cfg;
  cfg.target_rel_tol = 1e-6;
  for (int t = 0; t < trials; ++t) {
    const double a = width(rng), b = width(rng), cx = shift(rng), cy = shift(rng);
    const QuadResult r = integrate_plane(
        [&](PhasePoint p) {
          const double dx = p.x - cx, dy = p.y - cy;
          return std::exp(-dx * dx / a - dy * dy / b);
        },
        {0.0, 0.0}, 1.0 + std::abs(cx) + std::abs(cy), cfg);
    const double exact = std::sqrt(a * b);
    if (std::abs(r.value - exact) <= r.error + 1e-15) ++covered;
  }
  EXPECT_GE(covered, 198);
}

TEST(IntegratePlane, DeterministicAcrossCalls) {
  auto f = [](PhasePoint p) { return std::exp(-p.norm2()) * (1.0 + std::sin(3.0 * p.x) * p.y); };
  const QuadResult a = integrate_plane(f, {}, 1.0, {});
  const QuadResult b = integrate_plane(f, {}, 1.0, {});
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.error, b.error);
}

TEST(IntegratePlane, VectorComponentsShareThePartition) {
  const std::vector<QuadResult> r = integrate_plane(
      [](PhasePoint p, Components& out) {
        const double g = std::exp(-p.norm2());
        out[0] = g;
        out[1] = p.norm2() * g;
      },
      2, {}, 1.0, {});
  ASSERT_EQ(r.size(), 2u);
  EXPECT_NEAR(r[0].value, 1.0, 1e-12);
  EXPECT_NEAR(r[1].value, 1.0, 1e-12);
}

TEST(IntegratePlane, NonFiniteIntegrandIsReported) {
  try {
    integrate_plane([](PhasePoint p) { return 1.0 / (p.x * 0.0); }, {}, 1.0, {});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoConvergence);
  }
}

TEST(IntegratePlane, DepthLimitRaisesNoConvergence) {
  QuadratureConfig cfg;
  cfg.max_subdivisions = 2;
  cfg.target_rel_tol = 1e-12;
  try {
    integrate_plane([](PhasePoint p) { return std::pow(p.norm2() + 1e-12, -0.45); }, {0.013, 0.021},
                    1.0, cfg);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoConvergence);
  }
}

TEST(IntegrateRadial, VacuumAndFock) {
  EXPECT_NEAR(integrate_radial([](double r) { return std::exp(-r * r); }, 1.0, {}).value, 1.0,
              1e-12);
  for (int k : {1, 3, 7}) {
    const PhaseSpaceDistribution q(validate(Fock{k}));
    const QuadResult r =
        integrate_radial([&](double x) { return q.sample_radial(x).value; }, q.scale(), {});
    EXPECT_NEAR(r.value, 1.0, 1e-10) << k;
  }
}

TEST(IntegrateRadial, BreakpointsAndKinks) {
  // 2 int_0^R |1 - r^2| e^{-r^2} r dr, kink at r = 1: exact 2/e.
  const std::vector<double> bp = {1.0};
  const QuadResult r = integrate_radial(
      [](double x) { return std::abs(1.0 - x * x) * std::exp(-x * x); }, 1.0, {}, bp);
  EXPECT_NEAR(r.value, 2.0 / std::exp(1.0), 1e-10);
}

TEST(IntegrateRadial, AgreesWithPlaneOnFock3Entropy) {
  const PhaseSpaceDistribution q(validate(Fock{3}));
  auto ent = [](double v) { return v > 0.0 ? -v * std::log(v) : 0.0; };
  const QuadResult rad =
      integrate_radial([&](double x) { return ent(q.sample_radial(x).value); }, q.scale(), {});
  const QuadResult pl =
      integrate_plane([&](PhasePoint a) { return ent(q.value(a)); }, {}, q.scale(), {});
  EXPECT_NEAR(rad.value, pl.value, 1e-9);
}

TEST(IntegrateRadial, MarginDoublingIsStable) {
  const PhaseSpaceDistribution q(validate(Fock{2}));
  QuadratureConfig wide;
  wide.radius_margin = 16.0;
  auto g = [&](double x) { return q.sample_radial(x).value; };
  const double a = integrate_radial(g, q.scale(), {}).value;
  const double b = integrate_radial(g, q.scale(), wide).value;
  EXPECT_NEAR(a, b, 1e-8);
}

TEST(IntegrateRadial, RejectsBadScale) {
  try {
    integrate_radial([](double) { return 1.0; }, 0.0, {});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBadParameter);
  }
}

}  // namespace
}  // namespace phasecx

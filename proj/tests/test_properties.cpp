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
// Randomized invariants checked over seeded draws.

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "phasecx/phasecx.hpp"

namespace phasecx {
namespace {

constexpr double kPi = 3.14159265358979323846;

TEST(Properties, FisherConvexAndWehrlConcaveUnderMixing) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.1, 0.9);
  for (int trial = 0; trial < 8; ++trial) {
    const int dim = 3 + trial % 4;
    const FockMatrix a = random_fock_matrix(dim, rng), b = random_fock_matrix(dim, rng);
    const double p = u(rng);
    const FockMatrix mix{p * a.rho + (1 - p) * b.rho};
    const CheckedState sa = validate(a), sb = validate(b), sm = validate(mix);
    EXPECT_LE(fisher_information(sm).value,
              p * fisher_information(sa).value + (1 - p) * fisher_information(sb).value + 1e-9);
    EXPECT_GE(wehrl_entropy(sm).value,
              p * wehrl_entropy(sa).value + (1 - p) * wehrl_entropy(sb).value - 1e-9);
  }
}

TEST(Properties, RandomGaussiansObeyBoundsAndClosedForm) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 12; ++trial) {
    const Gaussian g{3 * u(rng), 1.2 * u(rng), 2 * kPi * u(rng), {2 * u(rng) - 1, 2 * u(rng) - 1}};
    const CheckedState st = validate(g);
    const ComplexityReport q = complexity(st, {}, Route::kQuadrature);
    const ClosedComplexity c = gaussian_closed(g.nbar, g.r);
    EXPECT_GE(q.entropy, 1.0 - 1e-9);
    EXPECT_GE(q.complexity, 1.0 - 1e-9);
    EXPECT_NEAR(q.complexity, c.complexity, 1e-6 * c.complexity);
    EXPECT_NEAR(q.fisher, c.fisher, 1e-6);
  }
}

TEST(Properties, PhaseRotationLeavesComplexityUnchanged) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 4; ++trial) {
    const FockMatrix f = random_fock_matrix(5, rng);
    const double phi = 0.7 + trial;
    Eigen::VectorXcd ph(f.dim());
    for (int n = 0; n < f.dim(); ++n) ph(n) = std::polar(1.0, n * phi);
    const FockMatrix rotated{ph.asDiagonal() * f.rho * ph.conjugate().asDiagonal()};
    EXPECT_NEAR(complexity(validate(rotated)).complexity, complexity(validate(f)).complexity, 1e-6);
  }
}

TEST(Properties, WehrlEntropyAtLeastOneForRandomStates) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 10; ++trial) {
    EXPECT_GE(wehrl_entropy(validate(random_fock_matrix(2, 10, rng))).value, 1.0 - 1e-9);
  }
}

TEST(Properties, AnalyticGradientMatchesFiniteDifferences) {
  std::mt19937_64 rng(15);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  const StateSpec specs[] = {
      Coherent{{0.4, -1.1}},          Thermal{0.8},
      Fock{3},                        Gaussian{0.4, 0.6, 1.0, {0.3, 0.2}},
      PhotonAddedThermal{2, 0.7},     PhotonAddedCoherent{{1.2, 0.5}},
      Cat{{1.5, -0.4}, 2.0},          CoherentMixture{{1.0, 1.0}},
      PhaseAveragedCoherent{1.3},     random_fock_matrix(6, rng),
  };
  for (const StateSpec& spec : specs) {
    const CheckedState st = validate(spec);
    for (int i = 0; i < 5; ++i) {
      const PhasePoint p{u(rng), u(rng)};
      const Gradient a = husimi_grad(st, p), n = husimi_grad_numeric(st, p);
      const double scale = 1e-6 * (1.0 + std::hypot(a.dx, a.dy));
      EXPECT_NEAR(a.dx, n.dx, scale) << st.family();
      EXPECT_NEAR(a.dy, n.dy, scale) << st.family();
    }
  }
}

}  // namespace
}  // namespace phasecx

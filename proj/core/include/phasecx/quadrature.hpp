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
#ifndef PHASECX_QUADRATURE_HPP_
#define PHASECX_QUADRATURE_HPP_

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "phasecx/states.hpp"

namespace phasecx {

struct QuadratureConfig {
  /// Half-width of the integration domain in units of the distribution scale.
  double radius_margin = 8.0;
  double target_rel_tol = 1e-8;
  /// Maximum refinement depth of a single panel.
  int max_subdivisions = 20;
  /// Below this value log and ratio integrands contribute zero.
  double floor_eps = 1e-300;

  /// Throws Error(kBadParameter) when a field is out of range.
  void check() const;
};

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
};

using PlaneFunction = std::function<double(PhasePoint)>;
using RadialFunction = std::function<double(double)>;

/// Integral of f against d^2 alpha / pi over the square
/// center +/- radius_margin * scale, by globally adaptive tensor
/// Gauss-Kronrod (7/15) panels. The error estimate is |K15 x K15 - G7 x G7|
/// summed over panels; convergence requires
/// error <= target_rel_tol * integral of |f|. Panels are reduced in creation
/// order with compensated summation, so results are bit-reproducible.
/// Throws Error(kNoConvergence).
QuadResult integrate_plane(const PlaneFunction& f, PhasePoint center,
                           double scale, const QuadratureConfig& cfg);

/// 2 * integral_0^R g(r) r dr with R = radius_margin * scale: the d^2 alpha/pi
/// measure reduced over the angle. Optional breakpoints (radii inside (0, R))
/// seed the partition, e.g. at known kinks of g.
QuadResult integrate_radial(const RadialFunction& g, double scale,
                            const QuadratureConfig& cfg,
                            std::span<const double> breakpoints = {});

/// Several integrands refined on one shared partition; every component must
/// meet the tolerance.
inline constexpr std::size_t kMaxComponents = 4;
using Components = std::array<double, kMaxComponents>;
using PlaneVectorFunction = std::function<void(PhasePoint, Components&)>;
using RadialVectorFunction = std::function<void(double, Components&)>;

std::vector<QuadResult> integrate_plane(const PlaneVectorFunction& f,
                                        std::size_t components,
                                        PhasePoint center, double scale,
                                        const QuadratureConfig& cfg);

std::vector<QuadResult> integrate_radial(const RadialVectorFunction& g,
                                         std::size_t components, double scale,
                                         const QuadratureConfig& cfg,
                                         std::span<const double> breakpoints = {});

}  // namespace phasecx

#endif  // PHASECX_QUADRATURE_HPP_

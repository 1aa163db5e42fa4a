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
#ifndef PHASECX_FUNCTIONALS_HPP_
#define PHASECX_FUNCTIONALS_HPP_

#include <string_view>

#include "phasecx/phasespace.hpp"
#include "phasecx/quadrature.hpp"
#include "phasecx/states.hpp"

namespace phasecx {

enum class Method { kClosedForm, kQuadrature };

std::string_view to_string(Method method);

/// kAutomatic uses closed forms for Gaussian families; kQuadrature always
/// integrates the phase-space distribution.
enum class Route { kAutomatic, kQuadrature };

struct ComplexityReport {
  double entropy = 0.0;
  double fisher = 0.0;
  double complexity = 0.0;
  double s = kHusimiOrder;
  double err_entropy = 0.0;
  double err_fisher = 0.0;
  Method method = Method::kQuadrature;
};

/// Normalization, entropy and Fisher information of one distribution, from a
/// single adaptive partition.
struct DistributionFunctionals {
  QuadResult mass;
  QuadResult entropy;
  QuadResult fisher;
};

DistributionFunctionals evaluate_functionals(const PhaseSpaceDistribution& w,
                                             const QuadratureConfig& cfg);

/// -integral Q ln Q d^2 alpha / pi.
QuadResult wehrl_entropy(const CheckedState& state,
                         const QuadratureConfig& cfg = {});

/// (1/4) integral |grad Q|^2 / Q d^2 alpha / pi.
QuadResult fisher_information(const CheckedState& state,
                              const QuadratureConfig& cfg = {});

/// C = e^{S_W - 1} I.
ComplexityReport complexity(const CheckedState& state,
                            const QuadratureConfig& cfg = {},
                            Route route = Route::kAutomatic);

/// C_s = e^{S_{W_s} - 1} I_s. Throws Error(kOrderingNotAdmissible).
ComplexityReport s_complexity(const CheckedState& state, double s,
                              const QuadratureConfig& cfg = {},
                              Route route = Route::kAutomatic);

/// Same, for a distribution built by the caller.
ComplexityReport s_complexity(const PhaseSpaceDistribution& w,
                              const QuadratureConfig& cfg);

}  // namespace phasecx

#endif  // PHASECX_FUNCTIONALS_HPP_
